#pragma once

#include <stdexcept>
#include <string>

namespace syz {

// Exit codes used by the CLI; library errors map onto these.
enum class ExitCode : int {
    ok = 0,
    usage = 2,
    degenerate_sample = 3,
    no_extra_syzygy = 4,
    io_failure = 5,
};

struct Error : std::runtime_error {
    ExitCode code;
    explicit Error(ExitCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(ExitCode::usage, what) {}
};

// A random draw failed a genericity check and the retry budget ran out.
struct DegenerateSampleError : Error {
    explicit DegenerateSampleError(const std::string& what)
        : Error(ExitCode::degenerate_sample, what) {}
};

struct NoExtraSyzygyError : Error {
    explicit NoExtraSyzygyError(const std::string& what)
        : Error(ExitCode::no_extra_syzygy, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ExitCode::io_failure, what) {}
};

}  // namespace syz
