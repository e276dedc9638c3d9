#pragma once

#include <cstdint>
#include <vector>

#include "syz/errors.hpp"

namespace syz {

using fp_t = std::uint32_t;  // canonical representative in [0, p)

// Prime field context. All arithmetic is exact mod p; elements are kept
// canonical in [0, p). p must be an odd prime below 2^31.
class FieldContext {
  public:
    explicit FieldContext(std::uint64_t p);

    fp_t p() const { return p_; }

    fp_t add(fp_t a, fp_t b) const {
        fp_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p_ - b; }
    fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
    fp_t mul(fp_t a, fp_t b) const {
        return static_cast<fp_t>(std::uint64_t(a) * b % p_);
    }
    fp_t reduce(std::uint64_t x) const { return static_cast<fp_t>(x % p_); }
    fp_t reduce_signed(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<fp_t>(r);
    }

    fp_t pow(fp_t base, std::uint64_t e) const;

    // Inverse of a nonzero element; throws on zero.
    fp_t inv(fp_t a) const;

    // Element of multiplicative order exactly l (l >= 2). Requires l | p-1.
    fp_t primitive_root_of_unity(std::uint64_t l) const;

    // Multiplicative order of a nonzero element.
    std::uint64_t order(fp_t a) const;

  private:
    fp_t p_;
};

bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// SplitMix64: the seed-expansion PRNG used everywhere randomness is needed.
// A single 64-bit seed expands into independent streams via split(); all
// derived draws are reproducible across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Child stream keyed by a tag; independent of draws on this stream.
    SplitMix64 split(std::uint64_t tag) const {
        SplitMix64 mix(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
        return SplitMix64(mix.next());
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    fp_t field_element(const FieldContext& ctx) {
        return static_cast<fp_t>(below(ctx.p()));
    }
    fp_t nonzero_field_element(const FieldContext& ctx) {
        return static_cast<fp_t>(1 + below(ctx.p() - 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace syz
