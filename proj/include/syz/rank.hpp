#pragma once

#include <cstddef>
#include <cstdint>

#include "syz/matrix.hpp"

namespace syz {

// A matrix described row by row in its elimination orientation, so large
// inputs never have to exist as FpMatrix. fill_row writes cols() canonical
// entries into out (caller zeroes nothing; the implementation must write
// every position).
class RowSource {
  public:
    virtual ~RowSource() = default;
    virtual std::size_t rows() const = 0;
    virtual std::size_t cols() const = 0;
    virtual void fill_row(std::size_t r, fp_t* out) const = 0;
};

class FpMatrixSource final : public RowSource {
  public:
    FpMatrixSource(const FpMatrix& m, bool transpose)
        : m_(m), transpose_(transpose) {}
    std::size_t rows() const override { return transpose_ ? m_.cols() : m_.rows(); }
    std::size_t cols() const override { return transpose_ ? m_.rows() : m_.cols(); }
    void fill_row(std::size_t r, fp_t* out) const override;

  private:
    const FpMatrix& m_;
    bool transpose_;
};

struct RankOptions {
    // Working-set ceiling for the in-core double path; above it the engine
    // falls back to 16-bit storage with staged panels (requires p < 2^16).
    std::size_t double_budget_bytes = 1500ULL << 20;
    std::size_t panel_width = 256;
    std::size_t strip_rows = 1024;
};

// Rank by Gaussian elimination, equivalent to row_reduce but organized as
// blocked LU so the trailing updates run as exact integer matrix products in
// double precision. Deterministic for fixed input.
std::size_t matrix_rank(const RowSource& src, const FieldContext& ctx,
                        const RankOptions& opts = {});

// Convenience wrapper: eliminates on the orientation with fewer rows.
std::size_t matrix_rank(const FpMatrix& m, const FieldContext& ctx,
                        const RankOptions& opts = {});

}  // namespace syz
