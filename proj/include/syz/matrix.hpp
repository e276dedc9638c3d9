#pragma once

#include <cstddef>
#include <vector>

#include "syz/field.hpp"

namespace syz {

// Dense row-major matrix over GF(p). Entries are canonical representatives.
class FpMatrix {
  public:
    FpMatrix() : rows_(0), cols_(0) {}
    FpMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static FpMatrix identity(std::size_t n) {
        FpMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    fp_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    fp_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    fp_t* row(std::size_t r) { return data_.data() + r * cols_; }
    const fp_t* row(std::size_t r) const { return data_.data() + r * cols_; }
    const std::vector<fp_t>& data() const { return data_; }
    std::vector<fp_t>& data() { return data_; }

    FpMatrix transposed() const;
    std::vector<fp_t> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<fp_t>& v);

    bool operator==(const FpMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<fp_t> data_;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b, const FieldContext& ctx);
std::vector<fp_t> mat_vec(const FpMatrix& a, const std::vector<fp_t>& v,
                          const FieldContext& ctx);
bool is_zero(const FpMatrix& m);

struct RowReduceResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    FpMatrix reduced;  // reduced row-echelon form
};

// Reduced row echelon form by Gaussian elimination. Deterministic: the pivot
// of each column is the first nonzero entry below the processed rows.
RowReduceResult row_reduce(const FpMatrix& m, const FieldContext& ctx);

// Columns span {v : m v = 0}; count = cols - rank. Basis vectors carry a 1 in
// their own free coordinate, echelon style.
FpMatrix kernel_basis(const FpMatrix& m, const FieldContext& ctx);

// Echelon basis of the column span: returns the RREF of the transpose, one
// basis vector per matrix row, plus the pivot coordinate of each vector.
struct ColumnSpanBasis {
    FpMatrix basis_rows;               // dim x ambient
    std::vector<std::size_t> pivots;   // pivot coordinate per basis row
};
ColumnSpanBasis column_span(const FpMatrix& m, const FieldContext& ctx);

}  // namespace syz
