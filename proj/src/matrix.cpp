#include "syz/matrix.hpp"

#include <cassert>

namespace syz {

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<fp_t> FpMatrix::column(std::size_t c) const {
    std::vector<fp_t> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void FpMatrix::set_column(std::size_t c, const std::vector<fp_t>& v) {
    assert(v.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b, const FieldContext& ctx) {
    assert(a.cols() == b.rows());
    FpMatrix c(a.rows(), b.cols());
    const std::uint64_t p2 = std::uint64_t(ctx.p() - 1) * (ctx.p() - 1);
    // Accumulate products in 64 bits, reducing only when the next addition
    // could overflow.
    const std::uint64_t guard = UINT64_MAX - p2;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                std::uint64_t prod = std::uint64_t(a.at(i, k)) * b.at(k, j);
                if (acc > guard) acc %= ctx.p();
                acc += prod;
            }
            c.at(i, j) = ctx.reduce(acc);
        }
    }
    return c;
}

std::vector<fp_t> mat_vec(const FpMatrix& a, const std::vector<fp_t>& v,
                          const FieldContext& ctx) {
    assert(a.cols() == v.size());
    std::vector<fp_t> out(a.rows());
    const std::uint64_t p2 = std::uint64_t(ctx.p() - 1) * (ctx.p() - 1);
    const std::uint64_t guard = UINT64_MAX - p2;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        const fp_t* row = a.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (acc > guard) acc %= ctx.p();
            acc += std::uint64_t(row[k]) * v[k];
        }
        out[i] = ctx.reduce(acc);
    }
    return out;
}

bool is_zero(const FpMatrix& m) {
    for (fp_t x : m.data())
        if (x != 0) return false;
    return true;
}

RowReduceResult row_reduce(const FpMatrix& m, const FieldContext& ctx) {
    RowReduceResult res;
    res.reduced = m;
    FpMatrix& a = res.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    const fp_t p = ctx.p();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t piv = lead;
        while (piv < rows && a.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != lead) {
            for (std::size_t k = c; k < cols; ++k) std::swap(a.at(piv, k), a.at(lead, k));
        }
        const fp_t inv = ctx.inv(a.at(lead, c));
        if (inv != 1) {
            fp_t* lr = a.row(lead);
            for (std::size_t k = c; k < cols; ++k)
                lr[k] = static_cast<fp_t>(std::uint64_t(lr[k]) * inv % p);
        }
        const fp_t* lr = a.row(lead);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead) continue;
            const fp_t f = a.at(r, c);
            if (f == 0) continue;
            fp_t* tr = a.row(r);
            const std::uint64_t fm = p - f;  // add fm * lead row == subtract f * lead row
            for (std::size_t k = c; k < cols; ++k) {
                tr[k] = static_cast<fp_t>((tr[k] + fm * lr[k]) % p);
            }
        }
        res.pivot_cols.push_back(c);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

FpMatrix kernel_basis(const FpMatrix& m, const FieldContext& ctx) {
    const std::size_t n = m.cols();
    RowReduceResult rr = row_reduce(m, ctx);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    const std::size_t dim = n - rr.rank;
    FpMatrix basis(n, dim);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(free_col, out) = 1;
        for (std::size_t r = 0; r < rr.rank; ++r) {
            const fp_t coef = rr.reduced.at(r, free_col);
            if (coef != 0) basis.at(rr.pivot_cols[r], out) = ctx.neg(coef);
        }
        ++out;
    }

    // Rank-nullity is structural here; membership of every column is not.
    assert(out == dim);
#ifdef SYZ_VERIFY_KERNELS
    for (std::size_t c = 0; c < dim; ++c) {
        std::vector<fp_t> v = basis.column(c);
        for (fp_t entry : mat_vec(m, v, ctx)) {
            (void)entry;
            assert(entry == 0);
        }
    }
#endif
    return basis;
}

ColumnSpanBasis column_span(const FpMatrix& m, const FieldContext& ctx) {
    RowReduceResult rr = row_reduce(m.transposed(), ctx);
    ColumnSpanBasis out;
    out.pivots = rr.pivot_cols;
    out.basis_rows = FpMatrix(rr.rank, m.rows());
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t c = 0; c < m.rows(); ++c)
            out.basis_rows.at(r, c) = rr.reduced.at(r, c);
    return out;
}

}  // namespace syz
