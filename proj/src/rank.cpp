#include "syz/rank.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cassert>
#include <vector>

namespace syz {

namespace {

using MatD = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapD = Eigen::Map<MatD, Eigen::Unaligned, Eigen::OuterStride<>>;
using CMapD = Eigen::Map<const MatD, Eigen::Unaligned, Eigen::OuterStride<>>;

inline double dmod(double v, std::int64_t p) {
    std::int64_t x = static_cast<std::int64_t>(v) % p;
    if (x < 0) x += p;
    return static_cast<double>(x);
}

struct PanelFactorization {
    std::vector<std::size_t> piv_cols;  // local column indices, increasing
    std::vector<double> pinv;           // inverse of the original pivot value
};

// Factors a panel of `rows` x `width` entries at `base` with row stride
// `stride`. Entries may carry lazy accumulation (|v| < 2^53); they are
// reduced on demand. Pivot rows stack to the top; entries below a pivot hold
// the elimination multipliers; columns without a pivot stay identically zero
// below the processed rows. swap_rest(a, b) must swap everything of rows a, b
// outside the panel columns.
template <typename SwapRest>
PanelFactorization factor_panel(double* base, std::size_t rows, std::size_t width,
                                std::size_t stride, const FieldContext& ctx,
                                SwapRest&& swap_rest) {
    const std::int64_t p = ctx.p();
    PanelFactorization pf;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < width && prow < rows; ++c) {
        std::size_t hit = rows;
        for (std::size_t r = prow; r < rows; ++r) {
            double v = dmod(base[r * stride + c], p);
            base[r * stride + c] = v;
            if (v != 0.0) {
                hit = r;
                break;
            }
        }
        if (hit == rows) continue;
        if (hit != prow) {
            double* a = base + hit * stride;
            double* b = base + prow * stride;
            for (std::size_t k = 0; k < width; ++k) std::swap(a[k], b[k]);
            swap_rest(hit, prow);
        }
        double* pr = base + prow * stride;
        const fp_t pval = static_cast<fp_t>(static_cast<std::int64_t>(pr[c]));
        const double pinv = static_cast<double>(ctx.inv(pval));
        for (std::size_t k = c; k < width; ++k) pr[k] = dmod(dmod(pr[k], p) * pinv, p);
        for (std::size_t r = prow + 1; r < rows; ++r) {
            double* tr = base + r * stride;
            const double f = dmod(tr[c], p);
            tr[c] = f;  // stored multiplier; this column is final below the pivot
            if (f == 0.0) continue;
            const double fneg = static_cast<double>(p) - f;
            for (std::size_t k = c + 1; k < width; ++k) tr[k] += fneg * pr[k];
        }
        pf.piv_cols.push_back(c);
        pf.pinv.push_back(pinv);
        ++prow;
    }
    return pf;
}

// Replays the panel row operations on the pivot rows' trailing blocks,
// producing U12 = L11^{-1} A12 in canonical form. Row i of `trail` (stride
// `tstride`) pairs with pivot i; multipliers come from the factored panel.
void solve_u12(double* trail, std::size_t ntrail, std::size_t tstride,
               const double* panel, std::size_t pstride,
               const PanelFactorization& pf, std::int64_t p) {
    const std::size_t k = pf.piv_cols.size();
    for (std::size_t i = 0; i < k; ++i) {
        double* ri = trail + i * tstride;
        const double pinv = pf.pinv[i];
        for (std::size_t t = 0; t < ntrail; ++t) ri[t] = dmod(dmod(ri[t], p) * pinv, p);
        for (std::size_t j = i + 1; j < k; ++j) {
            const double f = panel[j * pstride + pf.piv_cols[i]];
            if (f == 0.0) continue;
            const double fneg = static_cast<double>(p) - f;
            double* rj = trail + j * tstride;
            for (std::size_t t = 0; t < ntrail; ++t) rj[t] += fneg * ri[t];
        }
    }
}

std::size_t rank_scalar(const RowSource& src, const FieldContext& ctx) {
    const std::size_t m = src.rows(), n = src.cols();
    const fp_t p = ctx.p();
    std::vector<fp_t> a(m * n);
    for (std::size_t r = 0; r < m; ++r) src.fill_row(r, a.data() + r * n);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t hit = m;
        for (std::size_t r = rank; r < m; ++r) {
            if (a[r * n + c] != 0) {
                hit = r;
                break;
            }
        }
        if (hit == m) continue;
        if (hit != rank)
            std::swap_ranges(a.begin() + hit * n, a.begin() + (hit + 1) * n,
                             a.begin() + rank * n);
        fp_t* pr = a.data() + rank * n;
        const fp_t pinv = ctx.inv(pr[c]);
        for (std::size_t k = c; k < n; ++k)
            pr[k] = static_cast<fp_t>(std::uint64_t(pr[k]) * pinv % p);
        for (std::size_t r = rank + 1; r < m; ++r) {
            fp_t* tr = a.data() + r * n;
            const fp_t f = tr[c];
            if (f == 0) continue;
            const std::uint64_t fneg = p - f;
            for (std::size_t k = c; k < n; ++k)
                tr[k] = static_cast<fp_t>((tr[k] + fneg * pr[k]) % p);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_double_incore(const RowSource& src, const FieldContext& ctx,
                               const RankOptions& opts) {
    const std::size_t m = src.rows(), n = src.cols();
    const std::int64_t p = ctx.p();
    const std::size_t nb = opts.panel_width;

    std::vector<double> buf(m * n);
    {
        std::vector<fp_t> scratch(n);
        for (std::size_t r = 0; r < m; ++r) {
            src.fill_row(r, scratch.data());
            double* dst = buf.data() + r * n;
            for (std::size_t c = 0; c < n; ++c) dst[c] = static_cast<double>(scratch[c]);
        }
    }

    std::vector<double> l21;
    std::size_t rank = 0;
    for (std::size_t c0 = 0; c0 < n && rank < m; c0 += nb) {
        const std::size_t width = std::min(nb, n - c0);
        const std::size_t c1 = c0 + width;
        const std::size_t active = m - rank;

        double* panel = buf.data() + rank * n + c0;
        PanelFactorization pf =
            factor_panel(panel, active, width, n, ctx, [&](std::size_t a, std::size_t b) {
                double* ra = buf.data() + (rank + a) * n;
                double* rb = buf.data() + (rank + b) * n;
                for (std::size_t k = 0; k < c0; ++k) std::swap(ra[k], rb[k]);
                for (std::size_t k = c1; k < n; ++k) std::swap(ra[k], rb[k]);
            });
        const std::size_t k = pf.piv_cols.size();
        const std::size_t ntrail = n - c1;
        if (k > 0 && ntrail > 0) {
            solve_u12(buf.data() + rank * n + c1, ntrail, n, panel, n, pf, p);
            const std::size_t below = m - rank - k;
            if (below > 0) {
                l21.assign(below * k, 0.0);
                for (std::size_t r = 0; r < below; ++r) {
                    const double* srcrow = buf.data() + (rank + k + r) * n + c0;
                    for (std::size_t j = 0; j < k; ++j)
                        l21[r * k + j] = srcrow[pf.piv_cols[j]];
                }
                Eigen::Map<const MatD> lmap(l21.data(), below, k);
                CMapD umap(buf.data() + rank * n + c1, k, ntrail,
                           Eigen::OuterStride<>(static_cast<Eigen::Index>(n)));
                MapD cmap(buf.data() + (rank + k) * n + c1, below, ntrail,
                          Eigen::OuterStride<>(static_cast<Eigen::Index>(n)));
                cmap.noalias() -= lmap * umap;
            }
        }
        rank += k;
    }
    return rank;
}

std::size_t rank_u16_staged(const RowSource& src, const FieldContext& ctx,
                            const RankOptions& opts) {
    const std::size_t m = src.rows(), n = src.cols();
    const std::int64_t p = ctx.p();
    const std::size_t nb = opts.panel_width;
    const std::size_t strip = opts.strip_rows;
    assert(ctx.p() < (1u << 16));

    std::vector<std::uint16_t> store(m * n);
    {
        std::vector<fp_t> scratch(n);
        for (std::size_t r = 0; r < m; ++r) {
            src.fill_row(r, scratch.data());
            std::uint16_t* dst = store.data() + r * n;
            for (std::size_t c = 0; c < n; ++c) dst[c] = static_cast<std::uint16_t>(scratch[c]);
        }
    }

    std::vector<double> panel(m * nb);
    std::vector<double> u12(nb * n);
    std::vector<double> stripbuf(strip * n);
    std::vector<double> l21(strip * nb);

    std::size_t rank = 0;
    for (std::size_t c0 = 0; c0 < n && rank < m; c0 += nb) {
        const std::size_t width = std::min(nb, n - c0);
        const std::size_t c1 = c0 + width;
        const std::size_t active = m - rank;

        for (std::size_t r = 0; r < active; ++r) {
            const std::uint16_t* s = store.data() + (rank + r) * n + c0;
            double* d = panel.data() + r * width;
            for (std::size_t cidx = 0; cidx < width; ++cidx) d[cidx] = s[cidx];
        }
        PanelFactorization pf = factor_panel(
            panel.data(), active, width, width, ctx, [&](std::size_t a, std::size_t b) {
                std::swap_ranges(store.begin() + (rank + a) * n,
                                 store.begin() + (rank + a + 1) * n,
                                 store.begin() + (rank + b) * n);
            });
        const std::size_t k = pf.piv_cols.size();
        // Panel columns are final: write back the factored values.
        for (std::size_t r = 0; r < active; ++r) {
            const double* s = panel.data() + r * width;
            std::uint16_t* d = store.data() + (rank + r) * n + c0;
            for (std::size_t cidx = 0; cidx < width; ++cidx)
                d[cidx] = static_cast<std::uint16_t>(dmod(s[cidx], p));
        }
        const std::size_t ntrail = n - c1;
        if (k > 0 && ntrail > 0) {
            for (std::size_t i = 0; i < k; ++i) {
                const std::uint16_t* s = store.data() + (rank + i) * n + c1;
                double* d = u12.data() + i * ntrail;
                for (std::size_t t = 0; t < ntrail; ++t) d[t] = s[t];
            }
            solve_u12(u12.data(), ntrail, ntrail, panel.data(), width, pf, p);
            for (std::size_t i = 0; i < k; ++i) {
                const double* s = u12.data() + i * ntrail;
                std::uint16_t* d = store.data() + (rank + i) * n + c1;
                for (std::size_t t = 0; t < ntrail; ++t)
                    d[t] = static_cast<std::uint16_t>(s[t]);
            }
            for (std::size_t r0 = rank + k; r0 < m; r0 += strip) {
                const std::size_t rows = std::min(strip, m - r0);
                for (std::size_t r = 0; r < rows; ++r) {
                    const std::uint16_t* s = store.data() + (r0 + r) * n + c1;
                    double* d = stripbuf.data() + r * ntrail;
                    for (std::size_t t = 0; t < ntrail; ++t) d[t] = s[t];
                    const double* prow = panel.data() + (r0 + r - rank) * width;
                    double* l = l21.data() + r * k;
                    for (std::size_t j = 0; j < k; ++j) l[j] = prow[pf.piv_cols[j]];
                }
                Eigen::Map<MatD> cmap(stripbuf.data(), rows, ntrail);
                Eigen::Map<const MatD> lmap(l21.data(), rows, k);
                Eigen::Map<const MatD> umap(u12.data(), k, ntrail);
                cmap.noalias() -= lmap * umap;
                for (std::size_t r = 0; r < rows; ++r) {
                    const double* s = stripbuf.data() + r * ntrail;
                    std::uint16_t* d = store.data() + (r0 + r) * n + c1;
                    for (std::size_t t = 0; t < ntrail; ++t)
                        d[t] = static_cast<std::uint16_t>(dmod(s[t], p));
                }
            }
        }
        rank += k;
    }
    return rank;
}

}  // namespace

void FpMatrixSource::fill_row(std::size_t r, fp_t* out) const {
    if (!transpose_) {
        const fp_t* src = m_.row(r);
        for (std::size_t c = 0; c < m_.cols(); ++c) out[c] = src[c];
    } else {
        for (std::size_t c = 0; c < m_.rows(); ++c) out[c] = m_.at(c, r);
    }
}

std::size_t matrix_rank(const FpMatrix& m, const FieldContext& ctx,
                        const RankOptions& opts) {
    if (m.empty()) return 0;
    FpMatrixSource src(m, m.cols() < m.rows());
    return matrix_rank(src, ctx, opts);
}

std::size_t matrix_rank(const RowSource& src, const FieldContext& ctx,
                        const RankOptions& opts) {
    const std::size_t m = src.rows(), n = src.cols();
    if (m == 0 || n == 0) return 0;
    const std::size_t entries = m * n;
    if (entries <= (1u << 16)) return rank_scalar(src, ctx);

    // Lazy accumulation in doubles stays exact while (n + panel) * p^2 < 2^53.
    const double head = 9.0e15;
    const bool p_ok_double =
        static_cast<double>(ctx.p()) * ctx.p() *
            (static_cast<double>(n) + opts.panel_width) <
        head;
    if (p_ok_double && entries * 8 <= opts.double_budget_bytes)
        return rank_double_incore(src, ctx, opts);
    if (ctx.p() < (1u << 16)) return rank_u16_staged(src, ctx, opts);
    return rank_scalar(src, ctx);
}

}  // namespace syz
