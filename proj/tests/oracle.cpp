#include "oracle.hpp"

#include <algorithm>

namespace grmod::oracle {

static void enumerate(const ContextPtr& ctx, int var, int remaining,
                      Monomial& cur, std::vector<Monomial>& out) {
    int n = ctx->nvars();
    if (var == n) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int w = ctx->weights()[var];
    for (int e = remaining / w; e >= 0; --e) {
        cur[var] = e;
        enumerate(ctx, var + 1, remaining - e * w, cur, out);
    }
    cur[var] = 0;
}

std::vector<Monomial> monomials_of_degree(const ContextPtr& ctx, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur = mono_one(ctx->nvars());
    enumerate(ctx, 0, d, cur, out);
    return out;
}

BasisD basis_of_degree(const ContextPtr& ctx, const FreeModule& fm, int d) {
    BasisD b;
    for (int i = 0; i < fm.rank(); ++i) {
        for (auto& m : monomials_of_degree(ctx, d - fm.twist(i))) {
            b.index[{i, m}] = static_cast<int>(b.elems.size());
            b.elems.push_back({i, m});
        }
    }
    return b;
}

std::vector<uint32_t> coords_of(const ModuleElement& e, const BasisD& basis) {
    std::vector<uint32_t> v(basis.dim(), 0);
    for (int i = 0; i < e.rank(); ++i) {
        for (auto& t : e.comp(i).terms()) {
            auto it = basis.index.find({i, t.mono});
            GRMOD_CHECK(it != basis.index.end(),
                        "element term outside the graded piece");
            v[it->second] = t.coeff;
        }
    }
    return v;
}

static void add_column(Mat& m, const std::vector<uint32_t>& col) {
    if (m.empty()) m.resize(col.size());
    GRMOD_CHECK(m.size() == col.size(), "column length mismatch");
    for (size_t r = 0; r < col.size(); ++r) m[r].push_back(col[r]);
}

Mat span_matrix(const ContextPtr& ctx, const FreeModule& fm,
                const std::vector<ModuleElement>& gens, int d) {
    BasisD basis = basis_of_degree(ctx, fm, d);
    Mat m(basis.dim());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        int dg = g.degree(fm);
        for (auto& mono : monomials_of_degree(ctx, d - dg))
            add_column(m, coords_of(g.mono_mul(mono, 1), basis));
    }
    if (m.empty()) m.resize(basis.dim());
    return m;
}

Mat map_matrix(const ContextPtr& ctx, const FreeModule& src,
               const FreeModule& tgt,
               const std::vector<std::vector<Poly>>& entries, int d) {
    BasisD sb = basis_of_degree(ctx, src, d);
    BasisD tb = basis_of_degree(ctx, tgt, d);
    Mat m(tb.dim());
    for (auto& [comp, mono] : sb.elems) {
        ModuleElement img(ctx, tgt.rank());
        for (int i = 0; i < tgt.rank(); ++i) {
            const Poly& g = entries[i][comp];
            if (!g.is_null() && !g.is_zero()) img.comp(i) = g.mono_mul(mono, 1);
        }
        add_column(m, coords_of(img, tb));
    }
    if (m.empty()) m.resize(tb.dim());
    return m;
}

// Row-echelon elimination; returns pivot columns, m becomes reduced rows.
static std::vector<int> echelon(Mat& m, const PrimeField& F) {
    std::vector<int> pivots;
    size_t nrows = m.size();
    size_t ncols = nrows ? m[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t sel = row;
        while (sel < nrows && m[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(m[row], m[sel]);
        uint32_t inv = F.inv(m[row][col]);
        for (size_t c = col; c < ncols; ++c) m[row][c] = F.mul(m[row][c], inv);
        for (size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            uint32_t f = m[r][col];
            for (size_t c = col; c < ncols; ++c)
                m[r][c] = F.sub(m[r][c], F.mul(f, m[row][c]));
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

int rank(Mat m, const PrimeField& F) {
    return static_cast<int>(echelon(m, F).size());
}

Mat kernel_basis(const Mat& m, int ncols, const PrimeField& F) {
    Mat work = m;
    for (auto& r : work) r.resize(ncols, 0);
    if (work.empty()) work.push_back(std::vector<uint32_t>(ncols, 0));
    std::vector<int> pivots = echelon(work, F);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    Mat out;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(ncols, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.neg(work[r][free]);
        out.push_back(std::move(v));
    }
    return out;
}

int quotient_dim(const ContextPtr& ctx, const FreeModule& fm,
                 const std::vector<ModuleElement>& gens, int d) {
    BasisD basis = basis_of_degree(ctx, fm, d);
    Mat m = span_matrix(ctx, fm, gens, d);
    return basis.dim() - rank(m, ctx->field());
}

bool member(const ContextPtr& ctx, const FreeModule& fm,
            const std::vector<ModuleElement>& gens, const ModuleElement& e) {
    if (e.is_zero()) return true;
    int d = e.degree(fm);
    BasisD basis = basis_of_degree(ctx, fm, d);
    Mat m = span_matrix(ctx, fm, gens, d);
    int r0 = rank(m, ctx->field());
    add_column(m, coords_of(e, basis));
    return rank(m, ctx->field()) == r0;
}

std::vector<uint32_t> QuotientSpace::project(std::vector<uint32_t> v,
                                             const PrimeField& F) const {
    for (size_t r = 0; r < reduced_span.size(); ++r) {
        uint32_t c = v[pivot_cols[r]];
        if (c == 0) continue;
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = F.sub(v[i], F.mul(c, reduced_span[r][i]));
    }
    std::vector<uint32_t> out;
    out.reserve(coset_cols.size());
    for (int c : coset_cols) out.push_back(v[c]);
    return out;
}

QuotientSpace quotient_space(const ContextPtr& ctx, const FreeModule& fm,
                             const std::vector<ModuleElement>& gens, int d) {
    QuotientSpace q;
    q.full = basis_of_degree(ctx, fm, d);
    Mat cols = span_matrix(ctx, fm, gens, d);
    // Transpose: span vectors become rows for elimination.
    size_t nv = cols.empty() ? 0 : cols[0].size();
    Mat rows(nv, std::vector<uint32_t>(q.full.dim(), 0));
    for (size_t r = 0; r < cols.size(); ++r)
        for (size_t c = 0; c < nv; ++c) rows[c][r] = cols[r][c];
    q.pivot_cols = echelon(rows, ctx->field());
    q.reduced_span = std::move(rows);
    std::vector<bool> is_pivot(q.full.dim(), false);
    for (int p : q.pivot_cols) is_pivot[p] = true;
    for (int c = 0; c < q.full.dim(); ++c)
        if (!is_pivot[c]) q.coset_cols.push_back(c);
    return q;
}

namespace {

struct HomLevel {
    std::vector<QuotientSpace> q; // one block per basis element of F_k
    std::vector<int> offset;
    int total = 0;
};

HomLevel hom_level(const ContextPtr& ctx, const FreeModule& fk,
                   const FreeModule& n_cover,
                   const std::vector<ModuleElement>& n_rels, int d) {
    HomLevel lv;
    for (int a = 0; a < fk.rank(); ++a) {
        lv.offset.push_back(lv.total);
        lv.q.push_back(quotient_space(ctx, n_cover, n_rels, d + fk.twist(a)));
        lv.total += lv.q.back().dim();
    }
    return lv;
}

// Composition with d_k sends h to h . d_k; block (b, a) multiplies the
// quotient coordinates by entry[a][b].
Mat delta_matrix(const ContextPtr& ctx, const FreeModule& n_cover,
                 const HomLevel& from, const HomLevel& to,
                 const std::vector<std::vector<Poly>>& entries) {
    Mat m(to.total, std::vector<uint32_t>(from.total, 0));
    const PrimeField& F = ctx->field();
    for (size_t b = 0; b < to.q.size(); ++b) {
        for (size_t a = 0; a < from.q.size(); ++a) {
            const Poly& g = entries[a][b];
            if (g.is_null() || g.is_zero()) continue;
            const QuotientSpace& qs = from.q[a];
            const QuotientSpace& qt = to.q[b];
            for (int j = 0; j < qs.dim(); ++j) {
                auto [comp, mono] = qs.full.elems[qs.coset_cols[j]];
                ModuleElement e(ctx, n_cover.rank());
                e.comp(comp) = g.mono_mul(mono, 1);
                auto col = qt.project(
                    coords_of(e, qt.full), F);
                for (int i = 0; i < qt.dim(); ++i) {
                    if (col[i])
                        m[to.offset[b] + i][from.offset[a] + j] =
                            F.add(m[to.offset[b] + i][from.offset[a] + j],
                                  col[i]);
                }
            }
        }
    }
    return m;
}

} // namespace

int ext_dim(const ContextPtr& ctx, const FreeModule& f0,
            const std::vector<FreeMap>& res_maps, const FreeModule& n_cover,
            const std::vector<ModuleElement>& n_rels, int i, int d) {
    auto module_at = [&](int k) -> const FreeModule* {
        if (k == 0) return &f0;
        if (k <= static_cast<int>(res_maps.size()))
            return &res_maps[k - 1].source;
        return nullptr;
    };
    const FreeModule* fi = module_at(i);
    if (!fi) return 0;
    HomLevel li = hom_level(ctx, *fi, n_cover, n_rels, d);
    int r_in = 0;
    if (i >= 1) {
        const FreeModule* fprev = module_at(i - 1);
        HomLevel lprev = hom_level(ctx, *fprev, n_cover, n_rels, d);
        Mat delta_i =
            delta_matrix(ctx, n_cover, lprev, li, res_maps[i - 1].entries);
        r_in = rank(delta_i, ctx->field());
    }
    int r_out = 0;
    if (module_at(i + 1)) {
        HomLevel lnext =
            hom_level(ctx, *module_at(i + 1), n_cover, n_rels, d);
        Mat delta_next =
            delta_matrix(ctx, n_cover, li, lnext, res_maps[i].entries);
        r_out = rank(delta_next, ctx->field());
    }
    return li.total - r_out - r_in;
}

} // namespace grmod::oracle
