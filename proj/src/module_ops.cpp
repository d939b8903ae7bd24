#include "grmod/module_ops.hpp"

#include <algorithm>
#include <numeric>

namespace grmod {

static ModuleElement nf_entries(const RingPtr& R, const ModuleElement& e) {
    ModuleElement out(R->ctx(), e.rank());
    for (int i = 0; i < e.rank(); ++i) out.comp(i) = R->nf(e.comp(i));
    return out;
}

static ModuleElement project_block(const RingPtr& R, const ModuleElement& s,
                                   int count) {
    ModuleElement out(R->ctx(), count);
    for (int i = 0; i < count; ++i) out.comp(i) = R->nf(s.comp(i));
    return out;
}

std::vector<ModuleElement> relative_syzygies(
    const RingPtr& R, const FreeModule& fm,
    const std::vector<ModuleElement>& gens) {
    if (gens.empty()) return {};
    std::vector<ModuleElement> all = gens;
    for (auto& e : R->ideal_block(fm)) all.push_back(std::move(e));
    GBOptions opts;
    opts.collect_syzygies = true;
    auto gb = submodule_gb(R->ctx(), fm, all, opts);
    std::vector<ModuleElement> out;
    for (auto& s : gb.syzygies()) {
        ModuleElement p = project_block(R, s, static_cast<int>(gens.size()));
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

static std::vector<int> by_ascending_degree(
    const FreeModule& fm, const std::vector<ModuleElement>& gens) {
    std::vector<int> deg(gens.size());
    for (size_t i = 0; i < gens.size(); ++i)
        deg[i] = gens[i].is_zero() ? INT32_MAX : gens[i].degree(fm);
    std::vector<int> order(gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] < deg[b]; });
    return order;
}

MinGens minimal_generators(const RingPtr& R, const FreeModule& fm,
                           const std::vector<ModuleElement>& gens) {
    std::vector<int> order = by_ascending_degree(fm, gens);
    SubmoduleGB gb = submodule_gb(R->ctx(), fm, R->ideal_block(fm));
    MinGens out;
    for (int idx : order) {
        if (gens[idx].is_zero()) continue;
        if (gb.add_generator(gens[idx])) {
            out.indices.push_back(idx);
            out.elems.push_back(gens[idx]);
        }
    }
    return out;
}

Subquotient present_subquotient(const RingPtr& R, const FreeModule& fm,
                                const std::vector<ModuleElement>& gens,
                                const std::vector<ModuleElement>& denominators) {
    // Pick cover representatives: generators not already in the span of the
    // denominators and the previously kept ones.
    std::vector<ModuleElement> seed = denominators;
    for (auto& e : R->ideal_block(fm)) seed.push_back(std::move(e));
    SubmoduleGB gb = submodule_gb(R->ctx(), fm, seed);
    std::vector<int> order = by_ascending_degree(fm, gens);
    Subquotient sq;
    for (int idx : order) {
        if (gens[idx].is_zero()) continue;
        if (gb.add_generator(gens[idx])) sq.gens.push_back(gens[idx]);
    }

    FreeModule cover;
    for (auto& g : sq.gens) cover.twists.push_back(g.degree(fm));

    // Relations: coefficients on the kept generators of any combination that
    // falls into the denominator span.
    std::vector<ModuleElement> all = sq.gens;
    for (auto& e : denominators) all.push_back(e);
    std::vector<ModuleElement> raw;
    if (!sq.gens.empty()) {
        for (auto& e : R->ideal_block(fm)) all.push_back(std::move(e));
        GBOptions opts;
        opts.collect_syzygies = true;
        auto syzgb = submodule_gb(R->ctx(), fm, all, opts);
        for (auto& s : syzgb.syzygies()) {
            ModuleElement p =
                project_block(R, s, static_cast<int>(sq.gens.size()));
            if (!p.is_zero()) raw.push_back(std::move(p));
        }
    }
    MinGens mg = minimal_generators(R, cover, raw);
    sq.module = Presentation(R, cover, mg.elems);
    return sq;
}

// Generators and twists for [map columns | target relations | ideal block];
// map columns keep their source twists even when zero.
static void graph_generators(const ModuleMap& f,
                             std::vector<ModuleElement>& gens,
                             std::vector<int>& twists) {
    const RingPtr& R = f.source.ring();
    const FreeModule& b0 = f.target.cover();
    for (int j = 0; j < f.source.cover().rank(); ++j) {
        gens.push_back(f.phi.column(j));
        twists.push_back(f.source.cover().twist(j));
    }
    for (auto& r : f.target.relations()) {
        gens.push_back(r);
        twists.push_back(r.degree(b0));
    }
    for (size_t k = 0; k < R->ideal().size(); ++k)
        for (int i = 0; i < b0.rank(); ++i)
            twists.push_back(R->ideal()[k].degree() + b0.twist(i));
    for (auto& e : R->ideal_block(b0)) gens.push_back(std::move(e));
}

KernelData kernel(const ModuleMap& f) {
    const RingPtr& R = f.source.ring();
    const FreeModule& b0 = f.target.cover();
    int na = f.source.cover().rank();
    std::vector<ModuleElement> all;
    std::vector<int> twists;
    graph_generators(f, all, twists);
    GBOptions opts;
    opts.collect_syzygies = true;
    SubmoduleGB gb(R->ctx(), b0, all, twists, opts);
    std::vector<ModuleElement> reps;
    for (auto& s : gb.syzygies()) {
        ModuleElement p = project_block(R, s, na);
        if (!p.is_zero()) reps.push_back(std::move(p));
    }
    Subquotient sq = present_subquotient(R, f.source.cover(), reps,
                                         f.source.relations());
    KernelData out;
    out.module = sq.module;
    FreeModule kcover = sq.module.is_null() ? FreeModule{} : sq.module.cover();
    out.inclusion = ModuleMap{
        sq.module, f.source,
        GradedMap::from_columns(R, kcover, f.source.cover(), sq.gens)};
    return out;
}

Presentation cokernel(const ModuleMap& f) {
    std::vector<ModuleElement> rels = f.target.relations();
    for (auto& c : f.phi.columns())
        rels.push_back(nf_entries(f.target.ring(), c));
    return Presentation(f.target.ring(), f.target.cover(), std::move(rels));
}

ImageData image(const ModuleMap& f) {
    const RingPtr& R = f.source.ring();
    const FreeModule& b0 = f.target.cover();
    Subquotient sq =
        present_subquotient(R, b0, f.phi.columns(), f.target.relations());
    ImageData out;
    out.module = sq.module;
    out.inclusion = ModuleMap{
        sq.module, f.target,
        GradedMap::from_columns(R, sq.module.cover(), b0, sq.gens)};

    // Express each source generator's image in the chosen image generators.
    std::vector<ModuleElement> basis_gens = sq.gens;
    for (auto& r : f.target.relations()) basis_gens.push_back(r);
    for (auto& e : R->ideal_block(b0)) basis_gens.push_back(std::move(e));
    auto gb = submodule_gb(R->ctx(), b0, basis_gens);
    std::vector<ModuleElement> proj_cols;
    for (int j = 0; j < f.source.cover().rank(); ++j) {
        std::vector<Poly> coords;
        bool ok = gb.lift(f.phi.column(j), coords);
        GRMOD_CHECK(ok, "image generator does not lift");
        ModuleElement col(R->ctx(), static_cast<int>(sq.gens.size()));
        for (size_t i = 0; i < sq.gens.size(); ++i)
            col.comp(static_cast<int>(i)) = R->nf(coords[i]);
        proj_cols.push_back(std::move(col));
    }
    out.projection = ModuleMap{
        f.source, sq.module,
        GradedMap::from_columns(R, f.source.cover(), sq.module.cover(),
                                proj_cols)};
    return out;
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
    GRMOD_CHECK(same_ring(a.ring(), b.ring()), "direct sum over one ring");
    const RingPtr& R = a.ring();
    FreeModule cover;
    cover.twists = a.cover().twists;
    cover.twists.insert(cover.twists.end(), b.cover().twists.begin(),
                        b.cover().twists.end());
    int ra = a.cover().rank();
    std::vector<ModuleElement> rels;
    for (auto& r : a.relations()) {
        ModuleElement e(R->ctx(), cover.rank());
        for (int i = 0; i < ra; ++i) e.comp(i) = r.comp(i);
        rels.push_back(std::move(e));
    }
    for (auto& r : b.relations()) {
        ModuleElement e(R->ctx(), cover.rank());
        for (int i = 0; i < b.cover().rank(); ++i) e.comp(ra + i) = r.comp(i);
        rels.push_back(std::move(e));
    }
    return Presentation(R, std::move(cover), std::move(rels));
}

Presentation tensor_product(const Presentation& a, const Presentation& b) {
    GRMOD_CHECK(same_ring(a.ring(), b.ring()), "tensor over one ring");
    const RingPtr& R = a.ring();
    int ra = a.cover().rank(), rb = b.cover().rank();
    FreeModule cover;
    for (int i = 0; i < ra; ++i)
        for (int l = 0; l < rb; ++l)
            cover.twists.push_back(a.cover().twist(i) + b.cover().twist(l));
    std::vector<ModuleElement> rels;
    for (auto& r : a.relations()) {
        for (int l = 0; l < rb; ++l) {
            ModuleElement e(R->ctx(), cover.rank());
            for (int i = 0; i < ra; ++i) e.comp(i * rb + l) = r.comp(i);
            rels.push_back(std::move(e));
        }
    }
    for (int i = 0; i < ra; ++i) {
        for (auto& r : b.relations()) {
            ModuleElement e(R->ctx(), cover.rank());
            for (int l = 0; l < rb; ++l) e.comp(i * rb + l) = r.comp(l);
            rels.push_back(std::move(e));
        }
    }
    return Presentation(R, std::move(cover), std::move(rels));
}

// Cover of Hom(F, G): basis element (i, l) at index i * rank(G) + l sends
// the i-th basis element of F to the l-th of G.
static FreeModule hom_cover(const FreeModule& f, const FreeModule& g) {
    FreeModule h;
    for (int i = 0; i < f.rank(); ++i)
        for (int l = 0; l < g.rank(); ++l)
            h.twists.push_back(g.twist(l) - f.twist(i));
    return h;
}

// Hom(F, N) for free F: one copy of N's relations per basis element of F.
static Presentation hom_free_into(const RingPtr& R, const FreeModule& f,
                                  const Presentation& N) {
    FreeModule cover = hom_cover(f, N.cover());
    int g = N.cover().rank();
    std::vector<ModuleElement> rels;
    for (int a = 0; a < f.rank(); ++a) {
        for (auto& r : N.relations()) {
            ModuleElement e(R->ctx(), cover.rank());
            for (int l = 0; l < g; ++l) e.comp(a * g + l) = r.comp(l);
            rels.push_back(std::move(e));
        }
    }
    return Presentation(R, std::move(cover), std::move(rels));
}

HomData hom_module(const Presentation& M, const Presentation& N) {
    GRMOD_CHECK(same_ring(M.ring(), N.ring()), "hom over one ring");
    const RingPtr& R = M.ring();
    HomData h;
    h.f0 = M.cover();
    h.g0 = N.cover();
    h.hom_f0 = hom_free_into(R, h.f0, N);
    FreeModule f1 = M.relation_ambient();
    Presentation hom_f1 = hom_free_into(R, f1, N);
    GradedMap A = M.relation_map();
    int g = h.g0.rank();
    GradedMap delta =
        GradedMap::zero(R, h.hom_f0.cover(), hom_f1.cover());
    for (int b = 0; b < f1.rank(); ++b)
        for (int a = 0; a < h.f0.rank(); ++a)
            for (int l = 0; l < g; ++l) delta.m[b * g + l][a * g + l] = A.m[a][b];
    KernelData k = kernel(ModuleMap{h.hom_f0, hom_f1, delta});
    h.module = k.module;
    h.inclusion = k.inclusion;
    return h;
}

GradedMap hom_generator_matrix(const HomData& h, int j) {
    const RingPtr& R = h.module.ring();
    int e = h.module.cover().twist(j);
    ModuleElement col = h.inclusion.phi.column(j);
    int g = h.g0.rank();
    GradedMap out = GradedMap::zero(R, h.f0, h.g0.shifted(-e));
    for (int i = 0; i < h.f0.rank(); ++i)
        for (int l = 0; l < g; ++l) out.m[l][i] = col.comp(i * g + l);
    return out;
}

ModuleElement hom_apply(const HomData& h, const ModuleElement& xi,
                        const ModuleElement& m) {
    const RingPtr& R = h.module.ring();
    ModuleElement flat = h.inclusion.phi.apply(xi);
    int g = h.g0.rank();
    ModuleElement out(R->ctx(), g);
    for (int l = 0; l < g; ++l) {
        Poly acc = Poly::zero(R->ctx());
        for (int i = 0; i < h.f0.rank(); ++i) {
            const Poly& c = flat.comp(i * g + l);
            if (c.is_zero() || m.comp(i).is_zero()) continue;
            acc = acc + c * m.comp(i);
        }
        out.comp(l) = acc;
    }
    return out;
}

Presentation minimalize(const Presentation& M) {
    const RingPtr& R = M.ring();
    std::vector<int> twists = M.cover().twists;
    std::vector<std::vector<Poly>> cols; // cols[j][i]
    for (auto& r : M.relations()) {
        std::vector<Poly> c;
        for (int i = 0; i < r.rank(); ++i) c.push_back(R->nf(r.comp(i)));
        cols.push_back(std::move(c));
    }
    const PrimeField& F = R->field();
    for (;;) {
        int pi = -1, pj = -1;
        for (size_t j = 0; j < cols.size() && pi < 0; ++j)
            for (size_t i = 0; i < twists.size(); ++i) {
                auto c = cols[j][i].as_constant();
                if (c && *c != 0) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
            }
        if (pi < 0) break;
        uint32_t cinv = F.inv(*cols[pj][pi].as_constant());
        for (size_t l = 0; l < cols.size(); ++l) {
            if (static_cast<int>(l) == pj) continue;
            const Poly& top = cols[l][pi];
            if (top.is_zero()) continue;
            Poly q = top.scaled(cinv);
            for (size_t i = 0; i < twists.size(); ++i)
                cols[l][i] = R->nf(cols[l][i] - cols[pj][i] * q);
        }
        for (auto& c : cols) c.erase(c.begin() + pi);
        cols.erase(cols.begin() + pj);
        twists.erase(twists.begin() + pi);
    }
    std::vector<ModuleElement> rels;
    for (auto& c : cols) {
        ModuleElement e(R->ctx(), static_cast<int>(twists.size()));
        bool nonzero = false;
        for (size_t i = 0; i < twists.size(); ++i) {
            e.comp(static_cast<int>(i)) = c[i];
            nonzero = nonzero || !c[i].is_zero();
        }
        if (nonzero) rels.push_back(std::move(e));
    }
    return Presentation(R, FreeModule{twists}, std::move(rels));
}

Presentation minimal_presentation(const Presentation& M) {
    Presentation Q = minimalize(M);
    MinGens mg = minimal_generators(Q.ring(), Q.cover(), Q.relations());
    return Presentation(Q.ring(), Q.cover(), mg.elems);
}

std::vector<Poly> trace_ideal(const Presentation& M) {
    const RingPtr& R = M.ring();
    HomData h = hom_module(M, Presentation::ring_module(R));
    std::vector<Poly> out;
    for (int j = 0; j < h.module.cover().rank(); ++j) {
        GradedMap g = hom_generator_matrix(h, j);
        for (auto& row : g.m)
            for (auto& e : row) {
                Poly n = R->nf(e);
                if (!n.is_zero()) out.push_back(std::move(n));
            }
    }
    return out;
}

bool is_stable(const Presentation& M) {
    for (auto& f : trace_ideal(M)) {
        auto c = f.as_constant();
        if (c && *c != 0) return false;
    }
    return true;
}

bool is_free(const Presentation& M, std::vector<int>* twists) {
    Presentation Q = minimalize(M);
    if (!Q.relations().empty()) return false;
    if (twists) *twists = Q.cover().twists;
    return true;
}

std::optional<ModuleElement> preimage(const ModuleMap& f,
                                      const ModuleElement& t) {
    const RingPtr& R = f.source.ring();
    const FreeModule& b0 = f.target.cover();
    int na = f.source.cover().rank();
    std::vector<ModuleElement> all;
    std::vector<int> twists;
    graph_generators(f, all, twists);
    SubmoduleGB gb(R->ctx(), b0, all, twists);
    std::vector<Poly> coords;
    if (!gb.lift(t, coords)) return std::nullopt;
    ModuleElement x(R->ctx(), na);
    for (int j = 0; j < na; ++j) x.comp(j) = R->nf(coords[j]);
    return x;
}

bool is_isomorphism(const ModuleMap& f) {
    if (!cokernel(f).is_zero_module()) return false;
    return kernel(f).module.is_zero_module();
}

} // namespace grmod
