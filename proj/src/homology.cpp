#include "grmod/homology.hpp"

#include <algorithm>

namespace grmod {

FreeModule Resolution::free_module(int k) const {
    if (k == 0) return minimal.cover();
    if (k <= computed_length()) return maps[k - 1].source;
    GRMOD_CHECK(complete, "resolution not computed that far");
    return FreeModule{};
}

std::vector<std::vector<int>> Resolution::betti_twists(int up_to) const {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= up_to; ++k) {
        if (k > computed_length() && !complete) break;
        std::vector<int> t = free_module(k).twists;
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
    }
    return out;
}

static void extend_resolution(ResolutionState& st, int up_to) {
    const RingPtr& R = st.minimal.ring();
    while (!st.complete && static_cast<int>(st.maps.size()) < up_to) {
        if (st.maps.empty()) {
            if (st.minimal.relations().empty()) {
                st.complete = true;
                break;
            }
            st.maps.push_back(st.minimal.relation_map());
            continue;
        }
        const GradedMap& d = st.maps.back();
        std::vector<ModuleElement> syz =
            relative_syzygies(R, d.target, d.columns());
        MinGens mg = minimal_generators(R, FreeModule{d.source.twists}, syz);
        if (mg.elems.empty()) {
            st.complete = true;
            break;
        }
        FreeModule next;
        for (auto& s : mg.elems)
            next.twists.push_back(s.degree(FreeModule{d.source.twists}));
        st.maps.push_back(
            GradedMap::from_columns(R, next, d.source, mg.elems));
    }
}

Resolution resolve(const Presentation& M, int up_to) {
    auto st = resolution_state(M);
    if (static_cast<int>(st->maps.size()) < up_to && !st->complete) {
        extend_resolution(*st, up_to);
        persist_resolution_state(M, *st);
    }
    Resolution r;
    r.minimal = st->minimal;
    r.maps.assign(st->maps.begin(),
                  st->maps.begin() +
                      std::min<size_t>(st->maps.size(), up_to));
    r.complete = st->complete && static_cast<int>(st->maps.size()) <= up_to;
    return r;
}

Presentation homology_at(const ModuleMap& incoming,
                         const ModuleMap& outgoing) {
    const RingPtr& R = outgoing.source.ring();
    const Presentation& B = outgoing.source;
    KernelData k = kernel(outgoing);
    std::vector<ModuleElement> cycles = k.inclusion.phi.columns();
    std::vector<ModuleElement> boundaries = incoming.phi.columns();
    boundaries.erase(
        std::remove_if(boundaries.begin(), boundaries.end(),
                       [](const ModuleElement& e) { return e.is_zero(); }),
        boundaries.end());
    for (auto& r : B.relations()) boundaries.push_back(r);
    Subquotient sq = present_subquotient(R, B.cover(), cycles, boundaries);
    return minimal_presentation(sq.module);
}

// Hom(F, N) for free F, with the cover convention of hom_module: basis
// element i * rank(G0) + l maps the i-th basis element of F to the l-th
// generator of N.
static Presentation hom_block(const RingPtr& R, const FreeModule& f,
                              const Presentation& N) {
    FreeModule cover;
    int g = N.cover().rank();
    for (int i = 0; i < f.rank(); ++i)
        for (int l = 0; l < g; ++l)
            cover.twists.push_back(N.cover().twist(l) - f.twist(i));
    std::vector<ModuleElement> rels;
    for (int a = 0; a < f.rank(); ++a)
        for (auto& r : N.relations()) {
            ModuleElement e(R->ctx(), cover.rank());
            for (int l = 0; l < g; ++l) e.comp(a * g + l) = r.comp(l);
            rels.push_back(std::move(e));
        }
    return Presentation(R, std::move(cover), std::move(rels));
}

// F tensor N for free F: cover index i * rank(G0) + l.
static Presentation tensor_block(const RingPtr& R, const FreeModule& f,
                                 const Presentation& N) {
    FreeModule cover;
    int g = N.cover().rank();
    for (int i = 0; i < f.rank(); ++i)
        for (int l = 0; l < g; ++l)
            cover.twists.push_back(N.cover().twist(l) + f.twist(i));
    std::vector<ModuleElement> rels;
    for (int i = 0; i < f.rank(); ++i)
        for (auto& r : N.relations()) {
            ModuleElement e(R->ctx(), cover.rank());
            for (int l = 0; l < g; ++l) e.comp(i * g + l) = r.comp(l);
            rels.push_back(std::move(e));
        }
    return Presentation(R, std::move(cover), std::move(rels));
}

// Map Hom(F_{k-1}, N) -> Hom(F_k, N) induced by d_k, i.e. composition.
static GradedMap hom_delta(const RingPtr& R, const GradedMap& d, int g,
                           const FreeModule& from_cover,
                           const FreeModule& to_cover) {
    GradedMap delta = GradedMap::zero(R, from_cover, to_cover);
    for (int b = 0; b < d.source.rank(); ++b)
        for (int a = 0; a < d.target.rank(); ++a)
            for (int l = 0; l < g; ++l)
                delta.m[b * g + l][a * g + l] = d.m[a][b];
    return delta;
}

Presentation hom_free_into(const FreeModule& f, const Presentation& N) {
    return hom_block(N.ring(), f, N);
}

GradedMap hom_induced(const GradedMap& d, const Presentation& N) {
    int g = N.cover().rank();
    FreeModule from, to;
    for (int i = 0; i < d.target.rank(); ++i)
        for (int l = 0; l < g; ++l)
            from.twists.push_back(N.cover().twist(l) - d.target.twist(i));
    for (int i = 0; i < d.source.rank(); ++i)
        for (int l = 0; l < g; ++l)
            to.twists.push_back(N.cover().twist(l) - d.source.twist(i));
    return hom_delta(d.R, d, g, from, to);
}

// Map F_k tensor N -> F_{k-1} tensor N induced by d_k.
static GradedMap tensor_delta(const RingPtr& R, const GradedMap& d, int g,
                              const FreeModule& from_cover,
                              const FreeModule& to_cover) {
    GradedMap delta = GradedMap::zero(R, from_cover, to_cover);
    for (int b = 0; b < d.source.rank(); ++b)
        for (int a = 0; a < d.target.rank(); ++a)
            for (int l = 0; l < g; ++l)
                delta.m[a * g + l][b * g + l] = d.m[a][b];
    return delta;
}

Presentation ext_module(const Presentation& M, const Presentation& N, int i) {
    GRMOD_CHECK(i >= 0, "negative cohomological degree");
    GRMOD_CHECK(same_ring(M.ring(), N.ring()), "ext over one ring");
    const RingPtr& R = M.ring();
    Resolution res = resolve(M, i + 1);
    FreeModule fi = res.free_module(i);
    if (fi.rank() == 0) return Presentation::zero_module(R);
    int g = N.cover().rank();
    Presentation hi = hom_block(R, fi, N);

    ModuleMap incoming;
    if (i == 0) {
        incoming = ModuleMap{Presentation::zero_module(R), hi,
                             GradedMap::zero(R, FreeModule{}, hi.cover())};
    } else {
        FreeModule fprev = res.free_module(i - 1);
        Presentation hprev = hom_block(R, fprev, N);
        incoming = ModuleMap{
            hprev, hi,
            hom_delta(R, res.maps[i - 1], g, hprev.cover(), hi.cover())};
    }
    FreeModule fnext = res.free_module(i + 1);
    Presentation hnext = hom_block(R, fnext, N);
    ModuleMap outgoing;
    if (fnext.rank() == 0) {
        outgoing = ModuleMap{hi, Presentation::zero_module(R),
                             GradedMap::zero(R, hi.cover(), FreeModule{})};
    } else {
        outgoing = ModuleMap{
            hi, hnext,
            hom_delta(R, res.maps[i], g, hi.cover(), hnext.cover())};
    }
    return homology_at(incoming, outgoing);
}

Presentation tor_module(const Presentation& M, const Presentation& N, int i) {
    GRMOD_CHECK(i >= 0, "negative homological degree");
    GRMOD_CHECK(same_ring(M.ring(), N.ring()), "tor over one ring");
    const RingPtr& R = M.ring();
    Resolution res = resolve(M, i + 1);
    FreeModule fi = res.free_module(i);
    if (fi.rank() == 0) return Presentation::zero_module(R);
    int g = N.cover().rank();
    Presentation ti = tensor_block(R, fi, N);

    FreeModule fnext = res.free_module(i + 1);
    ModuleMap incoming;
    if (fnext.rank() == 0) {
        incoming = ModuleMap{Presentation::zero_module(R), ti,
                             GradedMap::zero(R, FreeModule{}, ti.cover())};
    } else {
        Presentation tnext = tensor_block(R, fnext, N);
        incoming = ModuleMap{
            tnext, ti,
            tensor_delta(R, res.maps[i], g, tnext.cover(), ti.cover())};
    }
    ModuleMap outgoing;
    if (i == 0) {
        outgoing = ModuleMap{ti, Presentation::zero_module(R),
                             GradedMap::zero(R, ti.cover(), FreeModule{})};
    } else {
        FreeModule fprev = res.free_module(i - 1);
        Presentation tprev = tensor_block(R, fprev, N);
        outgoing = ModuleMap{
            ti, tprev,
            tensor_delta(R, res.maps[i - 1], g, ti.cover(), tprev.cover())};
    }
    return homology_at(incoming, outgoing);
}

Presentation restrict_scalars(const Presentation& M) {
    const RingPtr& R = M.ring();
    if (R->is_polynomial()) return M;
    RingPtr S = GradedRing::polynomial(R->ctx());
    std::vector<ModuleElement> rels = M.relations();
    for (auto& e : R->ideal_block(M.cover())) rels.push_back(std::move(e));
    return Presentation(S, M.cover(), std::move(rels));
}

} // namespace grmod
