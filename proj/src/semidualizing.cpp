#include "grmod/semidualizing.hpp"

#include <map>
#include <stdexcept>

#include "grmod/invariants.hpp"

namespace grmod {

CertStatus CertStatus::certified(std::string note) {
    return CertStatus{CertKind::Certified, 0, std::move(note)};
}

CertStatus CertStatus::bounded(int b, std::string note) {
    return CertStatus{CertKind::BoundedEvidence, b, std::move(note)};
}

CertStatus CertStatus::failed(std::string w) {
    return CertStatus{CertKind::Failed, 0, std::move(w)};
}

std::string CertStatus::str() const {
    switch (kind) {
    case CertKind::Certified: return "Certified";
    case CertKind::BoundedEvidence:
        return "BoundedEvidence(" + std::to_string(bound) + ")";
    default: return "Failed";
    }
}

CertStatus weakest(const CertStatus& a, const CertStatus& b) {
    if (a.kind == CertKind::Failed) return a;
    if (b.kind == CertKind::Failed) return b;
    if (a.kind == CertKind::BoundedEvidence &&
        b.kind == CertKind::BoundedEvidence)
        return a.bound <= b.bound ? a : b;
    if (a.kind == CertKind::BoundedEvidence) return a;
    if (b.kind == CertKind::BoundedEvidence) return b;
    return a;
}

static void require_verified(const Dualizer& C) {
    if (!C.status.ok())
        throw std::invalid_argument("dualizer " + C.name +
                                    " failed semidualizing verification: " +
                                    C.status.witness);
}

ModuleMap homothety_map(const Presentation& C) {
    const RingPtr& R = C.ring();
    HomData h = hom_module(C, C);
    int g = C.cover().rank();
    ModuleElement v(R->ctx(), h.hom_f0.cover().rank());
    for (int i = 0; i < g; ++i)
        v.comp(i * g + i) = Poly::constant(R->ctx(), 1);
    auto xi = preimage(h.inclusion, v);
    GRMOD_CHECK(xi.has_value(), "identity endomorphism escapes Hom(C, C)");
    Presentation ring = Presentation::ring_module(R);
    return ModuleMap{ring, h.module,
                     GradedMap::from_columns(R, ring.cover(),
                                             h.module.cover(), {*xi})};
}

CertStatus verify_semidualizing(const Presentation& C, int bound) {
    if (bound < 1)
        throw std::invalid_argument("verification bound must be positive");
    if (C.is_zero_module())
        throw std::invalid_argument(
            "semidualizing candidate is the zero module");
    ModuleMap chi = homothety_map(C);
    if (!kernel(chi).module.is_zero_module())
        return CertStatus::failed(
            "homothety R -> Hom(C, C) has nonzero kernel");
    if (!cokernel(chi).is_zero_module())
        return CertStatus::failed(
            "homothety R -> Hom(C, C) is not surjective");
    for (int i = 1; i <= bound; ++i)
        if (!ext_module(C, C, i).is_zero_module())
            return CertStatus::failed("Ext^" + std::to_string(i) +
                                      "(C, C) != 0");
    if (finite_pd(C, bound))
        return CertStatus::certified("finite projective dimension");
    return CertStatus::bounded(bound);
}

Dualizer ring_dualizer(const RingPtr& R) {
    return Dualizer{Presentation::ring_module(R), CertStatus::certified(),
                    true, false, "R"};
}

Dualizer module_dualizer(const Presentation& C, std::string name, int bound) {
    Presentation Cm = minimal_presentation(C);
    CertStatus st = verify_semidualizing(Cm, bound);
    return Dualizer{std::move(Cm), std::move(st), false, false,
                    std::move(name)};
}

Dualizer canonical_dualizer(const RingPtr& R, int bound) {
    Presentation W = canonical_module(R);
    CertStatus st = verify_semidualizing(W, bound);
    if (st.kind == CertKind::BoundedEvidence && bound >= ring_depth(R))
        st = CertStatus::certified("dualizing");
    return Dualizer{std::move(W), std::move(st), false, true, "omega"};
}

Presentation canonical_module(const RingPtr& R) {
    static std::map<uint64_t, Presentation> cache;
    uint64_t key = R->hash() ^
                   (0x9e3779b97f4a7c15ULL *
                    reinterpret_cast<uintptr_t>(R->ctx().get()));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (!is_cohen_macaulay(R))
        throw std::invalid_argument(
            "canonical module requires a Cohen-Macaulay ring");
    const ContextPtr& ctx = R->ctx();
    int a = 0;
    for (int w : ctx->weights()) a += w;
    int cod = ctx->nvars() - ring_dim(R);
    RingPtr S = GradedRing::polynomial(ctx);
    std::vector<ModuleElement> rels;
    for (const Poly& f : R->ideal()) rels.push_back(ModuleElement::wrap(f));
    Presentation RS(S, FreeModule{{0}}, std::move(rels));
    Presentation shifted = Presentation::free_module(S, FreeModule{{a}});
    Presentation E = ext_module(RS, shifted, cod);
    Presentation W = minimal_presentation(
        Presentation(R, E.cover(), E.relations()));
    cache.emplace(key, W);
    return W;
}

bool is_gorenstein(const RingPtr& R) {
    static std::map<uint64_t, bool> cache;
    uint64_t key = R->hash() ^
                   (0x9e3779b97f4a7c15ULL *
                    reinterpret_cast<uintptr_t>(R->ctx().get()));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<int> twists;
    bool g = is_cohen_macaulay(R) &&
             is_free(canonical_module(R), &twists) && twists.size() == 1;
    cache.emplace(key, g);
    return g;
}

Presentation dual_module(const Presentation& M, const Dualizer& C) {
    require_verified(C);
    return minimal_presentation(hom_module(M, C.C).module);
}

ModuleMap biduality_map(const Presentation& M, const Dualizer& C) {
    require_verified(C);
    const RingPtr& R = M.ring();
    const ContextPtr& ctx = R->ctx();
    HomData d1 = hom_module(M, C.C);
    HomData d2 = hom_module(d1.module, C.C);
    int r1 = d1.module.cover().rank();
    int gc = C.C.cover().rank();
    std::vector<ModuleElement> cols;
    for (int j = 0; j < M.cover().rank(); ++j) {
        ModuleElement ej = ModuleElement::unit(ctx, M.cover().rank(), j);
        ModuleElement v(ctx, d2.hom_f0.cover().rank());
        for (int l = 0; l < r1; ++l) {
            ModuleElement xi = ModuleElement::unit(ctx, r1, l);
            ModuleElement val = hom_apply(d1, xi, ej);
            for (int m = 0; m < gc; ++m) v.comp(l * gc + m) = val.comp(m);
        }
        auto pre = preimage(d2.inclusion, v);
        GRMOD_CHECK(pre.has_value(),
                    "evaluation escapes Hom(Hom(M, C), C)");
        cols.push_back(*pre);
    }
    return ModuleMap{M, d2.module,
                     GradedMap::from_columns(R, M.cover(),
                                             d2.module.cover(), cols)};
}

Presentation transpose(const Presentation& M, const Dualizer& C) {
    require_verified(C);
    Resolution r = resolve(M, 1);
    if (r.maps.empty()) return Presentation::zero_module(M.ring());
    const GradedMap& d = r.maps[0];
    Presentation h0 = hom_free_into(d.target, C.C);
    Presentation h1 = hom_free_into(d.source, C.C);
    ModuleMap f{h0, h1, hom_induced(d, C.C)};
    return minimal_presentation(cokernel(f));
}

Presentation syzygy_module(const Presentation& M, int k) {
    GRMOD_CHECK(k >= 0, "negative syzygy index");
    if (k == 0) return resolve(M, 0).minimal;
    Resolution r = resolve(M, k + 1);
    if (r.computed_length() >= k + 1)
        return Presentation(M.ring(), r.maps[k].target, r.maps[k].columns());
    GRMOD_CHECK(r.complete, "resolution stopped short of the syzygy");
    if (r.computed_length() == k)
        return Presentation::free_module(M.ring(), r.free_module(k));
    return Presentation::zero_module(M.ring());
}

Presentation lambda_module(const Presentation& M) {
    return syzygy_module(transpose(M, ring_dualizer(M.ring())), 1);
}

Presentation iterated_transpose(const Presentation& M, const Dualizer& C,
                                int n) {
    if (n < 1)
        throw std::invalid_argument("iterated transpose needs n >= 1");
    return transpose(syzygy_module(M, n - 1), C);
}

Verdict totally_reflexive(const Presentation& M, const Dualizer& C,
                          int bound) {
    require_verified(C);
    if (M.is_zero_module()) return {true, CertStatus::certified(), ""};
    ModuleMap sigma = biduality_map(M, C);
    if (!kernel(sigma).module.is_zero_module())
        return {false, CertStatus::certified(),
                "biduality map is not injective"};
    if (!cokernel(sigma).is_zero_module())
        return {false, CertStatus::certified(),
                "biduality map is not surjective"};
    for (int i = 1; i <= bound; ++i)
        if (!ext_module(M, C.C, i).is_zero_module())
            return {false, CertStatus::certified(),
                    "Ext^" + std::to_string(i) + "(M, C) != 0"};
    Presentation Mc = dual_module(M, C);
    for (int i = 1; i <= bound; ++i)
        if (!ext_module(Mc, C.C, i).is_zero_module())
            return {false, CertStatus::certified(),
                    "Ext^" + std::to_string(i) + "(Hom(M, C), C) != 0"};
    CertStatus st = weakest(ext_vanishing_certificate(M, C, bound),
                            ext_vanishing_certificate(Mc, C, bound));
    return {true, st, ""};
}

Verdict c_k_torsionless(const Presentation& M, const Dualizer& C, int k) {
    require_verified(C);
    if (k <= 0) return {true, CertStatus::certified(), ""};
    Presentation t = transpose(M, C);
    for (int i = 1; i <= k; ++i)
        if (!ext_module(t, C.C, i).is_zero_module())
            return {false, CertStatus::certified(),
                    "Ext^" + std::to_string(i) + "(transpose, C) != 0"};
    return {true, CertStatus::certified(), ""};
}

Verdict is_c_syzygy(const Presentation& M, const Dualizer& C) {
    return c_k_torsionless(M, C, 1);
}

Verdict auslander_class(const Presentation& M, const Dualizer& C, int bound) {
    require_verified(C);
    if (C.is_ring)
        return {true, CertStatus::certified("identity functors"), ""};
    const RingPtr& R = M.ring();
    const ContextPtr& ctx = R->ctx();
    Presentation T = tensor_product(M, C.C);
    HomData h = hom_module(C.C, T);
    int gc = C.C.cover().rank();
    int gt = T.cover().rank();
    std::vector<ModuleElement> cols;
    for (int j = 0; j < M.cover().rank(); ++j) {
        ModuleElement v(ctx, h.hom_f0.cover().rank());
        for (int i = 0; i < gc; ++i)
            v.comp(i * gt + (j * gc + i)) = Poly::constant(ctx, 1);
        auto pre = preimage(h.inclusion, v);
        GRMOD_CHECK(pre.has_value(),
                    "tensor insertion escapes Hom(C, M (x) C)");
        cols.push_back(*pre);
    }
    ModuleMap mu{M, h.module,
                 GradedMap::from_columns(R, M.cover(), h.module.cover(),
                                         cols)};
    if (!kernel(mu).module.is_zero_module())
        return {false, CertStatus::certified(),
                "mu: M -> Hom(C, M (x) C) is not injective"};
    if (!cokernel(mu).is_zero_module())
        return {false, CertStatus::certified(),
                "mu: M -> Hom(C, M (x) C) is not surjective"};
    for (int i = 1; i <= bound; ++i) {
        if (!tor_module(C.C, M, i).is_zero_module())
            return {false, CertStatus::certified(),
                    "Tor_" + std::to_string(i) + "(C, M) != 0"};
        if (!ext_module(C.C, T, i).is_zero_module())
            return {false, CertStatus::certified(),
                    "Ext^" + std::to_string(i) + "(C, M (x) C) != 0"};
    }
    if (finite_pd(M, bound))
        return {true, CertStatus::certified("finite projective dimension"),
                ""};
    if (C.dualizing && bound >= ring_depth(R) + ring_dim(R))
        return {true, CertStatus::certified("dualizing"), ""};
    return {true, CertStatus::bounded(bound), ""};
}

} // namespace grmod
