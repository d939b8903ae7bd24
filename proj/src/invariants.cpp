#include "grmod/invariants.hpp"

#include <map>
#include <stdexcept>

namespace grmod {

std::string XInt::str() const {
    return finite ? std::to_string(value) : "inf";
}

static uint64_t ring_key(const RingPtr& R) {
    return R->hash() ^ (0x9e3779b97f4a7c15ULL *
                        reinterpret_cast<uintptr_t>(R->ctx().get()));
}

int ring_dim(const RingPtr& R) {
    static std::map<uint64_t, int> cache;
    uint64_t key = ring_key(R);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int n = R->ctx()->nvars();
    int best = n;
    if (!R->is_polynomial()) {
        // Dimension of the lead-term quotient: the largest variable subset
        // containing no lead monomial's support.
        std::vector<uint32_t> supports;
        for (const ModuleElement& g : R->ideal_gb().basis()) {
            auto lt = g.leading();
            GRMOD_CHECK(lt.has_value(), "zero element in an ideal basis");
            uint32_t s = 0;
            for (int i = 0; i < n; ++i)
                if (lt->mono[i] > 0) s |= 1u << i;
            supports.push_back(s);
        }
        best = 0;
        for (uint32_t sub = 0; sub < (1u << n); ++sub) {
            bool independent = true;
            for (uint32_t s : supports)
                if ((s & ~sub) == 0) {
                    independent = false;
                    break;
                }
            if (!independent) continue;
            int size = 0;
            for (int i = 0; i < n; ++i)
                if (sub & (1u << i)) ++size;
            if (size > best) best = size;
        }
    }
    cache.emplace(key, best);
    return best;
}

int depth(const Presentation& M) {
    GRMOD_CHECK(!M.is_zero_module(), "depth of the zero module");
    int n = M.ring()->ctx()->nvars();
    Resolution r = resolve(restrict_scalars(M), n + 2);
    GRMOD_CHECK(r.complete,
                "resolution over the polynomial ring did not terminate");
    return n - r.computed_length();
}

int ring_depth(const RingPtr& R) {
    static std::map<uint64_t, int> cache;
    uint64_t key = ring_key(R);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    int d = depth(Presentation::ring_module(R));
    cache.emplace(key, d);
    return d;
}

bool is_cohen_macaulay(const RingPtr& R) {
    return ring_depth(R) == ring_dim(R);
}

std::optional<int> finite_pd(const Presentation& M, int cap) {
    if (M.is_zero_module()) return 0;
    Resolution r = resolve(M, cap + 1);
    if (r.complete && r.computed_length() <= cap)
        return r.computed_length();
    return std::nullopt;
}

int default_ext_bound(const RingPtr& R) { return ring_depth(R) + 4; }

CertStatus ext_vanishing_certificate(const Presentation& M, const Dualizer& C,
                                     int bound) {
    if (finite_pd(M, bound))
        return CertStatus::certified("finite projective dimension");
    const RingPtr& R = M.ring();
    bool closes = C.dualizing || (C.is_ring && is_gorenstein(R));
    if (closes && bound >= ring_depth(R))
        return CertStatus::certified("dualizing");
    return CertStatus::bounded(bound);
}

CertXInt grade_value(const Presentation& M, const Dualizer& C) {
    if (M.is_zero_module())
        return {XInt::inf(), CertStatus::certified()};
    int top = ring_dim(M.ring());
    for (int i = 0; i <= top; ++i)
        if (!ext_module(M, C.C, i).is_zero_module())
            return {XInt::of(i), CertStatus::certified()};
    GRMOD_CHECK(false, "grade scan exhausted beyond the ring dimension");
    return {};
}

CertXInt grade_value(const Presentation& M) {
    return grade_value(M, ring_dualizer(M.ring()));
}

CertXInt reduced_grade(const Presentation& M, const Dualizer& C, int bound) {
    if (M.is_zero_module())
        return {XInt::inf(), CertStatus::certified()};
    for (int i = 1; i <= bound; ++i)
        if (!ext_module(M, C.C, i).is_zero_module())
            return {XInt::of(i), CertStatus::certified()};
    return {XInt::inf(), ext_vanishing_certificate(M, C, bound)};
}

CertXInt gc_dimension(const Presentation& M, const Dualizer& C, int bound) {
    if (M.is_zero_module())
        throw std::invalid_argument("G_C-dimension of the zero module");
    const RingPtr& R = M.ring();
    int d = ring_depth(R) - depth(M);
    Presentation N = syzygy_module(M, d);
    Verdict v = totally_reflexive(N, C, bound);
    if (v.holds) return {XInt::of(d), v.status};
    // If the dimension were finite it would equal d and the d-th syzygy
    // would be totally reflexive, so a certified failure refutes finiteness.
    CertStatus st = v.status.is_certified()
                        ? CertStatus::certified("syzygy refutation")
                        : CertStatus::bounded(bound);
    st.witness = "syzygy " + std::to_string(d) + ": " + v.witness;
    return {XInt::inf(), st};
}

Verdict gc_perfect(const Presentation& M, const Dualizer& C, int bound) {
    CertXInt g = grade_value(M, C);
    CertXInt gc = gc_dimension(M, C, bound);
    CertStatus st = weakest(g.status, gc.status);
    if (g.value.finite && g.value == gc.value) return {true, st, ""};
    return {false, st,
            "grade " + g.value.str() + " != G_C-dim " + gc.value.str()};
}

Verdict reduced_gc_perfect(const Presentation& M, const Dualizer& C,
                           int bound) {
    CertXInt rg = reduced_grade(M, C, bound);
    CertXInt gc = gc_dimension(M, C, bound);
    CertStatus st = weakest(rg.status, gc.status);
    if (rg.value.finite && rg.value == gc.value) return {true, st, ""};
    return {false, st,
            "reduced grade " + rg.value.str() + " != G_C-dim " +
                gc.value.str()};
}

Verdict horizontally_linked(const Presentation& M) {
    if (!is_stable(M))
        return {false, CertStatus::certified(), "free direct summand"};
    Dualizer Rd = ring_dualizer(M.ring());
    Presentation t = transpose(M, Rd);
    if (!ext_module(t, Rd.C, 1).is_zero_module())
        return {false, CertStatus::certified(), "Ext^1(transpose, R) != 0"};
    return {true, CertStatus::certified(), ""};
}

InvariantReport invariant_report(const Presentation& M, const Dualizer& C,
                                 int bound, int torsionless_k) {
    InvariantReport rep;
    rep.grade = grade_value(M);
    rep.rgrade = reduced_grade(M, C, bound);
    rep.depth = depth(M);
    rep.gc_dim = gc_dimension(M, C, bound);
    rep.flags.gc_perfect = gc_perfect(M, C, bound);
    rep.flags.reduced_gc_perfect = reduced_gc_perfect(M, C, bound);
    bool stable = is_stable(M);
    rep.flags.stable = {stable, CertStatus::certified(),
                        stable ? "" : "free direct summand"};
    rep.flags.horizontally_linked = horizontally_linked(M);
    rep.flags.c_k_torsionless = c_k_torsionless(M, C, torsionless_k);
    rep.flags.torsionless_k = torsionless_k;
    return rep;
}

} // namespace grmod
