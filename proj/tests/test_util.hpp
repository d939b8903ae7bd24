#pragma once
#include <random>

#include "grmod/free_module.hpp"
#include "oracle.hpp"

namespace grmod::testutil {

using Rng = std::mt19937;

inline uint32_t random_coeff(const PrimeField& F, Rng& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, F.p() - 1);
    return dist(rng);
}

// Random homogeneous polynomial of the given weighted degree (possibly zero).
inline Poly random_homog_poly(const ContextPtr& ctx, Rng& rng, int d) {
    std::vector<Term> terms;
    for (auto& m : oracle::monomials_of_degree(ctx, d)) {
        uint32_t c = random_coeff(ctx->field(), rng);
        if (c) terms.push_back({m, c});
    }
    return poly_from_terms(ctx, terms);
}

inline Poly random_nonzero_homog_poly(const ContextPtr& ctx, Rng& rng, int d) {
    for (;;) {
        Poly f = random_homog_poly(ctx, rng, d);
        if (!f.is_zero()) return f;
    }
}

inline ModuleElement random_element(const ContextPtr& ctx,
                                    const FreeModule& fm, Rng& rng, int d) {
    ModuleElement e(ctx, fm.rank());
    for (int i = 0; i < fm.rank(); ++i)
        e.comp(i) = random_homog_poly(ctx, rng, d - fm.twist(i));
    return e;
}

inline uint32_t eval_poly(const Poly& f, const std::vector<uint32_t>& pt) {
    const PrimeField& F = f.ctx()->field();
    uint32_t s = 0;
    for (auto& t : f.terms()) {
        uint32_t v = t.coeff;
        for (size_t i = 0; i < pt.size(); ++i)
            for (int k = 0; k < t.mono[i]; ++k) v = F.mul(v, pt[i]);
        s = F.add(s, v);
    }
    return s;
}

inline std::vector<uint32_t> random_point(const ContextPtr& ctx, Rng& rng) {
    std::vector<uint32_t> pt(ctx->nvars());
    for (auto& x : pt) x = random_coeff(ctx->field(), rng);
    return pt;
}

} // namespace grmod::testutil
