#pragma once
#include "grmod/cache.hpp"
#include "grmod/module_ops.hpp"

namespace grmod {

// Minimal graded free resolution of a module, computed step by step from
// irredundant syzygy generators.  When `complete` is true the resolution
// stops: the source of the last map has no syzygies, so the projective
// dimension equals maps.size().
struct Resolution {
    Presentation minimal;
    std::vector<GradedMap> maps;
    bool complete = false;

    int computed_length() const { return static_cast<int>(maps.size()); }
    // F_k of the resolution; rank zero beyond a complete resolution.
    FreeModule free_module(int k) const;
    // Twist multisets b_0, ..., b_min(up_to, length).
    std::vector<std::vector<int>> betti_twists(int up_to) const;
};

// Resolves M until `up_to` maps are known or the resolution completes.
Resolution resolve(const Presentation& M, int up_to);

// Derived functors in cohomological degree i >= 0; results are minimal
// presentations.
Presentation ext_module(const Presentation& M, const Presentation& N, int i);
Presentation tor_module(const Presentation& M, const Presentation& N, int i);

// Homology at B of A -> B -> C given by consecutive maps.
Presentation homology_at(const ModuleMap& incoming, const ModuleMap& outgoing);

// Hom(F, N) for free F, on the cover convention of hom_module: basis element
// i * rank(G0) + l sends the i-th basis element of F to the l-th generator
// of N.
Presentation hom_free_into(const FreeModule& f, const Presentation& N);

// Hom(d.target, N) -> Hom(d.source, N) induced by composing with d.
GradedMap hom_induced(const GradedMap& d, const Presentation& N);

// The same module presented over the ambient polynomial ring: the ring's
// ideal multiples of the cover basis join the relations.
Presentation restrict_scalars(const Presentation& M);

} // namespace grmod
