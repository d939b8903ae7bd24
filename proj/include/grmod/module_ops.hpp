#pragma once
#include <optional>

#include "grmod/module.hpp"

namespace grmod {

// Generators of the syzygy module over R of the given homogeneous elements:
// the ideal block is adjoined, every S-pair is processed, and the zero
// reductions are projected back to the generator coordinates.
std::vector<ModuleElement> relative_syzygies(const RingPtr& R,
                                             const FreeModule& fm,
                                             const std::vector<ModuleElement>& gens);

struct MinGens {
    std::vector<int> indices; // positions kept, in degree-ascending order
    std::vector<ModuleElement> elems;
};

// Irredundant generating subset over R, greedy by ascending degree.
MinGens minimal_generators(const RingPtr& R, const FreeModule& fm,
                           const std::vector<ModuleElement>& gens);

// Presentation of (U + V) / V inside the free module fm, where U is spanned
// by gens and V by denominators.  `gens` records the chosen representatives
// of the cover basis, as elements of fm.
struct Subquotient {
    Presentation module;
    std::vector<ModuleElement> gens;
};

Subquotient present_subquotient(const RingPtr& R, const FreeModule& fm,
                                const std::vector<ModuleElement>& gens,
                                const std::vector<ModuleElement>& denominators);

struct KernelData {
    Presentation module;
    ModuleMap inclusion; // into the source of the mapped arrow
};

KernelData kernel(const ModuleMap& f);
Presentation cokernel(const ModuleMap& f);

struct ImageData {
    Presentation module;
    ModuleMap inclusion;  // into the target
    ModuleMap projection; // from the source
};

ImageData image(const ModuleMap& f);

Presentation direct_sum(const Presentation& a, const Presentation& b);
Presentation tensor_product(const Presentation& a, const Presentation& b);

// Hom(M, N) computed as the kernel of Hom(F0, N) -> Hom(F1, N).
struct HomData {
    Presentation module;
    Presentation hom_f0;    // Hom(F0, N)
    FreeModule f0, g0;      // covers of M and N
    ModuleMap inclusion;    // module -> hom_f0
};

HomData hom_module(const Presentation& M, const Presentation& N);

// The j-th generator of Hom(M, N) as a map of covers F0 -> G0(-e) where e
// is the generator's degree.
GradedMap hom_generator_matrix(const HomData& h, int j);

// Value in the cover of N of a Hom element (given over the cover of
// h.module) on a cover element of M.
ModuleElement hom_apply(const HomData& h, const ModuleElement& xi,
                        const ModuleElement& m);

// Strips unit entries from the relation matrix; the result presents an
// isomorphic module with no degree-zero relation coefficients.
Presentation minimalize(const Presentation& M);

// minimalize + irredundant relation columns.
Presentation minimal_presentation(const Presentation& M);

// Entries of all generators of Hom(M, R), reduced mod the ideal.
std::vector<Poly> trace_ideal(const Presentation& M);

// No surjection onto R, detected as the trace ideal being proper.
bool is_stable(const Presentation& M);

// Free over R; when true, twists receives the twist multiset.
bool is_free(const Presentation& M, std::vector<int>* twists = nullptr);

// Solves phi(x) = t in the target module; nullopt when t is not in the image.
std::optional<ModuleElement> preimage(const ModuleMap& f,
                                      const ModuleElement& t);

bool is_isomorphism(const ModuleMap& f);

} // namespace grmod
