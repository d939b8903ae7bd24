#pragma once
#include <string>

#include "grmod/homology.hpp"

namespace grmod {

// How far a claimed property has been verified.  Certified means a finite
// computation provably settles it; BoundedEvidence means every degree and
// cohomological index up to `bound` was checked and none beyond; Failed
// carries a concrete witness of the violation.
enum class CertKind { Certified, BoundedEvidence, Failed };

struct CertStatus {
    CertKind kind = CertKind::Certified;
    int bound = 0;
    std::string witness;

    static CertStatus certified(std::string note = "");
    static CertStatus bounded(int b, std::string note = "");
    static CertStatus failed(std::string w);

    bool ok() const { return kind != CertKind::Failed; }
    bool is_certified() const { return kind == CertKind::Certified; }
    std::string str() const;
};

// The weaker of two verification levels: Failed dominates, then
// BoundedEvidence at the smaller bound.
CertStatus weakest(const CertStatus& a, const CertStatus& b);

// A module C used as the target of duality functors, together with the
// status of its semidualizing verification.  `dualizing` marks modules known
// to be dualizing (the canonical module of a Cohen-Macaulay ring, or the
// ring itself when Gorenstein); several certification rules key off it.
struct Dualizer {
    Presentation C;
    CertStatus status;
    bool is_ring = false;
    bool dualizing = false;
    std::string name = "C";
};

// The homothety R -> Hom(C, C) sending 1 to the identity of C.
ModuleMap homothety_map(const Presentation& C);

// Checks that the homothety is an isomorphism and Ext^i(C, C) = 0 for
// i = 1..bound.  Certified when C has finite projective dimension within the
// bound (no higher Ext can survive); otherwise BoundedEvidence.
CertStatus verify_semidualizing(const Presentation& C, int bound);

Dualizer ring_dualizer(const RingPtr& R);
Dualizer module_dualizer(const Presentation& C, std::string name, int bound);
// Builds the canonical module and certifies it as dualizing; `bound` is used
// for the sanity verification only.
Dualizer canonical_dualizer(const RingPtr& R, int bound);

// Ext over the ambient polynomial ring of R into S(-sum of weights), in
// codimension nvars - dim R, presented back over R.  Requires R
// Cohen-Macaulay; throws std::invalid_argument otherwise.
Presentation canonical_module(const RingPtr& R);

// Cohen-Macaulay with free canonical module of rank one.
bool is_gorenstein(const RingPtr& R);

// Hom(M, C), minimally presented.
Presentation dual_module(const Presentation& M, const Dualizer& C);

// sigma: M -> Hom(Hom(M, C), C) on the cover generators.
ModuleMap biduality_map(const Presentation& M, const Dualizer& C);

// Cokernel of Hom(F0, C) -> Hom(F1, C) for the minimal presentation
// F1 -> F0 -> M -> 0; the transpose of M with respect to C.
Presentation transpose(const Presentation& M, const Dualizer& C);

// k-th syzygy in the minimal free resolution; syzygy_module(M, 0) is the
// minimal presentation of M itself.
Presentation syzygy_module(const Presentation& M, int k);

// Linkage operator: first syzygy of the transpose with respect to the ring.
Presentation lambda_module(const Presentation& M);

// Transpose of the (n-1)-st syzygy, n >= 1; n = 1 is the plain transpose.
Presentation iterated_transpose(const Presentation& M, const Dualizer& C,
                                int n);

// Outcome of a decidable-or-bounded property test.  `witness` explains a
// negative verdict.
struct Verdict {
    bool holds = false;
    CertStatus status;
    std::string witness;
};

// Biduality is an isomorphism and Ext^i(M, C) = Ext^i(Hom(M, C), C) = 0 for
// i = 1..bound.
Verdict totally_reflexive(const Presentation& M, const Dualizer& C,
                          int bound);

// Ext^1(transpose(M, C), C) = 0; decidable, always Certified.
Verdict is_c_syzygy(const Presentation& M, const Dualizer& C);

// Ext^i(transpose(M, C), C) = 0 for i = 1..k; decidable, always Certified.
Verdict c_k_torsionless(const Presentation& M, const Dualizer& C, int k);

// mu: M -> Hom(C, M tensor C) is an isomorphism, Tor_i(C, M) = 0 and
// Ext^i(C, M tensor C) = 0 for i = 1..bound.
Verdict auslander_class(const Presentation& M, const Dualizer& C, int bound);

} // namespace grmod
