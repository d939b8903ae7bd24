#pragma once
#include "grmod/semidualizing.hpp"

namespace grmod {

// Integer extended with infinity, for grade-like invariants.
struct XInt {
    bool finite = true;
    int value = 0;

    static XInt of(int v) { return XInt{true, v}; }
    static XInt inf() { return XInt{false, 0}; }

    bool operator==(const XInt& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    XInt operator+(int a) const { return finite ? of(value + a) : inf(); }
    XInt operator+(const XInt& o) const {
        return finite && o.finite ? of(value + o.value) : inf();
    }
    bool operator>=(int a) const { return !finite || value >= a; }
    std::string str() const;
};

// An extended integer together with how firmly it is known.
struct CertXInt {
    XInt value;
    CertStatus status;
};

// Krull dimension of R, read off the lead-term ideal of its defining ideal.
int ring_dim(const RingPtr& R);

// depth of M as nvars minus the length of the minimal free resolution over
// the ambient polynomial ring; M must be nonzero.
int depth(const Presentation& M);

int ring_depth(const RingPtr& R);
bool is_cohen_macaulay(const RingPtr& R);

// Length of the minimal free resolution over R when it completes within
// `cap` steps; nullopt otherwise.
std::optional<int> finite_pd(const Presentation& M, int cap);

// Default cohomological scan bound: depth R + 4.
int default_ext_bound(const RingPtr& R);

// Whether checking Ext^i(M, C) = 0 for i = 1..bound settles vanishing for
// all i > 0: finite projective dimension within the bound, or C dualizing
// (the ring over a Gorenstein ring included) with bound >= depth R.
CertStatus ext_vanishing_certificate(const Presentation& M, const Dualizer& C,
                                     int bound);

// Least i >= 0 with Ext^i(M, C) != 0, scanned through dim R; infinity for
// the zero module.  Defaults to C = R, which gives the classical grade.
CertXInt grade_value(const Presentation& M, const Dualizer& C);
CertXInt grade_value(const Presentation& M);

// Least i > 0 with Ext^i(M, C) != 0, scanned through `bound`; infinity when
// the scan is exhausted, certified per ext_vanishing_certificate.
CertXInt reduced_grade(const Presentation& M, const Dualizer& C, int bound);

// depth R - depth M when the d-th syzygy is totally reflexive with respect
// to C, infinity otherwise; the witness records the failing condition.
CertXInt gc_dimension(const Presentation& M, const Dualizer& C, int bound);

// grade = G_C-dim, both finite.
Verdict gc_perfect(const Presentation& M, const Dualizer& C, int bound);

// reduced grade = G_C-dim, both finite (forces G_C-dim >= 1).
Verdict reduced_gc_perfect(const Presentation& M, const Dualizer& C,
                           int bound);

// No free direct summand and Ext^1 of the ring-transpose into R vanishes.
Verdict horizontally_linked(const Presentation& M);

struct InvariantFlags {
    Verdict gc_perfect;
    Verdict reduced_gc_perfect;
    Verdict stable;
    Verdict horizontally_linked;
    Verdict c_k_torsionless;
    int torsionless_k = 1;
};

struct InvariantReport {
    CertXInt grade;
    CertXInt rgrade;
    int depth = 0;
    CertXInt gc_dim;
    InvariantFlags flags;
};

InvariantReport invariant_report(const Presentation& M, const Dualizer& C,
                                 int bound, int torsionless_k = 1);

} // namespace grmod
