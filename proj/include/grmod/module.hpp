#pragma once
#include <memory>

#include "grmod/ring.hpp"

namespace grmod {

// Degree-zero map of twisted free modules over R, stored as a matrix of
// ambient polynomials: m[i][j] is the coefficient of the i-th target basis
// element in the image of the j-th source basis element.  Nonzero entries
// are homogeneous of degree source.twist(j) - target.twist(i).
struct GradedMap {
    RingPtr R;
    FreeModule source;
    FreeModule target;
    std::vector<std::vector<Poly>> m;

    static GradedMap zero(RingPtr R, FreeModule source, FreeModule target);
    static GradedMap identity(RingPtr R, const FreeModule& fm);
    static GradedMap from_columns(RingPtr R, FreeModule source,
                                  FreeModule target,
                                  const std::vector<ModuleElement>& cols);

    ModuleElement column(int j) const;
    std::vector<ModuleElement> columns() const;
    ModuleElement apply(const ModuleElement& e) const;
    GradedMap compose(const GradedMap& inner) const; // this . inner
    GradedMap reduced() const;                       // entries mod the ideal
    bool is_zero() const;

    void validate() const;
    std::string str() const;
    void feed_hash(Fnv1a& h) const;
};

// Finitely presented graded module: cokernel of the map whose columns are
// the relations, inside the free module `cover`.  Relation columns include
// only the module's own relations; the ring's ideal is adjoined on demand
// wherever spans over the quotient are needed.
class Presentation {
public:
    Presentation() = default;
    Presentation(RingPtr R, FreeModule cover,
                 std::vector<ModuleElement> relations);

    static Presentation free_module(RingPtr R, FreeModule f);
    static Presentation ring_module(const RingPtr& R);
    static Presentation residue_field(const RingPtr& R);
    static Presentation zero_module(const RingPtr& R);

    bool is_null() const { return !impl_; }
    const RingPtr& ring() const;
    const FreeModule& cover() const;
    const std::vector<ModuleElement>& relations() const;
    // Twists of the relation columns, as a free module over R.
    FreeModule relation_ambient() const;
    GradedMap relation_map() const;

    // Groebner basis of relations + ideal block; canonical normal forms for
    // cover coordinates.
    const SubmoduleGB& rel_gb() const;
    ModuleElement nf(const ModuleElement& e) const;
    bool is_zero_module() const;

    Presentation shifted(int a) const;

    uint64_t hash() const;
    std::string str() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Map of presented modules, given on covers.  Well-definedness means the
// image of every source relation lies in the target's relation span.
struct ModuleMap {
    Presentation source;
    Presentation target;
    GradedMap phi;

    ModuleElement apply(const ModuleElement& e) const { return phi.apply(e); }
    void validate(bool check_relations = true) const;
};

// Values of the Hilbert function of M in degrees [lo, hi].
std::vector<int> hilbert_values(const Presentation& M, int lo, int hi);

// Degree bound used for Hilbert-function comparisons involving M.
int hilbert_default_bound(const Presentation& M);

// Degree-d monomials in the weighted variables of ctx (engine-side
// enumeration for Hilbert counting).
std::vector<Monomial> weighted_monomials(const PolyContext& ctx, int d);

} // namespace grmod
