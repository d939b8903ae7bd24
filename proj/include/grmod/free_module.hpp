#pragma once
#include <optional>
#include <string>
#include <vector>

#include "grmod/poly.hpp"

namespace grmod {

// Twisted free module.  twists[i] is the degree of the i-th basis element,
// so the module is the direct sum of R(-twists[i]).
struct FreeModule {
    std::vector<int> twists;

    int rank() const { return static_cast<int>(twists.size()); }
    int twist(int i) const { return twists[i]; }

    static FreeModule of_rank(int r, int twist = 0) {
        return FreeModule{std::vector<int>(r, twist)};
    }

    FreeModule shifted(int a) const {
        FreeModule f = *this;
        for (int& t : f.twists) t += a;
        return f;
    }

    bool operator==(const FreeModule& o) const { return twists == o.twists; }

    void feed_hash(Fnv1a& h) const {
        h.u64(twists.size());
        for (int t : twists) h.i32(t);
    }
    std::string str() const;
};

struct ModTerm {
    int comp;
    Monomial mono;
    uint32_t coeff;
};

// Term-over-position comparison: the monomial parts are compared in the ring
// order, ties go to the lower component index.  Positive when a > b.
int modterm_cmp(const PolyContext& ctx, int comp_a, const Monomial& a,
                int comp_b, const Monomial& b);

// Element of a twisted free module: one polynomial per component.
class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(ContextPtr ctx, int rank);

    static ModuleElement unit(ContextPtr ctx, int rank, int i);
    static ModuleElement wrap(Poly p); // rank-1

    const ContextPtr& ctx() const { return ctx_; }
    int rank() const { return static_cast<int>(comps_.size()); }
    const Poly& comp(int i) const { return comps_[i]; }
    Poly& comp(int i) { return comps_[i]; }
    const std::vector<Poly>& comps() const { return comps_; }

    bool is_zero() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement operator-() const;
    ModuleElement scaled(uint32_t c) const;
    ModuleElement mono_mul(const Monomial& m, uint32_t c) const;
    ModuleElement poly_mul(const Poly& p) const;

    bool operator==(const ModuleElement& o) const;

    // Leading term under the module order; nullopt for zero.
    std::optional<ModTerm> leading() const;

    // Degree as a homogeneous element of fm; throws when inhomogeneous.
    int degree(const FreeModule& fm) const;
    bool is_homogeneous(const FreeModule& fm) const;

    std::string str() const;
    void feed_hash(Fnv1a& h) const;

private:
    ContextPtr ctx_;
    std::vector<Poly> comps_;
};

// Full normal form of e against the divisor list: every term of the result
// is divisible by no leading term of a divisor.  When quotients is non-null
// it receives one polynomial per divisor with
//   e = sum_i quotients[i] * divisors[i] + result.
ModuleElement divide(const ModuleElement& e,
                     const std::vector<ModuleElement>& divisors,
                     std::vector<Poly>* quotients = nullptr);

// Rank-1 convenience used by polynomial-level tests.
Poly poly_divide(const Poly& f, const std::vector<Poly>& divisors,
                 std::vector<Poly>* quotients = nullptr);

} // namespace grmod
