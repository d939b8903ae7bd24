#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grmod/monomial.hpp"

namespace grmod {

struct Term {
    Monomial mono;
    uint32_t coeff; // in [1, p)
};

// Sparse polynomial: terms sorted strictly descending in the context order,
// never holding a zero coefficient.
class Poly {
public:
    Poly() = default; // null placeholder; not usable in arithmetic

    static Poly zero(ContextPtr ctx);
    static Poly constant(ContextPtr ctx, int64_t c);
    static Poly variable(ContextPtr ctx, int i);
    static Poly term(ContextPtr ctx, Monomial m, int64_t c);

    const ContextPtr& ctx() const { return ctx_; }
    bool is_null() const { return !ctx_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;

    bool is_constant() const;              // zero or a scalar
    std::optional<uint32_t> as_constant() const;

    // Weighted degree of the leading term.  Requires a nonzero value.
    int degree() const;
    bool is_homogeneous() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(uint32_t c) const;
    Poly mono_mul(const Monomial& m, uint32_t c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;
    void feed_hash(Fnv1a& h) const;

    // Invariant check used by tests and after parsing.
    void validate() const;

private:
    ContextPtr ctx_;
    std::vector<Term> terms_;

    friend Poly poly_from_sorted(ContextPtr, std::vector<Term>);
};

// Builds a polynomial from terms already sorted strictly descending.
Poly poly_from_sorted(ContextPtr ctx, std::vector<Term> terms);

// Builds from an arbitrary term list, merging duplicates.
Poly poly_from_terms(ContextPtr ctx, const std::vector<Term>& terms);

} // namespace grmod
