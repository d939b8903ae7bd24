#pragma once
#include <memory>
#include <string>
#include <vector>

#include "grmod/field.hpp"
#include "grmod/util.hpp"

namespace grmod {

// Exponent vector; the ambient variable count is carried by the context.
using Monomial = std::vector<int>;

enum class OrderKind { DegRevLex, DegLex, Lex };

inline Monomial mono_one(int nvars) { return Monomial(nvars, 0); }

inline bool mono_is_one(const Monomial& m) {
    for (int e : m)
        if (e) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// a | b
inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// b / a, assuming a | b
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

// Coefficient field, variable names, positive weights and the term order.
// One context is shared immutably by every polynomial built over it; the
// quotient ring and its ambient polynomial ring use the same context.
class PolyContext {
public:
    PolyContext(uint32_t p, std::vector<std::string> vars,
                std::vector<int> weights,
                OrderKind order = OrderKind::DegRevLex);

    const PrimeField& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    OrderKind order() const { return order_; }

    int degree(const Monomial& m) const {
        int d = 0;
        for (int i = 0; i < nvars(); ++i) d += weights_[i] * m[i];
        return d;
    }

    // Three-way comparison in the term order; positive when a > b.
    int cmp(const Monomial& a, const Monomial& b) const;

    int var_index(const std::string& name) const;
    std::string mono_string(const Monomial& m) const;
    uint64_t hash() const;

private:
    PrimeField field_;
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    OrderKind order_;
};

using ContextPtr = std::shared_ptr<const PolyContext>;

ContextPtr make_context(uint32_t p, std::vector<std::string> vars,
                        std::vector<int> weights = {},
                        OrderKind order = OrderKind::DegRevLex);

std::string order_name(OrderKind k);

} // namespace grmod
