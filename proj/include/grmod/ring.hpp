#pragma once
#include <memory>
#include <optional>

#include "grmod/groebner.hpp"

namespace grmod {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

// Quotient of the weighted polynomial ring by a homogeneous ideal.  All
// arithmetic happens in the ambient ring; normal forms against the ideal's
// Groebner basis give canonical representatives.
class GradedRing {
public:
    static RingPtr polynomial(ContextPtr ctx);
    static RingPtr quotient(ContextPtr ctx, std::vector<Poly> ideal_gens);

    const ContextPtr& ctx() const { return ctx_; }
    const PrimeField& field() const { return ctx_->field(); }
    const std::vector<Poly>& ideal() const { return ideal_; }
    bool is_polynomial() const { return ideal_.empty(); }

    const SubmoduleGB& ideal_gb() const;
    Poly nf(const Poly& f) const;

    // Columns f * e_i for every ideal generator f and basis element of fm;
    // adjoining them to a generating set turns ambient-ring spans into spans
    // over the quotient.
    std::vector<ModuleElement> ideal_block(const FreeModule& fm) const;

    uint64_t hash() const;
    std::string str() const;

private:
    GradedRing(ContextPtr ctx, std::vector<Poly> ideal_gens);

    ContextPtr ctx_;
    std::vector<Poly> ideal_;
    mutable std::optional<SubmoduleGB> gb_;
    mutable uint64_t hash_ = 0;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a.get() == b.get() || a->hash() == b->hash();
}

} // namespace grmod
