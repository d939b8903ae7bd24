#include "grmod/ring.hpp"

#include <sstream>

namespace grmod {

GradedRing::GradedRing(ContextPtr ctx, std::vector<Poly> ideal_gens)
    : ctx_(std::move(ctx)) {
    GRMOD_CHECK(ctx_ != nullptr, "ring needs a context");
    for (auto& f : ideal_gens) {
        GRMOD_CHECK(!f.is_null(), "null ideal generator");
        GRMOD_CHECK(f.ctx().get() == ctx_.get(), "ideal generator context");
        if (f.is_zero()) continue;
        GRMOD_CHECK(f.is_homogeneous(), "ideal generators must be homogeneous");
        GRMOD_CHECK(!f.as_constant().has_value(),
                    "ideal generator is a unit; the quotient would vanish");
        ideal_.push_back(f);
    }
}

RingPtr GradedRing::polynomial(ContextPtr ctx) {
    return RingPtr(new GradedRing(std::move(ctx), {}));
}

RingPtr GradedRing::quotient(ContextPtr ctx, std::vector<Poly> ideal_gens) {
    return RingPtr(new GradedRing(std::move(ctx), std::move(ideal_gens)));
}

const SubmoduleGB& GradedRing::ideal_gb() const {
    if (!gb_) {
        std::vector<ModuleElement> gens;
        gens.reserve(ideal_.size());
        for (auto& f : ideal_) gens.push_back(ModuleElement::wrap(f));
        gb_.emplace(submodule_gb(ctx_, FreeModule{{0}}, gens));
    }
    return *gb_;
}

Poly GradedRing::nf(const Poly& f) const {
    if (ideal_.empty()) return f;
    return ideal_gb().nf(ModuleElement::wrap(f)).comp(0);
}

std::vector<ModuleElement> GradedRing::ideal_block(const FreeModule& fm) const {
    std::vector<ModuleElement> out;
    for (auto& f : ideal_) {
        for (int i = 0; i < fm.rank(); ++i) {
            ModuleElement e(ctx_, fm.rank());
            e.comp(i) = f;
            out.push_back(std::move(e));
        }
    }
    return out;
}

uint64_t GradedRing::hash() const {
    if (!hash_) {
        Fnv1a h;
        h.str("ring");
        h.u64(ctx_->hash());
        h.u64(ideal_.size());
        for (auto& f : ideal_) f.feed_hash(h);
        hash_ = h.value();
    }
    return hash_;
}

std::string GradedRing::str() const {
    std::ostringstream os;
    os << "F" << ctx_->field().p() << "[";
    for (int i = 0; i < ctx_->nvars(); ++i) {
        if (i) os << ",";
        os << ctx_->vars()[i];
        if (ctx_->weights()[i] != 1) os << "(" << ctx_->weights()[i] << ")";
    }
    os << "]";
    if (!ideal_.empty()) {
        os << "/(";
        for (size_t i = 0; i < ideal_.size(); ++i) {
            if (i) os << ", ";
            os << ideal_[i].str();
        }
        os << ")";
    }
    return os.str();
}

} // namespace grmod
