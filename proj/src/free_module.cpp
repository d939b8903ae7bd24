#include "grmod/free_module.hpp"

#include <sstream>

namespace grmod {

std::string FreeModule::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < twists.size(); ++i) {
        if (i) os << " ";
        os << twists[i];
    }
    os << ")";
    return os.str();
}

int modterm_cmp(const PolyContext& ctx, int comp_a, const Monomial& a,
                int comp_b, const Monomial& b) {
    int c = ctx.cmp(a, b);
    if (c) return c;
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
    return 0;
}

ModuleElement::ModuleElement(ContextPtr ctx, int rank) : ctx_(std::move(ctx)) {
    comps_.assign(rank, Poly::zero(ctx_));
}

ModuleElement ModuleElement::unit(ContextPtr ctx, int rank, int i) {
    ModuleElement e(ctx, rank);
    e.comps_[i] = Poly::constant(ctx, 1);
    return e;
}

ModuleElement ModuleElement::wrap(Poly p) {
    ModuleElement e;
    e.ctx_ = p.ctx();
    e.comps_.push_back(std::move(p));
    return e;
}

bool ModuleElement::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    GRMOD_CHECK(rank() == o.rank(), "rank mismatch in module addition");
    ModuleElement r = *this;
    for (int i = 0; i < rank(); ++i) r.comps_[i] = r.comps_[i] + o.comps_[i];
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    return *this + (-o);
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
}

ModuleElement ModuleElement::scaled(uint32_t c) const {
    ModuleElement r = *this;
    for (auto& x : r.comps_) x = x.scaled(c);
    return r;
}

ModuleElement ModuleElement::mono_mul(const Monomial& m, uint32_t c) const {
    ModuleElement r = *this;
    for (auto& x : r.comps_) x = x.mono_mul(m, c);
    return r;
}

ModuleElement ModuleElement::poly_mul(const Poly& p) const {
    ModuleElement r = *this;
    for (auto& x : r.comps_) x = x * p;
    return r;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    if (rank() != o.rank()) return false;
    for (int i = 0; i < rank(); ++i)
        if (!(comps_[i] == o.comps_[i])) return false;
    return true;
}

std::optional<ModTerm> ModuleElement::leading() const {
    std::optional<ModTerm> best;
    for (int i = 0; i < rank(); ++i) {
        if (comps_[i].is_zero()) continue;
        const Term& t = comps_[i].leading();
        if (!best || modterm_cmp(*ctx_, i, t.mono, best->comp, best->mono) > 0)
            best = ModTerm{i, t.mono, t.coeff};
    }
    return best;
}

int ModuleElement::degree(const FreeModule& fm) const {
    GRMOD_CHECK(fm.rank() == rank(), "free module rank mismatch");
    std::optional<int> d;
    for (int i = 0; i < rank(); ++i) {
        if (comps_[i].is_zero()) continue;
        GRMOD_CHECK(comps_[i].is_homogeneous(), "inhomogeneous component");
        int di = comps_[i].degree() + fm.twist(i);
        if (d && *d != di)
            throw std::logic_error("inhomogeneous module element");
        d = di;
    }
    GRMOD_CHECK(d.has_value(), "degree of zero element");
    return *d;
}

bool ModuleElement::is_homogeneous(const FreeModule& fm) const {
    if (fm.rank() != rank()) return false;
    std::optional<int> d;
    for (int i = 0; i < rank(); ++i) {
        if (comps_[i].is_zero()) continue;
        if (!comps_[i].is_homogeneous()) return false;
        int di = comps_[i].degree() + fm.twist(i);
        if (d && *d != di) return false;
        d = di;
    }
    return true;
}

std::string ModuleElement::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) os << ", ";
        os << comps_[i].str();
    }
    os << ")";
    return os.str();
}

void ModuleElement::feed_hash(Fnv1a& h) const {
    h.u64(comps_.size());
    for (const auto& c : comps_) c.feed_hash(h);
}

ModuleElement divide(const ModuleElement& e,
                     const std::vector<ModuleElement>& divisors,
                     std::vector<Poly>* quotients) {
    const ContextPtr& ctx = e.ctx();
    const auto& F = ctx->field();
    if (quotients) quotients->assign(divisors.size(), Poly::zero(ctx));

    ModuleElement work = e;
    ModuleElement done(ctx, e.rank());
    while (true) {
        auto lt = work.leading();
        if (!lt) break;
        bool reduced = false;
        for (size_t k = 0; k < divisors.size(); ++k) {
            const auto& d = divisors[k];
            auto dlt = d.leading();
            if (!dlt || dlt->comp != lt->comp) continue;
            if (!mono_divides(dlt->mono, lt->mono)) continue;
            Monomial q = mono_div(lt->mono, dlt->mono);
            uint32_t c = F.div(lt->coeff, dlt->coeff);
            work = work - d.mono_mul(q, c);
            if (quotients)
                (*quotients)[k] =
                    (*quotients)[k] + Poly::term(ctx, std::move(q), c);
            reduced = true;
            break;
        }
        if (!reduced) {
            // Move the leading term into the finished part.
            Poly t = Poly::term(ctx, lt->mono, lt->coeff);
            done.comp(lt->comp) = done.comp(lt->comp) + t;
            work.comp(lt->comp) = work.comp(lt->comp) - t;
        }
    }
    return done;
}

Poly poly_divide(const Poly& f, const std::vector<Poly>& divisors,
                 std::vector<Poly>* quotients) {
    std::vector<ModuleElement> divs;
    divs.reserve(divisors.size());
    for (const auto& d : divisors) divs.push_back(ModuleElement::wrap(d));
    ModuleElement r = divide(ModuleElement::wrap(f), divs, quotients);
    return r.comp(0);
}

} // namespace grmod
