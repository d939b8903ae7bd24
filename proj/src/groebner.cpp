#include "grmod/groebner.hpp"

#include <algorithm>

namespace grmod {

static int g_degree_cap = 40;

int current_degree_cap() { return g_degree_cap; }

void set_current_degree_cap(int cap) {
    if (cap > 0) g_degree_cap = cap;
}

SubmoduleGB::SubmoduleGB(ContextPtr ctx, FreeModule fm,
                         std::vector<ModuleElement> gens,
                         std::vector<int> gen_twists, GBOptions opts)
    : ctx_(std::move(ctx)), fm_(std::move(fm)), opts_(std::move(opts)),
      gen_twists_(std::move(gen_twists)) {
    GRMOD_CHECK(gens.size() == gen_twists_.size(),
                "generator twist count mismatch");
    for (size_t i = 0; i < gens.size(); ++i) {
        const auto& g = gens[i];
        GRMOD_CHECK(g.rank() == fm_.rank(), "generator rank mismatch");
        if (!g.is_homogeneous(fm_))
            throw std::invalid_argument(
                "inhomogeneous generator passed to graded engine" +
                (opts_.diag_context.empty() ? "" : " (" + opts_.diag_context + ")"));
        if (!g.is_zero())
            GRMOD_CHECK(g.degree(fm_) == gen_twists_[i],
                        "generator degree does not match declared twist");
        insert_generator(g, static_cast<int>(i));
    }
    saturate();
    finalize();
}

std::vector<Poly> SubmoduleGB::padded(const std::vector<Poly>& coords) const {
    std::vector<Poly> out = coords;
    while (out.size() < gen_twists_.size()) out.push_back(Poly::zero(ctx_));
    return out;
}

void SubmoduleGB::add_coords(std::vector<Poly>& acc,
                             const std::vector<Poly>& src,
                             const Poly& factor) const {
    for (size_t i = 0; i < src.size(); ++i) {
        if (src[i].is_null() || src[i].is_zero()) continue;
        if (acc[i].is_null()) acc[i] = Poly::zero(ctx_);
        acc[i] = acc[i] + src[i] * factor;
    }
}

ModuleElement SubmoduleGB::reduce(const ModuleElement& e,
                                  std::vector<Poly>* gen_coords) const {
    const auto& F = ctx_->field();
    ModuleElement work = e;
    ModuleElement done(ctx_, fm_.rank());
    while (true) {
        auto lt = work.leading();
        if (!lt) break;
        bool hit = false;
        for (const auto& b : basis_) {
            if (!b.alive) continue;
            if (b.lt.comp != lt->comp) continue;
            if (!mono_divides(b.lt.mono, lt->mono)) continue;
            Monomial q = mono_div(lt->mono, b.lt.mono);
            uint32_t c = F.div(lt->coeff, b.lt.coeff);
            work = work - b.e.mono_mul(q, c);
            if (gen_coords)
                add_coords(*gen_coords, b.coords, Poly::term(ctx_, q, c));
            hit = true;
            break;
        }
        if (!hit) {
            Poly t = Poly::term(ctx_, lt->mono, lt->coeff);
            done.comp(lt->comp) = done.comp(lt->comp) + t;
            work.comp(lt->comp) = work.comp(lt->comp) - t;
        }
    }
    return done;
}

bool SubmoduleGB::insert_generator(const ModuleElement& g, int gen_index) {
    std::vector<Poly> sub(gen_twists_.size(), Poly::zero(ctx_));
    ModuleElement r = reduce(g, &sub);
    // r = g - sub . gens, so the coordinates of r are e_i - sub.
    std::vector<Poly> coords(gen_twists_.size(), Poly::zero(ctx_));
    coords[gen_index] = Poly::constant(ctx_, 1);
    for (size_t i = 0; i < sub.size(); ++i) coords[i] = coords[i] - sub[i];
    if (r.is_zero()) {
        if (opts_.collect_syzygies) {
            ModuleElement s(ctx_, static_cast<int>(coords.size()));
            for (size_t i = 0; i < coords.size(); ++i) s.comp(static_cast<int>(i)) = coords[i];
            if (!s.is_zero()) syzygies_.push_back(std::move(s));
        }
        return false;
    }
    append_elem(std::move(r), std::move(coords));
    return true;
}

void SubmoduleGB::append_elem(ModuleElement e, std::vector<Poly> coords) {
    auto lt = e.leading();
    GRMOD_CHECK(lt.has_value(), "appending zero basis element");
    // Monic normalisation keeps reductions and serialised bases canonical.
    uint32_t s = ctx_->field().inv(lt->coeff);
    e = e.scaled(s);
    for (auto& c : coords)
        if (!c.is_null()) c = c.scaled(s);
    lt = e.leading();
    Elem el{std::move(e), std::move(coords), *lt, true};
    basis_.push_back(std::move(el));
    push_pairs(static_cast<int>(basis_.size()) - 1);
}

int SubmoduleGB::pair_degree(int i, int j) const {
    Monomial l = mono_lcm(basis_[i].lt.mono, basis_[j].lt.mono);
    return ctx_->degree(l) + fm_.twist(basis_[i].lt.comp);
}

void SubmoduleGB::push_pairs(int t) {
    for (int s = 0; s < t; ++s) {
        if (!basis_[s].alive) continue;
        if (basis_[s].lt.comp != basis_[t].lt.comp) continue;
        pending_.insert({pair_degree(s, t), s, t});
    }
}

bool SubmoduleGB::criteria_skip(int i, int j) {
    if (opts_.collect_syzygies) return false;
    const auto& a = basis_[i].lt;
    const auto& b = basis_[j].lt;
    // Product criterion: coprime leading monomials.  Only valid when both
    // elements lie entirely in the lead component; a tail in another
    // component can make the skipped pair produce a new basis element.
    Monomial l = mono_lcm(a.mono, b.mono);
    if (l == mono_mul(a.mono, b.mono)) {
        auto pure = [](const Elem& el) {
            for (int c = 0; c < el.e.rank(); ++c)
                if (c != el.lt.comp && !el.e.comp(c).is_zero()) return false;
            return true;
        };
        if (pure(basis_[i]) && pure(basis_[j])) return true;
    }
    // Chain criterion.
    for (size_t t = 0; t < basis_.size(); ++t) {
        int ti = static_cast<int>(t);
        if (ti == i || ti == j || !basis_[t].alive) continue;
        if (basis_[t].lt.comp != a.comp) continue;
        if (!mono_divides(basis_[t].lt.mono, l)) continue;
        auto key1 = std::minmax(i, ti);
        auto key2 = std::minmax(ti, j);
        if (processed_.count({key1.first, key1.second}) &&
            processed_.count({key2.first, key2.second}))
            return true;
    }
    return false;
}

void SubmoduleGB::saturate() {
    const auto& F = ctx_->field();
    while (!pending_.empty()) {
        auto [deg, i, j] = *pending_.begin();
        pending_.erase(pending_.begin());
        if (deg > opts_.degree_cap)
            throw DegreeCapError(opts_.degree_cap, deg,
                                 opts_.diag_context.empty()
                                     ? "groebner saturation"
                                     : opts_.diag_context);
        processed_.insert({i, j});
        if (!basis_[i].alive || !basis_[j].alive) continue;
        if (criteria_skip(i, j)) continue;

        const auto& a = basis_[i];
        const auto& b = basis_[j];
        Monomial l = mono_lcm(a.lt.mono, b.lt.mono);
        Monomial qa = mono_div(l, a.lt.mono);
        Monomial qb = mono_div(l, b.lt.mono);
        // Basis elements are monic, so the S-pair needs no scaling.
        ModuleElement sp = a.e.mono_mul(qa, 1) - b.e.mono_mul(qb, 1);
        std::vector<Poly> coords(gen_twists_.size(), Poly::zero(ctx_));
        add_coords(coords, a.coords, Poly::term(ctx_, qa, 1));
        add_coords(coords, b.coords, Poly::term(ctx_, qb, F.neg(1)));

        std::vector<Poly> sub(gen_twists_.size(), Poly::zero(ctx_));
        ModuleElement r = reduce(sp, &sub);
        for (size_t k = 0; k < sub.size(); ++k) coords[k] = coords[k] - sub[k];
        if (r.is_zero()) {
            if (opts_.collect_syzygies) {
                ModuleElement s(ctx_, static_cast<int>(coords.size()));
                for (size_t k = 0; k < coords.size(); ++k)
                    s.comp(static_cast<int>(k)) = coords[k];
                if (!s.is_zero()) syzygies_.push_back(std::move(s));
            }
        } else {
            append_elem(std::move(r), std::move(coords));
        }
    }
}

void SubmoduleGB::finalize() {
    // Minimalise: drop elements whose leading term is divisible by another
    // live element's leading term.
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (!basis_[i].alive) continue;
        for (size_t j = 0; j < basis_.size(); ++j) {
            if (i == j || !basis_[j].alive) continue;
            if (basis_[j].lt.comp != basis_[i].lt.comp) continue;
            if (mono_divides(basis_[j].lt.mono, basis_[i].lt.mono)) {
                basis_[i].alive = false;
                break;
            }
        }
    }
    // Tail-reduce every survivor against the others.
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (!basis_[i].alive) continue;
        basis_[i].alive = false;
        std::vector<Poly> sub(gen_twists_.size(), Poly::zero(ctx_));
        ModuleElement r = reduce(basis_[i].e, &sub);
        basis_[i].alive = true;
        if (!r.is_zero()) {
            basis_[i].coords = padded(basis_[i].coords);
            for (size_t k = 0; k < sub.size(); ++k)
                basis_[i].coords[k] = basis_[i].coords[k] - sub[k];
            basis_[i].e = std::move(r);
            basis_[i].lt = *basis_[i].e.leading();
        }
    }
    public_index_.clear();
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].alive) public_index_.push_back(static_cast<int>(i));
    std::sort(public_index_.begin(), public_index_.end(), [this](int a, int b) {
        return modterm_cmp(*ctx_, basis_[a].lt.comp, basis_[a].lt.mono,
                           basis_[b].lt.comp, basis_[b].lt.mono) > 0;
    });
    public_basis_.clear();
    for (int i : public_index_) public_basis_.push_back(basis_[i].e);
}

ModuleElement SubmoduleGB::nf(const ModuleElement& e) const {
    GRMOD_CHECK(e.rank() == fm_.rank(), "normal form rank mismatch");
    return reduce(e, nullptr);
}

bool SubmoduleGB::lift(const ModuleElement& e, std::vector<Poly>& coords) const {
    coords.assign(gen_twists_.size(), Poly::zero(ctx_));
    ModuleElement r = reduce(e, &coords);
    return r.is_zero();
}

const std::vector<ModuleElement>& SubmoduleGB::syzygies() const {
    GRMOD_CHECK(opts_.collect_syzygies,
                "syzygies requested from a basis-mode run");
    return syzygies_;
}

bool SubmoduleGB::is_whole_module() const {
    for (int i = 0; i < fm_.rank(); ++i)
        if (!contains(ModuleElement::unit(ctx_, fm_.rank(), i))) return false;
    return true;
}

bool SubmoduleGB::add_generator(const ModuleElement& g) {
    GRMOD_CHECK(!opts_.collect_syzygies,
                "add_generator is not available in syzygy mode");
    GRMOD_CHECK(g.is_homogeneous(fm_), "inhomogeneous generator");
    if (g.is_zero()) return false;
    int idx = static_cast<int>(gen_twists_.size());
    gen_twists_.push_back(g.degree(fm_));
    bool grew = insert_generator(g, idx);
    if (grew) {
        saturate();
        finalize();
    }
    return grew;
}

SubmoduleGB submodule_gb(ContextPtr ctx, const FreeModule& fm,
                         const std::vector<ModuleElement>& gens,
                         GBOptions opts) {
    std::vector<int> twists;
    twists.reserve(gens.size());
    for (const auto& g : gens) {
        GRMOD_CHECK(!g.is_zero(), "twist of zero generator is ambiguous");
        twists.push_back(g.degree(fm));
    }
    return SubmoduleGB(std::move(ctx), fm, gens, std::move(twists),
                       std::move(opts));
}

} // namespace grmod
