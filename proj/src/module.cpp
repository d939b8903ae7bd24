#include "grmod/module.hpp"

#include <sstream>

namespace grmod {

GradedMap GradedMap::zero(RingPtr R, FreeModule source, FreeModule target) {
    GradedMap g;
    g.R = std::move(R);
    g.source = std::move(source);
    g.target = std::move(target);
    Poly z = Poly::zero(g.R->ctx());
    g.m.assign(g.target.rank(), std::vector<Poly>(g.source.rank(), z));
    return g;
}

GradedMap GradedMap::identity(RingPtr R, const FreeModule& fm) {
    GradedMap g = zero(std::move(R), fm, fm);
    for (int i = 0; i < fm.rank(); ++i)
        g.m[i][i] = Poly::constant(g.R->ctx(), 1);
    return g;
}

GradedMap GradedMap::from_columns(RingPtr R, FreeModule source,
                                  FreeModule target,
                                  const std::vector<ModuleElement>& cols) {
    GRMOD_CHECK(static_cast<int>(cols.size()) == source.rank(),
                "column count does not match the source rank");
    GradedMap g = zero(std::move(R), std::move(source), std::move(target));
    for (int j = 0; j < g.source.rank(); ++j) {
        GRMOD_CHECK(cols[j].rank() == g.target.rank(),
                    "column rank does not match the target");
        for (int i = 0; i < g.target.rank(); ++i)
            if (!cols[j].comp(i).is_null()) g.m[i][j] = cols[j].comp(i);
    }
    return g;
}

ModuleElement GradedMap::column(int j) const {
    ModuleElement e(R->ctx(), target.rank());
    for (int i = 0; i < target.rank(); ++i) e.comp(i) = m[i][j];
    return e;
}

std::vector<ModuleElement> GradedMap::columns() const {
    std::vector<ModuleElement> out;
    out.reserve(source.rank());
    for (int j = 0; j < source.rank(); ++j) out.push_back(column(j));
    return out;
}

ModuleElement GradedMap::apply(const ModuleElement& e) const {
    GRMOD_CHECK(e.rank() == source.rank(), "element rank does not match");
    ModuleElement out(R->ctx(), target.rank());
    for (int i = 0; i < target.rank(); ++i) {
        Poly acc = Poly::zero(R->ctx());
        for (int j = 0; j < source.rank(); ++j) {
            if (m[i][j].is_zero() || e.comp(j).is_zero()) continue;
            acc = acc + m[i][j] * e.comp(j);
        }
        out.comp(i) = acc;
    }
    return out;
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
    GRMOD_CHECK(inner.target == source, "composition shape mismatch");
    GradedMap g = zero(R, inner.source, target);
    for (int i = 0; i < target.rank(); ++i)
        for (int j = 0; j < inner.source.rank(); ++j) {
            Poly acc = Poly::zero(R->ctx());
            for (int k = 0; k < source.rank(); ++k) {
                if (m[i][k].is_zero() || inner.m[k][j].is_zero()) continue;
                acc = acc + m[i][k] * inner.m[k][j];
            }
            g.m[i][j] = acc;
        }
    return g;
}

GradedMap GradedMap::reduced() const {
    GradedMap g = *this;
    for (auto& row : g.m)
        for (auto& e : row) e = R->nf(e);
    return g;
}

bool GradedMap::is_zero() const {
    for (auto& row : m)
        for (auto& e : row)
            if (!R->nf(e).is_zero()) return false;
    return true;
}

void GradedMap::validate() const {
    GRMOD_CHECK(static_cast<int>(m.size()) == target.rank(), "row count");
    for (int i = 0; i < target.rank(); ++i) {
        GRMOD_CHECK(static_cast<int>(m[i].size()) == source.rank(),
                    "column count");
        for (int j = 0; j < source.rank(); ++j) {
            const Poly& e = m[i][j];
            GRMOD_CHECK(!e.is_null(), "null matrix entry");
            if (e.is_zero()) continue;
            GRMOD_CHECK(e.is_homogeneous(), "matrix entry not homogeneous");
            GRMOD_CHECK(e.degree() == source.twist(j) - target.twist(i),
                        "matrix entry degree does not match the twists");
        }
    }
}

std::string GradedMap::str() const {
    std::ostringstream os;
    os << source.str() << " -> " << target.str() << "\n";
    for (int i = 0; i < target.rank(); ++i) {
        os << "[";
        for (int j = 0; j < source.rank(); ++j) {
            if (j) os << ", ";
            os << m[i][j].str();
        }
        os << "]\n";
    }
    return os.str();
}

void GradedMap::feed_hash(Fnv1a& h) const {
    source.feed_hash(h);
    target.feed_hash(h);
    for (auto& row : m)
        for (auto& e : row) e.feed_hash(h);
}

struct Presentation::Impl {
    RingPtr R;
    FreeModule cover;
    std::vector<ModuleElement> rels;
    mutable std::optional<SubmoduleGB> gb;
    mutable uint64_t hash = 0;
};

Presentation::Presentation(RingPtr R, FreeModule cover,
                           std::vector<ModuleElement> relations)
    : impl_(std::make_shared<Impl>()) {
    GRMOD_CHECK(R != nullptr, "presentation needs a ring");
    impl_->R = std::move(R);
    impl_->cover = std::move(cover);
    for (auto& r : relations) {
        GRMOD_CHECK(r.rank() == impl_->cover.rank(),
                    "relation rank does not match the cover");
        if (r.is_zero()) continue;
        GRMOD_CHECK(r.is_homogeneous(impl_->cover),
                    "relations must be homogeneous");
        impl_->rels.push_back(std::move(r));
    }
}

Presentation Presentation::free_module(RingPtr R, FreeModule f) {
    return Presentation(std::move(R), std::move(f), {});
}

Presentation Presentation::ring_module(const RingPtr& R) {
    return free_module(R, FreeModule{{0}});
}

Presentation Presentation::residue_field(const RingPtr& R) {
    std::vector<ModuleElement> rels;
    for (int i = 0; i < R->ctx()->nvars(); ++i)
        rels.push_back(ModuleElement::wrap(Poly::variable(R->ctx(), i)));
    return Presentation(R, FreeModule{{0}}, std::move(rels));
}

Presentation Presentation::zero_module(const RingPtr& R) {
    return free_module(R, FreeModule{});
}

const RingPtr& Presentation::ring() const { return impl_->R; }
const FreeModule& Presentation::cover() const { return impl_->cover; }

const std::vector<ModuleElement>& Presentation::relations() const {
    return impl_->rels;
}

FreeModule Presentation::relation_ambient() const {
    FreeModule f;
    for (auto& r : impl_->rels) f.twists.push_back(r.degree(impl_->cover));
    return f;
}

GradedMap Presentation::relation_map() const {
    return GradedMap::from_columns(impl_->R, relation_ambient(), impl_->cover,
                                   impl_->rels);
}

const SubmoduleGB& Presentation::rel_gb() const {
    if (!impl_->gb) {
        std::vector<ModuleElement> gens = impl_->rels;
        for (auto& e : impl_->R->ideal_block(impl_->cover))
            gens.push_back(std::move(e));
        impl_->gb.emplace(
            submodule_gb(impl_->R->ctx(), impl_->cover, gens));
    }
    return *impl_->gb;
}

ModuleElement Presentation::nf(const ModuleElement& e) const {
    return rel_gb().nf(e);
}

bool Presentation::is_zero_module() const {
    if (impl_->cover.rank() == 0) return true;
    return rel_gb().is_whole_module();
}

Presentation Presentation::shifted(int a) const {
    return Presentation(impl_->R, impl_->cover.shifted(a), impl_->rels);
}

uint64_t Presentation::hash() const {
    if (!impl_->hash) {
        Fnv1a h;
        h.str("presentation");
        h.u64(impl_->R->hash());
        impl_->cover.feed_hash(h);
        h.u64(impl_->rels.size());
        for (auto& r : impl_->rels) r.feed_hash(h);
        impl_->hash = h.value();
    }
    return impl_->hash;
}

std::string Presentation::str() const {
    std::ostringstream os;
    os << "module over " << impl_->R->str() << ", cover "
       << impl_->cover.str() << ", " << impl_->rels.size() << " relation(s)";
    return os.str();
}

void ModuleMap::validate(bool check_relations) const {
    GRMOD_CHECK(same_ring(source.ring(), target.ring()),
                "map between modules over different rings");
    GRMOD_CHECK(phi.source == source.cover() && phi.target == target.cover(),
                "map matrix does not match the covers");
    phi.validate();
    if (check_relations)
        for (auto& r : source.relations())
            GRMOD_CHECK(target.nf(phi.apply(r)).is_zero(),
                        "map does not respect the relations");
}

static void enumerate_monos(const PolyContext& ctx, int var, int remaining,
                            Monomial& cur, std::vector<Monomial>& out) {
    if (var == ctx.nvars()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int w = ctx.weights()[var];
    for (int e = 0; e * w <= remaining; ++e) {
        cur[var] = e;
        enumerate_monos(ctx, var + 1, remaining - e * w, cur, out);
    }
    cur[var] = 0;
}

std::vector<Monomial> weighted_monomials(const PolyContext& ctx, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur = mono_one(ctx.nvars());
    enumerate_monos(ctx, 0, d, cur, out);
    return out;
}

std::vector<int> hilbert_values(const Presentation& M, int lo, int hi) {
    const auto& ctx = *M.ring()->ctx();
    // Leading terms of the relation basis, grouped by cover component.
    std::vector<std::vector<Monomial>> lts(M.cover().rank());
    for (auto& b : M.rel_gb().basis()) {
        auto lt = b.leading();
        lts[lt->comp].push_back(lt->mono);
    }
    std::vector<int> out;
    for (int d = lo; d <= hi; ++d) {
        int count = 0;
        for (int i = 0; i < M.cover().rank(); ++i) {
            for (auto& m : weighted_monomials(ctx, d - M.cover().twist(i))) {
                bool standard = true;
                for (auto& lt : lts[i])
                    if (mono_divides(lt, m)) {
                        standard = false;
                        break;
                    }
                if (standard) ++count;
            }
        }
        out.push_back(count);
    }
    return out;
}

int hilbert_default_bound(const Presentation& M) {
    int sum = 0;
    for (auto& r : M.relations())
        for (int i = 0; i < r.rank(); ++i)
            if (!r.comp(i).is_zero()) sum += r.comp(i).degree();
    return 2 * sum + 6;
}

} // namespace grmod
