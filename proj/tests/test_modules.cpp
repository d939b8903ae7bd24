#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grmod/homology.hpp"
#include "grmod/module_ops.hpp"
#include "grmod/parse.hpp"
#include "test_util.hpp"

using namespace grmod;
using namespace grmod::testutil;
namespace orc = grmod::oracle;

static ContextPtr ctx2() { return make_context(32003, {"x", "y"}); }
static ContextPtr ctx3() { return make_context(32003, {"x", "y", "z"}); }

static RingPtr dual_numbers() {
    auto c = make_context(32003, {"x"});
    return GradedRing::quotient(c, {parse_poly(c, "x^2")});
}

static ModuleElement col(const ContextPtr& c,
                         std::initializer_list<const char*> entries) {
    ModuleElement e(c, static_cast<int>(entries.size()));
    int i = 0;
    for (auto* s : entries) e.comp(i++) = parse_poly(c, s);
    return e;
}

// Hilbert values by dense linear algebra on relations + ideal block.
static std::vector<int> oracle_hilbert(const Presentation& M, int lo, int hi) {
    auto gens = M.relations();
    for (auto& e : M.ring()->ideal_block(M.cover())) gens.push_back(e);
    std::vector<int> out;
    for (int d = lo; d <= hi; ++d)
        out.push_back(
            orc::quotient_dim(M.ring()->ctx(), M.cover(), gens, d));
    return out;
}

static GradedMap random_graded_map(const RingPtr& R, const FreeModule& src,
                                   const FreeModule& tgt, Rng& rng) {
    GradedMap g = GradedMap::zero(R, src, tgt);
    for (int i = 0; i < tgt.rank(); ++i)
        for (int j = 0; j < src.rank(); ++j) {
            int d = src.twist(j) - tgt.twist(i);
            if (d >= 0) g.m[i][j] = random_homog_poly(R->ctx(), rng, d);
        }
    return g;
}

TEST_CASE("quotient ring normal forms") {
    RingPtr R = dual_numbers();
    auto c = R->ctx();
    CHECK(R->nf(parse_poly(c, "x^2")).is_zero());
    CHECK(R->nf(parse_poly(c, "x^3+x")) == parse_poly(c, "x"));
    CHECK(GradedRing::polynomial(c)->nf(parse_poly(c, "x^2")) ==
          parse_poly(c, "x^2"));
    CHECK_THROWS(GradedRing::quotient(c, {parse_poly(c, "x+1")}));
}

TEST_CASE("hilbert function of basic modules") {
    auto c = ctx3();
    RingPtr S = GradedRing::polynomial(c);
    CHECK(hilbert_values(Presentation::ring_module(S), 0, 3) ==
          std::vector<int>{1, 3, 6, 10});
    CHECK(hilbert_values(Presentation::residue_field(S), 0, 3) ==
          std::vector<int>{1, 0, 0, 0});
    RingPtr Q = GradedRing::quotient(c, {parse_poly(c, "x^2-y*z")});
    CHECK(hilbert_values(Presentation::ring_module(Q), 0, 4) ==
          std::vector<int>{1, 3, 5, 7, 9});
    auto w = make_context(32003, {"a", "b"}, {2, 3});
    RingPtr Sw = GradedRing::polynomial(w);
    CHECK(hilbert_values(Presentation::ring_module(Sw), 0, 6) ==
          std::vector<int>{1, 0, 1, 1, 1, 1, 2});
}

TEST_CASE("random presentations: hilbert values match linear algebra") {
    auto c = ctx3();
    Rng rng(601);
    std::vector<RingPtr> rings = {
        GradedRing::polynomial(c),
        GradedRing::quotient(c, {parse_poly(c, "x*y-z^2")})};
    for (auto& R : rings) {
        for (int t = 0; t < 4; ++t) {
            FreeModule cover{{0, 1}};
            std::vector<ModuleElement> rels;
            for (int j = 0; j < 3; ++j) {
                ModuleElement r = random_element(c, cover, rng, 2 + j % 2);
                if (!r.is_zero()) rels.push_back(r);
            }
            Presentation M(R, cover, rels);
            CHECK(hilbert_values(M, 0, 6) == oracle_hilbert(M, 0, 6));
        }
    }
}

TEST_CASE("hilbert values survive restriction of scalars") {
    RingPtr R = dual_numbers();
    Presentation k = Presentation::residue_field(R);
    Presentation kS = restrict_scalars(k);
    CHECK(kS.ring()->is_polynomial());
    CHECK(hilbert_values(k, 0, 4) == hilbert_values(kS, 0, 4));
    auto c3 = ctx3();
    RingPtr Q = GradedRing::quotient(c3, {parse_poly(c3, "x^2-y*z")});
    Presentation M(Q, FreeModule{{0}}, {col(c3, {"x"})});
    CHECK(hilbert_values(M, 0, 6) ==
          hilbert_values(restrict_scalars(M), 0, 6));
}

TEST_CASE("relative syzygies vanish on generators and match ranks") {
    RingPtr R = dual_numbers();
    auto c = R->ctx();
    FreeModule fm{{0}};
    std::vector<ModuleElement> gens = {col(c, {"x"})};
    auto syz = relative_syzygies(R, fm, gens);
    REQUIRE(!syz.empty());
    // x * x = x^2 lies in the ideal, so (x) is a relative syzygy of (x).
    CHECK(orc::member(c, FreeModule{{1}}, syz, col(c, {"x"})));
}

TEST_CASE("minimal generators drop redundant elements") {
    auto c = ctx2();
    RingPtr S = GradedRing::polynomial(c);
    FreeModule fm{{0}};
    std::vector<ModuleElement> gens = {col(c, {"x^2"}), col(c, {"x"}),
                                       col(c, {"x^3+x*y^2"}), col(c, {"y"})};
    MinGens mg = minimal_generators(S, fm, gens);
    REQUIRE(mg.elems.size() == 2);
    CHECK(mg.indices == std::vector<int>{1, 3});
    auto gb = submodule_gb(c, fm, mg.elems);
    for (auto& g : gens) CHECK(gb.contains(g));
}

TEST_CASE("subquotient presentation of m/m^2") {
    auto c = ctx2();
    RingPtr S = GradedRing::polynomial(c);
    FreeModule fm{{0}};
    std::vector<ModuleElement> U = {col(c, {"x"}), col(c, {"y"})};
    std::vector<ModuleElement> V = {col(c, {"x^2"}), col(c, {"x*y"}),
                                    col(c, {"y^2"})};
    Subquotient sq = present_subquotient(S, fm, U, V);
    CHECK(sq.module.cover().twists == std::vector<int>{1, 1});
    CHECK(hilbert_values(sq.module, 0, 3) == std::vector<int>{0, 2, 0, 0});
}

TEST_CASE("kernel and cokernel of multiplication by x on the dual numbers") {
    RingPtr R = dual_numbers();
    auto c = R->ctx();
    Presentation Rmod = Presentation::ring_module(R);
    Presentation Rshift = Presentation::free_module(R, FreeModule{{1}});
    GradedMap phi = GradedMap::from_columns(R, FreeModule{{1}}, FreeModule{{0}},
                                            {col(c, {"x"})});
    ModuleMap f{Rshift, Rmod, phi};
    f.validate();

    Presentation coker = minimal_presentation(cokernel(f));
    CHECK(hilbert_values(coker, 0, 3) == std::vector<int>{1, 0, 0, 0});

    KernelData k = kernel(f);
    k.inclusion.validate();
    // ker(x : R(-1) -> R) is the socle of R(-1), a shifted residue field.
    Presentation ker = minimal_presentation(k.module);
    CHECK(hilbert_values(ker, 0, 3) == std::vector<int>{0, 0, 1, 0});
    CHECK(ker.cover().twists == std::vector<int>{2});
    REQUIRE(ker.relations().size() == 1);
    CHECK(ker.relations()[0] == col(c, {"x"}));
}

TEST_CASE("random free map kernels match nullity degreewise") {
    auto c = ctx3();
    RingPtr S = GradedRing::polynomial(c);
    Rng rng(733);
    int cases = 0;
    for (int t = 0; t < 6; ++t) {
        FreeModule src{{1, 1, 2}};
        FreeModule tgt{{0, 1}};
        GradedMap phi = random_graded_map(S, src, tgt, rng);
        ModuleMap f{Presentation::free_module(S, src),
                    Presentation::free_module(S, tgt), phi};
        KernelData k = kernel(f);
        k.inclusion.validate();
        auto hv = hilbert_values(k.module, 0, 6);
        for (int d = 0; d <= 6; ++d) {
            orc::BasisD sb = orc::basis_of_degree(c, src, d);
            auto m = orc::map_matrix(c, src, tgt, phi.m, d);
            int nullity = sb.dim() - orc::rank(m, c->field());
            CHECK(hv[d] == nullity);
            ++cases;
        }
        // Kernel elements really map to zero.
        for (auto& g : k.inclusion.phi.columns())
            if (!g.is_zero()) CHECK(f.target.nf(phi.apply(g)).is_zero());
    }
    CHECK(cases >= 20);
}

TEST_CASE("image factors the map") {
    auto c = ctx2();
    RingPtr S = GradedRing::polynomial(c);
    FreeModule src{{1, 1}};
    FreeModule tgt{{0}};
    GradedMap phi = GradedMap::from_columns(S, src, tgt,
                                            {col(c, {"x"}), col(c, {"y"})});
    ModuleMap f{Presentation::free_module(S, src),
                Presentation::free_module(S, tgt), phi};
    ImageData img = image(f);
    img.inclusion.validate();
    img.projection.validate();
    // projection then inclusion equals the original map modulo relations.
    GradedMap comp = img.inclusion.phi.compose(img.projection.phi);
    for (int j = 0; j < src.rank(); ++j)
        CHECK(f.target.nf(comp.column(j) - phi.column(j)).is_zero());
    // The image of (x, y) : R(-1)^2 -> R is the maximal ideal.
    CHECK(hilbert_values(img.module, 0, 3) == std::vector<int>{0, 2, 3, 4});
}

TEST_CASE("tensor products of cyclic modules") {
    auto c = ctx2();
    RingPtr S = GradedRing::polynomial(c);
    Presentation Mx(S, FreeModule{{0}}, {col(c, {"x"})});
    Presentation My(S, FreeModule{{0}}, {col(c, {"y"})});
    Presentation T = tensor_product(Mx, My);
    // S/(x) tensor S/(y) = S/(x, y).
    CHECK(hilbert_values(T, 0, 3) == std::vector<int>{1, 0, 0, 0});
    Presentation F2 = Presentation::free_module(S, FreeModule{{0, 1}});
    Presentation TF = tensor_product(F2, Mx);
    CHECK(hilbert_values(TF, 0, 3) ==
          oracle_hilbert(TF, 0, 3));
    CHECK(hilbert_values(TF, 0, 2) == std::vector<int>{1, 2, 2});
}

TEST_CASE("hom into the ring detects duals and stability") {
    RingPtr R = dual_numbers();
    auto c = R->ctx();
    Presentation k = Presentation::residue_field(R);
    HomData h = hom_module(k, Presentation::ring_module(R));
    // Hom(k, R) is the socle (x), concentrated in degree 1.
    CHECK(hilbert_values(h.module, 0, 3) == std::vector<int>{0, 1, 0, 0});
    REQUIRE(h.module.cover().rank() >= 1);
    GradedMap g0 = hom_generator_matrix(h, 0);
    Poly entry = R->nf(g0.m[0][0]);
    REQUIRE(!entry.is_zero());
    CHECK(entry.scaled(c->field().inv(entry.leading().coeff)) ==
          parse_poly(c, "x"));
    auto tr = trace_ideal(k);
    REQUIRE(!tr.empty());
    for (auto& f : tr) {
        Poly n = R->nf(f);
        REQUIRE(!n.is_zero());
        CHECK(n.scaled(c->field().inv(n.leading().coeff)) ==
              parse_poly(c, "x"));
    }
    CHECK(is_stable(k));
    CHECK_FALSE(is_stable(Presentation::ring_module(R)));
}

TEST_CASE("hom from a free module recovers shifted copies") {
    auto c = ctx2();
    RingPtr S = GradedRing::polynomial(c);
    Presentation F = Presentation::free_module(S, FreeModule{{2}});
    HomData h = hom_module(F, Presentation::ring_module(S));
    // Hom(R(-2), R) = R(2).
    std::vector<int> tw;
    CHECK(is_free(h.module, &tw));
    CHECK(tw == std::vector<int>{-2});
    // Over the polynomial ring, Hom(S/(x), S) = 0.
    Presentation Mx(S, FreeModule{{0}}, {col(c, {"x"})});
    CHECK(hom_module(Mx, Presentation::ring_module(S)).module.is_zero_module());
}

TEST_CASE("hom evaluation is compatible with the inclusion") {
    auto c = ctx2();
    RingPtr S = GradedRing::polynomial(c);
    Presentation M(S, FreeModule{{0, 1}}, {col(c, {"x*y", "x"})});
    Presentation N(S, FreeModule{{0}}, {col(c, {"x^3"})});
    HomData h = hom_module(M, N);
    Rng rng(811);
    for (int j = 0; j < h.module.cover().rank(); ++j) {
        ModuleElement xi =
            ModuleElement::unit(c, h.module.cover().rank(), j);
        // Evaluating on relations of M lands in relations of N.
        for (auto& r : M.relations())
            CHECK(N.nf(hom_apply(h, xi, r)).is_zero());
        GradedMap mat = hom_generator_matrix(h, j);
        ModuleElement e = random_element(c, M.cover(), rng, 3);
        CHECK(hom_apply(h, xi, e) == mat.apply(e));
    }
}

TEST_CASE("minimalize strips split relations") {
    auto c = ctx2();
    RingPtr S = GradedRing::polynomial(c);
    // cover R + R(-1), relation (x, -1): the second generator is x times
    // the first, so the module is free of rank 1.
    Presentation M(S, FreeModule{{0, 1}}, {col(c, {"x", "-1"})});
    Presentation Q = minimalize(M);
    CHECK(Q.cover().twists == std::vector<int>{0});
    CHECK(Q.relations().empty());
    std::vector<int> tw;
    CHECK(is_free(M, &tw));
    CHECK(tw == std::vector<int>{0});
    CHECK_FALSE(is_free(Presentation::residue_field(S)));
    // Idempotent and stable under redundant zero relations.
    Presentation Q2 = minimalize(Q);
    CHECK(Q2.cover().twists == Q.cover().twists);
    CHECK(hilbert_values(M, 0, 4) == hilbert_values(Q, 0, 4));
}

TEST_CASE("minimalize preserves the module across random unit fill") {
    auto c = ctx3();
    RingPtr S = GradedRing::polynomial(c);
    Rng rng(907);
    for (int t = 0; t < 5; ++t) {
        FreeModule cover{{0, 1, 1, 2}};
        std::vector<ModuleElement> rels;
        for (int j = 0; j < 4; ++j) {
            ModuleElement r = random_element(c, cover, rng, 2);
            if (!r.is_zero()) rels.push_back(r);
        }
        Presentation M(S, cover, rels);
        Presentation Q = minimal_presentation(M);
        CHECK(hilbert_values(M, 0, 5) == hilbert_values(Q, 0, 5));
        for (auto& r : Q.relations())
            for (int i = 0; i < r.rank(); ++i) {
                bool unit_entry = r.comp(i).as_constant().has_value() &&
                                  !r.comp(i).is_zero();
                CHECK_FALSE(unit_entry);
            }
    }
}

TEST_CASE("preimage solves mapping problems") {
    auto c = ctx2();
    RingPtr S = GradedRing::polynomial(c);
    FreeModule src{{1, 1}};
    GradedMap phi = GradedMap::from_columns(S, src, FreeModule{{0}},
                                            {col(c, {"x"}), col(c, {"y"})});
    ModuleMap f{Presentation::free_module(S, src),
                Presentation::free_module(S, FreeModule{{0}}), phi};
    auto pre = preimage(f, col(c, {"x^2+x*y"}));
    REQUIRE(pre.has_value());
    CHECK(f.target.nf(phi.apply(*pre) - col(c, {"x^2+x*y"})).is_zero());
    CHECK_FALSE(preimage(f, col(c, {"1"})).has_value());
}

TEST_CASE("isomorphism detection") {
    RingPtr R = dual_numbers();
    auto c = R->ctx();
    Presentation k = Presentation::residue_field(R);
    ModuleMap ident{k, k, GradedMap::identity(R, k.cover())};
    CHECK(is_isomorphism(ident));
    Presentation Rmod = Presentation::ring_module(R);
    ModuleMap zero{k, Rmod, GradedMap::zero(R, k.cover(), Rmod.cover())};
    CHECK_FALSE(is_isomorphism(zero));
}

TEST_CASE("direct sums add hilbert values") {
    auto c = ctx2();
    RingPtr S = GradedRing::polynomial(c);
    Presentation Mx(S, FreeModule{{0}}, {col(c, {"x"})});
    Presentation F = Presentation::free_module(S, FreeModule{{1}});
    Presentation D = direct_sum(Mx, F);
    auto a = hilbert_values(Mx, 0, 4);
    auto b = hilbert_values(F, 0, 4);
    auto d = hilbert_values(D, 0, 4);
    for (int i = 0; i <= 4; ++i) CHECK(d[i] == a[i] + b[i]);
}
