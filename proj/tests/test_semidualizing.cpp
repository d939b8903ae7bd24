#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grmod/invariants.hpp"
#include "grmod/parse.hpp"
#include "test_util.hpp"

using namespace grmod;

static ContextPtr ctx3() { return make_context(32003, {"x", "y", "z"}); }
static ContextPtr ctx2() { return make_context(32003, {"x", "y"}); }

static RingPtr dual_numbers() {
    auto c = make_context(32003, {"x"});
    return GradedRing::quotient(c, {parse_poly(c, "x^2")});
}

static RingPtr semigroup_ring() {
    auto c = make_context(32003, {"a", "b", "c"}, {3, 4, 5});
    return GradedRing::quotient(c, {parse_poly(c, "b^2 - a*c"),
                                    parse_poly(c, "c^2 - a^2*b"),
                                    parse_poly(c, "a^3 - b*c")});
}

static Presentation cyclic(const RingPtr& R,
                           const std::vector<std::string>& gens) {
    std::vector<ModuleElement> rels;
    for (auto& g : gens)
        rels.push_back(ModuleElement::wrap(parse_poly(R->ctx(), g)));
    return Presentation(R, FreeModule{{0}}, rels);
}

TEST_CASE("homothety verification certifies rings and rejects the residue "
          "field") {
    RingPtr S = GradedRing::polynomial(ctx3());
    CertStatus st = verify_semidualizing(Presentation::ring_module(S), 4);
    CHECK(st.kind == CertKind::Certified);

    RingPtr D = dual_numbers();
    CHECK(verify_semidualizing(Presentation::ring_module(D), 4).kind ==
          CertKind::Certified);

    CertStatus bad = verify_semidualizing(Presentation::residue_field(D), 4);
    CHECK(bad.kind == CertKind::Failed);
    CHECK(bad.witness.find("homothety") != std::string::npos);

    CHECK_THROWS_AS(verify_semidualizing(Presentation::zero_module(S), 3),
                    std::invalid_argument);
}

TEST_CASE("canonical modules of standard rings") {
    RingPtr S = GradedRing::polynomial(ctx3());
    std::vector<int> tw;
    CHECK(is_free(canonical_module(S), &tw));
    CHECK(tw == std::vector<int>{3});
    CHECK(is_gorenstein(S));

    RingPtr D = dual_numbers();
    CHECK(is_gorenstein(D));

    auto c2 = ctx2();
    RingPtr X = GradedRing::quotient(c2, {parse_poly(c2, "x*y")});
    CHECK(is_gorenstein(X));

    RingPtr T = semigroup_ring();
    Presentation w = canonical_module(T);
    CHECK(w.cover().rank() == 2);
    CHECK_FALSE(is_gorenstein(T));

    RingPtr bad = GradedRing::quotient(
        c2, {parse_poly(c2, "x^2"), parse_poly(c2, "x*y")});
    CHECK_THROWS_AS(canonical_module(bad), std::invalid_argument);
}

TEST_CASE("the canonical dualizer is certified and self-dual") {
    RingPtr T = semigroup_ring();
    Dualizer w = canonical_dualizer(T, 2);
    CHECK(w.status.kind == CertKind::Certified);
    CHECK(w.dualizing);

    Dualizer plain = module_dualizer(w.C, "W", 2);
    CHECK(plain.status.kind == CertKind::BoundedEvidence);
    CHECK(plain.status.bound == 2);

    Presentation rd = dual_module(Presentation::ring_module(T), w);
    auto hv = hilbert_values(rd, -3, 8);
    CHECK(hv == hilbert_values(w.C, -3, 8));
}

TEST_CASE("transpose of the residue field and of free modules") {
    RingPtr D = dual_numbers();
    Dualizer Rd = ring_dualizer(D);
    Presentation k = Presentation::residue_field(D);

    Presentation t = transpose(k, Rd);
    CHECK(t.cover().rank() == 1);
    CHECK(t.cover().twist(0) == -1);
    CHECK(hilbert_values(t, -1, 1) == std::vector<int>{1, 0, 0});

    Presentation f = Presentation::free_module(D, FreeModule{{0, 2}});
    CHECK(transpose(f, Rd).is_zero_module());

    CHECK(iterated_transpose(k, Rd, 1).hash() == t.hash());
}

TEST_CASE("lambda of the residue field over the dual numbers is itself") {
    RingPtr D = dual_numbers();
    Presentation k = Presentation::residue_field(D);
    Presentation l = lambda_module(k);
    CHECK(l.cover().rank() == 1);
    CHECK(l.cover().twist(0) == 0);
    CHECK(hilbert_values(l, 0, 2) == std::vector<int>{1, 0, 0});
}

TEST_CASE("syzygy modules: index zero, free tails, syzygy membership") {
    RingPtr S = GradedRing::polynomial(ctx3());
    Presentation k = Presentation::residue_field(S);

    CHECK(syzygy_module(k, 0).hash() == resolve(k, 0).minimal.hash());

    Presentation f = Presentation::free_module(S, FreeModule{{1}});
    CHECK(syzygy_module(f, 1).is_zero_module());
    CHECK(syzygy_module(f, 3).is_zero_module());

    Presentation s1 = syzygy_module(k, 1);
    CHECK(s1.cover().twists == std::vector<int>{1, 1, 1});
    Dualizer Rd = ring_dualizer(S);
    CHECK(is_c_syzygy(s1, Rd).holds);

    Presentation s3 = syzygy_module(k, 3);
    std::vector<int> tw;
    CHECK(is_free(s3, &tw));
    CHECK(tw == std::vector<int>{3});
    CHECK(syzygy_module(k, 4).is_zero_module());
}

TEST_CASE("biduality: isomorphisms for frees and reflexives, kernel for "
          "torsion") {
    RingPtr S = GradedRing::polynomial(ctx3());
    Dualizer RdS = ring_dualizer(S);
    Presentation f = Presentation::free_module(S, FreeModule{{0, 1}});
    CHECK(is_isomorphism(biduality_map(f, RdS)));

    RingPtr D = dual_numbers();
    Dualizer RdD = ring_dualizer(D);
    Presentation k = Presentation::residue_field(D);
    CHECK(is_isomorphism(biduality_map(k, RdD)));
    Verdict tr = totally_reflexive(k, RdD, 4);
    CHECK(tr.holds);
    CHECK(tr.status.kind == CertKind::Certified);

    RingPtr P = GradedRing::polynomial(ctx2());
    Dualizer RdP = ring_dualizer(P);
    Presentation M = cyclic(P, {"x"});
    ModuleMap sigma = biduality_map(M, RdP);
    CHECK(sigma.target.is_zero_module());
    auto ker = kernel(sigma);
    CHECK(hilbert_values(ker.module, 0, 4) == hilbert_values(M, 0, 4));
}

TEST_CASE("the four-term biduality sequence balances Hilbert functions") {
    struct Inst {
        Presentation M;
        Dualizer C;
    };
    RingPtr P = GradedRing::polynomial(ctx2());
    RingPtr D = dual_numbers();
    RingPtr T = semigroup_ring();
    Presentation m = kernel(ModuleMap{Presentation::ring_module(T),
                                      Presentation::residue_field(T),
                                      GradedMap::identity(T, FreeModule{{0}})})
                         .module;
    std::vector<Inst> insts;
    insts.push_back({cyclic(P, {"x"}), ring_dualizer(P)});
    insts.push_back({Presentation::residue_field(D), ring_dualizer(D)});
    insts.push_back({m, ring_dualizer(T)});
    insts.push_back({m, canonical_dualizer(T, 2)});

    for (auto& inst : insts) {
        Presentation t = transpose(inst.M, inst.C);
        Presentation e1 = ext_module(t, inst.C.C, 1);
        Presentation e2 = ext_module(t, inst.C.C, 2);
        ModuleMap sigma = biduality_map(inst.M, inst.C);
        Presentation bidual = sigma.target;
        int lo = -6, hi = 8;
        auto h_e1 = hilbert_values(e1, lo, hi);
        auto h_m = hilbert_values(inst.M, lo, hi);
        auto h_bb = hilbert_values(bidual, lo, hi);
        auto h_e2 = hilbert_values(e2, lo, hi);
        auto h_ker = hilbert_values(kernel(sigma).module, lo, hi);
        auto h_cok = hilbert_values(cokernel(sigma), lo, hi);
        for (int d = 0; d <= hi - lo; ++d) {
            CHECK(h_e1[d] - h_m[d] + h_bb[d] - h_e2[d] == 0);
            CHECK(h_ker[d] == h_e1[d]);
            CHECK(h_cok[d] == h_e2[d]);
        }
    }
}

TEST_CASE("auslander class membership") {
    RingPtr D = dual_numbers();
    Verdict triv = auslander_class(Presentation::residue_field(D),
                                   ring_dualizer(D), 4);
    CHECK(triv.holds);
    CHECK(triv.status.kind == CertKind::Certified);

    RingPtr T = semigroup_ring();
    Dualizer w = canonical_dualizer(T, 2);
    Verdict ring_member =
        auslander_class(Presentation::ring_module(T), w, 2);
    CHECK(ring_member.holds);
    CHECK(ring_member.status.kind == CertKind::Certified);

    Verdict res = auslander_class(Presentation::residue_field(T), w, 2);
    CHECK_FALSE(res.holds);
    CHECK(res.status.kind == CertKind::Certified);
    CHECK_FALSE(res.witness.empty());
}
