#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "grmod/corpus.hpp"

using namespace grmod;

static std::string corpus_dir() {
    const char* d = std::getenv("GRMOD_CORPUS_DIR");
    return d ? d : "corpus";
}

static const std::vector<std::string>& corpus_files() {
    static const std::vector<std::string> files = {
        "polyring.gr", "hypersurface.gr", "crossing.gr", "semigroup.gr"};
    return files;
}

static Workspace load_bundled() {
    Workspace ws;
    for (auto& f : corpus_files())
        parse_corpus_file(ws, corpus_dir() + "/" + f);
    return ws;
}

TEST_CASE("parsing rings, modules, dualizers, and checks") {
    Workspace ws;
    parse_corpus_text(ws, R"(# two blocks
ring A
char 32003
vars x y
weights 1 2
ideal
x^2 - y
end

module m over A
cover 0 1
relations
x, 3
y, 0
end

dualizer d = R over A
check prop-grade-lb module m dualizer d range 2 bound 3
)",
                      "inline");
    REQUIRE(ws.ring_names() == std::vector<std::string>{"A"});
    const RingPtr& A = ws.ring("A");
    CHECK(A->ctx()->field().p() == 32003);
    CHECK(A->ctx()->vars() == std::vector<std::string>{"x", "y"});
    CHECK(A->ctx()->weights() == std::vector<int>{1, 2});
    CHECK(A->ideal().size() == 1);

    REQUIRE(ws.has_module("m"));
    const Presentation& m = ws.module("m");
    CHECK(m.cover().twists == std::vector<int>{0, 1});
    CHECK(m.relations().size() == 2);
    CHECK(m.relations()[0].comp(1).as_constant() == 3u);

    REQUIRE(ws.checks().size() == 1);
    const CheckDecl& c = ws.checks()[0];
    CHECK(c.id == "prop-grade-lb");
    CHECK(c.module_name == "m");
    CHECK(c.dualizer_name == "d");
    CHECK(c.range == 2);
    CHECK(c.bound == 3);
    CHECK(c.n == 1);

    const Dualizer& d = ws.dualizer("d");
    CHECK(d.is_ring);
    CHECK(d.status.kind == CertKind::Certified);
}

TEST_CASE("parse errors carry line numbers") {
    auto parse = [](const std::string& text) {
        Workspace ws;
        parse_corpus_text(ws, text, "t");
    };
    CHECK_THROWS_AS(parse("bogus\n"), ParseError);
    CHECK_THROWS_AS(parse("ring A\nchar 32003\nvars x\nideal\n"), ParseError);
    CHECK_THROWS_AS(parse("module m over nope\ncover 0\nend\n"), ParseError);
    CHECK_THROWS_AS(parse("check not-a-check module m dualizer d\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse("ring A\nchar 32003\nvars x\nend\n"
              "module m over A\ncover 0 0\nrelations\nx\nend\nend\n"),
        ParseError);

    try {
        parse("ring A\nchar 32003\nvars x\nend\n\nwat\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
        CHECK(std::string(e.what()).find("wat") != std::string::npos);
    }

    try {
        parse("ring A\nchar 32003\nvars x y z w\nweights 1 2\nend\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("weights") != std::string::npos);
    }
}

TEST_CASE("duplicate names are rejected") {
    Workspace ws;
    parse_corpus_text(ws, "ring A\nchar 32003\nvars x\nend\n", "t");
    CHECK_THROWS_AS(
        parse_corpus_text(ws, "ring A\nchar 32003\nvars y\nend\n", "t"),
        ParseError);
}

TEST_CASE("the bundled corpus loads with the expected shape") {
    Workspace ws = load_bundled();
    CHECK(ws.ring_names() ==
          std::vector<std::string>{"S3", "P", "H", "X", "T"});
    CHECK(ws.module_names().size() == 12);
    CHECK(ws.dualizer_decls().size() == 7);
    CHECK(ws.checks().size() == 65);
    for (auto& c : ws.checks()) {
        CHECK(harness_has_check(c.id));
        CHECK(ws.has_module(c.module_name));
        CHECK(ws.has_dualizer(c.dualizer_name));
        CHECK(same_ring(ws.module(c.module_name).ring(),
                        ws.request(c).C.C.ring()));
    }
}

TEST_CASE("serialization round-trips the bundled corpus") {
    Workspace ws = load_bundled();
    std::string once = serialize_workspace(ws);
    Workspace back;
    parse_corpus_text(back, once, "serialized");
    std::string twice = serialize_workspace(back);
    CHECK(once == twice);
    CHECK(back.ring_names() == ws.ring_names());
    CHECK(back.module_names() == ws.module_names());
    CHECK(back.checks().size() == ws.checks().size());
    for (auto& name : ws.module_names())
        CHECK(back.module(name).hash() == ws.module(name).hash());
}

TEST_CASE("file-declared checks run through the harness") {
    Workspace ws;
    parse_corpus_file(ws, corpus_dir() + "/hypersurface.gr");
    parse_corpus_file(ws, corpus_dir() + "/crossing.gr");
    REQUIRE(ws.checks().size() == 13);
    for (auto& c : ws.checks()) {
        CheckResult r = run_check(c.id, ws.request(c));
        bool passing = r.verdict == CheckVerdict::Pass ||
                       r.verdict == CheckVerdict::Evidence;
        CHECK_MESSAGE(passing, c.id, " on ", c.module_name, ": ", r.witness);
        CHECK(r.status.kind == CertKind::Certified);
        if (r.verdict == CheckVerdict::Evidence) CHECK(r.hilbert_bound > 0);
    }
}

TEST_CASE("unknown check ids are rejected by the harness") {
    CHECK(harness_check_ids().size() == 16);
    CHECK(harness_has_check("thm-gcdim-sum"));
    CHECK_FALSE(harness_has_check("thm-nonsense"));
    Workspace ws;
    parse_corpus_file(ws, corpus_dir() + "/hypersurface.gr");
    CHECK_THROWS_AS(run_check("thm-nonsense", ws.request(ws.checks()[0])),
                    std::invalid_argument);
}
