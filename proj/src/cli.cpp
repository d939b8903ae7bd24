#include "grmod/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "grmod/corpus.hpp"
#include "grmod/groebner.hpp"

namespace grmod {
namespace {

using nlohmann::ordered_json;

struct Invocation {
    std::vector<std::string> inputs;
    std::string module_name;
    std::string dualizer_name = "R";
    std::string ring_name;
    std::vector<std::string> check_ids;
    bool all = false;
    int n = 1;
    int k = 1;
    int t = 1;
    int range = 4;
    int bound = 0;
    int degree_cap = 0;
    int hilbert_bound = 0;
    bool json = false;
    bool no_timings = false;
    std::string cache_dir;
};

void add_common_flags(CLI::App* c, Invocation& v) {
    c->add_option("--input", v.inputs, "corpus file (repeatable)");
    c->add_option("--bound", v.bound,
                  "Ext-vanishing scan bound (0 = depth R + 4)");
    c->add_option("--degree-cap", v.degree_cap,
                  "abort Groebner computations past this degree");
    c->add_option("--hilbert-bound", v.hilbert_bound,
                  "degree window for Hilbert-function comparisons");
    c->add_flag("--json", v.json, "emit a JSON report");
    c->add_flag("--no-timings", v.no_timings, "omit timings from reports");
    c->add_option("--cache-dir", v.cache_dir,
                  "resolution cache directory (or GRMOD_CACHE_DIR)");
}

void add_module_flag(CLI::App* c, Invocation& v, bool required = true) {
    auto* o = c->add_option("--module", v.module_name, "module name");
    if (required) o->required();
}

void add_dualizer_flag(CLI::App* c, Invocation& v) {
    c->add_option("--dualizer", v.dualizer_name,
                  "declared dualizer name, or R / canonical");
}

struct Loaded {
    Workspace ws;
    std::string hash;
};

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

Loaded load_inputs(const Invocation& v) {
    Loaded L;
    Fnv1a h;
    for (auto& path : v.inputs) {
        std::ifstream is(path, std::ios::binary);
        if (!is)
            throw ParseError(path + ": cannot open input file", 0, 0);
        std::ostringstream buf;
        buf << is.rdbuf();
        std::string text = buf.str();
        h.str(text);
        parse_corpus_text(L.ws, text, path);
    }
    L.hash = hex64(h.value());
    return L;
}

const Presentation& pick_module(Workspace& ws, const std::string& name) {
    if (name.empty())
        throw ParseError("no module named (use --module)", 0, 0);
    if (!ws.has_module(name))
        throw ParseError("unknown module: " + name, 0, 0, name);
    return ws.module(name);
}

Dualizer pick_dualizer(Workspace& ws, const std::string& name,
                       const RingPtr& R, int bound) {
    if (ws.has_dualizer(name)) return ws.dualizer(name);
    if (name.empty() || name == "R") return ring_dualizer(R);
    if (name == "canonical")
        return canonical_dualizer(R, bound > 0 ? bound : ring_depth(R) + 1);
    throw ParseError("unknown dualizer: " + name, 0, 0, name);
}

RingPtr pick_ring(Workspace& ws, const Invocation& v) {
    if (!v.ring_name.empty()) {
        if (!ws.has_ring(v.ring_name))
            throw ParseError("unknown ring: " + v.ring_name, 0, 0,
                             v.ring_name);
        return ws.ring(v.ring_name);
    }
    if (!v.module_name.empty()) return pick_module(ws, v.module_name).ring();
    if (ws.ring_names().size() == 1) return ws.ring(ws.ring_names()[0]);
    throw ParseError("several rings declared; use --ring or --module", 0, 0);
}

std::string ring_name_of(Workspace& ws, const RingPtr& R) {
    for (auto& rn : ws.ring_names())
        if (same_ring(ws.ring(rn), R)) return rn;
    return "R";
}

ordered_json xint_json(const XInt& v) {
    return v.finite ? ordered_json(v.value) : ordered_json("inf");
}

ordered_json module_json(const std::string& name, const Presentation& M,
                         const std::string& ring_name) {
    ordered_json j;
    j["name"] = name;
    j["ring"] = ring_name;
    j["cover"] = M.cover().twists;
    auto rels = ordered_json::array();
    for (auto& r : M.relations()) {
        auto row = ordered_json::array();
        for (int i = 0; i < r.rank(); ++i) row.push_back(r.comp(i).str());
        rels.push_back(row);
    }
    j["relations"] = rels;
    return j;
}

ordered_json json_head(const std::string& command, const Loaded& L) {
    ordered_json doc;
    doc["tool_version"] = kToolVersion;
    doc["corpus_hash"] = L.hash;
    doc["command"] = command;
    return doc;
}

void emit_json(std::ostream& out, const ordered_json& doc) {
    out << doc.dump(2) << "\n";
}

int scan_bound_for(const Invocation& v, const RingPtr& R) {
    return v.bound > 0 ? v.bound : default_ext_bound(R);
}

// Emits a derived module both as a corpus block (text) and as JSON.
int emit_module(std::ostream& out, const Invocation& v, Loaded& L,
                const std::string& command, const std::string& name,
                const Presentation& M) {
    std::string rn = ring_name_of(L.ws, M.ring());
    if (v.json) {
        ordered_json doc = json_head(command, L);
        doc["module"] = module_json(name, M, rn);
        emit_json(out, doc);
    } else {
        out << serialize_module(name, M, rn);
    }
    return 0;
}

int cmd_resolve(std::ostream& out, const Invocation& v, Loaded& L) {
    const Presentation& M = pick_module(L.ws, v.module_name);
    int b = scan_bound_for(v, M.ring());
    Resolution res = resolve(M, b);
    if (v.json) {
        ordered_json doc = json_head("resolve", L);
        doc["module"] = v.module_name;
        auto betti = ordered_json::array();
        for (int k = 0; k <= res.computed_length(); ++k) {
            FreeModule f = res.free_module(k);
            ordered_json row;
            row["index"] = k;
            row["rank"] = f.rank();
            row["twists"] = f.twists;
            betti.push_back(row);
        }
        doc["betti"] = betti;
        doc["complete"] = res.complete;
        emit_json(out, doc);
        return 0;
    }
    for (int k = 0; k <= res.computed_length(); ++k) {
        FreeModule f = res.free_module(k);
        out << "F_" << k << ": rank " << f.rank() << " twists [";
        for (int i = 0; i < f.rank(); ++i)
            out << (i ? ", " : "") << f.twist(i);
        out << "]\n";
    }
    if (res.complete)
        out << "complete: projective dimension " << res.computed_length()
            << "\n";
    else
        out << "truncated after " << res.computed_length() << " steps\n";
    return 0;
}

int cmd_derived_functor(std::ostream& out, const Invocation& v, Loaded& L,
                        bool ext) {
    const Presentation& M = pick_module(L.ws, v.module_name);
    Dualizer D = pick_dualizer(L.ws, v.dualizer_name, M.ring(), v.bound);
    int b = scan_bound_for(v, M.ring());
    std::string fn = ext ? "Ext" : "Tor";
    ordered_json arr = ordered_json::array();
    for (int i = 0; i <= b; ++i) {
        Presentation E = ext ? ext_module(M, D.C, i) : tor_module(M, D.C, i);
        bool zero = E.is_zero_module();
        if (v.json) {
            ordered_json row;
            row["i"] = i;
            row["zero"] = zero;
            row["generators"] = E.cover().twists;
            arr.push_back(row);
        } else if (zero) {
            out << fn << "^" << i << "(" << v.module_name << ", " << D.name
                << ") = 0\n";
        } else {
            out << fn << "^" << i << "(" << v.module_name << ", " << D.name
                << "): generators [";
            for (int j = 0; j < E.cover().rank(); ++j)
                out << (j ? ", " : "") << E.cover().twist(j);
            out << "]\n";
        }
    }
    if (v.json) {
        ordered_json doc = json_head(ext ? "ext" : "tor", L);
        doc["module"] = v.module_name;
        doc["dualizer"] = D.name;
        doc["values"] = arr;
        emit_json(out, doc);
    }
    return 0;
}

int cmd_value(std::ostream& out, const Invocation& v, Loaded& L,
              const std::string& command) {
    const Presentation& M = pick_module(L.ws, v.module_name);
    Dualizer D = pick_dualizer(L.ws, v.dualizer_name, M.ring(), v.bound);
    int b = scan_bound_for(v, M.ring());
    CertXInt r;
    if (command == "grade")
        r = grade_value(M, D);
    else if (command == "rgrade")
        r = reduced_grade(M, D, b);
    else
        r = gc_dimension(M, D, b);
    if (v.json) {
        ordered_json doc = json_head(command, L);
        doc["module"] = v.module_name;
        doc["dualizer"] = D.name;
        doc["value"] = xint_json(r.value);
        doc["status"] = r.status.str();
        if (!r.status.witness.empty()) doc["witness"] = r.status.witness;
        emit_json(out, doc);
        return 0;
    }
    out << r.value.str() << "\n";
    out << "status: " << r.status.str() << "\n";
    if (!r.status.witness.empty())
        out << "witness: " << r.status.witness << "\n";
    return 0;
}

int cmd_linkage(std::ostream& out, const Invocation& v, Loaded& L) {
    const Presentation& M = pick_module(L.ws, v.module_name);
    bool stable = is_stable(M);
    Verdict hl = horizontally_linked(M);
    if (v.json) {
        ordered_json doc = json_head("linkage", L);
        doc["module"] = v.module_name;
        doc["stable"] = stable;
        doc["horizontally_linked"] = hl.holds;
        doc["status"] = hl.status.str();
        if (!hl.witness.empty()) doc["witness"] = hl.witness;
        emit_json(out, doc);
    } else {
        out << "stable: " << (stable ? "yes" : "no") << "\n";
        out << "horizontally linked: " << (hl.holds ? "yes" : "no") << "\n";
        out << "status: " << hl.status.str() << "\n";
        if (!hl.witness.empty()) out << "witness: " << hl.witness << "\n";
    }
    return hl.holds ? 0 : 1;
}

int cmd_verify_semidualizing(std::ostream& out, const Invocation& v,
                             Loaded& L) {
    const Presentation& M = pick_module(L.ws, v.module_name);
    int b = scan_bound_for(v, M.ring());
    CertStatus st = verify_semidualizing(M, b);
    if (v.json) {
        ordered_json doc = json_head("verify-semidualizing", L);
        doc["module"] = v.module_name;
        doc["semidualizing"] = st.ok();
        doc["status"] = st.str();
        if (!st.witness.empty()) doc["witness"] = st.witness;
        emit_json(out, doc);
    } else {
        out << "semidualizing: " << (st.ok() ? "yes" : "no") << "\n";
        out << "status: " << st.str() << "\n";
        if (!st.witness.empty()) out << "witness: " << st.witness << "\n";
    }
    return st.ok() ? 0 : 1;
}

int cmd_canonical(std::ostream& out, const Invocation& v, Loaded& L) {
    RingPtr R = pick_ring(L.ws, v);
    Dualizer D = canonical_dualizer(R, v.bound > 0 ? v.bound
                                                   : ring_depth(R) + 1);
    std::string rn = ring_name_of(L.ws, R);
    if (v.json) {
        ordered_json doc = json_head("canonical", L);
        doc["ring"] = rn;
        doc["gorenstein"] = is_gorenstein(R);
        doc["status"] = D.status.str();
        doc["module"] = module_json("omega", D.C, rn);
        emit_json(out, doc);
    } else {
        out << serialize_module("omega", D.C, rn);
        out << "status: " << D.status.str() << "\n";
        out << "gorenstein ring: " << (is_gorenstein(R) ? "yes" : "no")
            << "\n";
    }
    return 0;
}

void verdict_lines(std::ostream& out, const std::string& label,
                   const Verdict& w) {
    out << label << ": " << (w.holds ? "yes" : "no") << " ["
        << w.status.str() << "]";
    if (!w.witness.empty()) out << " witness: " << w.witness;
    out << "\n";
}

ordered_json verdict_json(const Verdict& w) {
    ordered_json j;
    j["holds"] = w.holds;
    j["status"] = w.status.str();
    if (!w.witness.empty()) j["witness"] = w.witness;
    return j;
}

int cmd_report(std::ostream& out, const Invocation& v, Loaded& L) {
    const Presentation& M = pick_module(L.ws, v.module_name);
    Dualizer D = pick_dualizer(L.ws, v.dualizer_name, M.ring(), v.bound);
    int b = scan_bound_for(v, M.ring());
    InvariantReport rep = invariant_report(M, D, b, v.k);
    if (v.json) {
        ordered_json doc = json_head("report", L);
        doc["module"] = v.module_name;
        doc["dualizer"] = D.name;
        doc["grade"] = xint_json(rep.grade.value);
        doc["grade_status"] = rep.grade.status.str();
        doc["rgrade"] = xint_json(rep.rgrade.value);
        doc["rgrade_status"] = rep.rgrade.status.str();
        doc["depth"] = rep.depth;
        doc["gcdim"] = xint_json(rep.gc_dim.value);
        doc["gcdim_status"] = rep.gc_dim.status.str();
        doc["gc_perfect"] = verdict_json(rep.flags.gc_perfect);
        doc["reduced_gc_perfect"] = verdict_json(rep.flags.reduced_gc_perfect);
        doc["stable"] = verdict_json(rep.flags.stable);
        doc["horizontally_linked"] =
            verdict_json(rep.flags.horizontally_linked);
        doc["torsionless_k"] = rep.flags.torsionless_k;
        doc["c_k_torsionless"] = verdict_json(rep.flags.c_k_torsionless);
        emit_json(out, doc);
        return 0;
    }
    out << "module: " << v.module_name << "  dualizer: " << D.name << "\n";
    out << "grade: " << rep.grade.value.str() << " ["
        << rep.grade.status.str() << "]\n";
    out << "reduced grade: " << rep.rgrade.value.str() << " ["
        << rep.rgrade.status.str() << "]\n";
    out << "depth: " << rep.depth << "\n";
    out << "gcdim: " << rep.gc_dim.value.str() << " ["
        << rep.gc_dim.status.str() << "]\n";
    verdict_lines(out, "gc-perfect", rep.flags.gc_perfect);
    verdict_lines(out, "reduced-gc-perfect", rep.flags.reduced_gc_perfect);
    verdict_lines(out, "stable", rep.flags.stable);
    verdict_lines(out, "horizontally-linked", rep.flags.horizontally_linked);
    verdict_lines(out,
                  "c_" + std::to_string(rep.flags.torsionless_k) +
                      "-torsionless",
                  rep.flags.c_k_torsionless);
    return 0;
}

struct RunRow {
    CheckDecl decl;
    CheckResult result;
    long long ms = 0;
};

CheckRequest make_request(Workspace& ws, const CheckDecl& d, int bound_flag) {
    CheckRequest r;
    r.M = pick_module(ws, d.module_name);
    int b = d.bound > 0 ? d.bound : bound_flag;
    r.C = pick_dualizer(ws, d.dualizer_name, r.M.ring(), b);
    r.n = d.n;
    r.k = d.k;
    r.t = d.t;
    r.range = d.range;
    r.bound = b;
    return r;
}

int cmd_verify(std::ostream& out, const Invocation& v, Loaded& L) {
    std::vector<CheckDecl> decls;
    if (v.all) {
        decls = L.ws.checks();
    } else if (!v.check_ids.empty()) {
        for (auto& id : v.check_ids)
            if (!harness_has_check(id))
                throw ParseError("unknown check id: " + id, 0, 0, id);
        if (!v.module_name.empty()) {
            for (auto& id : v.check_ids) {
                CheckDecl d;
                d.id = id;
                d.module_name = v.module_name;
                d.dualizer_name = v.dualizer_name;
                d.n = v.n;
                d.k = v.k;
                d.t = v.t;
                d.range = v.range;
                d.bound = v.bound;
                decls.push_back(d);
            }
        } else {
            for (auto& c : L.ws.checks())
                if (std::find(v.check_ids.begin(), v.check_ids.end(), c.id) !=
                    v.check_ids.end())
                    decls.push_back(c);
        }
    } else {
        throw ParseError("verify requires --all or --check <id>", 0, 0);
    }

    std::vector<RunRow> rows;
    for (auto& d : decls) {
        CheckRequest req = make_request(L.ws, d, v.bound);
        auto t0 = std::chrono::steady_clock::now();
        RunRow row;
        row.decl = d;
        row.result = run_check(d.id, req);
        row.decl.bound = req.bound;
        auto t1 = std::chrono::steady_clock::now();
        row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 -
                                                                       t0)
                     .count();
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const RunRow& a, const RunRow& b) {
                         return a.decl.id < b.decl.id;
                     });

    int pass = 0, evidence = 0, skipped = 0, fail = 0;
    for (auto& r : rows) {
        switch (r.result.verdict) {
        case CheckVerdict::Pass: ++pass; break;
        case CheckVerdict::Evidence: ++evidence; break;
        case CheckVerdict::Skipped: ++skipped; break;
        case CheckVerdict::Fail: ++fail; break;
        }
    }

    if (v.json) {
        ordered_json doc;
        doc["tool_version"] = kToolVersion;
        doc["corpus_hash"] = L.hash;
        auto results = ordered_json::array();
        for (auto& r : rows) {
            ordered_json j;
            j["check"] = r.result.check;
            ordered_json in;
            in["module"] = r.decl.module_name;
            in["dualizer"] = r.decl.dualizer_name;
            in["n"] = r.decl.n;
            in["k"] = r.decl.k;
            in["t"] = r.decl.t;
            in["range"] = r.decl.range;
            in["bound"] = r.decl.bound;
            j["inputs"] = in;
            j["verdict"] = verdict_str(r.result.verdict);
            j["status"] = r.result.status.str();
            if (!r.result.witness.empty()) j["witness"] = r.result.witness;
            j["hilbert_bound"] = r.result.hilbert_bound;
            if (!v.no_timings) j["ms"] = r.ms;
            results.push_back(j);
        }
        doc["results"] = results;
        emit_json(out, doc);
    } else {
        for (auto& r : rows) {
            out << r.result.check << " module=" << r.decl.module_name
                << " dualizer=" << r.decl.dualizer_name;
            if (r.decl.n != 1) out << " n=" << r.decl.n;
            if (r.decl.k != 1) out << " k=" << r.decl.k;
            if (r.decl.t != 1) out << " t=" << r.decl.t;
            if (r.decl.range != 4) out << " range=" << r.decl.range;
            if (r.decl.bound != 0) out << " bound=" << r.decl.bound;
            out << ": " << verdict_str(r.result.verdict) << " ["
                << r.result.status.str() << "]";
            if (r.result.hilbert_bound > 0)
                out << " hilbert<=" << r.result.hilbert_bound;
            if (!r.result.witness.empty())
                out << " witness: " << r.result.witness;
            if (!v.no_timings) out << " (" << r.ms << " ms)";
            out << "\n";
        }
        out << rows.size() << " checks: " << pass << " pass, " << evidence
            << " evidence, " << skipped << " skipped, " << fail << " fail\n";
    }
    return fail > 0 ? 1 : 0;
}

// Restores process-wide knobs after an embedded invocation.
struct KnobGuard {
    int cap = current_degree_cap();
    std::optional<std::string> cache = disk_cache_dir();
    int window = hilbert_window_override();
    ~KnobGuard() {
        set_current_degree_cap(cap);
        set_disk_cache_dir(cache);
        set_hilbert_window_override(window);
    }
};

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult res;
    std::ostringstream out, err;
    Invocation v;

    CLI::App app{"exact homological algebra for graded modules", "grmod"};
    app.require_subcommand(1);

    auto* c_resolve = app.add_subcommand("resolve", "minimal free resolution");
    add_common_flags(c_resolve, v);
    add_module_flag(c_resolve, v);

    auto* c_ext = app.add_subcommand("ext", "Ext modules against a dualizer");
    add_common_flags(c_ext, v);
    add_module_flag(c_ext, v);
    add_dualizer_flag(c_ext, v);

    auto* c_tor = app.add_subcommand("tor", "Tor modules against a dualizer");
    add_common_flags(c_tor, v);
    add_module_flag(c_tor, v);
    add_dualizer_flag(c_tor, v);

    auto* c_tr = app.add_subcommand("transpose", "transpose of a module");
    add_common_flags(c_tr, v);
    add_module_flag(c_tr, v);
    add_dualizer_flag(c_tr, v);

    auto* c_lambda = app.add_subcommand("lambda", "linkage of a module");
    add_common_flags(c_lambda, v);
    add_module_flag(c_lambda, v);

    auto* c_tnc = app.add_subcommand(
        "tnc", "transpose of the (n-1)-st syzygy");
    add_common_flags(c_tnc, v);
    add_module_flag(c_tnc, v);
    add_dualizer_flag(c_tnc, v);
    c_tnc->add_option("--n", v.n, "transpose index, n >= 1");

    auto* c_dual = app.add_subcommand("dual", "dual against a dualizer");
    add_common_flags(c_dual, v);
    add_module_flag(c_dual, v);
    add_dualizer_flag(c_dual, v);

    auto* c_grade = app.add_subcommand("grade", "grade of a module");
    add_common_flags(c_grade, v);
    add_module_flag(c_grade, v);
    add_dualizer_flag(c_grade, v);

    auto* c_rgrade = app.add_subcommand("rgrade", "reduced grade");
    add_common_flags(c_rgrade, v);
    add_module_flag(c_rgrade, v);
    add_dualizer_flag(c_rgrade, v);

    auto* c_gcdim = app.add_subcommand("gcdim", "G-dimension");
    add_common_flags(c_gcdim, v);
    add_module_flag(c_gcdim, v);
    add_dualizer_flag(c_gcdim, v);

    auto* c_linkage =
        app.add_subcommand("linkage", "stability and horizontal linkage");
    add_common_flags(c_linkage, v);
    add_module_flag(c_linkage, v);

    auto* c_vsd = app.add_subcommand("verify-semidualizing",
                                     "semidualizing verification");
    add_common_flags(c_vsd, v);
    add_module_flag(c_vsd, v);

    auto* c_canonical =
        app.add_subcommand("canonical", "canonical module of a ring");
    add_common_flags(c_canonical, v);
    add_module_flag(c_canonical, v, false);
    c_canonical->add_option("--ring", v.ring_name, "ring name");

    auto* c_report = app.add_subcommand("report", "full invariant report");
    add_common_flags(c_report, v);
    add_module_flag(c_report, v);
    add_dualizer_flag(c_report, v);
    c_report->add_option("--k", v.k, "torsionless index");

    auto* c_verify = app.add_subcommand("verify", "run harness checks");
    add_common_flags(c_verify, v);
    add_module_flag(c_verify, v, false);
    add_dualizer_flag(c_verify, v);
    c_verify->add_flag("--all", v.all, "run every declared check");
    c_verify->add_option("--check", v.check_ids, "check id (repeatable)");
    c_verify->add_option("--n", v.n, "transpose index");
    c_verify->add_option("--k", v.k, "torsionless index");
    c_verify->add_option("--t", v.t, "auxiliary perfection offset");
    c_verify->add_option("--range", v.range, "cohomological range");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        res.exit = code == 0 ? 0 : 2;
        res.out = out.str();
        res.err = err.str();
        return res;
    }

    KnobGuard guard;
    if (v.degree_cap > 0) set_current_degree_cap(v.degree_cap);
    if (v.hilbert_bound > 0) set_hilbert_window_override(v.hilbert_bound);
    if (!v.cache_dir.empty())
        set_disk_cache_dir(v.cache_dir);
    else if (const char* env = std::getenv("GRMOD_CACHE_DIR"))
        set_disk_cache_dir(std::string(env));

    try {
        Loaded L = load_inputs(v);
        CLI::App* sub = app.get_subcommands().at(0);
        const std::string cmd = sub->get_name();
        if (cmd == "resolve") {
            res.exit = cmd_resolve(out, v, L);
        } else if (cmd == "ext" || cmd == "tor") {
            res.exit = cmd_derived_functor(out, v, L, cmd == "ext");
        } else if (cmd == "transpose") {
            const Presentation& M = pick_module(L.ws, v.module_name);
            Dualizer D =
                pick_dualizer(L.ws, v.dualizer_name, M.ring(), v.bound);
            res.exit = emit_module(out, v, L, cmd, v.module_name + "_tr",
                                   transpose(M, D));
        } else if (cmd == "lambda") {
            const Presentation& M = pick_module(L.ws, v.module_name);
            res.exit = emit_module(out, v, L, cmd, v.module_name + "_lambda",
                                   lambda_module(M));
        } else if (cmd == "tnc") {
            if (v.n < 1)
                throw ParseError("tnc requires n >= 1", 0, 0);
            const Presentation& M = pick_module(L.ws, v.module_name);
            Dualizer D =
                pick_dualizer(L.ws, v.dualizer_name, M.ring(), v.bound);
            res.exit = emit_module(
                out, v, L, cmd, v.module_name + "_tn" + std::to_string(v.n),
                iterated_transpose(M, D, v.n));
        } else if (cmd == "dual") {
            const Presentation& M = pick_module(L.ws, v.module_name);
            Dualizer D =
                pick_dualizer(L.ws, v.dualizer_name, M.ring(), v.bound);
            res.exit = emit_module(out, v, L, cmd, v.module_name + "_dual",
                                   minimal_presentation(dual_module(M, D)));
        } else if (cmd == "grade" || cmd == "rgrade" || cmd == "gcdim") {
            res.exit = cmd_value(out, v, L, cmd);
        } else if (cmd == "linkage") {
            res.exit = cmd_linkage(out, v, L);
        } else if (cmd == "verify-semidualizing") {
            res.exit = cmd_verify_semidualizing(out, v, L);
        } else if (cmd == "canonical") {
            res.exit = cmd_canonical(out, v, L);
        } else if (cmd == "report") {
            res.exit = cmd_report(out, v, L);
        } else if (cmd == "verify") {
            res.exit = cmd_verify(out, v, L);
        } else {
            err << "unknown command: " << cmd << "\n";
            res.exit = 2;
        }
    } catch (const DegreeCapError& e) {
        err << "error: " << e.what() << "\n";
        res.exit = 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        res.exit = 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        res.exit = 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        res.exit = 1;
    }

    res.out = out.str();
    res.err = err.str();
    return res;
}

} // namespace grmod
