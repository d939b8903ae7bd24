#include "grmod/corpus.hpp"

#include <fstream>
#include <sstream>

#include "grmod/invariants.hpp"

namespace grmod {

void Workspace::add_ring(const std::string& name, RingPtr R, int line) {
    if (rings_.count(name))
        throw ParseError("duplicate ring name", line, 1, name);
    ring_order_.push_back(name);
    rings_[name] = std::move(R);
}

void Workspace::add_module(const std::string& name, Presentation M,
                           int line) {
    if (modules_.count(name))
        throw ParseError("duplicate module name", line, 1, name);
    module_order_.push_back(name);
    modules_[name] = std::move(M);
}

void Workspace::add_dualizer(DualizerDecl d) {
    if (has_dualizer(d.name))
        throw ParseError("duplicate dualizer name", d.line, 1, d.name);
    dualizer_order_.push_back(std::move(d));
}

void Workspace::add_check(CheckDecl c) { checks_.push_back(std::move(c)); }

bool Workspace::has_ring(const std::string& name) const {
    return rings_.count(name) != 0;
}

bool Workspace::has_module(const std::string& name) const {
    return modules_.count(name) != 0;
}

bool Workspace::has_dualizer(const std::string& name) const {
    for (auto& d : dualizer_order_)
        if (d.name == name) return true;
    return false;
}

const RingPtr& Workspace::ring(const std::string& name) const {
    auto it = rings_.find(name);
    if (it == rings_.end())
        throw std::invalid_argument("unknown ring: " + name);
    return it->second;
}

const Presentation& Workspace::module(const std::string& name) const {
    auto it = modules_.find(name);
    if (it == modules_.end())
        throw std::invalid_argument("unknown module: " + name);
    return it->second;
}

const Dualizer& Workspace::dualizer(const std::string& name) {
    auto it = built_.find(name);
    if (it != built_.end()) return it->second;
    for (auto& d : dualizer_order_) {
        if (d.name != name) continue;
        Dualizer dz;
        switch (d.kind) {
        case DualizerDecl::Kind::Ring:
            dz = ring_dualizer(ring(d.arg));
            break;
        case DualizerDecl::Kind::Canonical: {
            const RingPtr& R = ring(d.arg);
            dz = canonical_dualizer(R, ring_depth(R) + 1);
            break;
        }
        case DualizerDecl::Kind::Module: {
            const Presentation& C = module(d.arg);
            dz = module_dualizer(C, d.name, ring_depth(C.ring()) + 1);
            break;
        }
        }
        return built_.emplace(name, std::move(dz)).first->second;
    }
    throw std::invalid_argument("unknown dualizer: " + name);
}

CheckRequest Workspace::request(const CheckDecl& c) {
    CheckRequest req;
    req.M = module(c.module_name);
    req.C = dualizer(c.dualizer_name);
    req.n = c.n;
    req.k = c.k;
    req.t = c.t;
    req.range = c.range;
    req.bound = c.bound;
    return req;
}

namespace {

struct Line {
    int no = 0;
    std::string text;                 // comment-stripped, trimmed
    std::vector<std::string> tokens;
};

std::string strip(const std::string& raw) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// Reader over the significant lines of one file.
struct Cursor {
    std::vector<Line> lines;
    size_t pos = 0;
    std::string file;

    bool done() const { return pos >= lines.size(); }
    const Line& peek() const { return lines[pos]; }
    Line take() { return lines[pos++]; }

    [[noreturn]] void err(const std::string& msg, int line,
                          const std::string& token = "") const {
        throw ParseError(file + ": " + msg, line, 1, token);
    }
};

int to_int(const Cursor& cur, const std::string& tok, int line) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        cur.err("expected an integer", line, tok);
    }
}

void parse_ring(Workspace& ws, Cursor& cur, const Line& head) {
    if (head.tokens.size() != 2)
        cur.err("expected: ring <name>", head.no);
    std::string name = head.tokens[1];
    int p = 0;
    std::vector<std::string> vars;
    std::vector<int> weights;
    std::vector<std::pair<std::string, int>> ideal_src;
    bool in_ideal = false;
    bool closed = false;
    while (!cur.done()) {
        Line l = cur.take();
        if (l.tokens[0] == "end") {
            closed = true;
            break;
        }
        if (in_ideal) {
            ideal_src.emplace_back(l.text, l.no);
            continue;
        }
        const std::string& key = l.tokens[0];
        if (key == "char") {
            if (l.tokens.size() != 2)
                cur.err("expected: char <prime>", l.no);
            p = to_int(cur, l.tokens[1], l.no);
        } else if (key == "vars") {
            vars.assign(l.tokens.begin() + 1, l.tokens.end());
        } else if (key == "weights") {
            for (size_t i = 1; i < l.tokens.size(); ++i)
                weights.push_back(to_int(cur, l.tokens[i], l.no));
        } else if (key == "ideal") {
            in_ideal = true;
        } else {
            cur.err("unexpected line in ring block", l.no, key);
        }
    }
    if (!closed) cur.err("ring block is missing its end", head.no);
    if (p <= 1) cur.err("ring block needs a char line", head.no, name);
    if (vars.empty()) cur.err("ring block needs a vars line", head.no, name);
    if (!weights.empty() && weights.size() != vars.size())
        cur.err("weights do not match the variables", head.no, name);
    ContextPtr ctx = make_context(static_cast<uint32_t>(p), vars, weights);
    std::vector<Poly> gens;
    for (auto& [src, no] : ideal_src) gens.push_back(parse_poly(ctx, src, no));
    RingPtr R = gens.empty() ? GradedRing::polynomial(ctx)
                             : GradedRing::quotient(ctx, gens);
    ws.add_ring(name, R, head.no);
}

void parse_module(Workspace& ws, Cursor& cur, const Line& head) {
    if (head.tokens.size() != 4 || head.tokens[2] != "over")
        cur.err("expected: module <name> over <ring>", head.no);
    std::string name = head.tokens[1];
    const RingPtr* Rp = nullptr;
    if (!ws.has_ring(head.tokens[3]))
        cur.err("unknown ring", head.no, head.tokens[3]);
    Rp = &ws.ring(head.tokens[3]);
    const RingPtr& R = *Rp;

    FreeModule cover;
    bool have_cover = false;
    std::vector<ModuleElement> rels;
    bool in_rels = false;
    bool closed = false;
    while (!cur.done()) {
        Line l = cur.take();
        if (l.tokens[0] == "end") {
            closed = true;
            break;
        }
        if (in_rels) {
            std::vector<std::string> parts;
            std::string cell;
            std::istringstream is(l.text);
            while (std::getline(is, cell, ',')) parts.push_back(cell);
            if (static_cast<int>(parts.size()) != cover.rank())
                cur.err("relation width does not match the cover", l.no);
            ModuleElement e(R->ctx(), cover.rank());
            for (int i = 0; i < cover.rank(); ++i)
                e.comp(i) = parse_poly(R->ctx(), parts[i], l.no);
            rels.push_back(std::move(e));
            continue;
        }
        const std::string& key = l.tokens[0];
        if (key == "cover") {
            for (size_t i = 1; i < l.tokens.size(); ++i)
                cover.twists.push_back(to_int(cur, l.tokens[i], l.no));
            have_cover = true;
        } else if (key == "relations") {
            if (!have_cover)
                cur.err("relations before the cover line", l.no);
            in_rels = true;
        } else {
            cur.err("unexpected line in module block", l.no, key);
        }
    }
    if (!closed) cur.err("module block is missing its end", head.no);
    if (!have_cover) cur.err("module block needs a cover line", head.no);
    ws.add_module(name, Presentation(R, cover, rels), head.no);
}

void parse_dualizer(Workspace& ws, Cursor& cur, const Line& head) {
    auto& t = head.tokens;
    DualizerDecl d;
    d.line = head.no;
    if (t.size() >= 4 && t[2] == "=") d.name = t[1];
    if (t.size() == 6 && t[3] == "R" && t[4] == "over") {
        d.kind = DualizerDecl::Kind::Ring;
        d.arg = t[5];
    } else if (t.size() == 6 && t[3] == "canonical" && t[4] == "over") {
        d.kind = DualizerDecl::Kind::Canonical;
        d.arg = t[5];
    } else if (t.size() == 5 && t[3] == "module") {
        d.kind = DualizerDecl::Kind::Module;
        d.arg = t[4];
    } else {
        cur.err("expected: dualizer <name> = R over <ring> | canonical over "
                "<ring> | module <module>",
                head.no);
    }
    if (d.kind == DualizerDecl::Kind::Module) {
        if (!ws.has_module(d.arg)) cur.err("unknown module", head.no, d.arg);
    } else if (!ws.has_ring(d.arg)) {
        cur.err("unknown ring", head.no, d.arg);
    }
    ws.add_dualizer(std::move(d));
}

void parse_check(Workspace& ws, Cursor& cur, const Line& head) {
    auto& t = head.tokens;
    if (t.size() < 2) cur.err("expected: check <id> ...", head.no);
    CheckDecl c;
    c.id = t[1];
    c.line = head.no;
    if (!harness_has_check(c.id)) cur.err("unknown check id", head.no, c.id);
    for (size_t i = 2; i + 1 < t.size(); i += 2) {
        const std::string& key = t[i];
        const std::string& val = t[i + 1];
        if (key == "module")
            c.module_name = val;
        else if (key == "dualizer")
            c.dualizer_name = val;
        else if (key == "n")
            c.n = to_int(cur, val, head.no);
        else if (key == "k")
            c.k = to_int(cur, val, head.no);
        else if (key == "t")
            c.t = to_int(cur, val, head.no);
        else if (key == "range")
            c.range = to_int(cur, val, head.no);
        else if (key == "bound")
            c.bound = to_int(cur, val, head.no);
        else
            cur.err("unknown check parameter", head.no, key);
    }
    if (t.size() % 2 != 0)
        cur.err("check parameters come in key value pairs", head.no);
    if (c.module_name.empty())
        cur.err("check needs a module", head.no, c.id);
    if (c.dualizer_name.empty())
        cur.err("check needs a dualizer", head.no, c.id);
    if (!ws.has_module(c.module_name))
        cur.err("unknown module", head.no, c.module_name);
    if (!ws.has_dualizer(c.dualizer_name))
        cur.err("unknown dualizer", head.no, c.dualizer_name);
    ws.add_check(std::move(c));
}

} // namespace

void parse_corpus_text(Workspace& ws, const std::string& text,
                       const std::string& filename) {
    Cursor cur;
    cur.file = filename;
    std::istringstream is(text);
    std::string raw;
    int no = 0;
    while (std::getline(is, raw)) {
        ++no;
        std::string s = strip(raw);
        if (s.empty()) continue;
        cur.lines.push_back({no, s, split_ws(s)});
    }
    while (!cur.done()) {
        Line head = cur.take();
        const std::string& kw = head.tokens[0];
        if (kw == "ring")
            parse_ring(ws, cur, head);
        else if (kw == "module")
            parse_module(ws, cur, head);
        else if (kw == "dualizer")
            parse_dualizer(ws, cur, head);
        else if (kw == "check")
            parse_check(ws, cur, head);
        else
            cur.err("expected ring, module, dualizer, or check", head.no,
                    kw);
    }
}

void parse_corpus_file(Workspace& ws, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open corpus file", 0, 1, path);
    std::ostringstream buf;
    buf << in.rdbuf();
    parse_corpus_text(ws, buf.str(), path);
}

std::string serialize_module(const std::string& name, const Presentation& M,
                             const std::string& ring_name) {
    std::ostringstream os;
    os << "module " << name << " over " << ring_name << "\n";
    os << "cover";
    for (int t : M.cover().twists) os << " " << t;
    os << "\n";
    os << "relations\n";
    for (auto& r : M.relations()) {
        for (int i = 0; i < r.rank(); ++i) {
            if (i) os << ", ";
            os << r.comp(i).str();
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

std::string serialize_workspace(const Workspace& ws) {
    std::ostringstream os;
    Workspace& mws = const_cast<Workspace&>(ws);
    for (auto& name : ws.ring_names()) {
        const RingPtr& R = mws.ring(name);
        const auto& ctx = R->ctx();
        os << "ring " << name << "\n";
        os << "char " << ctx->field().p() << "\n";
        os << "vars";
        for (auto& v : ctx->vars()) os << " " << v;
        os << "\n";
        os << "weights";
        for (int w : ctx->weights()) os << " " << w;
        os << "\n";
        os << "ideal\n";
        for (auto& f : R->ideal()) os << f.str() << "\n";
        os << "end\n\n";
    }
    for (auto& name : ws.module_names()) {
        const Presentation& M = mws.module(name);
        std::string rname;
        for (auto& rn : ws.ring_names())
            if (same_ring(mws.ring(rn), M.ring())) rname = rn;
        os << serialize_module(name, M, rname) << "\n";
    }
    for (auto& d : ws.dualizer_decls()) {
        os << "dualizer " << d.name << " = ";
        switch (d.kind) {
        case DualizerDecl::Kind::Ring: os << "R over " << d.arg; break;
        case DualizerDecl::Kind::Canonical:
            os << "canonical over " << d.arg;
            break;
        case DualizerDecl::Kind::Module: os << "module " << d.arg; break;
        }
        os << "\n";
    }
    if (!ws.dualizer_decls().empty()) os << "\n";
    for (auto& c : ws.checks()) {
        os << "check " << c.id << " module " << c.module_name
           << " dualizer " << c.dualizer_name << " n " << c.n << " k "
           << c.k << " t " << c.t << " range " << c.range << " bound "
           << c.bound << "\n";
    }
    return os.str();
}

} // namespace grmod
