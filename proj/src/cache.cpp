#include "grmod/cache.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "grmod/module_ops.hpp"
#include "grmod/parse.hpp"

namespace grmod {

static std::optional<std::string> g_cache_dir;
static std::map<uint64_t, std::shared_ptr<ResolutionState>> g_states;

void set_disk_cache_dir(std::optional<std::string> dir) {
    g_cache_dir = std::move(dir);
}

const std::optional<std::string>& disk_cache_dir() { return g_cache_dir; }

void clear_resolution_memory() { g_states.clear(); }

static uint64_t state_key(const Presentation& M) {
    Fnv1a h;
    h.str(kToolVersion);
    h.u64(M.hash());
    h.i32(current_degree_cap());
    return h.value();
}

static std::filesystem::path state_path(const Presentation& M) {
    return std::filesystem::path(*g_cache_dir) /
           ("res-" + hex16(state_key(M)) + ".txt");
}

static std::string serialize_element(const ModuleElement& e) {
    std::string out;
    for (int i = 0; i < e.rank(); ++i) {
        if (i) out += ", ";
        out += e.comp(i).str();
    }
    return out;
}

static ModuleElement parse_element(const ContextPtr& ctx,
                                   const std::string& line, int rank) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : line) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    GRMOD_CHECK(static_cast<int>(parts.size()) == rank,
                "cached element has wrong arity");
    ModuleElement e(ctx, rank);
    for (int i = 0; i < rank; ++i) e.comp(i) = parse_poly(ctx, parts[i]);
    return e;
}

static void write_twists(std::ostream& os, const FreeModule& f) {
    os << f.rank();
    for (int t : f.twists) os << " " << t;
    os << "\n";
}

static FreeModule read_twists(std::istream& is) {
    int n = 0;
    is >> n;
    FreeModule f;
    f.twists.resize(n);
    for (int& t : f.twists) is >> t;
    is.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    return f;
}

static void save_state(const Presentation& M, const ResolutionState& st) {
    std::error_code ec;
    std::filesystem::create_directories(*g_cache_dir, ec);
    if (ec) return;
    std::filesystem::path final = state_path(M);
    std::filesystem::path tmp = final;
    tmp += ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) return;
        os << "resolution-cache " << kToolVersion << "\n";
        write_twists(os, st.minimal.cover());
        os << st.minimal.relations().size() << "\n";
        for (auto& r : st.minimal.relations())
            os << serialize_element(r) << "\n";
        os << st.maps.size() << " " << (st.complete ? 1 : 0) << "\n";
        for (auto& d : st.maps) {
            write_twists(os, d.source);
            for (auto& col : d.columns())
                os << serialize_element(col) << "\n";
        }
    }
    std::filesystem::rename(tmp, final, ec);
}

static std::shared_ptr<ResolutionState> load_state(const Presentation& M) {
    std::ifstream is(state_path(M));
    if (!is) return nullptr;
    const ContextPtr& ctx = M.ring()->ctx();
    try {
        std::string tag, version;
        is >> tag >> version;
        if (tag != "resolution-cache" || version != kToolVersion)
            return nullptr;
        is.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
        FreeModule cover = read_twists(is);
        size_t nrels = 0;
        is >> nrels;
        is.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
        std::vector<ModuleElement> rels;
        std::string line;
        for (size_t i = 0; i < nrels; ++i) {
            std::getline(is, line);
            rels.push_back(parse_element(ctx, line, cover.rank()));
        }
        auto st = std::make_shared<ResolutionState>();
        st->minimal = Presentation(M.ring(), cover, std::move(rels));
        size_t nmaps = 0;
        int complete = 0;
        is >> nmaps >> complete;
        is.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
        st->complete = complete != 0;
        FreeModule target = cover;
        for (size_t k = 0; k < nmaps; ++k) {
            FreeModule source = read_twists(is);
            std::vector<ModuleElement> cols;
            for (int j = 0; j < source.rank(); ++j) {
                std::getline(is, line);
                cols.push_back(parse_element(ctx, line, target.rank()));
            }
            st->maps.push_back(
                GradedMap::from_columns(M.ring(), source, target, cols));
            st->maps.back().validate();
            target = source;
        }
        if (!is) return nullptr;
        return st;
    } catch (const std::exception&) {
        return nullptr;
    }
}

std::shared_ptr<ResolutionState> resolution_state(const Presentation& M) {
    // Live states hold elements tied to one polynomial context, so the
    // in-process key includes the context identity; the disk path re-parses
    // into the caller's context and stays keyed by content alone.
    uint64_t key = state_key(M) ^
                   (0x9e3779b97f4a7c15ULL *
                    reinterpret_cast<uintptr_t>(M.ring()->ctx().get()));
    auto it = g_states.find(key);
    if (it != g_states.end()) return it->second;
    std::shared_ptr<ResolutionState> st;
    if (g_cache_dir) st = load_state(M);
    if (!st) {
        st = std::make_shared<ResolutionState>();
        st->minimal = minimal_presentation(M);
    }
    g_states.emplace(key, st);
    return st;
}

void persist_resolution_state(const Presentation& M,
                              const ResolutionState& st) {
    if (g_cache_dir) save_state(M, st);
}

} // namespace grmod
