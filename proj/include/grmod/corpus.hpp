#pragma once
#include <map>

#include "grmod/harness.hpp"
#include "grmod/parse.hpp"

namespace grmod {

// One `check` declaration from a corpus file.
struct CheckDecl {
    std::string id;
    std::string module_name;
    std::string dualizer_name;
    int n = 1;
    int k = 1;
    int t = 1;
    int range = 4;
    int bound = 0;
    int line = 0;
};

// How a named dualizer is built: the ring itself, the canonical module of a
// ring, or an explicitly presented module.
struct DualizerDecl {
    enum class Kind { Ring, Canonical, Module };
    std::string name;
    Kind kind = Kind::Ring;
    std::string arg;
    int line = 0;
};

// Everything declared across the loaded corpus files, in declaration order.
class Workspace {
public:
    void add_ring(const std::string& name, RingPtr R, int line);
    void add_module(const std::string& name, Presentation M, int line);
    void add_dualizer(DualizerDecl d);
    void add_check(CheckDecl c);

    const std::vector<std::string>& ring_names() const { return ring_order_; }
    const std::vector<std::string>& module_names() const {
        return module_order_;
    }
    const std::vector<DualizerDecl>& dualizer_decls() const {
        return dualizer_order_;
    }
    const std::vector<CheckDecl>& checks() const { return checks_; }

    bool has_ring(const std::string& name) const;
    bool has_module(const std::string& name) const;
    bool has_dualizer(const std::string& name) const;

    const RingPtr& ring(const std::string& name) const;
    const Presentation& module(const std::string& name) const;
    // Builds the dualizer on first use and memoizes it.
    const Dualizer& dualizer(const std::string& name);

    CheckRequest request(const CheckDecl& c);

private:
    std::vector<std::string> ring_order_;
    std::map<std::string, RingPtr> rings_;
    std::vector<std::string> module_order_;
    std::map<std::string, Presentation> modules_;
    std::vector<DualizerDecl> dualizer_order_;
    std::map<std::string, Dualizer> built_;
    std::vector<CheckDecl> checks_;
};

// Parses corpus text into the workspace; `filename` only labels errors.
void parse_corpus_text(Workspace& ws, const std::string& text,
                       const std::string& filename);
void parse_corpus_file(Workspace& ws, const std::string& path);

// Writes the workspace back out in the corpus format; parsing the result
// reproduces the same declarations.
std::string serialize_workspace(const Workspace& ws);

// One module block in the corpus format.
std::string serialize_module(const std::string& name, const Presentation& M,
                             const std::string& ring_name);

} // namespace grmod
