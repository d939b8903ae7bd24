#pragma once
#include <set>
#include <string>
#include <vector>

#include "grmod/free_module.hpp"

namespace grmod {

// Process-wide default for GBOptions::degree_cap, settable from the CLI.
int current_degree_cap();
void set_current_degree_cap(int cap);

struct GBOptions {
    int degree_cap = current_degree_cap();
    // When set, every S-pair is processed (Buchberger's criteria are not
    // applied) and the coordinates of each zero reduction are kept; the
    // collected vectors generate the syzygy module of the input generators.
    bool collect_syzygies = false;
    std::string diag_context;
};

// Groebner basis of the submodule generated by homogeneous elements of a
// twisted free module, with coordinate tracking relative to the input
// generators.  Pair selection is degree-minimal with (i, j) tie-break, so
// runs are deterministic; the public basis is reduced, monic and sorted
// descending by leading term.
class SubmoduleGB {
public:
    SubmoduleGB(ContextPtr ctx, FreeModule fm, std::vector<ModuleElement> gens,
                std::vector<int> gen_twists, GBOptions opts = {});

    const ContextPtr& ctx() const { return ctx_; }
    const FreeModule& ambient() const { return fm_; }
    int ngens() const { return static_cast<int>(gen_twists_.size()); }
    const std::vector<int>& gen_twists() const { return gen_twists_; }

    const std::vector<ModuleElement>& basis() const { return public_basis_; }

    ModuleElement nf(const ModuleElement& e) const;
    bool contains(const ModuleElement& e) const { return nf(e).is_zero(); }

    // Writes coords with e = sum_j coords[j] * gens[j]; false when e is not
    // in the submodule.
    bool lift(const ModuleElement& e, std::vector<Poly>& coords) const;

    const std::vector<ModuleElement>& syzygies() const;
    FreeModule syzygy_ambient() const { return FreeModule{gen_twists_}; }

    // True when the submodule is all of the ambient free module.
    bool is_whole_module() const;

    // Basis mode only: appends a generator (normal form is inserted when
    // nonzero) and re-saturates.  Returns false when the element was already
    // in the submodule.
    bool add_generator(const ModuleElement& g);

private:
    struct Elem {
        ModuleElement e;
        std::vector<Poly> coords;
        ModTerm lt;
        bool alive = true;
    };

    ContextPtr ctx_;
    FreeModule fm_;
    GBOptions opts_;
    std::vector<int> gen_twists_;
    std::vector<Elem> basis_;
    std::vector<ModuleElement> syzygies_;
    std::vector<ModuleElement> public_basis_;
    std::vector<int> public_index_; // basis_ indices sorted desc by LT
    std::set<std::tuple<int, int, int>> pending_;   // (degree, i, j)
    std::set<std::pair<int, int>> processed_;

    bool insert_generator(const ModuleElement& g, int gen_index);
    void push_pairs(int t);
    int pair_degree(int i, int j) const;
    void saturate();
    bool criteria_skip(int i, int j);
    // Reduces e fully against alive basis elements; coords_delta collects the
    // combination in generator coordinates that was subtracted.
    ModuleElement reduce(const ModuleElement& e,
                         std::vector<Poly>* gen_coords) const;
    void append_elem(ModuleElement e, std::vector<Poly> coords);
    void finalize();
    std::vector<Poly> padded(const std::vector<Poly>& coords) const;
    void add_coords(std::vector<Poly>& acc, const std::vector<Poly>& src,
                    const Poly& factor) const;
};

// Convenience: Groebner basis with twists inferred from generator degrees.
SubmoduleGB submodule_gb(ContextPtr ctx, const FreeModule& fm,
                         const std::vector<ModuleElement>& gens,
                         GBOptions opts = {});

} // namespace grmod
