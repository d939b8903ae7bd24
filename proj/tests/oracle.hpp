#pragma once
// Degree-truncated linear-algebra oracle.  Everything here is computed with
// dense F_p matrices and monomial enumeration, independently of the Groebner
// engine, so the two paths can be compared on small inputs.
#include <map>
#include <utility>
#include <vector>

#include "grmod/free_module.hpp"

namespace grmod::oracle {

using Mat = std::vector<std::vector<uint32_t>>;

std::vector<Monomial> monomials_of_degree(const ContextPtr& ctx, int d);

// Ordered basis of the degree-d piece of a twisted free module.
struct BasisD {
    std::vector<std::pair<int, Monomial>> elems; // (component, monomial)
    std::map<std::pair<int, Monomial>, int> index;

    int dim() const { return static_cast<int>(elems.size()); }
};

BasisD basis_of_degree(const ContextPtr& ctx, const FreeModule& fm, int d);

std::vector<uint32_t> coords_of(const ModuleElement& e, const BasisD& basis);

// Columns are the degree-d monomial multiples of the generators.
Mat span_matrix(const ContextPtr& ctx, const FreeModule& fm,
                const std::vector<ModuleElement>& gens, int d);

// Matrix of the degree-d piece of the map with the given polynomial entries
// (rows indexed by target components).
Mat map_matrix(const ContextPtr& ctx, const FreeModule& src,
               const FreeModule& tgt,
               const std::vector<std::vector<Poly>>& entries, int d);

int rank(Mat m, const PrimeField& F);
Mat kernel_basis(const Mat& m, int ncols, const PrimeField& F);

// dim of (F / <gens>)_d.
int quotient_dim(const ContextPtr& ctx, const FreeModule& fm,
                 const std::vector<ModuleElement>& gens, int d);

bool member(const ContextPtr& ctx, const FreeModule& fm,
            const std::vector<ModuleElement>& gens, const ModuleElement& e);

// Quotient space N_d = (F0)_d / span(columns), with projection to quotient
// coordinates.
struct QuotientSpace {
    BasisD full;
    Mat reduced_span;            // row-echelon rows spanning the subspace
    std::vector<int> pivot_cols;
    std::vector<int> coset_cols; // non-pivot columns = quotient coordinates

    int dim() const { return static_cast<int>(coset_cols.size()); }
    std::vector<uint32_t> project(std::vector<uint32_t> v,
                                  const PrimeField& F) const;
};

QuotientSpace quotient_space(const ContextPtr& ctx, const FreeModule& fm,
                             const std::vector<ModuleElement>& gens, int d);

// dim of Ext^i(M, N) in internal degree d, computed from the resolution maps
// of M by truncated linear algebra.  res_maps[k] is d_{k+1}: F_{k+1} -> F_k
// as (source, target, entries); N is given by its cover and relation columns
// (including any defining-ideal columns).
struct FreeMap {
    FreeModule source;
    FreeModule target;
    std::vector<std::vector<Poly>> entries;
};

int ext_dim(const ContextPtr& ctx, const FreeModule& f0,
            const std::vector<FreeMap>& res_maps, const FreeModule& n_cover,
            const std::vector<ModuleElement>& n_rels, int i, int d);

} // namespace grmod::oracle
