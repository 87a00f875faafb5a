#pragma once
#include <string>
#include <vector>

#include "qstab/linalg.hpp"
#include "qstab/quiver.hpp"

namespace qstab {

/// A representation over Q: arrow a carries a dims[tgt] x dims[src] matrix.
struct Rep {
    Quiver q;
    std::vector<int> dims;
    std::vector<MatQ> mats;

    Rep() = default;
    Rep(Quiver quiver, std::vector<int> d);

    DimVec dimv() const;
    int total_dim() const;
    bool zero() const { return total_dim() == 0; }
    void check() const;
    friend bool operator==(const Rep& a, const Rep& b) { return a.q == b.q && a.dims == b.dims && a.mats == b.mats; }
};

/// Per-vertex linear maps f[v]: X_v -> Y_v.
struct RepMap {
    std::vector<MatQ> f;
};

/// Column bases of a subspace at each vertex.
using SubSpaces = std::vector<MatQ>;

Rep simple_rep(const Quiver& q, int v);
Rep direct_sum(const Rep& x, const Rep& y);
Rep direct_sum(const std::vector<Rep>& xs);
Rep relabel(const Rep& x, const Quiver& target, const std::vector<int>& vertex_map, const std::vector<int>& arrow_map);

bool is_morphism(const Rep& x, const Rep& y, const RepMap& f);
RepMap compose(const RepMap& g, const RepMap& f);
RepMap identity_map(const Rep& x);
RepMap zero_map(const Rep& x, const Rep& y);
RepMap combine(const std::vector<RepMap>& basis, const std::vector<Q>& coeffs);
bool is_injective(const RepMap& f);
bool is_surjective(const RepMap& f);
bool is_iso(const RepMap& f);

struct HomSpace {
    int dim = 0;
    std::vector<RepMap> basis;
};

/// Exact intertwiner space {f : f_t X_a = Y_a f_s}.
HomSpace hom_space(const Rep& x, const Rep& y);
/// Dimension only; large systems use a certified modular rank.
int hom_dim(const Rep& x, const Rep& y);
/// hom - euler form; throws InternalError if negative.
int ext_dim(const Rep& x, const Rep& y);
/// Ext^1 computed from the standard projective resolution of x.
int ext_dim_resolution(const Rep& x, const Rep& y);
bool is_exceptional_rep(const Rep& x);

/// Indecomposable projective at v: basis of P(v)_w is the set of paths v -> w.
Rep projective_rep(const Quiver& q, int v);

/// Subrepresentation spanned by bases that must be arrow invariant.
Rep restrict_rep(const Rep& x, const SubSpaces& sub, RepMap* inclusion);
/// Smallest subrepresentation containing the given generators.
SubSpaces closure(const Rep& x, const SubSpaces& gens);
bool is_invariant(const Rep& x, const SubSpaces& sub);
Rep quotient_rep(const Rep& x, const SubSpaces& sub, RepMap* projection);
Rep kernel_rep(const Rep& x, const RepMap& f, RepMap* inclusion);
Rep cokernel_rep(const Rep& y, const RepMap& f, RepMap* projection);
SubSpaces image_spaces(const RepMap& f);
DimVec sub_dims(const SubSpaces& s);

std::string rep_to_json(const Rep& x);
Rep rep_from_json(const std::string& text);

}  // namespace qstab
