#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "qstab/catalog.hpp"

namespace qstab {

/// An indecomposable summand X[shift], labelled when it matches a catalog object.
struct Summand {
    Rep rep;
    int shift = 0;
    std::optional<ExcObject> label;
};

struct FormalObject {
    std::vector<Summand> summands;
    bool zero() const { return summands.empty(); }
    /// K-class: sum of (-1)^shift dim.
    DimVec klass(int nv) const;
};

/// Indecomposable summands in a deterministic order.
/// Catalog exceptional summands are split off through the composition pairing,
/// the remainder by Fitting decomposition along endomorphisms with rational eigenvalues.
FormalObject decompose(const Rep& x, int shift = 0);

/// Whether End(x) is local; certified through the trace form.
bool is_local_endomorphism_ring(const Rep& x);

/// Random rational combination of a hom basis (deterministic for a seed).
RepMap random_element(const HomSpace& h, const Rep& x, const Rep& y, uint64_t seed);

/// Some element of Hom(x, e) injective at every vertex.
bool exists_mono(const Rep& x, const Rep& e, RepMap* witness = nullptr);
bool is_isomorphic(const Rep& x, const Rep& y, RepMap* witness = nullptr);

struct SesWitness {
    bool ok = false;
    RepMap mono, epi;
};
/// 0 -> a -> c -> b -> 0 exact for some mono a -> c whose cokernel is isomorphic to b.
SesWitness exact_sequence_witness(const Rep& a, const Rep& c, const Rep& b);

/// Catalog objects (shift zero) whose dimension vector fits inside d.
std::vector<ExcObject> catalog_objects_below(const Quiver& q, const DimVec& d);

}  // namespace qstab
