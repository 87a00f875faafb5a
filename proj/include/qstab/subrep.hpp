#pragma once
#include <map>
#include <set>

#include "qstab/rep.hpp"

namespace qstab {

constexpr int kDefaultOracleBudget = 10;

/// Number of arrow-invariant subspace tuples of e over F_p, grouped by dimension vector.
/// Throws CapacityError when the total dimension exceeds the budget.
std::map<DimVec, long long> subrep_dim_counts_fp(const Rep& e, int p, int budget = kDefaultOracleBudget);
std::set<DimVec> subrep_dims_fp(const Rep& e, int p, int budget = kDefaultOracleBudget);

/// Generic ext between dimension vectors (recursive formula for general representations).
long long generic_ext(const Quiver& q, const DimVec& a, const DimVec& b);
/// Whether a general representation of dimension b has a subrepresentation of dimension a.
bool generic_embeds(const Quiver& q, const DimVec& a, const DimVec& b);
/// Sub-dimension vectors of a general representation of dimension b; exact for exceptional objects.
std::set<DimVec> generic_sub_dims(const Quiver& q, const DimVec& b);

struct ExceptionalScan {
    long long scanned = 0;
    /// Representations with End = F_p; these are exactly the exceptional ones since <d,d> = 1.
    long long exceptional = 0;
    bool source_normalized = false, sink_normalized = false;
};

/// Scans every representation of dimension d over F_p (p in {2, 3}) up to the base change
/// at the source and sink vertices. Non-simple indecomposables are injective out of a source
/// and surjective into a sink, so only those joint maps are visited.
ExceptionalScan exceptional_scan_fp(const Quiver& q, const DimVec& d, int p);

}  // namespace qstab
