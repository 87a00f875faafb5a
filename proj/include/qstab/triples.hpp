#pragma once
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qstab/collections.hpp"
#include "qstab/stability.hpp"

namespace qstab {

struct MemberStatus {
    ExcObject object;
    Status semistable = Status::Undetermined;
    std::optional<PhaseKey> phase;
};

struct SigmaReport {
    Collection collection;
    std::vector<MemberStatus> members;
    /// hom^{<=0}(E_i, E_j) = 0 for all i != j; violations listed as "i,j,p".
    bool ext_ok = false;
    std::vector<std::string> violations;
    /// Window tests: max - min < 1, inside (t, t+1] with t = max - 1, inside [t, t+1) with t = min.
    bool window_diff = false, window_half_open_right = false, window_half_open_left = false;
    Status verdict = Status::Undetermined;
    /// Witness t for the interval (t, t+1], as an exact phase key string.
    std::string t_witness;
    int parameter = 0;
};

/// Checks the three defining conditions on the given condition.
SigmaReport validate_sigma_collection(const StabilityCondition& sc, const Collection& c);
std::string sigma_report_to_json(const SigmaReport& r);

/// hom^k(S_i, S_j) for unshifted members; only i < j is queried.
using HomOracle = std::function<int(int i, int j, int k)>;

struct ShiftNormalization {
    char rule = 0;                 // 'a'..'g', 0 when no rule matches
    std::array<int, 3> shifts{};   // (0, -i, -j)
    bool valid = false;            // shifted triple satisfies the window and vanishing conditions
};

/// Applies the first matching rule (a)-(g) to phases of S_0, S_1, S_2 and searches i, j >= 0.
ShiftNormalization normalize_shift_data(const std::array<PhaseKey, 3>& phi, const HomOracle& hom);
/// Same for an actual semistable exceptional triple; returns the shifted triple when valid.
std::optional<Collection> normalize_shifts(const StabilityCondition& sc, const Collection& t, ShiftNormalization* info = nullptr);

/// Listed Q1 triples with parameter <= w, first member unshifted, others shifted within [-range, range].
/// Ordered by parameter, then total |shift|, then labels.
std::vector<SigmaReport> enumerate_sigma_triples(const StabilityCondition& sc, int w, int range, bool first_only = false);

/// First pair (s_i, s_{i+1}) with shifts that is sigma-exceptional, scanning |i| <= window;
/// the overall shift places the larger phase in (0, 1]. Throws CapacityError when none is found.
SigmaReport kronecker_sigma_pair(int l, const StabilityCondition& sc, int window);

struct GrowthCheck {
    bool pass = true;
    std::vector<std::string> rows;  // "i: h1 h2 ..."
};
/// hom(s_i, s_{i+1}) = l and hom(s_i, s_{i+k}) strictly increasing in k = 1..depth, for |i| <= range.
GrowthCheck kronecker_growth(int l, int range, int depth);

}  // namespace qstab
