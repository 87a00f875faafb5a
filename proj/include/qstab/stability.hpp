#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qstab/decompose.hpp"
#include "qstab/reflection.hpp"

namespace qstab {

enum class Status { Yes, No, Undetermined };
const char* status_name(Status s);

/// Phase degree + arg(dir)/pi with dir in the half plane; compared exactly.
struct PhaseKey {
    int degree = 0;
    CQ dir;
    double value() const { return degree + dir.arg_over_pi(); }
    std::string exact() const;
};
/// -1, 0, 1 as a is below, equal to, above b.
int compare(const PhaseKey& a, const PhaseKey& b);
inline bool operator<(const PhaseKey& a, const PhaseKey& b) { return compare(a, b) < 0; }
inline bool operator==(const PhaseKey& a, const PhaseKey& b) { return compare(a, b) == 0; }
/// phase(a) - phase(b) < 1
bool diff_below_one(const PhaseKey& a, const PhaseKey& b);

/// Which heart the charge lives on. A tilt at v is the image of the standard heart
/// of the reflected quiver under the inverse derived reflection functor.
struct Heart {
    enum Kind { Standard, SourceTilt, SinkTilt } kind = Standard;
    int vertex = -1;
    std::string name(const Quiver& q) const;
};
Heart parse_heart(const Quiver& q, const std::string& text);

struct StabilityCache;

/// A heart plus a charge on its simples, listed in the vertex order of the heart quiver.
class StabilityCondition {
public:
    StabilityCondition(Quiver ambient, Heart heart, std::vector<CQ> z);
    static StabilityCondition standard(const Quiver& q, const std::vector<CQ>& z) { return {q, Heart{}, z}; }

    const Quiver& ambient() const { return q_; }
    const Quiver& heart_quiver() const { return hq_; }
    const Heart& heart() const { return heart_; }
    const std::vector<CQ>& values() const { return z_; }
    StabilityCondition scaled(const Q& lambda) const;
    std::string describe() const;

    CQ heart_charge(const DimVec& heart_class) const;
    /// Class map K(ambient) -> K(heart quiver).
    DimVec to_heart_class(const DimVec& d) const;
    CQ charge(const DimVec& ambient_class) const { return heart_charge(to_heart_class(ambient_class)); }
    PhaseKey heart_phase(const DimVec& heart_dims, int heart_shift) const;

    /// Indecomposable ambient x[shift] as a heart representation with a heart shift.
    void to_heart(const Rep& x, int shift, Rep& y, int& heart_shift) const;
    /// Heart representation y[heart_shift] as an ambient formal object.
    FormalObject from_heart(const Rep& y, int heart_shift) const;
    /// Transport a heart map between heart representations with no summand at the tilt vertex
    /// back to ambient coordinates; source/target come back as ambient representations.
    RepMap map_from_heart(const Rep& y1, const Rep& y2, const RepMap& f, Rep& x1, Rep& x2) const;
    /// Heart representation of the tilt vertex simple (empty for the standard heart).
    bool is_tilt_simple(const Rep& y) const;

    std::shared_ptr<StabilityCache> cache() const { return cache_; }

private:
    Quiver q_, rq_, hq_;
    Heart heart_;
    std::vector<CQ> z_;
    QuiverIso to_hq_, from_hq_;
    std::shared_ptr<StabilityCache> cache_;
};

/// Parse "a+bi,c+di,..." into values.
std::vector<CQ> parse_charge(const std::string& text);

/// Semistability of a heart representation (any decomposition).
Status heart_semistable(const StabilityCondition& sc, const Rep& y);
/// Semistability of an ambient formal object.
Status is_semistable(const StabilityCondition& sc, const FormalObject& x);
Status is_semistable(const StabilityCondition& sc, const ExcObject& x);

struct HNFactor {
    FormalObject object;
    PhaseKey phase;
    Rep heart_rep;
    int heart_shift = 0;
};

struct HNResult {
    Status status = Status::Yes;
    std::vector<HNFactor> factors;
    /// For a single indecomposable input: heart source and the quotient map onto the last factor.
    bool has_last_map = false;
    Rep heart_source;
    int heart_shift = 0;
    RepMap last_map;
};

HNResult hn_filtration(const StabilityCondition& sc, const FormalObject& x);
HNResult hn_filtration(const StabilityCondition& sc, const ExcObject& x);

/// Phase of a semistable object; throws if x is not semistable.
PhaseKey phase_of(const StabilityCondition& sc, const FormalObject& x);
PhaseKey phase_of(const StabilityCondition& sc, const ExcObject& x);

/// theta: multiset of indecomposable summands over all HN factors, keyed by iso class.
std::map<std::string, int> theta(const StabilityCondition& sc, const FormalObject& x);
std::map<std::string, int> theta(const StabilityCondition& sc, const ExcObject& x);
int theta_mass(const std::map<std::string, int>& t);
/// Strict pointwise order: a <= b everywhere and a != b.
bool theta_less(const std::map<std::string, int>& a, const std::map<std::string, int>& b);
std::string summand_key(const Summand& s);
FormalObject object_formal(const ExcObject& x);

struct PhaseEntry {
    ExcObject object;
    Status semistable;
    PhaseKey phase;
};
struct PhaseStats {
    std::vector<PhaseEntry> entries;
    bool have_range = false;
    PhaseKey phi_min, phi_max;
    std::string min_label, max_label;
    CQ delta;
    double delta_phase = 0, minus_delta_phase = 0;
    /// Families semistable over the whole window whose phases move strictly monotonically toward arg(delta).
    std::vector<std::string> limit_families;
};
PhaseStats phase_stats(const StabilityCondition& sc, int window);

/// Values-preserving restriction of a charge on a collection to members i..j.
std::vector<CQ> restrict_charge(const std::vector<CQ>& z, int i, int j);

}  // namespace qstab
