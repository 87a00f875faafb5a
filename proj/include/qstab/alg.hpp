#pragma once
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qstab/stability.hpp"

namespace qstab {

enum class CaseTag { C1, C2, C3, B1, B2 };
const char* case_name(CaseTag t);

enum class CheckStatus { Pass, Fail, NotCheckable };
const char* check_status_name(CheckStatus s);

struct CheckItem {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

using Theta = std::map<std::string, int>;

/// Stability data attached to a report: computed from a condition, or declared by a fixture.
struct DeclaredSigma {
    std::map<std::string, Theta> theta;         // keyed by role: E, U, A, A1, A2[-1]
    std::map<std::string, PhaseKey> phi_minus;  // same roles
    PhaseKey phi_v;
    bool v_semistable = true;
};

struct CaseReport {
    CaseTag tag = CaseTag::C1;
    bool computed = true;
    std::string fixture;
    ExcObject e;
    int degree = 0;
    FormalObject a, a1, a2, b0, b1;
    /// Left and lower vertices of the output triangle.
    FormalObject u, v;
    /// Last HN factor of E.
    FormalObject sigma_minus;
    std::optional<StabilityCondition> sigma;
    DeclaredSigma declared;
    std::vector<CheckItem> checklist;

    bool all_pass() const;
    int count(CheckStatus s) const;
};

/// Output triangle of the algorithm for a non-semistable exceptional object.
/// Throws DomainError if E is semistable, CapacityError if the HN filtration is undetermined.
CaseReport alg_classify(const StabilityCondition& sc, const ExcObject& e);

/// Same branch logic on supplied data; b0/b1 are the degree components of the last HN factor,
/// a1/a2 the kernel and cokernel of f0 (a when b0 = 0).
CaseReport alg_classify_symbolic(const std::string& name, const ExcObject& e, const FormalObject& a1,
                                 const FormalObject& a2, const FormalObject& b0, const FormalObject& b1,
                                 const DeclaredSigma& sigma);

/// Evaluates the numbered ledger of the report's case plus the common properties.
std::vector<CheckItem> verify_case(const CaseReport& r);

/// Named symbolic fixtures: "C3", "B1", "B2".
CaseReport fixture_report(const std::string& name);
std::vector<std::string> fixture_names();

struct RStep {
    std::string tag;  // C1, C2a, C2b, C3
    Summand s, e;
    ExcObject e_object;
    Theta theta_e;
};

struct RSequence {
    ExcObject origin;
    Theta theta_origin;
    std::vector<RStep> steps;
    std::string end;  // final | semistable-end | budget | irregular:<tag> | unlabelled
    std::vector<CheckItem> invariants;
};

/// Iterates the algorithm: maximal-phase S in V, non-semistable E in U preferred.
RSequence r_sequence(const StabilityCondition& sc, const ExcObject& r);

/// Random charge search for a computed instance of the tag: charges with small integer parts,
/// on the standard heart and the reflected hearts of the quiver; deterministic for a seed.
std::optional<CaseReport> find_computed_case(const std::string& quiver, CaseTag tag, uint64_t seed, int tries,
                                             int window);

/// Random charge with integer real and imaginary parts in the half plane.
std::vector<CQ> random_charge(int n, std::mt19937_64& rng, int range = 5);

std::string report_to_json(const CaseReport& r);
std::string rsequence_to_json(const RSequence& s);

/// hom^p between formal objects, shifts included.
int hom_p(const FormalObject& x, const FormalObject& y, int p);
int hom_star(const FormalObject& x, const FormalObject& y);
FormalObject shift_object(const FormalObject& x, int k);

}  // namespace qstab
