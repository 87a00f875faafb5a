#pragma once
#include <optional>
#include <string>
#include <vector>

#include "qstab/catalog.hpp"

namespace qstab {

using Collection = std::vector<ExcObject>;

/// Nonzero hom^p(X, Y) as (p, dim), shifts included.
std::vector<std::pair<int, int>> hom_profile(const ExcObject& x, const ExcObject& y);

struct PairProfile {
    bool exceptional = false;  // hom^*(Y, X) = 0
    bool ext_pair = false;     // additionally hom^{<=0}(X, Y) = 0
    std::vector<std::pair<int, int>> forward, backward;
};
PairProfile pair_status(const ExcObject& x, const ExcObject& y);

bool is_exceptional_collection(const Collection& c);
bool is_ext_collection(const Collection& c);
std::string collection_to_string(const Collection& c);
std::string collection_to_json(const Collection& c);
Collection parse_collection(const std::string& quiver, const std::string& text);

/// Shift-zero exceptional collections of the given arity from catalog objects with parameter <= w.
std::vector<Collection> enumerate_collections(const std::string& quiver, int arity, int w);

/// Listed Q1 families instantiated with every parameter <= w (arity 2 or 3).
std::vector<Collection> listed_q1_collections(int arity, int w);
int listed_q1_family_count(int arity);

/// Catalog object whose class is +-c; parity 1 when the class is the negative.
struct Normalized {
    ExcObject object;
    int parity = 0;
};
Normalized normalize_class(const std::string& quiver, const DimVec& c, int window);

enum class Side { Left, Right };
/// Left: L_A(B) with class chi(A,B)[A] - [B]; right: R_B(A) with class chi(A,B)[B] - [A].
Normalized mutate(const ExcObject& a, const ExcObject& b, Side side);

/// Word tokens "L0", "L1", "R0", "R1" (generator acting on members i, i+1), separated by spaces or commas.
Collection braid_act(const std::string& word, const Collection& c);

struct PropertyResult {
    std::string name;
    bool applicable = true;
    bool pass = true;
    long long checked = 0;
    std::string witness;
};
struct CoupleReport {
    std::vector<std::pair<ExcObject, ExcObject>> couples;
    std::vector<PropertyResult> properties;
};
CoupleReport verify_global_properties(const std::string& quiver, int w);

/// Minimal-norm shift vector with p0 = 0 making c[p] an Ext collection; |p_i| <= 3.
std::vector<int> ext_shift_normalize(const Collection& c);
Collection apply_shifts(const Collection& c, const std::vector<int>& p);

/// Unique catalog object completing a pair to a full triple; missing in {0, 1, 2}.
ExcObject complete_pair_to_triple(const ExcObject& x, const ExcObject& y, int missing, int window = -1);

/// Whether the K-classes form a basis of the lattice.
bool classes_unimodular(const Collection& c);

}  // namespace qstab
