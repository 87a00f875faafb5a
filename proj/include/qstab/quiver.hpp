#pragma once
#include <string>
#include <utility>
#include <vector>

#include "qstab/scalar.hpp"

namespace qstab {

struct Arrow {
    int src = 0, tgt = 0;
    std::string name;
};

struct Quiver {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int nv() const { return int(vertices.size()); }
    int na() const { return int(arrows.size()); }
    int vertex(const std::string& v) const;
    /// Vertices ordered so every arrow goes forward; throws on a cycle.
    std::vector<int> topo_order() const;
    bool is_source(int v) const;
    bool is_sink(int v) const;
    friend bool operator==(const Quiver& a, const Quiver& b);
};

Quiver q1();
Quiver q2();
Quiver kronecker(int l);
/// "q1", "q2", "k3", ...
Quiver quiver_by_name(const std::string& name);

/// Classes in the fixed vertex order; negative entries allowed.
using DimVec = std::vector<long long>;

Z euler_form(const Quiver& q, const DimVec& d, const DimVec& e);

enum class RootType { Real, Imaginary, NotARoot };
const char* root_type_name(RootType t);
RootType root_type(const Quiver& q, const DimVec& d);
std::vector<std::pair<DimVec, RootType>> enumerate_roots(const Quiver& q, long long bound);

long long total(const DimVec& d);
DimVec add(const DimVec& a, const DimVec& b);
DimVec sub(const DimVec& a, const DimVec& b);
DimVec neg(const DimVec& a);
DimVec scale(long long s, const DimVec& a);
bool leq(const DimVec& a, const DimVec& b);
bool is_zero(const DimVec& a);
std::string dims_to_string(const DimVec& d);
DimVec parse_dims(const std::string& s);

}  // namespace qstab
