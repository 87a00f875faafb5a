#pragma once
#include <string>
#include <vector>

#include "qstab/rep.hpp"

namespace qstab {

MatQ pi_plus(int m);
MatQ pi_minus(int m);
MatQ j_plus(int m);
MatQ j_minus(int m);

/// Catalog-indexed exceptional object with an integer shift.
/// Families: q1 E1..E4, M, M'; q2 E1..E8, F+, F-, G+, G-; k<l> "s" with index m in Z.
struct ExcObject {
    std::string quiver;
    std::string family;
    int m = 0;
    int shift = 0;

    bool parametric() const { return family.size() >= 2 && family[0] == 'E'; }
    bool kronecker() const { return family == "s"; }
    ExcObject shifted(int k) const {
        ExcObject o = *this;
        o.shift += k;
        return o;
    }
    /// Label without the shift, e.g. "E1:2", "M'", "s-1".
    std::string base_label() const;
    /// Label with a "[k]" suffix when k != 0.
    std::string label() const;
    friend bool operator==(const ExcObject& a, const ExcObject& b) {
        return a.quiver == b.quiver && a.family == b.family && a.m == b.m && a.shift == b.shift;
    }
    friend bool operator<(const ExcObject& a, const ExcObject& b);
};

ExcObject parse_object(const std::string& quiver, const std::string& text);

/// A representation together with the shift putting it in place: object = rep[shift].
struct Realized {
    Rep rep;
    int shift = 0;
};

Rep build_catalog_object(const std::string& quiver, const std::string& family, int m);
Realized realize(const ExcObject& x);
/// Class in K_0, shift included.
DimVec object_class(const ExcObject& x);

/// Shift-zero catalog objects with parameter <= w (Kronecker: indices -w..w+1).
std::vector<ExcObject> catalog_objects(const std::string& quiver, int w);
/// Family names in catalog order.
std::vector<std::string> catalog_families(const std::string& quiver);

/// Catalog object whose dimension vector equals d; searched up to parameter w.
bool find_by_dims(const std::string& quiver, const DimVec& d, int w, ExcObject& out);

}  // namespace qstab

namespace qstab {

struct HomExt {
    int hom = 0;
    int ext = 0;
    friend bool operator==(const HomExt& a, const HomExt& b) { return a.hom == b.hom && a.ext == b.ext; }
};

/// Memoized (hom, ext) of the underlying representations; shifts are ignored.
HomExt catalog_hom_ext(const ExcObject& x, const ExcObject& y);

/// hom^p(X, Y) in the derived category, shifts included.
int hom_degree(const ExcObject& x, const ExcObject& y, int p);
/// Sum over all degrees.
int hom_total(const ExcObject& x, const ExcObject& y);

}  // namespace qstab
