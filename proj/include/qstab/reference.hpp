#pragma once
#include <functional>
#include <string>
#include <vector>

#include "qstab/catalog.hpp"

namespace qstab {

/// Tabulated (hom, ext) for a pair of shift-zero catalog objects on q1 or q2.
/// Diagonal pairs of exceptional objects are (1, 0).
bool reference_hom_ext(const ExcObject& x, const ExcObject& y, HomExt& out);

struct TableDiff {
    std::string x, y;
    bool tabulated = false;
    HomExt expected, computed;
};

struct TableCheck {
    int pairs = 0;
    std::vector<TableDiff> diffs;
};

/// Compares every ordered catalog pair with parameters <= max_m.
TableCheck check_tables(const std::string& quiver, int max_m);

/// A space of matrix tuples cut out by linear equations sum c * L * U_k * R = 0.
struct MatrixTerm {
    Q coeff;
    MatQ left;
    int unknown = 0;
    MatQ right;
};
struct MatrixSpace {
    std::vector<std::pair<int, int>> shapes;
    std::vector<std::vector<MatrixTerm>> equations;
};
int matrix_space_dim(const MatrixSpace& s);

struct MatrixRow {
    int index = 0;
    std::string range;
    std::function<bool(int, int)> applies;
    std::function<int(int, int)> expected;
    std::function<MatrixSpace(int, int)> space;
    /// The q1 pair whose hom (or ext, when !is_hom) the row computes.
    std::function<std::pair<ExcObject, ExcObject>(int, int)> cross;
    bool is_hom = true;
};
std::vector<MatrixRow> matrix_rows();

struct MatrixRowResult {
    int row, m, n, expected, computed, cross;
};
std::vector<MatrixRowResult> check_matrix_rows(int max_index);

}  // namespace qstab
