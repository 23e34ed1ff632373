#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace braidlab {

using Integer = mpz_class;
using DenseMatrix = std::vector<std::vector<Integer>>;  // row-major

// Column-major sparse integer matrix; each column sorted by row, no zeros.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> columns;

    void add(int col, int row, std::int64_t value);  // accumulates
    void normalize();                                // sort + drop zeros
};

struct SmithResult {
    int rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
};

// Invariant factors via unit-pivot sparse elimination, then dense Smith form
// on whatever is left. Exact.
SmithResult smith(const SparseMatrix& m);
SmithResult smith(const DenseMatrix& m);

// Row-style Hermite normal form of the lattice spanned by the given vectors:
// echelon rows with positive pivots and reduced entries above each pivot.
DenseMatrix hermite_normal_form(const std::vector<std::vector<Integer>>& generators, int dim);

// Is v an integer combination of the HNF rows?
bool lattice_contains(const DenseMatrix& hnf, const std::vector<Integer>& v);

}  // namespace braidlab
