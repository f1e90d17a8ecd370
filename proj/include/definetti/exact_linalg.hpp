#pragma once

#include "definetti/rational.hpp"

#include <vector>

namespace definetti {

/// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
Int bareiss_det(IntMatrix m);

/// Determinants of the top-left k x k submatrices, k = 1..n.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

/// Solves a x = b exactly. Fraction-free forward elimination on the augmented
/// system (denominators of b cleared up front), rational back-substitution.
/// Throws std::domain_error when a is singular.
std::vector<Rat> solve_linear(const IntMatrix& a, const std::vector<Rat>& b);

IntMatrix transpose(const IntMatrix& m);

} // namespace definetti
