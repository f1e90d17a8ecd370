#pragma once

#include "definetti/rational.hpp"

#include <utility>
#include <vector>

namespace definetti {

/// Dense symmetric matrix over exact rationals, row-major full storage.
struct SymmetricMatrix {
    int dim = 0;
    std::vector<Rat> entries;

    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int d) : dim(d), entries(static_cast<size_t>(d) * d) {}

    Rat& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
    const Rat& at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }

    bool is_symmetric() const;

    static SymmetricMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
};

/// Outcome of a positive-semidefiniteness test.
///
/// On failure the exact test emits a principal-minor certificate (1-based row
/// set with negative determinant); the float test emits a direction v with
/// v^T M v < 0. On success the exact test records its elimination pivots.
struct PsdVerdict {
    bool is_psd = false;
    std::vector<int> minor_rows;
    Rat minor_det;
    std::vector<double> witness;
    std::vector<std::pair<int, Rat>> pivots;
};

/// Exact verdict by symmetric Gaussian elimination on the first positive
/// diagonal pivot. A negative diagonal entry of the working matrix yields a
/// 1x1 certificate, a zero diagonal with a nonzero row entry a 2x2 one; both
/// are extended by the pivots eliminated so far and re-verified exactly.
PsdVerdict is_psd_exact(const SymmetricMatrix& m);

/// Approximate verdict: smallest eigenvalue >= -tol * max(1, |lambda|_max),
/// eigenvalues via cyclic Jacobi sweeps.
PsdVerdict is_psd_float(const SymmetricMatrix& m, double tol = 1e-10);

/// Exact determinant of the principal submatrix indexed by `rows` (1-based).
Rat principal_minor_det(const SymmetricMatrix& m, const std::vector<int>& rows);

SymmetricMatrix kron(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Eigenvalues of a symmetric matrix given in row-major order, ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int dim);

} // namespace definetti
