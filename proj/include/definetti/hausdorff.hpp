#pragma once

#include "definetti/rational.hpp"
#include "definetti/semidefinite.hpp"

#include <utility>
#include <vector>

namespace definetti {

/// Finitely supported measure on [0,1].
struct AtomicMeasure {
    struct Atom {
        double location = 0;
        double weight = 0;
    };
    std::vector<Atom> atoms;

    double total_weight() const;
};

/// m_i = sum_r w_r p_r^i for i = 0..n (0^0 == 1).
std::vector<double> moments_of(const AtomicMeasure& mu, int n);

/// x_i = sum_r w_r p_r^(n-i) (1-p_r)^i for i = 0..n.
std::vector<double> law_of(const AtomicMeasure& mu, int n);

struct RecoveryResult {
    bool feasible = false;
    AtomicMeasure measure;
    double max_residual = 0; // max_i |moment_i(measure) - m_i|
    int grid_points = 0;     // last grid size used
};

/// Reduced Hausdorff moment problem: finds an atomic measure on [0,1] whose
/// moments match m = (m_0..m_n) within tol.
///
/// Grid NNLS (G = 256 doubling to 8192), adjacent support clustered into
/// candidate atoms, then per-atom golden-section refinement of the locations
/// with the weights re-solved at every probe. Returns feasible = false when
/// the residual floor stays above tol at the finest grid.
RecoveryResult recover_measure(const std::vector<double>& m, double tol = 1e-9);

/// Same, for exact input: the Jurkat feasibility matrices are checked with
/// is_psd_exact first, and an infeasible vector is reported without running
/// the solver.
RecoveryResult recover_measure(const std::vector<Rat>& m, double tol = 1e-9);

/// Feasibility matrices of the truncated moment problem on [0,1]:
/// for even n, H[i][j] = m_{i+j} and K[i][j] = m_{i+j+1} - m_{i+j+2};
/// for odd n,  H[i][j] = m_{i+j+1} and K[i][j] = m_{i+j} - m_{i+j+1}.
/// A representing measure exists iff both are positive semi-definite.
std::pair<SymmetricMatrix, SymmetricMatrix> jurkat_matrices(const std::vector<Rat>& m);

namespace detail {

/// min ||A w - b||_2 subject to w >= 0, Lawson-Hanson active set with
/// lowest-index tie-breaking. `a` is row-major rows x cols.
struct NnlsResult {
    std::vector<double> weights;
    double residual_norm = 0;
    int iterations = 0;
};
NnlsResult nnls(const std::vector<double>& a, int rows, int cols, const std::vector<double>& b);

} // namespace detail

} // namespace definetti
