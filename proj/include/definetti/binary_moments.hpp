#pragma once

#include "definetti/hausdorff.hpp"
#include "definetti/laws.hpp"
#include "definetti/rational.hpp"
#include "definetti/semidefinite.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace definetti {

/// A {0,1}-valued exchangeable law of length n, encoded by the vector
/// x_i = P(X_1 = ... = X_i = 0, X_{i+1} = ... = X_n = 1), i = 0..n.
/// Valid iff all x_i >= 0 and sum_i C(n,i) x_i == 1.
struct BinaryLawX {
    int n = 0;
    std::vector<Rat> x;
};

/// y_i = sum_{j<=i} C(i,j) x_j; equals the (n-i)-th moment of any directing
/// measure. y_n == 1 for a normalized law.
struct MomentVectorY {
    int n = 0;
    std::vector<Rat> y;
};

struct HankelPair {
    int n = 0;
    SymmetricMatrix h;
    SymmetricMatrix k;
};

struct BinaryValidation {
    bool valid = false;
    Rat deficit;             // 1 - sum C(n,i) x_i
    std::vector<int> negative_indices;
};

BinaryValidation validate_binary(const BinaryLawX& law);

/// Scales x so that sum C(n,i) x_i == 1. Throws when the sum is 0 or negative.
BinaryLawX normalize_binary(const BinaryLawX& law);

MomentVectorY x_to_y(const BinaryLawX& law);
BinaryLawX y_to_x(const MomentVectorY& y);

/// Both sides of sum_{i=j}^{n-1} C(n,i) C(i,j) (-1)^i == C(n,j) (-1)^(n-1).
std::pair<Int, Int> binomial_identity(int n, int j);

/// The Hankel pair whose joint positive semi-definiteness characterizes true
/// mixtures of i.i.d. Bernoulli laws. Built from the x-formulas and
/// cross-checked against the moment (y-difference) construction.
HankelPair hankel_pair(const BinaryLawX& law);

struct MixtureVerdict {
    bool is_true_mixture = false;
    // NO path: principal-minor certificate (smallest failing leading minor
    // first, then smallest general one; H searched before K).
    char failing_matrix = 0; // 'H' or 'K'
    std::vector<int> minor_rows;
    Rat minor_det;
    // YES path: a representing measure recovered from the moments.
    std::optional<AtomicMeasure> measure;
    double recovery_residual = 0;
};

MixtureVerdict true_mixture_verdict(const BinaryLawX& law);

struct ReinforcementItem {
    int i = 0;
    Rat lhs; // x_i^2
    Rat rhs; // x_{i-1} x_{i+1}
    bool holds = false;
};

/// x_i^2 <= x_{i-1} x_{i+1} for i = 1..n-1 (squared form, exact).
std::vector<ReinforcementItem> reinforcement_check(const BinaryLawX& law);

/// For n = 4: the eight polynomial values whose joint nonnegativity is
/// equivalent to the true-mixture property.
std::array<Rat, 8> n4_inequalities(const BinaryLawX& law);

/// x = (9,5,3,...,3) / (3*2^n + 2n + 6): passes every reinforcement
/// inequality yet is not a true mixture. Requires n >= 4.
BinaryLawX counterexample(int n);

/// Lift to a full table on {0,1}^n with the single-class partition.
ExchangeableLaw law_from_binary(const BinaryLawX& law);

/// Inverse of law_from_binary; requires s = 2, k = 1 and an orbit-constant table.
BinaryLawX binary_from_law(const ExchangeableLaw& law);

/// Searches a non-PSD symmetric matrix for a negative principal minor:
/// leading minors by ascending size first, then general minors by (size, lex).
std::pair<std::vector<int>, Rat> find_negative_minor(const SymmetricMatrix& m);

/// Sufficient fast path: strictly positive leading principal minors of both
/// Hankel matrices certify the YES verdict by Sylvester's criterion. False
/// is inconclusive; the full test decides then.
bool leading_minors_strictly_positive(const HankelPair& pair);

} // namespace definetti
