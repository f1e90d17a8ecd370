#pragma once

#include "definetti/exact_linalg.hpp"
#include "definetti/laws.hpp"
#include "definetti/rational.hpp"

#include <vector>

namespace definetti {

/// One product-measure atom of a signed mixture: per class j a probability
/// vector over S whose entries are multiples of 1/n_j, with a (possibly
/// negative) exact weight.
struct SignedMixtureAtom {
    std::vector<std::vector<Rat>> components;
    Rat weight;
};

struct SignedMixture {
    std::vector<SignedMixtureAtom> atoms;
    PartitionSpec partition;
    StateSpace space;
};

/// All per-class composition tuples (stars and bars, componentwise), classes
/// nested outer to inner, each class enumerated with the first state count
/// descending. Guard: prod_j C(n_j+s-1, s-1) <= 10^6.
std::vector<CompositionTuple> enumerate_compositions(const PartitionSpec& partition,
                                                     const StateSpace& space);

/// M[i][j] = orbit_size(L[j]) * L[i]^L[j], with a^b the componentwise power
/// product (0^0 == 1). Nonsingular: it is the Kronecker product over classes
/// of scaled Bernstein collocation matrices, whose eigenvalues are positive.
IntMatrix coefficient_matrix(const std::vector<CompositionTuple>& compositions);

/// The signed directing measure of a partially exchangeable law: expresses
/// each orbit-uniform distribution in the product-measure basis (one exact
/// Bareiss solve of the transposed coefficient system against the orbit
/// masses) and emits one atom per composition, weight scaled by
/// prod_j n_j^n_j. The weights sum to 1 exactly and the mixture reproduces
/// the law at every point of S^n.
SignedMixture signed_mixture(const ExchangeableLaw& law);

/// Mass the mixture assigns to a single point.
Rat evaluate_mixture(const SignedMixture& mix, const std::vector<int>& point);

/// Exact pointwise equality of the mixture and the law over all of S^n.
bool verify_representation(const ExchangeableLaw& law, const SignedMixture& mix);

/// Total mass of the negative part: -sum of negative weights.
Rat negative_mass(const SignedMixture& mix);

inline constexpr size_t kMaxCompositions = 1'000'000;

} // namespace definetti
