#pragma once

#include "definetti/laws.hpp"
#include "definetti/rational.hpp"
#include "definetti/semidefinite.hpp"

#include <utility>
#include <vector>

namespace definetti {

/// Square matrix of product events over a common class structure.
struct EventMatrix {
    int dim = 0;
    std::vector<ProductEvent> entries; // row-major

    ProductEvent& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
    const ProductEvent& at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
};

/// Kronecker-structured combination of one event matrix per class: entry
/// multiplication is replaced by concatenating the per-class events into one
/// product event. Composite indices are row-major over the class order.
EventMatrix box_product(const std::vector<EventMatrix>& per_class);

/// Per class j: half-order m_j (2 m_j <= n_j), head set A_j and a tail event
/// B_j of arity n_j - 2 m_j.
struct BoxClassSpec {
    int m = 0;
    std::vector<int> head_states;
    TailEvent tail;
};

struct BoxTestSpec {
    std::vector<BoxClassSpec> classes;
};

/// The (m_j+1)x(m_j+1) per-class matrices with (r,c) entry
/// A_j^(2m_j-r-c+2) x S^(r+c-2) x B_j, box-combined and mapped through the
/// law's probabilities. Exactly symmetric for class-exchangeable laws
/// (checked postcondition).
SymmetricMatrix necessary_matrix(const ExchangeableLaw& law, const BoxTestSpec& spec);

/// PSD is necessary for the law to be a true mixture of class-i.i.d. product
/// laws; a failing certificate proves it is not one.
PsdVerdict necessary_condition_check(const ExchangeableLaw& law, const BoxTestSpec& spec);

struct ScanResult {
    std::vector<std::pair<BoxTestSpec, PsdVerdict>> entries;
    bool any_failure = false;
};

/// Enumerates all specs with A_j over every subset of S and B_j over FULL,
/// singleton tails and unions of up to max_tail_points tail points, in
/// deterministic order. Guard: at most 10^5 specs.
ScanResult scan_specs(const ExchangeableLaw& law, int max_tail_points = 1);

inline constexpr size_t kMaxScanSpecs = 100'000;

struct ConditionalReinforcement {
    Rat lhs; // P(X1 in A | X2 in A, rest in B)
    Rat rhs; // P(X2 in A | rest in B)
    bool holds = false;
    bool undefined = false; // a conditioning event has probability 0
};

/// Single-class laws only (k = 1, n >= 2).
ConditionalReinforcement conditional_reinforcement(const ExchangeableLaw& law,
                                                   const std::vector<int>& head_states,
                                                   const TailEvent& tail);

} // namespace definetti
