#pragma once

#include "definetti/binary_moments.hpp"
#include "definetti/boxtest.hpp"
#include "definetti/groups.hpp"
#include "definetti/hausdorff.hpp"
#include "definetti/laws.hpp"
#include "definetti/mixture.hpp"
#include "definetti/semidefinite.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace definetti {

using json = nlohmann::json;

// Law format:
//   {"states":[...], "partition":[[1,2],[3]],
//    "orbits":{"<counts per class, '|'-separated>":"p/q"}}  or  {"table":{"<labels joined by ','>":"p/q"}}
// Rational values are strings "p/q" or plain integers.
ExchangeableLaw law_from_json(const json& j);
json law_to_json(const ExchangeableLaw& law);

// {"n":4, "x":["9/62",...]} (or "y" for a moment vector)
BinaryLawX binary_from_json(const json& j);
json binary_to_json(const BinaryLawX& law);

// {"atoms":[{"weight":"p/q","components":[["1/2","1/2"],...]},...]}
json mixture_to_json(const SignedMixture& mix);
SignedMixture mixture_from_json(const json& j, const StateSpace& space, const PartitionSpec& partition);

// {"atoms":[{"p":0.2,"w":0.5},...]}
json measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const json& j);

// {"n":4, "generators":[[2,1,3,4],...]} (1-based image notation)
std::pair<int, std::vector<Permutation>> generators_from_json(const json& j);

json matrix_to_json(const SymmetricMatrix& m);
json report_to_json(const ValidationReport& report);
json psd_verdict_to_json(const PsdVerdict& verdict);

Rat rational_from_json(const json& j);

} // namespace definetti
