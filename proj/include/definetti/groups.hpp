#pragma once

#include "definetti/laws.hpp"
#include "definetti/rational.hpp"

#include <string>
#include <vector>

namespace definetti {

/// Permutation of {1..n} in image notation; image[i] is the 0-based image of
/// coordinate i.
struct Permutation {
    std::vector<int> image;

    int degree() const { return static_cast<int>(image.size()); }
    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return image < o.image; }

    static Permutation identity(int n);
    void check() const; // bijection
};

Permutation compose(const Permutation& a, const Permutation& b); // a after b

/// Breadth-first closure of the generated group, elements in discovery order.
struct ClosureResult {
    bool overflow = false;   // closure exceeded the cap; elements incomplete
    std::vector<Permutation> elements;
};

ClosureResult generate_group(const std::vector<Permutation>& gens, int n, size_t cap = 1'000'000);

/// Orbits of {1..n} under the generated group, classes sorted by least element.
PartitionSpec orbit_partition(const std::vector<Permutation>& gens, int n);

struct GroupReport {
    bool overflow = false;
    Int group_order;
    PartitionSpec partition;
    bool is_product = false; // order == prod_j n_j! over orbit classes
};

GroupReport classify(const std::vector<Permutation>& gens, int n, size_t cap = 1'000'000);

/// Parses cycle notation like "(1 2)(3 4)"; cycles are applied left to right.
/// An empty string yields the identity.
Permutation parse_cycles(const std::string& text, int n);

std::string cycle_string(const Permutation& p);

} // namespace definetti
