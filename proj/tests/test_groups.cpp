#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "definetti/groups.hpp"

#include <set>

using namespace definetti;

namespace {

// fixed-point closure over a std::set, independent of the BFS in the library
std::set<Permutation> brute_closure(const std::vector<Permutation>& gens, int n) {
    std::set<Permutation> all;
    all.insert(Permutation::identity(n));
    for (const auto& g : gens) all.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<Permutation> next = all;
        for (const auto& a : all)
            for (const auto& b : all)
                if (next.insert(compose(a, b)).second) grew = true;
        all = std::move(next);
    }
    return all;
}

} // namespace

TEST_CASE("closure of a transposition and of a 3-cycle") {
    auto t12 = parse_cycles("(1 2)", 3);
    auto closure = generate_group({t12}, 3);
    CHECK_FALSE(closure.overflow);
    CHECK(closure.elements.size() == 2);

    auto c123 = parse_cycles("(1 2 3)", 3);
    auto closure3 = generate_group({c123}, 3);
    CHECK(closure3.elements.size() == 3);
    CHECK(closure3.elements.size() == brute_closure({c123}, 3).size());

    auto trivial = generate_group({}, 2);
    CHECK(trivial.elements.size() == 1);
    CHECK(trivial.elements.front() == Permutation::identity(2));
}

TEST_CASE("closure cap produces an overflow result") {
    auto gens = std::vector<Permutation>{parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)};
    auto closure = generate_group(gens, 4, 10);
    CHECK(closure.overflow);
    auto full = generate_group(gens, 4, 24);
    CHECK_FALSE(full.overflow);
    CHECK(full.elements.size() == 24);
}

TEST_CASE("orbit partitions") {
    auto p = orbit_partition({parse_cycles("(1 2)", 3)}, 3);
    CHECK(p.classes == std::vector<std::vector<int>>{{1, 2}, {3}});

    auto p2 = orbit_partition({parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)}, 4);
    CHECK(p2.classes == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

    auto p3 = orbit_partition({parse_cycles("(1 2 3)", 3)}, 3);
    CHECK(p3.classes == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("classification against the product of symmetric groups") {
    auto r1 = classify({parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)}, 4);
    CHECK(r1.is_product);
    CHECK(r1.group_order == 4);
    CHECK(r1.partition.classes == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

    auto r2 = classify({parse_cycles("(1 2 3)", 3)}, 3);
    CHECK_FALSE(r2.is_product);
    CHECK(r2.group_order == 3);

    auto r3 = classify({parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3)}, 3);
    CHECK(r3.is_product);
    CHECK(r3.group_order == 6);
    CHECK(r3.partition.classes == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("is_product implies every within-class transposition is in the closure") {
    auto gens = std::vector<Permutation>{parse_cycles("(1 2)", 5), parse_cycles("(2 3)", 5),
                                         parse_cycles("(4 5)", 5)};
    auto report = classify(gens, 5);
    REQUIRE(report.is_product);
    auto closure = generate_group(gens, 5);
    std::set<Permutation> all(closure.elements.begin(), closure.elements.end());
    for (const auto& cls : report.partition.classes)
        for (size_t a = 0; a < cls.size(); ++a)
            for (size_t b = a + 1; b < cls.size(); ++b) {
                Permutation t = Permutation::identity(5);
                std::swap(t.image[static_cast<size_t>(cls[a] - 1)],
                          t.image[static_cast<size_t>(cls[b] - 1)]);
                CHECK(all.count(t) == 1);
            }
}

TEST_CASE("orbit partition is the finest one whose symmetric-group product contains the generators") {
    // every generator must keep each class invariant
    auto gens = std::vector<Permutation>{parse_cycles("(1 3)(2 4)", 5), parse_cycles("(1 3)", 5)};
    auto p = orbit_partition(gens, 5);
    for (const auto& g : gens)
        for (const auto& cls : p.classes)
            for (int i : cls) {
                int img = g.image[static_cast<size_t>(i - 1)] + 1;
                CHECK(std::find(cls.begin(), cls.end(), img) != cls.end());
            }
    CHECK(p.classes == std::vector<std::vector<int>>{{1, 3}, {2, 4}, {5}});
}

TEST_CASE("cycle parsing") {
    auto p = parse_cycles("(1 2)(3 4)", 4);
    CHECK(p.image == std::vector<int>{1, 0, 3, 2});
    CHECK(cycle_string(p) == "(1 2)(3 4)");
    CHECK(parse_cycles("", 3) == Permutation::identity(3));
    CHECK(parse_cycles("(1 2 3)", 3).image == std::vector<int>{1, 2, 0});
    CHECK_THROWS_AS(parse_cycles("(1 5)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(1 1)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("1 2", 3), std::invalid_argument);
}

TEST_CASE("json-style image notation round trip") {
    Permutation p;
    p.image = {1, 0, 2};
    CHECK_NOTHROW(p.check());
    Permutation bad;
    bad.image = {0, 0, 2};
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);
}
