#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

#include "definetti/laws.hpp"

#include <algorithm>

using namespace definetti;
using testutil::contiguous_partition;
using testutil::state_space;

namespace {

ExchangeableLaw uniform_law_2x2() {
    ExchangeableLaw law;
    law.space = state_space(2);
    law.partition = PartitionSpec::single_class(2);
    law.table = {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)};
    return law;
}

ExchangeableLaw antithetic_law() {
    // mass 1/2 on each of 01 and 10
    ExchangeableLaw law;
    law.space = state_space(2);
    law.partition = PartitionSpec::single_class(2);
    law.table = {0, Rat(1, 2), Rat(1, 2), 0};
    return law;
}

} // namespace

TEST_CASE("validate accepts the uniform and antithetic laws") {
    CHECK(validate(uniform_law_2x2()).valid());
    CHECK(validate(antithetic_law()).valid());
}

TEST_CASE("validate reports orbit non-constancy with the transposition and point pair") {
    ExchangeableLaw law;
    law.space = state_space(2);
    law.partition = PartitionSpec::single_class(2);
    law.table = {Rat(1, 2), Rat(1, 2), 0, 0}; // 00:1/2, 01:1/2, 10:0, 11:0
    auto report = validate(law);
    CHECK_FALSE(report.valid());
    REQUIRE(report.violations.size() == 1);
    const auto& v = report.violations.front();
    CHECK(v.kind == ValidationReport::Kind::orbit_mismatch);
    CHECK(v.coord_a == 1);
    CHECK(v.coord_b == 2);
    CHECK(v.point_a == std::vector<int>{0, 1});
    CHECK(v.point_b == std::vector<int>{1, 0});
}

TEST_CASE("validate reports negativity and the normalization deficit") {
    ExchangeableLaw law;
    law.space = state_space(2);
    law.partition = PartitionSpec::single_class(1);
    law.table = {Rat(-1, 4), Rat(1, 2)};
    auto report = validate(law);
    CHECK(report.total_violations == 2);
    CHECK(report.total_mass == Rat(1, 4));
}

TEST_CASE("orbit statistic examples") {
    auto p2 = contiguous_partition({2, 2});
    auto c = orbit_statistic({0, 1, 1, 0}, p2, 2);
    CHECK(c.counts == std::vector<std::vector<int>>{{1, 1}, {1, 1}});

    auto p1 = contiguous_partition({3});
    CHECK(orbit_statistic({1, 1, 1}, p1, 2).counts == std::vector<std::vector<int>>{{0, 3}});

    // (a,b,a) over {a,b}, classes {1},{2,3}
    auto p3 = contiguous_partition({1, 2});
    CHECK(orbit_statistic({0, 1, 0}, p3, 2).counts == std::vector<std::vector<int>>{{1, 0}, {1, 1}});

    CHECK_THROWS_AS(orbit_statistic({0, 1}, p1, 2), std::invalid_argument);
}

TEST_CASE("orbit sizes") {
    CHECK(orbit_size(CompositionTuple{{{1, 1}, {1, 1}}}) == 4);
    CHECK(orbit_size(CompositionTuple{{{0, 3}}}) == 1);

    // independent enumeration: points of {0,1}^4 with exactly two zeros
    int count = 0;
    for_each_point(2, 4, [&](const std::vector<int>& pt, size_t) {
        int zeros = 0;
        for (int v : pt) zeros += v == 0;
        if (zeros == 2) ++count;
    });
    CHECK(count == 6);
    CHECK(orbit_size(CompositionTuple{{{2, 2}}}) == count);
}

TEST_CASE("event probabilities on the 2-coordinate laws") {
    auto anti = antithetic_law();
    ProductEvent both_ones;
    both_ones.classes.push_back({{1}, 2, 0, TailEvent::full_of(0)});
    CHECK(event_probability(anti, both_ones) == 0);

    ProductEvent first_one;
    first_one.classes.push_back({{1}, 1, 1, TailEvent::full_of(0)});
    CHECK(event_probability(anti, first_one) == Rat(1, 2));
    CHECK(event_probability(uniform_law_2x2(), first_one) == Rat(1, 2));

    ProductEvent bad;
    bad.classes.push_back({{1}, 3, 0, TailEvent::full_of(0)});
    CHECK_THROWS_AS(event_probability(anti, bad), std::invalid_argument);
}

TEST_CASE("orbit-compressed laws expand to orbit-constant tables") {
    StateSpace space = state_space(2);
    auto partition = PartitionSpec::single_class(2);
    std::map<std::vector<int>, Rat> masses;
    masses[{1, 1}] = 1; // the antithetic law in orbit form
    auto law = law_from_orbit_masses(space, partition, masses);
    CHECK(law.table == antithetic_law().table);
    CHECK(validate(law).valid());
}

TEST_CASE("random laws: orbit mass identity and exchangeability") {
    testutil::Rng rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> sdist(2, 3), kdist(1, 2), ndist(1, 2);
        int s = sdist(rng);
        std::vector<int> sizes;
        int k = kdist(rng);
        for (int j = 0; j < k; ++j) sizes.push_back(ndist(rng) + (j == 0 ? 1 : 0));
        auto law = testutil::random_exchangeable_law(s, sizes, rng);
        CHECK(validate(law).valid());

        // sum over orbits of orbit_size * representative value == 1
        Rat total = 0;
        for (const auto& [flat, mass] : orbit_masses(law)) {
            (void)flat;
            total += mass;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("event probability does not depend on which class positions host the blocks") {
    // brute-force evaluator with the head block placed on the *highest*
    // indexed coordinates instead of the lowest
    auto event_prob_reversed = [](const ExchangeableLaw& law, const ProductEvent& e) {
        const int s = law.space.size();
        Rat total = 0;
        for_each_point(s, law.partition.n, [&](const std::vector<int>& pt, size_t idx) {
            for (size_t j = 0; j < e.classes.size(); ++j) {
                const auto& cls = law.partition.classes[j];
                const auto& ev = e.classes[j];
                int nj = static_cast<int>(cls.size());
                for (int p = 0; p < ev.head_count; ++p) {
                    int coord = cls[static_cast<size_t>(nj - 1 - p)];
                    int st = pt[static_cast<size_t>(coord - 1)];
                    if (std::find(ev.head_states.begin(), ev.head_states.end(), st) ==
                        ev.head_states.end())
                        return;
                }
                if (!ev.tail.full) {
                    std::vector<int> tail;
                    for (int p = 0; p < ev.tail.arity; ++p)
                        tail.push_back(pt[static_cast<size_t>(cls[static_cast<size_t>(p)] - 1)]);
                    if (!ev.tail.contains(tail)) return;
                }
            }
            total += law.table[idx];
        });
        return total;
    };

    testutil::Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto law = testutil::random_exchangeable_law(2, {3}, rng);
        ProductEvent e;
        std::uniform_int_distribution<int> hc(0, 2);
        int a = hc(rng);
        int q = (trial % 2 == 0) ? 0 : (3 - a > 0 ? 1 : 0);
        ClassEvent cls;
        cls.head_states = {1};
        cls.head_count = a;
        cls.free_count = 3 - a - q;
        if (q == 0) {
            cls.tail = TailEvent::full_of(0);
        } else {
            cls.tail.full = false;
            cls.tail.arity = 1;
            cls.tail.points = {{0}};
        }
        e.classes.push_back(cls);
        CHECK(event_probability(law, e) == event_prob_reversed(law, e));
    }
}

TEST_CASE("partition and state space validation") {
    StateSpace bad;
    bad.labels = {"a", "a"};
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);

    PartitionSpec p;
    p.n = 3;
    p.classes = {{1, 2}};
    CHECK_THROWS_AS(p.check(), std::invalid_argument); // does not cover
    p.classes = {{1, 2}, {2, 3}};
    CHECK_THROWS_AS(p.check(), std::invalid_argument); // overlap
    p.classes = {{1, 2}, {3}};
    CHECK_NOTHROW(p.check());
}
