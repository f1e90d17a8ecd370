#pragma once

#include "definetti/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace definetti {

/// Finite state space; states are referred to by 0-based index internally
/// and by label at the I/O surface.
struct StateSpace {
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const; // -1 when absent
    void check() const;                           // labels distinct, size >= 1
};

/// Partition {I_1,...,I_k} of the coordinates {1,...,n}. Coordinate indices
/// are 1-based; each class is kept sorted ascending.
struct PartitionSpec {
    std::vector<std::vector<int>> classes;
    int n = 0;

    int k() const { return static_cast<int>(classes.size()); }
    std::vector<int> class_sizes() const;
    void check() const; // disjoint, nonempty, cover {1..n}

    static PartitionSpec single_class(int n);
    static PartitionSpec singletons(int n);
};

/// Per-class state counts of a point: counts[j][s] = #{i in I_j : x_i = s}.
struct CompositionTuple {
    std::vector<std::vector<int>> counts;

    bool operator==(const CompositionTuple&) const = default;
    bool operator<(const CompositionTuple& o) const { return counts < o.counts; }

    std::vector<int> flat() const;
};

/// Tail constraint of arity q: either the full space S^q or an explicit
/// point list.
struct TailEvent {
    bool full = true;
    int arity = 0;
    std::vector<std::vector<int>> points; // each of length arity, state indices

    static TailEvent full_of(int arity) { return TailEvent{true, arity, {}}; }

    bool contains(const std::vector<int>& tuple) const;
};

/// One class factor of a product event: the first `head_count` coordinates of
/// the class (in index order) lie in `head_states`, the next `free_count` are
/// unconstrained, and the trailing tuple lies in `tail`.
struct ClassEvent {
    std::vector<int> head_states;
    int head_count = 0;
    int free_count = 0;
    TailEvent tail;

    int arity() const { return head_count + free_count + tail.arity; }
};

struct ProductEvent {
    std::vector<ClassEvent> classes;
};

/// A law on S^n given by its full probability table, together with the
/// coordinate partition it is exchangeable over. Table index is the mixed
/// radix encoding of the point, coordinate 1 most significant.
struct ExchangeableLaw {
    StateSpace space;
    PartitionSpec partition;
    std::vector<Rat> table;

    size_t point_count() const { return table.size(); }
};

struct ValidationReport {
    enum class Kind { negative_value, normalization, orbit_mismatch };
    struct Violation {
        Kind kind;
        std::string detail;
        // orbit_mismatch: the in-class transposition (1-based coordinates)
        // and the witnessing point pair.
        int coord_a = 0, coord_b = 0;
        std::vector<int> point_a, point_b;
        Rat value_a, value_b;
    };
    std::vector<Violation> violations;
    size_t total_violations = 0; // may exceed violations.size() when capped
    Rat total_mass;

    bool valid() const { return total_violations == 0; }
};

// table points are enumerated in index order; f(point, index)
template <class F>
void for_each_point(int s, int n, F&& f) {
    std::vector<int> pt(static_cast<size_t>(n), 0);
    size_t count = 1;
    for (int i = 0; i < n; ++i) count *= static_cast<size_t>(s);
    for (size_t idx = 0; idx < count; ++idx) {
        f(static_cast<const std::vector<int>&>(pt), idx);
        for (int i = n - 1; i >= 0; --i) {
            if (++pt[i] < s) break;
            pt[i] = 0;
        }
    }
}

size_t point_to_index(const std::vector<int>& point, int s);
std::vector<int> index_to_point(size_t index, int s, int n);

/// Largest table this library will materialize (s^n points).
inline constexpr size_t kMaxTablePoints = 10'000'000;

ValidationReport validate(const ExchangeableLaw& law);

CompositionTuple orbit_statistic(const std::vector<int>& point, const PartitionSpec& partition, int s);

/// |orbit| = prod_j multinomial(n_j; counts_j).
Int orbit_size(const CompositionTuple& c);

/// P(event) as an exact sum of table values over matching points.
Rat event_probability(const ExchangeableLaw& law, const ProductEvent& event);

/// Builds a law from per-orbit total masses; each point of an orbit receives
/// mass / orbit_size. Keys are flattened composition counts.
ExchangeableLaw law_from_orbit_masses(const StateSpace& space, const PartitionSpec& partition,
                                      const std::map<std::vector<int>, Rat>& orbit_masses);

/// Total mass per orbit, keyed by flattened composition counts.
std::map<std::vector<int>, Rat> orbit_masses(const ExchangeableLaw& law);

std::string composition_key(const CompositionTuple& c);

} // namespace definetti
