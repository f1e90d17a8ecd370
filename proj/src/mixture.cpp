#include "definetti/mixture.hpp"

#include <map>
#include <stdexcept>

namespace definetti {

namespace {

void class_compositions(int remaining, int slots, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int c = remaining; c >= 0; --c) {
        cur.push_back(c);
        class_compositions(remaining - c, slots - 1, cur, out);
        cur.pop_back();
    }
}

Int composition_power(const CompositionTuple& base, const CompositionTuple& exp) {
    Int r = 1;
    for (size_t j = 0; j < base.counts.size(); ++j)
        for (size_t t = 0; t < base.counts[j].size(); ++t)
            r *= int_pow(base.counts[j][t], static_cast<unsigned>(exp.counts[j][t]));
    return r;
}

} // namespace

std::vector<CompositionTuple> enumerate_compositions(const PartitionSpec& partition,
                                                     const StateSpace& space) {
    partition.check();
    space.check();
    const int s = space.size();
    const auto sizes = partition.class_sizes();

    Int total = 1;
    for (int nj : sizes) total *= binomial(static_cast<unsigned>(nj + s - 1), static_cast<unsigned>(s - 1));
    if (total > kMaxCompositions) throw guard_error("composition enumeration exceeds the guard");

    std::vector<std::vector<std::vector<int>>> per_class;
    for (int nj : sizes) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        class_compositions(nj, s, cur, out);
        per_class.push_back(std::move(out));
    }

    std::vector<CompositionTuple> result;
    result.reserve(static_cast<size_t>(total));
    std::vector<size_t> odo(per_class.size(), 0);
    while (true) {
        CompositionTuple c;
        for (size_t j = 0; j < per_class.size(); ++j) c.counts.push_back(per_class[j][odo[j]]);
        result.push_back(std::move(c));
        size_t j = per_class.size();
        while (j > 0) {
            --j;
            if (++odo[j] < per_class[j].size()) break;
            odo[j] = 0;
            if (j == 0) return result;
        }
    }
}

IntMatrix coefficient_matrix(const std::vector<CompositionTuple>& compositions) {
    if (compositions.empty()) throw std::invalid_argument("coefficient_matrix: empty composition set");
    const int m = static_cast<int>(compositions.size());
    std::vector<Int> orbit_sizes;
    orbit_sizes.reserve(compositions.size());
    for (const auto& c : compositions) orbit_sizes.push_back(orbit_size(c));

    IntMatrix mat(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mat.at(i, j) = orbit_sizes[static_cast<size_t>(j)] *
                           composition_power(compositions[static_cast<size_t>(i)],
                                             compositions[static_cast<size_t>(j)]);
    return mat;
}

SignedMixture signed_mixture(const ExchangeableLaw& law) {
    const int s = law.space.size();
    const auto sizes = law.partition.class_sizes();

    Rat total = 0;
    for (const Rat& v : law.table) total += v;
    if (total != 1) throw std::invalid_argument("signed_mixture: law mass must be exactly 1");

    auto compositions = enumerate_compositions(law.partition, law.space);
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < compositions.size(); ++i) index[compositions[i].flat()] = i;

    // orbit masses in composition order
    std::vector<Rat> masses(compositions.size(), Rat(0));
    for (const auto& [key, mass] : orbit_masses(law)) masses[index.at(key)] += mass;

    IntMatrix coeff = coefficient_matrix(compositions);
    std::vector<Rat> z = solve_linear(transpose(coeff), masses);

    Int scale = 1;
    for (int nj : sizes) scale *= int_pow(nj, static_cast<unsigned>(nj));

    SignedMixture mix;
    mix.partition = law.partition;
    mix.space = law.space;
    Rat weight_sum = 0;
    for (size_t i = 0; i < compositions.size(); ++i) {
        SignedMixtureAtom atom;
        atom.weight = z[i] * Rat(scale);
        for (size_t j = 0; j < compositions[i].counts.size(); ++j) {
            std::vector<Rat> comp;
            comp.reserve(static_cast<size_t>(s));
            for (int cnt : compositions[i].counts[j]) comp.emplace_back(cnt, sizes[j]);
            atom.components.push_back(std::move(comp));
        }
        weight_sum += atom.weight;
        mix.atoms.push_back(std::move(atom));
    }
    if (weight_sum != 1)
        throw std::logic_error("signed_mixture: weights do not sum to 1 (input law is not exchangeable?)");
    return mix;
}

Rat evaluate_mixture(const SignedMixture& mix, const std::vector<int>& point) {
    if (static_cast<int>(point.size()) != mix.partition.n)
        throw std::invalid_argument("evaluate_mixture: point arity mismatch");
    Rat total = 0;
    for (const auto& atom : mix.atoms) {
        if (atom.weight == 0) continue;
        Rat prod = atom.weight;
        for (size_t j = 0; j < mix.partition.classes.size() && prod != 0; ++j)
            for (int i : mix.partition.classes[j]) {
                prod *= atom.components[j][static_cast<size_t>(point[static_cast<size_t>(i - 1)])];
                if (prod == 0) break;
            }
        total += prod;
    }
    return total;
}

bool verify_representation(const ExchangeableLaw& law, const SignedMixture& mix) {
    const int s = law.space.size();
    bool ok = true;
    for_each_point(s, law.partition.n, [&](const std::vector<int>& pt, size_t idx) {
        if (!ok) return;
        if (evaluate_mixture(mix, pt) != law.table[idx]) ok = false;
    });
    return ok;
}

Rat negative_mass(const SignedMixture& mix) {
    Rat total = 0;
    for (const auto& atom : mix.atoms)
        if (atom.weight < 0) total -= atom.weight;
    return total;
}

} // namespace definetti
