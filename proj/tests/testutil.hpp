#pragma once

#include "definetti/binary_moments.hpp"
#include "definetti/laws.hpp"
#include "definetti/mixture.hpp"
#include "definetti/semidefinite.hpp"

#include <random>
#include <vector>

namespace testutil {

using namespace definetti;

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, int max_num = 12, int max_den = 12) {
    std::uniform_int_distribution<int> num(0, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rat(num(rng), den(rng));
}

/// Random valid binary law: nonnegative x normalized so sum C(n,i) x_i == 1.
/// Zero entries are common on purpose (they exercise the PSD boundary).
inline BinaryLawX random_binary_law(int n, Rng& rng, int max_num = 12) {
    BinaryLawX law;
    law.n = n;
    std::uniform_int_distribution<int> num(0, max_num);
    Rat total = 0;
    for (int i = 0; i <= n; ++i) {
        law.x.emplace_back(num(rng));
        total += Rat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))) * law.x.back();
    }
    if (total == 0) {
        law.x[0] = 1;
        total = 1;
    }
    for (Rat& v : law.x) v /= total;
    return law;
}

inline StateSpace state_space(int s) {
    StateSpace space;
    for (int i = 0; i < s; ++i) space.labels.push_back(std::to_string(i));
    return space;
}

inline PartitionSpec contiguous_partition(const std::vector<int>& sizes) {
    PartitionSpec p;
    int next = 1;
    for (int nj : sizes) {
        std::vector<int> cls;
        for (int i = 0; i < nj; ++i) cls.push_back(next++);
        p.classes.push_back(std::move(cls));
    }
    p.n = next - 1;
    return p;
}

/// Random class-exchangeable law built from random orbit masses.
inline ExchangeableLaw random_exchangeable_law(int s, const std::vector<int>& sizes, Rng& rng,
                                               int max_num = 8) {
    StateSpace space = state_space(s);
    PartitionSpec partition = contiguous_partition(sizes);
    auto compositions = enumerate_compositions(partition, space);
    std::uniform_int_distribution<int> num(0, max_num);
    std::map<std::vector<int>, Rat> masses;
    Rat total = 0;
    for (const auto& c : compositions) {
        Rat m(num(rng));
        masses[c.flat()] = m;
        total += m;
    }
    if (total == 0) {
        masses[compositions.front().flat()] = 1;
        total = 1;
    }
    for (auto& [k, v] : masses) v /= total;
    return law_from_orbit_masses(space, partition, masses);
}

/// Random true mixture of class-i.i.d. product laws, exact table.
inline ExchangeableLaw random_product_mixture_law(int s, const std::vector<int>& sizes, int atom_count,
                                                  Rng& rng) {
    StateSpace space = state_space(s);
    PartitionSpec partition = contiguous_partition(sizes);
    std::uniform_int_distribution<int> num(0, 6);
    std::uniform_int_distribution<int> wnum(1, 5);

    struct Atom {
        std::vector<std::vector<Rat>> comps;
        Rat weight;
    };
    std::vector<Atom> atoms;
    Rat wtotal = 0;
    for (int a = 0; a < atom_count; ++a) {
        Atom atom;
        for (size_t j = 0; j < sizes.size(); ++j) {
            std::vector<Rat> comp(static_cast<size_t>(s));
            Rat tot = 0;
            for (int t = 0; t < s; ++t) {
                comp[static_cast<size_t>(t)] = num(rng);
                tot += comp[static_cast<size_t>(t)];
            }
            if (tot == 0) {
                comp[0] = 1;
                tot = 1;
            }
            for (Rat& v : comp) v /= tot;
            atom.comps.push_back(std::move(comp));
        }
        atom.weight = wnum(rng);
        wtotal += atom.weight;
        atoms.push_back(std::move(atom));
    }
    for (auto& atom : atoms) atom.weight /= wtotal;

    ExchangeableLaw law;
    law.space = space;
    law.partition = partition;
    size_t points = 1;
    for (int i = 0; i < partition.n; ++i) points *= static_cast<size_t>(s);
    law.table.resize(points);
    for_each_point(s, partition.n, [&](const std::vector<int>& pt, size_t idx) {
        Rat v = 0;
        for (const auto& atom : atoms) {
            Rat prod = atom.weight;
            for (size_t j = 0; j < partition.classes.size(); ++j)
                for (int i : partition.classes[j])
                    prod *= atom.comps[j][static_cast<size_t>(pt[static_cast<size_t>(i - 1)])];
            v += prod;
        }
        law.table[idx] = v;
    });
    return law;
}

/// Brute-force PSD oracle: all 2^d - 1 principal minors nonnegative.
inline bool psd_by_all_minors(const SymmetricMatrix& m) {
    const int d = m.dim;
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> rows;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) rows.push_back(i + 1);
        if (principal_minor_det(m, rows) < 0) return false;
    }
    return true;
}

} // namespace testutil
