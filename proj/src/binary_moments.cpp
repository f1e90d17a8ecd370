#include "definetti/binary_moments.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace definetti {

namespace {

void require_shape(const BinaryLawX& law) {
    if (law.n < 1 || static_cast<int>(law.x.size()) != law.n + 1)
        throw std::invalid_argument("binary law: x must have length n+1, n >= 1");
}

Rat binom_sum(const std::vector<Rat>& x, int order, int shift) {
    // sum_{t=0}^{order} C(order,t) x_{t+shift}
    Rat acc = 0;
    for (int t = 0; t <= order; ++t) acc += Rat(binomial(static_cast<unsigned>(order), static_cast<unsigned>(t))) * x[static_cast<size_t>(t + shift)];
    return acc;
}

} // namespace

BinaryValidation validate_binary(const BinaryLawX& law) {
    require_shape(law);
    BinaryValidation v;
    Rat total = 0;
    for (int i = 0; i <= law.n; ++i) {
        if (law.x[static_cast<size_t>(i)] < 0) v.negative_indices.push_back(i);
        total += Rat(binomial(static_cast<unsigned>(law.n), static_cast<unsigned>(i))) * law.x[static_cast<size_t>(i)];
    }
    v.deficit = Rat(1) - total;
    v.valid = v.negative_indices.empty() && v.deficit == 0;
    return v;
}

BinaryLawX normalize_binary(const BinaryLawX& law) {
    require_shape(law);
    Rat total = 0;
    for (int i = 0; i <= law.n; ++i)
        total += Rat(binomial(static_cast<unsigned>(law.n), static_cast<unsigned>(i))) * law.x[static_cast<size_t>(i)];
    if (total <= 0) throw std::invalid_argument("normalize_binary: total mass must be positive");
    BinaryLawX out = law;
    for (Rat& v : out.x) v /= total;
    return out;
}

MomentVectorY x_to_y(const BinaryLawX& law) {
    require_shape(law);
    MomentVectorY out;
    out.n = law.n;
    out.y.resize(law.x.size());
    for (int i = 0; i <= law.n; ++i) {
        Rat acc = 0;
        for (int j = 0; j <= i; ++j)
            acc += Rat(binomial(static_cast<unsigned>(i), static_cast<unsigned>(j))) * law.x[static_cast<size_t>(j)];
        out.y[static_cast<size_t>(i)] = acc;
    }
    return out;
}

BinaryLawX y_to_x(const MomentVectorY& y) {
    if (y.n < 1 || static_cast<int>(y.y.size()) != y.n + 1)
        throw std::invalid_argument("moment vector: y must have length n+1, n >= 1");
    BinaryLawX out;
    out.n = y.n;
    out.x.resize(y.y.size());
    for (int i = 0; i <= y.n; ++i) {
        Rat acc = 0;
        for (int j = 0; j <= i; ++j) {
            Rat term = Rat(binomial(static_cast<unsigned>(i), static_cast<unsigned>(j))) * y.y[static_cast<size_t>(j)];
            acc += ((i + j) % 2 == 0) ? term : -term;
        }
        out.x[static_cast<size_t>(i)] = acc;
    }
    return out;
}

std::pair<Int, Int> binomial_identity(int n, int j) {
    if (n < 1 || j < 0 || j > n - 1)
        throw std::invalid_argument("binomial_identity: need 0 <= j <= n-1");
    Int lhs = 0;
    for (int i = j; i <= n - 1; ++i) {
        Int term = binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) *
                   binomial(static_cast<unsigned>(i), static_cast<unsigned>(j));
        lhs += (i % 2 == 0) ? term : -term;
    }
    Int rhs = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j));
    if ((n - 1) % 2 != 0) rhs = -rhs;
    return {lhs, rhs};
}

HankelPair hankel_pair(const BinaryLawX& law) {
    require_shape(law);
    const int n = law.n;
    HankelPair pair;
    pair.n = n;
    if (n % 2 == 0) {
        pair.h = SymmetricMatrix((n + 2) / 2);
        for (int i = 1; i <= pair.h.dim; ++i)
            for (int j = 1; j <= pair.h.dim; ++j)
                pair.h.at(i - 1, j - 1) = binom_sum(law.x, n + 2 - i - j, 0);
        pair.k = SymmetricMatrix(n / 2);
        for (int i = 1; i <= pair.k.dim; ++i)
            for (int j = 1; j <= pair.k.dim; ++j)
                pair.k.at(i - 1, j - 1) = binom_sum(law.x, n - i - j, 1);
    } else {
        pair.h = SymmetricMatrix((n + 1) / 2);
        for (int i = 1; i <= pair.h.dim; ++i)
            for (int j = 1; j <= pair.h.dim; ++j)
                pair.h.at(i - 1, j - 1) = binom_sum(law.x, n + 1 - i - j, 0);
        pair.k = SymmetricMatrix((n + 1) / 2);
        for (int i = 1; i <= pair.k.dim; ++i)
            for (int j = 1; j <= pair.k.dim; ++j)
                pair.k.at(i - 1, j - 1) = binom_sum(law.x, n + 1 - i - j, 1);
    }

#ifndef NDEBUG
    // cross-check against the moment construction: m_i = y_{n-i}
    MomentVectorY y = x_to_y(law);
    std::vector<Rat> m(y.y.rbegin(), y.y.rend());
    auto [h2, k2] = jurkat_matrices(m);
    assert(pair.h.entries == h2.entries && pair.k.entries == k2.entries);
#endif
    return pair;
}

std::pair<std::vector<int>, Rat> find_negative_minor(const SymmetricMatrix& m) {
    // leading minors first
    std::vector<int> rows;
    for (int d = 1; d <= m.dim; ++d) {
        rows.push_back(d);
        Rat det = principal_minor_det(m, rows);
        if (det < 0) return {rows, det};
    }
    // then all principal minors by (size, lex)
    for (int size = 1; size <= m.dim; ++size) {
        std::vector<int> idx(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i + 1;
        while (true) {
            Rat det = principal_minor_det(m, idx);
            if (det < 0) return {idx, det};
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == m.dim - (size - 1 - pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int t = pos + 1; t < size; ++t) idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
        }
    }
    return {{}, Rat(0)};
}

bool leading_minors_strictly_positive(const HankelPair& pair) {
    for (const SymmetricMatrix* m : {&pair.h, &pair.k}) {
        std::vector<int> rows;
        for (int d = 1; d <= m->dim; ++d) {
            rows.push_back(d);
            if (principal_minor_det(*m, rows) <= 0) return false;
        }
    }
    return true;
}

MixtureVerdict true_mixture_verdict(const BinaryLawX& law) {
    auto valid = validate_binary(law);
    if (!valid.valid) throw std::invalid_argument("true_mixture_verdict: law is not a valid binary exchangeable law");
    HankelPair pair = hankel_pair(law);
    MixtureVerdict verdict;

    // positive-definite fast path; the boundary cases fall through to the
    // full elimination test
    bool fast_yes = leading_minors_strictly_positive(pair);
    PsdVerdict hp = fast_yes ? PsdVerdict{true, {}, {}, {}, {}} : is_psd_exact(pair.h);
    PsdVerdict kp = fast_yes ? PsdVerdict{true, {}, {}, {}, {}} : is_psd_exact(pair.k);
    if (hp.is_psd && kp.is_psd) {
        verdict.is_true_mixture = true;
        MomentVectorY y = x_to_y(law);
        std::vector<Rat> m(y.y.rbegin(), y.y.rend());
        auto rec = recover_measure(m);
        if (rec.feasible) {
            verdict.measure = rec.measure;
            verdict.recovery_residual = rec.max_residual;
        }
        return verdict;
    }
    const SymmetricMatrix& failing = hp.is_psd ? pair.k : pair.h;
    verdict.failing_matrix = hp.is_psd ? 'K' : 'H';
    auto [rows, det] = find_negative_minor(failing);
    assert(!rows.empty());
    verdict.minor_rows = rows;
    verdict.minor_det = det;
    return verdict;
}

std::vector<ReinforcementItem> reinforcement_check(const BinaryLawX& law) {
    require_shape(law);
    std::vector<ReinforcementItem> out;
    for (int i = 1; i <= law.n - 1; ++i) {
        ReinforcementItem item;
        item.i = i;
        item.lhs = law.x[static_cast<size_t>(i)] * law.x[static_cast<size_t>(i)];
        item.rhs = law.x[static_cast<size_t>(i - 1)] * law.x[static_cast<size_t>(i + 1)];
        item.holds = item.lhs <= item.rhs;
        out.push_back(std::move(item));
    }
    return out;
}

std::array<Rat, 8> n4_inequalities(const BinaryLawX& law) {
    require_shape(law);
    if (law.n != 4) throw std::invalid_argument("n4_inequalities: requires n = 4");
    const Rat& x0 = law.x[0];
    const Rat& x1 = law.x[1];
    const Rat& x2 = law.x[2];
    const Rat& x3 = law.x[3];
    const Rat& x4 = law.x[4];
    return {
        x0 * x2 - x1 * x1,
        x1 * x3 - x2 * x2,
        2 * x0 * x2 - 2 * x1 * x1 - x2 * x1 + x0 * x3,
        x0 * x3 - x1 * x1 - x1 * x2 + x3 * x1 - x2 * x2 + x0 * x2,
        x0 * x4 * x2 - x4 * x1 * x1 + 2 * x1 * x2 * x3 - x2 * x2 * x2 - x0 * x3 * x3,
        4 * x0 * x3 - 4 * x1 * x1 - 4 * x1 * x2 - x2 * x2 + 4 * x0 * x2 + x0 * x4,
        2 * x0 * x2 + 3 * x0 * x3 - 3 * x1 * x2 + x0 * x4 + 2 * x1 * x3 + x1 * x4 - x2 * x3 -
            2 * x1 * x1 - 3 * x2 * x2,
        x0 * x2 + 2 * x0 * x3 - 2 * x1 * x2 + x0 * x4 + 2 * x1 * x3 + 2 * x1 * x4 - 2 * x2 * x3 +
            x2 * x4 - x1 * x1 - 3 * x2 * x2 - x3 * x3,
    };
}

BinaryLawX counterexample(int n) {
    if (n < 4) throw std::invalid_argument("counterexample: requires n >= 4");
    Int den = 3 * int_pow(2, static_cast<unsigned>(n)) + 2 * n + 6;
    BinaryLawX law;
    law.n = n;
    law.x.assign(static_cast<size_t>(n) + 1, Rat(3, den));
    law.x[0] = Rat(9, den);
    law.x[1] = Rat(5, den);
    assert(validate_binary(law).valid);
    return law;
}

ExchangeableLaw law_from_binary(const BinaryLawX& law) {
    require_shape(law);
    if (law.n > 23) throw guard_error("law_from_binary: 2^n exceeds the table guard");
    ExchangeableLaw out;
    out.space.labels = {"0", "1"};
    out.partition = PartitionSpec::single_class(law.n);
    out.table.resize(size_t{1} << law.n);
    for_each_point(2, law.n, [&](const std::vector<int>& pt, size_t idx) {
        int zeros = 0;
        for (int v : pt) zeros += v == 0;
        out.table[idx] = law.x[static_cast<size_t>(zeros)];
    });
    return out;
}

BinaryLawX binary_from_law(const ExchangeableLaw& law) {
    if (law.space.size() != 2 || law.partition.k() != 1)
        throw std::invalid_argument("binary_from_law: requires s = 2 and a single class");
    BinaryLawX out;
    out.n = law.partition.n;
    out.x.resize(static_cast<size_t>(out.n) + 1);
    std::vector<int> pt(static_cast<size_t>(out.n), 1);
    for (int i = 0; i <= out.n; ++i) {
        // representative point: i zeros then ones
        for (int c = 0; c < out.n; ++c) pt[static_cast<size_t>(c)] = c < i ? 0 : 1;
        out.x[static_cast<size_t>(i)] = law.table[point_to_index(pt, 2)];
    }
    return out;
}

} // namespace definetti
