#include "definetti/boxtest.hpp"

#include <stdexcept>

namespace definetti {

EventMatrix box_product(const std::vector<EventMatrix>& per_class) {
    if (per_class.empty()) throw std::invalid_argument("box_product: no class matrices");
    int dim = 1;
    for (const auto& m : per_class) {
        if (m.dim < 1) throw std::invalid_argument("box_product: empty matrix");
        dim *= m.dim;
    }
    EventMatrix out;
    out.dim = dim;
    out.entries.resize(static_cast<size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            ProductEvent e;
            int rr = r, cc = c;
            // decompose row-major composite indices, class 0 most significant
            std::vector<int> ridx(per_class.size()), cidx(per_class.size());
            for (size_t j = per_class.size(); j-- > 0;) {
                ridx[j] = rr % per_class[j].dim;
                cidx[j] = cc % per_class[j].dim;
                rr /= per_class[j].dim;
                cc /= per_class[j].dim;
            }
            for (size_t j = 0; j < per_class.size(); ++j) {
                const ProductEvent& part = per_class[j].at(ridx[j], cidx[j]);
                for (const auto& cls : part.classes) e.classes.push_back(cls);
            }
            out.at(r, c) = std::move(e);
        }
    }
    return out;
}

namespace {

EventMatrix class_matrix(const BoxClassSpec& spec, int class_size) {
    if (2 * spec.m > class_size)
        throw std::invalid_argument("box spec: 2m exceeds the class size");
    const int q = class_size - 2 * spec.m;
    if (!spec.tail.full && spec.tail.arity != q)
        throw std::invalid_argument("box spec: tail arity must be n_j - 2m_j");
    EventMatrix out;
    out.dim = spec.m + 1;
    out.entries.resize(static_cast<size_t>(out.dim) * out.dim);
    for (int r = 1; r <= out.dim; ++r)
        for (int c = 1; c <= out.dim; ++c) {
            ClassEvent e;
            e.head_states = spec.head_states;
            e.head_count = 2 * spec.m - r - c + 2;
            e.free_count = r + c - 2;
            e.tail = spec.tail;
            e.tail.arity = q;
            ProductEvent pe;
            pe.classes.push_back(std::move(e));
            out.at(r - 1, c - 1) = std::move(pe);
        }
    return out;
}

} // namespace

SymmetricMatrix necessary_matrix(const ExchangeableLaw& law, const BoxTestSpec& spec) {
    const auto sizes = law.partition.class_sizes();
    if (spec.classes.size() != sizes.size())
        throw std::invalid_argument("necessary_matrix: spec class count mismatch");
    std::vector<EventMatrix> per_class;
    for (size_t j = 0; j < spec.classes.size(); ++j)
        per_class.push_back(class_matrix(spec.classes[j], sizes[j]));
    EventMatrix events = box_product(per_class);

    SymmetricMatrix out(events.dim);
    for (int r = 0; r < events.dim; ++r)
        for (int c = r; c < events.dim; ++c) {
            out.at(r, c) = event_probability(law, events.at(r, c));
            if (c > r) out.at(c, r) = event_probability(law, events.at(c, r));
        }
    if (!out.is_symmetric())
        throw std::logic_error("necessary_matrix: probabilities are not symmetric (law not class-exchangeable?)");
    return out;
}

PsdVerdict necessary_condition_check(const ExchangeableLaw& law, const BoxTestSpec& spec) {
    return is_psd_exact(necessary_matrix(law, spec));
}

namespace {

void tail_choices(int s, int q, int max_points, std::vector<TailEvent>& out) {
    out.clear();
    out.push_back(TailEvent::full_of(q));
    if (q < 1) return;
    std::vector<std::vector<int>> pts;
    for_each_point(s, q, [&](const std::vector<int>& pt, size_t) { pts.push_back(pt); });
    // singletons, then unions of increasing size in lexicographic order
    std::vector<std::vector<size_t>> combos;
    for (int size = 1; size <= max_points && static_cast<size_t>(size) <= pts.size(); ++size) {
        std::vector<size_t> idx(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = static_cast<size_t>(i);
        while (true) {
            combos.push_back(idx);
            if (combos.size() > kMaxScanSpecs) throw guard_error("scan_specs tail enumeration exceeds the guard");
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == pts.size() - static_cast<size_t>(size - pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int t = pos + 1; t < size; ++t) idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
        }
    }
    for (const auto& combo : combos) {
        TailEvent te;
        te.full = false;
        te.arity = q;
        for (size_t i : combo) te.points.push_back(pts[i]);
        out.push_back(std::move(te));
    }
}

} // namespace

ScanResult scan_specs(const ExchangeableLaw& law, int max_tail_points) {
    const int s = law.space.size();
    const auto sizes = law.partition.class_sizes();
    const size_t k = sizes.size();

    // per-class option lists: (m, A, B) triples in deterministic order
    std::vector<std::vector<BoxClassSpec>> options(k);
    for (size_t j = 0; j < k; ++j) {
        for (int m = 0; 2 * m <= sizes[j]; ++m) {
            std::vector<std::vector<int>> head_sets;
            for (unsigned mask = 0; mask < (1u << s); ++mask) {
                std::vector<int> set;
                for (int st = 0; st < s; ++st)
                    if (mask & (1u << st)) set.push_back(st);
                head_sets.push_back(std::move(set));
            }
            std::vector<TailEvent> tails;
            tail_choices(s, sizes[j] - 2 * m, max_tail_points, tails);
            for (const auto& head : head_sets)
                for (const auto& tail : tails)
                    options[j].push_back(BoxClassSpec{m, head, tail});
        }
    }

    size_t total = 1;
    for (const auto& opt : options) {
        total *= opt.size();
        if (total > kMaxScanSpecs) throw guard_error("scan_specs exceeds the enumeration guard");
    }

    ScanResult result;
    std::vector<size_t> odo(k, 0);
    while (true) {
        BoxTestSpec spec;
        for (size_t j = 0; j < k; ++j) spec.classes.push_back(options[j][odo[j]]);
        PsdVerdict verdict = necessary_condition_check(law, spec);
        if (!verdict.is_psd) result.any_failure = true;
        result.entries.emplace_back(std::move(spec), std::move(verdict));
        size_t j = k;
        bool done = false;
        while (j > 0) {
            --j;
            if (++odo[j] < options[j].size()) break;
            odo[j] = 0;
            if (j == 0) done = true;
        }
        if (done) break;
    }
    return result;
}

ConditionalReinforcement conditional_reinforcement(const ExchangeableLaw& law,
                                                   const std::vector<int>& head_states,
                                                   const TailEvent& tail) {
    if (law.partition.k() != 1)
        throw std::invalid_argument("conditional_reinforcement: requires a single class");
    const int n = law.partition.n;
    if (n < 2) throw std::invalid_argument("conditional_reinforcement: requires n >= 2");

    auto event = [&](int head_count, int free_count) {
        ProductEvent e;
        ClassEvent cls;
        cls.head_states = head_states;
        cls.head_count = head_count;
        cls.free_count = free_count;
        cls.tail = tail;
        cls.tail.arity = n - 2;
        e.classes.push_back(std::move(cls));
        return event_probability(law, e);
    };

    Rat p_aa = event(2, 0); // A, A, B
    Rat p_a = event(1, 1);  // A, S, B
    Rat p_ss = event(0, 2); // S, S, B

    ConditionalReinforcement out;
    if (p_a == 0 || p_ss == 0) {
        out.undefined = true;
        return out;
    }
    out.lhs = p_aa / p_a;
    out.rhs = p_a / p_ss;
    out.holds = out.lhs >= out.rhs;
    return out;
}

} // namespace definetti
