#include "definetti/laws.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace definetti {

namespace {

constexpr size_t kReportCap = 128;

std::string point_string(const StateSpace& space, const std::vector<int>& pt) {
    std::string s;
    for (size_t i = 0; i < pt.size(); ++i) {
        if (i) s += ',';
        s += space.labels[static_cast<size_t>(pt[i])];
    }
    return s;
}

} // namespace

int StateSpace::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[static_cast<size_t>(i)] == label) return i;
    return -1;
}

void StateSpace::check() const {
    if (labels.empty()) throw std::invalid_argument("state space must have at least one state");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw std::invalid_argument("state labels must be distinct");
}

std::vector<int> PartitionSpec::class_sizes() const {
    std::vector<int> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(static_cast<int>(c.size()));
    return out;
}

void PartitionSpec::check() const {
    if (n < 1) throw std::invalid_argument("partition: n must be >= 1");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("partition: empty class");
        for (int i : cls) {
            if (i < 1 || i > n) throw std::invalid_argument("partition: coordinate out of range");
            if (seen[static_cast<size_t>(i - 1)])
                throw std::invalid_argument("partition: coordinate repeated across classes");
            seen[static_cast<size_t>(i - 1)] = true;
        }
        if (!std::is_sorted(cls.begin(), cls.end()))
            throw std::invalid_argument("partition: class indices must be ascending");
    }
    for (bool b : seen)
        if (!b) throw std::invalid_argument("partition: classes do not cover {1..n}");
}

PartitionSpec PartitionSpec::single_class(int n) {
    PartitionSpec p;
    p.n = n;
    p.classes.emplace_back();
    for (int i = 1; i <= n; ++i) p.classes[0].push_back(i);
    return p;
}

PartitionSpec PartitionSpec::singletons(int n) {
    PartitionSpec p;
    p.n = n;
    for (int i = 1; i <= n; ++i) p.classes.push_back({i});
    return p;
}

std::vector<int> CompositionTuple::flat() const {
    std::vector<int> out;
    for (const auto& c : counts) out.insert(out.end(), c.begin(), c.end());
    return out;
}

bool TailEvent::contains(const std::vector<int>& tuple) const {
    if (full) return true;
    return std::find(points.begin(), points.end(), tuple) != points.end();
}

size_t point_to_index(const std::vector<int>& point, int s) {
    size_t idx = 0;
    for (int v : point) idx = idx * static_cast<size_t>(s) + static_cast<size_t>(v);
    return idx;
}

std::vector<int> index_to_point(size_t index, int s, int n) {
    std::vector<int> pt(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        pt[static_cast<size_t>(i)] = static_cast<int>(index % static_cast<size_t>(s));
        index /= static_cast<size_t>(s);
    }
    return pt;
}

ValidationReport validate(const ExchangeableLaw& law) {
    law.space.check();
    law.partition.check();
    const int s = law.space.size();
    const int n = law.partition.n;
    size_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= static_cast<size_t>(s);
    if (law.table.size() != expected)
        throw std::invalid_argument("law table does not cover S^n");

    ValidationReport report;
    auto add = [&](ValidationReport::Violation v) {
        ++report.total_violations;
        if (report.violations.size() < kReportCap) report.violations.push_back(std::move(v));
    };

    Rat total = 0;
    for_each_point(s, n, [&](const std::vector<int>& pt, size_t idx) {
        const Rat& v = law.table[idx];
        total += v;
        if (v < 0) {
            ValidationReport::Violation viol;
            viol.kind = ValidationReport::Kind::negative_value;
            viol.point_a = pt;
            viol.value_a = v;
            viol.detail = "negative value " + rat_to_string(v) + " at point (" +
                          point_string(law.space, pt) + ")";
            add(std::move(viol));
        }
    });
    report.total_mass = total;
    if (total != 1) {
        ValidationReport::Violation viol;
        viol.kind = ValidationReport::Kind::normalization;
        viol.value_a = total;
        viol.detail = "total mass is " + rat_to_string(total) + ", deficit " +
                      rat_to_string(Rat(1) - total);
        add(std::move(viol));
    }

    // Orbit constancy: adjacent in-class transpositions generate each
    // symmetric group, so checking them checks full G-invariance.
    for (const auto& cls : law.partition.classes) {
        for (size_t t = 0; t + 1 < cls.size(); ++t) {
            const int ca = cls[t], cb = cls[t + 1];
            for_each_point(s, n, [&](const std::vector<int>& pt, size_t idx) {
                const int va = pt[static_cast<size_t>(ca - 1)];
                const int vb = pt[static_cast<size_t>(cb - 1)];
                if (va >= vb) return; // each unordered pair once
                std::vector<int> swapped = pt;
                std::swap(swapped[static_cast<size_t>(ca - 1)], swapped[static_cast<size_t>(cb - 1)]);
                size_t jdx = point_to_index(swapped, s);
                if (law.table[idx] != law.table[jdx]) {
                    ValidationReport::Violation viol;
                    viol.kind = ValidationReport::Kind::orbit_mismatch;
                    viol.coord_a = ca;
                    viol.coord_b = cb;
                    viol.point_a = pt;
                    viol.point_b = swapped;
                    viol.value_a = law.table[idx];
                    viol.value_b = law.table[jdx];
                    viol.detail = "swap of coordinates (" + std::to_string(ca) + " " +
                                  std::to_string(cb) + ") maps (" + point_string(law.space, pt) +
                                  ") [" + rat_to_string(law.table[idx]) + "] to (" +
                                  point_string(law.space, swapped) + ") [" +
                                  rat_to_string(law.table[jdx]) + "]";
                    add(std::move(viol));
                }
            });
        }
    }
    return report;
}

CompositionTuple orbit_statistic(const std::vector<int>& point, const PartitionSpec& partition, int s) {
    if (static_cast<int>(point.size()) != partition.n)
        throw std::invalid_argument("orbit_statistic: point arity mismatch");
    CompositionTuple c;
    c.counts.resize(partition.classes.size(), std::vector<int>(static_cast<size_t>(s), 0));
    for (size_t j = 0; j < partition.classes.size(); ++j)
        for (int i : partition.classes[j])
            ++c.counts[j][static_cast<size_t>(point[static_cast<size_t>(i - 1)])];
    return c;
}

Int orbit_size(const CompositionTuple& c) {
    Int r = 1;
    for (const auto& cnt : c.counts) {
        int nj = 0;
        for (int v : cnt) nj += v;
        r *= multinomial(static_cast<unsigned>(nj), cnt);
    }
    return r;
}

Rat event_probability(const ExchangeableLaw& law, const ProductEvent& event) {
    const int s = law.space.size();
    const int n = law.partition.n;
    const auto sizes = law.partition.class_sizes();
    if (event.classes.size() != law.partition.classes.size())
        throw std::invalid_argument("event_probability: class count mismatch");
    for (size_t j = 0; j < event.classes.size(); ++j) {
        const ClassEvent& e = event.classes[j];
        if (e.arity() != sizes[j])
            throw std::invalid_argument("event_probability: event arity mismatch in class " +
                                        std::to_string(j + 1));
        for (int st : e.head_states)
            if (st < 0 || st >= s) throw std::invalid_argument("event_probability: head state out of range");
        if (!e.tail.full)
            for (const auto& p : e.tail.points)
                if (static_cast<int>(p.size()) != e.tail.arity)
                    throw std::invalid_argument("event_probability: tail point arity mismatch");
    }

    std::vector<std::vector<bool>> head_mask(event.classes.size(), std::vector<bool>(static_cast<size_t>(s), false));
    for (size_t j = 0; j < event.classes.size(); ++j)
        for (int st : event.classes[j].head_states) head_mask[j][static_cast<size_t>(st)] = true;

    Rat total = 0;
    std::vector<int> tail_buf;
    for_each_point(s, n, [&](const std::vector<int>& pt, size_t idx) {
        if (law.table[idx] == 0) return;
        for (size_t j = 0; j < event.classes.size(); ++j) {
            const ClassEvent& e = event.classes[j];
            const auto& cls = law.partition.classes[j];
            for (int p = 0; p < e.head_count; ++p)
                if (!head_mask[j][static_cast<size_t>(pt[static_cast<size_t>(cls[static_cast<size_t>(p)] - 1)])])
                    return;
            if (!e.tail.full) {
                tail_buf.clear();
                for (int p = e.head_count + e.free_count; p < static_cast<int>(cls.size()); ++p)
                    tail_buf.push_back(pt[static_cast<size_t>(cls[static_cast<size_t>(p)] - 1)]);
                if (!e.tail.contains(tail_buf)) return;
            }
        }
        total += law.table[idx];
    });
    return total;
}

ExchangeableLaw law_from_orbit_masses(const StateSpace& space, const PartitionSpec& partition,
                                      const std::map<std::vector<int>, Rat>& masses) {
    space.check();
    partition.check();
    const int s = space.size();
    const int n = partition.n;
    size_t points = 1;
    for (int i = 0; i < n; ++i) {
        points *= static_cast<size_t>(s);
        if (points > kMaxTablePoints) throw guard_error("law table exceeds the s^n guard");
    }

    ExchangeableLaw law{space, partition, std::vector<Rat>(points)};
    std::map<std::vector<int>, Rat> per_point;
    for (const auto& [key, mass] : masses) {
        // reconstruct the composition to validate the key and size the orbit
        CompositionTuple c;
        size_t pos = 0;
        for (const auto& cls : partition.classes) {
            if (key.size() < pos + static_cast<size_t>(s))
                throw std::invalid_argument("orbit key has wrong length");
            std::vector<int> cnt(key.begin() + static_cast<long>(pos),
                                 key.begin() + static_cast<long>(pos + static_cast<size_t>(s)));
            int tot = 0;
            for (int v : cnt) {
                if (v < 0) throw std::invalid_argument("orbit key has negative count");
                tot += v;
            }
            if (tot != static_cast<int>(cls.size()))
                throw std::invalid_argument("orbit key counts do not match class size");
            c.counts.push_back(std::move(cnt));
            pos += static_cast<size_t>(s);
        }
        if (pos != key.size()) throw std::invalid_argument("orbit key has wrong length");
        per_point[key] = mass / Rat(orbit_size(c));
    }
    for_each_point(s, n, [&](const std::vector<int>& pt, size_t idx) {
        auto it = per_point.find(orbit_statistic(pt, partition, s).flat());
        if (it != per_point.end()) law.table[idx] = it->second;
    });
    return law;
}

std::map<std::vector<int>, Rat> orbit_masses(const ExchangeableLaw& law) {
    std::map<std::vector<int>, Rat> out;
    const int s = law.space.size();
    for_each_point(s, law.partition.n, [&](const std::vector<int>& pt, size_t idx) {
        out[orbit_statistic(pt, law.partition, s).flat()] += law.table[idx];
    });
    return out;
}

std::string composition_key(const CompositionTuple& c) {
    std::ostringstream os;
    for (size_t j = 0; j < c.counts.size(); ++j) {
        if (j) os << '|';
        for (size_t t = 0; t < c.counts[j].size(); ++t) {
            if (t) os << ',';
            os << c.counts[j][t];
        }
    }
    return os.str();
}

} // namespace definetti
