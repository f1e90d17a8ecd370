#include "definetti/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace definetti {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(static_cast<size_t>(n));
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

void Permutation::check() const {
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
        if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    Permutation c;
    c.image.resize(a.image.size());
    for (size_t i = 0; i < a.image.size(); ++i)
        c.image[i] = a.image[static_cast<size_t>(b.image[i])];
    return c;
}

ClosureResult generate_group(const std::vector<Permutation>& gens, int n, size_t cap) {
    if (cap < 1) throw std::invalid_argument("generate_group: cap must be >= 1");
    for (const auto& g : gens) {
        if (g.degree() != n) throw std::invalid_argument("generate_group: generator degree mismatch");
        g.check();
    }
    ClosureResult result;
    std::set<Permutation> seen;
    std::vector<Permutation> frontier;
    Permutation id = Permutation::identity(n);
    seen.insert(id);
    result.elements.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                Permutation c = compose(g, e);
                if (seen.insert(c).second) {
                    if (seen.size() > cap) {
                        result.overflow = true;
                        return result;
                    }
                    result.elements.push_back(c);
                    next.push_back(std::move(c));
                }
            }
        }
        frontier = std::move(next);
    }
    return result;
}

PartitionSpec orbit_partition(const std::vector<Permutation>& gens, int n) {
    for (const auto& g : gens) {
        if (g.degree() != n) throw std::invalid_argument("orbit_partition: generator degree mismatch");
        g.check();
    }
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) unite(i, g.image[static_cast<size_t>(i)]);

    std::map<int, std::vector<int>> classes; // root -> 1-based members, roots ascending
    for (int i = 0; i < n; ++i) classes[find(i)].push_back(i + 1);
    PartitionSpec p;
    p.n = n;
    for (auto& [root, members] : classes) p.classes.push_back(std::move(members));
    return p;
}

GroupReport classify(const std::vector<Permutation>& gens, int n, size_t cap) {
    GroupReport report;
    report.partition = orbit_partition(gens, n);
    ClosureResult closure = generate_group(gens, n, cap);
    if (closure.overflow) {
        report.overflow = true;
        return report;
    }
    report.group_order = static_cast<unsigned long long>(closure.elements.size());
    Int product_order = 1;
    for (int nj : report.partition.class_sizes()) product_order *= factorial(static_cast<unsigned>(nj));
    report.is_product = report.group_order == product_order;
    return report;
}

Permutation parse_cycles(const std::string& text, int n) {
    Permutation p = Permutation::identity(n);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("cycle syntax: expected '(' in '" + text + "'");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') { ++i; break; }
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw std::invalid_argument("cycle syntax: expected index in '" + text + "'");
            int v = std::stoi(text.substr(start, i - start));
            if (v < 1 || v > n) throw std::invalid_argument("cycle index out of range in '" + text + "'");
            if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
                throw std::invalid_argument("repeated index within a cycle in '" + text + "'");
            cycle.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i; // tolerate comma-separated cycles entries
        }
        if (cycle.size() >= 2) {
            Permutation c = Permutation::identity(n);
            for (size_t t = 0; t < cycle.size(); ++t)
                c.image[static_cast<size_t>(cycle[t] - 1)] = cycle[(t + 1) % cycle.size()] - 1;
            p = compose(c, p); // cycles apply left to right
        }
        skip_ws();
    }
    return p;
}

std::string cycle_string(const Permutation& p) {
    std::ostringstream os;
    std::vector<bool> seen(p.image.size(), false);
    bool any = false;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<size_t>(i)] || p.image[static_cast<size_t>(i)] == i) continue;
        os << '(';
        int j = i;
        bool first = true;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            if (!first) os << ' ';
            os << j + 1;
            first = false;
            j = p.image[static_cast<size_t>(j)];
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

} // namespace definetti
