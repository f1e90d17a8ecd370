#include "definetti/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace definetti {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

Rat rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

ExchangeableLaw law_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("law: expected a JSON object");
    if (!j.contains("states") || !j["states"].is_array())
        throw std::invalid_argument("law: missing \"states\" array");
    StateSpace space;
    for (const auto& st : j["states"]) space.labels.push_back(st.get<std::string>());
    space.check();

    if (!j.contains("partition") || !j["partition"].is_array())
        throw std::invalid_argument("law: missing \"partition\" array");
    PartitionSpec partition;
    for (const auto& cls : j["partition"]) {
        std::vector<int> members;
        for (const auto& v : cls) members.push_back(v.get<int>());
        std::sort(members.begin(), members.end());
        partition.n += static_cast<int>(members.size());
        partition.classes.push_back(std::move(members));
    }
    partition.check();

    const int s = space.size();
    if (j.contains("orbits")) {
        std::map<std::vector<int>, Rat> masses;
        for (const auto& [key, value] : j["orbits"].items()) {
            std::vector<int> flat;
            for (const auto& cls : split(key, '|'))
                for (const auto& part : split(cls, ',')) {
                    try {
                        flat.push_back(std::stoi(part));
                    } catch (const std::exception&) {
                        throw std::invalid_argument("law: bad orbit key '" + key + "'");
                    }
                }
            if (masses.count(flat)) throw std::invalid_argument("law: duplicate orbit key '" + key + "'");
            masses[flat] = rational_from_json(value);
        }
        return law_from_orbit_masses(space, partition, masses);
    }
    if (j.contains("table")) {
        size_t points = 1;
        for (int i = 0; i < partition.n; ++i) {
            points *= static_cast<size_t>(s);
            if (points > kMaxTablePoints) throw guard_error("law table exceeds the s^n guard");
        }
        ExchangeableLaw law{space, partition, std::vector<Rat>(points)};
        for (const auto& [key, value] : j["table"].items()) {
            auto labels = split(key, ',');
            if (static_cast<int>(labels.size()) != partition.n)
                throw std::invalid_argument("law: point key '" + key + "' has wrong arity");
            std::vector<int> pt;
            for (const auto& lab : labels) {
                int idx = space.index_of(lab);
                if (idx < 0) throw std::invalid_argument("law: unknown state '" + lab + "' in point key");
                pt.push_back(idx);
            }
            law.table[point_to_index(pt, s)] = rational_from_json(value);
        }
        return law;
    }
    throw std::invalid_argument("law: need either \"orbits\" or \"table\"");
}

json law_to_json(const ExchangeableLaw& law) {
    json j;
    j["states"] = law.space.labels;
    j["partition"] = law.partition.classes;
    json orbits = json::object();
    const int s = law.space.size();
    for (const auto& [flat, mass] : orbit_masses(law)) {
        if (mass == 0) continue;
        CompositionTuple c;
        size_t pos = 0;
        for (int cls = 0; cls < law.partition.k(); ++cls) {
            c.counts.emplace_back(flat.begin() + static_cast<long>(pos),
                                  flat.begin() + static_cast<long>(pos + static_cast<size_t>(s)));
            pos += static_cast<size_t>(s);
        }
        orbits[composition_key(c)] = rat_to_string(mass);
    }
    j["orbits"] = orbits;
    return j;
}

BinaryLawX binary_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n"))
        throw std::invalid_argument("binary law: expected an object with \"n\"");
    BinaryLawX law;
    law.n = j["n"].get<int>();
    const char* key = j.contains("x") ? "x" : nullptr;
    if (!key) throw std::invalid_argument("binary law: missing \"x\" array");
    for (const auto& v : j[key]) law.x.push_back(rational_from_json(v));
    if (static_cast<int>(law.x.size()) != law.n + 1)
        throw std::invalid_argument("binary law: \"x\" must have n+1 entries");
    return law;
}

json binary_to_json(const BinaryLawX& law) {
    json j;
    j["n"] = law.n;
    json arr = json::array();
    for (const Rat& v : law.x) arr.push_back(rat_to_string(v));
    j["x"] = arr;
    return j;
}

json mixture_to_json(const SignedMixture& mix) {
    json atoms = json::array();
    for (const auto& atom : mix.atoms) {
        json comps = json::array();
        for (const auto& comp : atom.components) {
            json vec = json::array();
            for (const Rat& v : comp) vec.push_back(rat_to_string(v));
            comps.push_back(vec);
        }
        atoms.push_back(json{{"weight", rat_to_string(atom.weight)}, {"components", comps}});
    }
    return json{{"atoms", atoms}};
}

SignedMixture mixture_from_json(const json& j, const StateSpace& space, const PartitionSpec& partition) {
    SignedMixture mix;
    mix.space = space;
    mix.partition = partition;
    if (!j.is_object() || !j.contains("atoms"))
        throw std::invalid_argument("mixture: expected an object with \"atoms\"");
    for (const auto& ja : j["atoms"]) {
        SignedMixtureAtom atom;
        atom.weight = rational_from_json(ja.at("weight"));
        for (const auto& jc : ja.at("components")) {
            std::vector<Rat> comp;
            for (const auto& v : jc) comp.push_back(rational_from_json(v));
            atom.components.push_back(std::move(comp));
        }
        if (atom.components.size() != partition.classes.size())
            throw std::invalid_argument("mixture: atom component count does not match the partition");
        for (const auto& comp : atom.components) {
            if (static_cast<int>(comp.size()) != space.size())
                throw std::invalid_argument("mixture: component length does not match the state space");
            Rat total = 0;
            for (const Rat& v : comp) total += v;
            if (total != 1) throw std::invalid_argument("mixture: component does not sum to 1");
        }
        mix.atoms.push_back(std::move(atom));
    }
    return mix;
}

json measure_to_json(const AtomicMeasure& mu) {
    json atoms = json::array();
    for (const auto& atom : mu.atoms)
        atoms.push_back(json{{"p", atom.location}, {"w", atom.weight}});
    return json{{"atoms", atoms}};
}

AtomicMeasure measure_from_json(const json& j) {
    AtomicMeasure mu;
    if (!j.is_object() || !j.contains("atoms"))
        throw std::invalid_argument("measure: expected an object with \"atoms\"");
    for (const auto& ja : j["atoms"])
        mu.atoms.push_back({ja.at("p").get<double>(), ja.at("w").get<double>()});
    return mu;
}

std::pair<int, std::vector<Permutation>> generators_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n"))
        throw std::invalid_argument("generators: expected an object with \"n\"");
    int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("generators: n must be >= 1");
    std::vector<Permutation> gens;
    if (j.contains("generators")) {
        for (const auto& jg : j["generators"]) {
            Permutation p;
            for (const auto& v : jg) {
                int img = v.get<int>();
                if (img < 1 || img > n) throw std::invalid_argument("generators: image out of range");
                p.image.push_back(img - 1);
            }
            if (p.degree() != n) throw std::invalid_argument("generators: image length must be n");
            p.check();
            gens.push_back(std::move(p));
        }
    }
    return {n, gens};
}

json matrix_to_json(const SymmetricMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim; ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json report_to_json(const ValidationReport& report) {
    json j;
    j["valid"] = report.valid();
    j["total_mass"] = rat_to_string(report.total_mass);
    j["violation_count"] = report.total_violations;
    json items = json::array();
    for (const auto& v : report.violations) {
        json item;
        switch (v.kind) {
            case ValidationReport::Kind::negative_value: item["kind"] = "negative-value"; break;
            case ValidationReport::Kind::normalization: item["kind"] = "normalization"; break;
            case ValidationReport::Kind::orbit_mismatch: item["kind"] = "orbit-mismatch"; break;
        }
        item["detail"] = v.detail;
        items.push_back(item);
    }
    j["violations"] = items;
    return j;
}

json psd_verdict_to_json(const PsdVerdict& verdict) {
    json j;
    j["is_psd"] = verdict.is_psd;
    if (!verdict.is_psd) {
        if (!verdict.minor_rows.empty()) {
            j["minor"] = verdict.minor_rows;
            j["minor_det"] = rat_to_string(verdict.minor_det);
        }
        if (!verdict.witness.empty()) j["witness_vector"] = verdict.witness;
    } else if (!verdict.pivots.empty()) {
        json pivots = json::array();
        for (const auto& [idx, value] : verdict.pivots)
            pivots.push_back(json{{"index", idx}, {"pivot", rat_to_string(value)}});
        j["pivots"] = pivots;
    }
    return j;
}

} // namespace definetti
