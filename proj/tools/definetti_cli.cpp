// Command-line surface: every verdict and construction with JSON (default)
// or text output and machine-readable certificates.
//
// Exit codes: 0 ok / verdict yes, 1 verdict no, 2 invalid input, 3 guard
// overflow.

#include "definetti/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace definetti;

constexpr int kExitOk = 0;
constexpr int kExitVerdictNo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOverflow = 3;

enum class OutputMode { json_mode, text_mode };

struct Options {
    OutputMode output = OutputMode::json_mode;
    unsigned long long seed = 0; // reserved for test tooling
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json_input(const std::string& path) {
    try {
        return json::parse(read_input(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const Options& opt, const json& payload, const std::string& text) {
    if (opt.output == OutputMode::json_mode)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

std::string matrix_text(const std::string& name, const SymmetricMatrix& m) {
    std::ostringstream os;
    os << name << " =\n";
    for (int i = 0; i < m.dim; ++i) {
        os << "  [";
        for (int j = 0; j < m.dim; ++j) {
            if (j) os << ", ";
            os << rat_to_string(m.at(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "}";
    return os.str();
}

BinaryLawX load_binary(const std::string& path, bool allow_unnormalized) {
    BinaryLawX law = binary_from_json(parse_json_input(path));
    auto v = validate_binary(law);
    if (!v.negative_indices.empty())
        throw std::invalid_argument("binary law has negative entries (first at index " +
                                    std::to_string(v.negative_indices.front()) + ")");
    if (v.deficit != 0) {
        if (!allow_unnormalized)
            throw std::invalid_argument("binary law is not normalized: sum C(n,i) x_i deviates from 1 by " +
                                        rat_to_string(v.deficit));
        law = normalize_binary(law);
    }
    return law;
}

ExchangeableLaw load_law(const std::string& path) {
    ExchangeableLaw law = law_from_json(parse_json_input(path));
    auto report = validate(law);
    if (!report.valid()) {
        std::string first = report.violations.empty() ? "" : (": " + report.violations.front().detail);
        throw std::invalid_argument("law fails validation (" + std::to_string(report.total_violations) +
                                    " violation(s))" + first);
    }
    return law;
}

int cmd_validate(const Options& opt, const std::string& path) {
    ExchangeableLaw law = law_from_json(parse_json_input(path));
    ValidationReport report = validate(law);
    json payload = report_to_json(report);
    std::ostringstream text;
    text << (report.valid() ? "valid\n" : "invalid\n");
    for (const auto& v : report.violations) text << "  " << v.detail << "\n";
    emit(opt, payload, text.str());
    return report.valid() ? kExitOk : kExitVerdictNo;
}

int cmd_check_mixture(const Options& opt, const std::string& path, bool allow_unnormalized, bool witness) {
    BinaryLawX law = load_binary(path, allow_unnormalized);
    HankelPair pair = hankel_pair(law);
    MixtureVerdict verdict = true_mixture_verdict(law);

    json payload;
    payload["n"] = law.n;
    payload["H"] = matrix_to_json(pair.h);
    payload["K"] = matrix_to_json(pair.k);
    payload["verdict"] = verdict.is_true_mixture ? "YES" : "NO";
    std::ostringstream text;
    text << matrix_text("H", pair.h) << matrix_text("K", pair.k);
    text << "true mixture of i.i.d. laws: " << (verdict.is_true_mixture ? "YES" : "NO") << "\n";
    if (!verdict.is_true_mixture) {
        payload["witness"] = {{"matrix", std::string(1, verdict.failing_matrix)},
                              {"minor", verdict.minor_rows},
                              {"det", rat_to_string(verdict.minor_det)}};
        text << "witness: " << verdict.failing_matrix << "-minor " << join_ints(verdict.minor_rows)
             << " has determinant " << rat_to_string(verdict.minor_det) << "\n";
    } else if (witness || verdict.measure) {
        if (verdict.measure) {
            payload["witness"] = {{"measure", measure_to_json(*verdict.measure)},
                                  {"moment_residual", verdict.recovery_residual}};
            text << "representing measure:";
            for (const auto& atom : verdict.measure->atoms)
                text << " (" << atom.location << ", " << atom.weight << ")";
            text << "\n";
        } else {
            payload["witness"] = {{"measure", nullptr}};
            text << "representing measure: recovery hit the residual floor\n";
        }
    }
    emit(opt, payload, text.str());
    return verdict.is_true_mixture ? kExitOk : kExitVerdictNo;
}

int cmd_represent(const Options& opt, const std::string& path) {
    ExchangeableLaw law = load_law(path);
    SignedMixture mix = signed_mixture(law);
    bool verified = verify_representation(law, mix);
    Rat negmass = negative_mass(mix);

    json payload = mixture_to_json(mix);
    payload["verified"] = verified;
    payload["negative_mass"] = rat_to_string(negmass);
    std::ostringstream text;
    text << "atoms:\n";
    for (const auto& atom : mix.atoms) {
        text << "  weight " << rat_to_string(atom.weight) << " : ";
        for (size_t j = 0; j < atom.components.size(); ++j) {
            if (j) text << " x ";
            text << "(";
            for (size_t t = 0; t < atom.components[j].size(); ++t) {
                if (t) text << ", ";
                text << rat_to_string(atom.components[j][t]);
            }
            text << ")";
        }
        text << "\n";
    }
    text << "verified: " << (verified ? "true" : "false") << "\n";
    text << "negative mass: " << rat_to_string(negmass) << "\n";
    emit(opt, payload, text.str());
    return kExitOk;
}

int cmd_reduce_group(const Options& opt, const std::string& input, int n, const std::string& gens_text,
                     size_t cap) {
    int degree = n;
    std::vector<Permutation> gens;
    if (!input.empty()) {
        auto [nn, gg] = generators_from_json(parse_json_input(input));
        degree = nn;
        gens = std::move(gg);
    } else {
        if (degree < 1) throw std::invalid_argument("reduce-group: provide --n with --gens");
        // split on commas that sit outside parentheses
        std::string cur;
        int depth = 0;
        std::vector<std::string> parts;
        for (char c : gens_text) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) parts.push_back(cur);
        for (const auto& part : parts)
            if (part.find_first_not_of(" \t") != std::string::npos)
                gens.push_back(parse_cycles(part, degree));
    }

    GroupReport report = classify(gens, degree, cap);
    if (report.overflow) throw guard_error("group closure exceeds the cap");

    json payload;
    payload["n"] = degree;
    payload["group_order"] = report.group_order.str();
    payload["partition"] = report.partition.classes;
    payload["is_product"] = report.is_product;
    std::ostringstream text;
    text << "group order: " << report.group_order.str() << "\n";
    text << "orbit partition:";
    for (const auto& cls : report.partition.classes) text << " " << join_ints(cls);
    text << "\nis product of symmetric groups: " << (report.is_product ? "true" : "false") << "\n";
    emit(opt, payload, text.str());
    return kExitOk;
}

TailEvent parse_tail(const std::string& text, const StateSpace& space, int arity) {
    if (text == "full" || text == "FULL" || text.empty()) return TailEvent::full_of(arity);
    TailEvent tail;
    tail.full = false;
    tail.arity = arity;
    std::istringstream points(text);
    std::string ptext;
    while (std::getline(points, ptext, ';')) {
        std::vector<int> pt;
        std::istringstream labels(ptext);
        std::string lab;
        while (std::getline(labels, lab, ',')) {
            int idx = space.index_of(lab);
            if (idx < 0) throw std::invalid_argument("unknown state '" + lab + "' in tail");
            pt.push_back(idx);
        }
        if (static_cast<int>(pt.size()) != arity)
            throw std::invalid_argument("tail point arity mismatch in '" + ptext + "'");
        tail.points.push_back(std::move(pt));
    }
    return tail;
}

std::vector<int> parse_head(const std::string& text, const StateSpace& space) {
    std::vector<int> head;
    if (text.empty()) return head;
    std::istringstream labels(text);
    std::string lab;
    while (std::getline(labels, lab, ',')) {
        int idx = space.index_of(lab);
        if (idx < 0) throw std::invalid_argument("unknown state '" + lab + "' in head set");
        head.push_back(idx);
    }
    return head;
}

json spec_to_json(const BoxTestSpec& spec, const StateSpace& space) {
    json classes = json::array();
    for (const auto& cls : spec.classes) {
        json jc;
        jc["m"] = cls.m;
        json head = json::array();
        for (int st : cls.head_states) head.push_back(space.labels[static_cast<size_t>(st)]);
        jc["A"] = head;
        if (cls.tail.full) {
            jc["B"] = "full";
        } else {
            json pts = json::array();
            for (const auto& pt : cls.tail.points) {
                std::string key;
                for (size_t t = 0; t < pt.size(); ++t) {
                    if (t) key += ',';
                    key += space.labels[static_cast<size_t>(pt[t])];
                }
                pts.push_back(key);
            }
            jc["B"] = pts;
        }
        classes.push_back(jc);
    }
    return classes;
}

int cmd_necessary(const Options& opt, const std::string& path, bool scan, int max_tail_points,
                  const std::vector<int>& cls_ids, const std::vector<int>& ms,
                  const std::vector<std::string>& heads, const std::vector<std::string>& tails) {
    ExchangeableLaw law = load_law(path);
    if (scan) {
        ScanResult result = scan_specs(law, max_tail_points);
        json payload;
        payload["any_failure"] = result.any_failure;
        payload["spec_count"] = result.entries.size();
        json failures = json::array();
        for (const auto& [spec, verdict] : result.entries) {
            if (verdict.is_psd) continue;
            json f;
            f["spec"] = spec_to_json(spec, law.space);
            f["verdict"] = psd_verdict_to_json(verdict);
            failures.push_back(f);
        }
        payload["failures"] = failures;
        std::ostringstream text;
        text << "scanned " << result.entries.size() << " specs, any failure: "
             << (result.any_failure ? "true" : "false") << "\n";
        for (const auto& f : failures)
            text << "  failing spec " << f["spec"].dump() << " minor "
                 << f["verdict"]["minor"].dump() << " det " << f["verdict"]["minor_det"].get<std::string>()
                 << "\n";
        emit(opt, payload, text.str());
        return result.any_failure ? kExitVerdictNo : kExitOk;
    }

    const auto sizes = law.partition.class_sizes();
    BoxTestSpec spec;
    for (size_t j = 0; j < sizes.size(); ++j) {
        BoxClassSpec cls;
        cls.m = 0;
        cls.tail = TailEvent::full_of(sizes[j]);
        spec.classes.push_back(cls);
    }
    if (cls_ids.size() != ms.size() || cls_ids.size() != heads.size() || cls_ids.size() != tails.size())
        throw std::invalid_argument("necessary: --class/--m/--A/--B must be repeated together");
    for (size_t t = 0; t < cls_ids.size(); ++t) {
        int j = cls_ids[t];
        if (j < 1 || j > static_cast<int>(sizes.size()))
            throw std::invalid_argument("necessary: class index out of range");
        BoxClassSpec cls;
        cls.m = ms[t];
        if (2 * cls.m > sizes[static_cast<size_t>(j - 1)])
            throw std::invalid_argument("necessary: 2m exceeds the class size");
        cls.head_states = parse_head(heads[t], law.space);
        cls.tail = parse_tail(tails[t], law.space, sizes[static_cast<size_t>(j - 1)] - 2 * cls.m);
        spec.classes[static_cast<size_t>(j - 1)] = std::move(cls);
    }

    SymmetricMatrix matrix = necessary_matrix(law, spec);
    PsdVerdict verdict = is_psd_exact(matrix);
    json payload;
    payload["spec"] = spec_to_json(spec, law.space);
    payload["matrix"] = matrix_to_json(matrix);
    payload["verdict"] = psd_verdict_to_json(verdict);
    payload["is_true_mixture_possible"] = verdict.is_psd;
    std::ostringstream text;
    text << matrix_text("M", matrix);
    if (verdict.is_psd) {
        text << "positive semi-definite: the necessary condition holds\n";
    } else {
        text << "not positive semi-definite: minor " << join_ints(verdict.minor_rows)
             << " has determinant " << rat_to_string(verdict.minor_det)
             << "; the law is not a true mixture of class-i.i.d. product laws\n";
    }
    emit(opt, payload, text.str());
    return verdict.is_psd ? kExitOk : kExitVerdictNo;
}

int cmd_counterexample(const Options& opt, int n) {
    BinaryLawX law = counterexample(n);
    json payload = binary_to_json(law);
    std::ostringstream text;
    text << "x =";
    for (const Rat& v : law.x) text << " " << rat_to_string(v);
    text << "\n";
    emit(opt, payload, text.str());
    return kExitOk;
}

int cmd_moments(const Options& opt, const std::string& path, std::string direction, bool raw) {
    json input = parse_json_input(path);
    if (direction == "auto") direction = input.contains("y") ? "y-to-x" : "x-to-y";
    json payload;
    std::ostringstream text;
    if (direction == "x-to-y") {
        BinaryLawX law = binary_from_json(input);
        if (!raw) {
            auto v = validate_binary(law);
            if (!v.valid)
                throw std::invalid_argument("binary law fails validation (use --raw for raw vectors); deficit " +
                                            rat_to_string(v.deficit));
        }
        MomentVectorY y = x_to_y(law);
        payload["n"] = y.n;
        json arr = json::array();
        for (const Rat& v : y.y) arr.push_back(rat_to_string(v));
        payload["y"] = arr;
        text << "y =";
        for (const Rat& v : y.y) text << " " << rat_to_string(v);
        text << "\n";
    } else if (direction == "y-to-x") {
        if (!input.contains("y")) throw std::invalid_argument("moments: missing \"y\" array");
        MomentVectorY y;
        y.n = input.at("n").get<int>();
        for (const auto& v : input["y"]) y.y.push_back(rational_from_json(v));
        if (static_cast<int>(y.y.size()) != y.n + 1)
            throw std::invalid_argument("moments: \"y\" must have n+1 entries");
        BinaryLawX law = y_to_x(y);
        payload = binary_to_json(law);
        text << "x =";
        for (const Rat& v : law.x) text << " " << rat_to_string(v);
        text << "\n";
    } else {
        throw std::invalid_argument("moments: direction must be auto, x-to-y or y-to-x");
    }
    emit(opt, payload, text.str());
    return kExitOk;
}

int cmd_reinforcement(const Options& opt, const std::string& path, bool allow_unnormalized) {
    BinaryLawX law = load_binary(path, allow_unnormalized);
    auto items = reinforcement_check(law);
    bool all_hold = true;
    json arr = json::array();
    std::ostringstream text;
    for (const auto& item : items) {
        all_hold = all_hold && item.holds;
        arr.push_back(json{{"i", item.i},
                           {"x_i_squared", rat_to_string(item.lhs)},
                           {"x_prev_times_x_next", rat_to_string(item.rhs)},
                           {"holds", item.holds}});
        text << "i=" << item.i << ": x_i^2 = " << rat_to_string(item.lhs)
             << (item.holds ? " <= " : " > ") << rat_to_string(item.rhs) << " = x_{i-1} x_{i+1}"
             << (item.holds ? "" : "  (fails)") << "\n";
    }
    json payload;
    payload["items"] = arr;
    payload["all_hold"] = all_hold;
    if (law.n == 4) {
        json vals = json::array();
        for (const Rat& v : n4_inequalities(law)) vals.push_back(rat_to_string(v));
        payload["n4_inequalities"] = vals;
    }
    text << "all hold: " << (all_hold ? "true" : "false") << "\n";
    emit(opt, payload, text.str());
    return all_hold ? kExitOk : kExitVerdictNo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tests and constructions for finite (partially) exchangeable laws"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    std::map<std::string, OutputMode> output_map{{"json", OutputMode::json_mode},
                                                 {"text", OutputMode::text_mode}};
    app.add_option("--output", opt.output, "Output format")
        ->transform(CLI::CheckedTransformer(output_map, CLI::ignore_case))
        ->default_val("json");
    app.add_option("--seed", opt.seed, "Seed for randomized test helpers (reserved)");

    std::string in_path = "-";
    bool allow_unnormalized = false, witness = false, exact = true, scan = false, raw = false;
    int n_arg = 0, max_tail_points = 1;
    unsigned long long cap = 1'000'000;
    std::string gens_text, group_input, direction = "auto";
    std::vector<int> spec_classes, spec_ms;
    std::vector<std::string> spec_heads, spec_tails;

    auto* validate_cmd = app.add_subcommand("validate", "Validate a law file");
    validate_cmd->add_option("file", in_path, "Law JSON file or '-' for stdin");

    auto* check = app.add_subcommand("check-mixture", "True-mixture verdict for a binary law");
    check->add_option("file", in_path, "Binary law JSON file or '-'");
    check->add_flag("--allow-unnormalized", allow_unnormalized, "Rescale x to total mass 1");
    check->add_flag("--witness", witness, "Include the witness in the output");
    check->add_flag("--exact", exact, "Exact arithmetic verdict (default; accepted for compatibility)");

    auto* represent = app.add_subcommand("represent", "Signed mixture of product laws");
    represent->add_option("file", in_path, "Law JSON file or '-'");

    auto* reduce = app.add_subcommand("reduce-group", "Orbit partition and product-group test");
    reduce->add_option("--n", n_arg, "Degree of the permutations");
    reduce->add_option("--gens", gens_text, "Comma-separated cycle strings, e.g. \"(1 2)(3 4),(1 3)\"");
    reduce->add_option("--input", group_input, "JSON file with {\"n\":...,\"generators\":[...]}");
    reduce->add_option("--cap", cap, "Closure size cap")->default_val(1'000'000);

    auto* necessary = app.add_subcommand("necessary", "Necessary-condition matrices for true mixtures");
    necessary->add_option("file", in_path, "Law JSON file or '-'");
    necessary->add_flag("--scan", scan, "Scan all specs up to the tail bound");
    necessary->add_option("--max-tail-points", max_tail_points, "Tail union size bound")->default_val(1);
    necessary->add_option("--class", spec_classes, "Class index (1-based, repeatable)");
    necessary->add_option("--m", spec_ms, "Half-order m for the matching --class");
    necessary->add_option("--A", spec_heads, "Head set: comma-separated state labels");
    necessary->add_option("--B", spec_tails, "Tail: 'full' or ;-separated points of comma-separated labels");

    auto* counter = app.add_subcommand("counterexample", "Reinforcement-passing non-mixture law");
    counter->add_option("--n", n_arg, "Sequence length (>= 4)")->required();

    auto* moments = app.add_subcommand("moments", "Transform between x and moment vectors");
    moments->add_option("file", in_path, "JSON with {\"n\",\"x\"} or {\"n\",\"y\"}, or '-'");
    moments->add_option("--direction", direction, "auto | x-to-y | y-to-x")->default_val("auto");
    moments->add_flag("--raw", raw, "Skip the normalization check for raw vectors");

    auto* reinf = app.add_subcommand("reinforcement", "Reinforcement inequalities of a binary law");
    reinf->add_option("file", in_path, "Binary law JSON file or '-'");
    reinf->add_flag("--allow-unnormalized", allow_unnormalized, "Rescale x to total mass 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(opt, in_path);
        if (check->parsed()) return cmd_check_mixture(opt, in_path, allow_unnormalized, witness);
        if (represent->parsed()) return cmd_represent(opt, in_path);
        if (reduce->parsed())
            return cmd_reduce_group(opt, group_input, n_arg, gens_text, static_cast<size_t>(cap));
        if (necessary->parsed())
            return cmd_necessary(opt, in_path, scan, max_tail_points, spec_classes, spec_ms, spec_heads,
                                 spec_tails);
        if (counter->parsed()) return cmd_counterexample(opt, n_arg);
        if (moments->parsed()) return cmd_moments(opt, in_path, direction, raw);
        if (reinf->parsed()) return cmd_reinforcement(opt, in_path, allow_unnormalized);
    } catch (const guard_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
