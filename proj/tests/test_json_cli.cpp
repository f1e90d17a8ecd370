#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "definetti/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace definetti;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// runs the CLI found via DEFINETTI_CLI with stdin fed from `input`
RunResult run_cli(const std::string& args, const std::string& input = "") {
    const char* bin = std::getenv("DEFINETTI_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "DEFINETTI_CLI must point at the CLI binary");
    std::string in_file = "/tmp/definetti_cli_in.json";
    {
        std::ofstream f(in_file);
        f << input;
    }
    std::string cmd = std::string(bin) + " " + args + " < " + in_file + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

const char* kAntitheticLaw =
    R"({"states":["0","1"],"partition":[[1,2]],"orbits":{"1,1":"1"}})";

} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-3/4") == Rat(-3, 4));
    CHECK(parse_rational("5") == Rat(5));
    CHECK(rat_to_string(Rat(6, 8)) == "3/4");
    CHECK(rat_to_string(Rat(-6, 8)) == "-3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("law JSON round trip through both forms") {
    auto law = law_from_json(json::parse(kAntitheticLaw));
    CHECK(law.table == std::vector<Rat>{0, Rat(1, 2), Rat(1, 2), 0});

    auto law2 = law_from_json(json::parse(
        R"({"states":["0","1"],"partition":[[1,2]],"table":{"0,1":"1/2","1,0":"1/2"}})"));
    CHECK(law2.table == law.table);

    auto echoed = law_from_json(law_to_json(law));
    CHECK(echoed.table == law.table);
}

TEST_CASE("binary law and mixture JSON") {
    auto blaw = binary_from_json(json::parse(R"({"n":4,"x":["9/62","5/62","3/62","3/62","3/62"]})"));
    CHECK(blaw.x[0] == Rat(9, 62));
    CHECK(binary_to_json(blaw)["x"][1] == "5/62");

    SignedMixture mix;
    mix.space.labels = {"0", "1"};
    mix.partition = PartitionSpec::single_class(2);
    mix.atoms.push_back({{{Rat(1, 2), Rat(1, 2)}}, Rat(2)});
    auto j = mixture_to_json(mix);
    auto back = mixture_from_json(j, mix.space, mix.partition);
    CHECK(back.atoms.size() == 1);
    CHECK(back.atoms[0].weight == 2);
    CHECK(back.atoms[0].components == mix.atoms[0].components);
}

TEST_CASE("measure and generator JSON") {
    auto mu = measure_from_json(json::parse(R"({"atoms":[{"p":0.2,"w":0.5},{"p":0.7,"w":0.5}]})"));
    REQUIRE(mu.atoms.size() == 2);
    CHECK(mu.atoms[1].location == 0.7);
    CHECK(measure_to_json(mu)["atoms"][0]["p"] == 0.2);

    auto [n, gens] = generators_from_json(json::parse(R"({"n":4,"generators":[[2,1,3,4],[1,2,4,3]]})"));
    CHECK(n == 4);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].image == std::vector<int>{1, 0, 2, 3});
}

TEST_CASE("cli: counterexample and check-mixture") {
    auto ce = run_cli("counterexample --n 4");
    CHECK(ce.exit_code == 0);
    auto j = json::parse(ce.output);
    CHECK(j["x"][0] == "9/62");

    auto chk = run_cli("check-mixture -", ce.output);
    CHECK(chk.exit_code == 1); // verdict NO
    auto jc = json::parse(chk.output);
    CHECK(jc["verdict"] == "NO");
    CHECK(jc["witness"]["matrix"] == "H");
    CHECK(jc["witness"]["minor"] == json::array({1, 2, 3}));
    CHECK(jc["witness"]["det"] == "-3/59582");

    auto yes = run_cli("check-mixture -", R"({"n":2,"x":["1/4","1/4","1/4"]})");
    CHECK(yes.exit_code == 0);
    auto jy = json::parse(yes.output);
    CHECK(jy["verdict"] == "YES");
    CHECK(std::abs(jy["witness"]["measure"]["atoms"][0]["p"].get<double>() - 0.5) < 1e-8);

    auto bad = run_cli("check-mixture -", R"({"n":2,"x":["1/4","1/4","1/2"]})");
    CHECK(bad.exit_code == 2); // not normalized
}

TEST_CASE("cli: represent emits the signed mixture with its negative mass") {
    auto rep = run_cli("represent -", kAntitheticLaw);
    CHECK(rep.exit_code == 0);
    auto j = json::parse(rep.output);
    CHECK(j["verified"] == true);
    CHECK(j["negative_mass"] == "1");
    REQUIRE(j["atoms"].size() == 3);
    CHECK(j["atoms"][1]["weight"] == "2");

    auto uniform = run_cli("represent -", R"({"states":["0","1"],"partition":[[1,2]],
        "table":{"0,0":"1/4","0,1":"1/4","1,0":"1/4","1,1":"1/4"}})");
    CHECK(uniform.exit_code == 0);
    CHECK(json::parse(uniform.output)["verified"] == true);
}

TEST_CASE("cli: reduce-group") {
    auto r = run_cli("reduce-group --n 4 --gens \"(1 2),(3 4)\"");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.output);
    CHECK(j["group_order"] == "4");
    CHECK(j["is_product"] == true);
    CHECK(j["partition"] == json::parse("[[1,2],[3,4]]"));

    auto r3 = run_cli("reduce-group --n 3 --gens \"(1 2 3)\"");
    CHECK(r3.exit_code == 0);
    auto j3 = json::parse(r3.output);
    CHECK(j3["group_order"] == "3");
    CHECK(j3["is_product"] == false);

    auto bad = run_cli("reduce-group --n 3 --gens \"(1 9)\"");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: necessary in single-spec and scan modes") {
    auto one = run_cli("necessary - --class 1 --m 1 --A 1 --B full", kAntitheticLaw);
    CHECK(one.exit_code == 1);
    auto j = json::parse(one.output);
    CHECK(j["verdict"]["is_psd"] == false);
    CHECK(j["verdict"]["minor_det"] == "-1/4");

    auto scan = run_cli("necessary - --scan", kAntitheticLaw);
    CHECK(scan.exit_code == 1);
    CHECK(json::parse(scan.output)["any_failure"] == true);
}

TEST_CASE("cli: moments, reinforcement, validate") {
    auto m = run_cli("moments -", R"({"n":2,"x":["1/4","1/4","1/4"]})");
    CHECK(m.exit_code == 0);
    CHECK(json::parse(m.output)["y"] == json::array({"1/4", "1/2", "1"}));

    auto back = run_cli("moments -", R"({"n":2,"y":["1/4","1/2","1"]})");
    CHECK(back.exit_code == 0);
    CHECK(json::parse(back.output)["x"] == json::array({"1/4", "1/4", "1/4"}));

    auto reinf = run_cli("reinforcement -", R"({"n":2,"x":["0","1/2","0"]})");
    CHECK(reinf.exit_code == 1);
    CHECK(json::parse(reinf.output)["all_hold"] == false);

    auto val = run_cli("validate -", kAntitheticLaw);
    CHECK(val.exit_code == 0);
    CHECK(json::parse(val.output)["valid"] == true);

    auto bad = run_cli("validate -",
                       R"({"states":["0","1"],"partition":[[1,2]],"table":{"0,0":"1/2","0,1":"1/2"}})");
    CHECK(bad.exit_code == 1);
    CHECK(json::parse(bad.output)["valid"] == false);
}

TEST_CASE("law JSON rejects malformed structure") {
    // overlapping partition classes
    CHECK_THROWS_AS(law_from_json(json::parse(
                        R"({"states":["0","1"],"partition":[[1,2],[2]],"orbits":{}})")),
                    std::invalid_argument);
    // orbit key with the wrong class count
    CHECK_THROWS_AS(law_from_json(json::parse(
                        R"({"states":["0","1"],"partition":[[1,2]],"orbits":{"1,1|1,1":"1"}})")),
                    std::invalid_argument);
    // orbit key whose counts miss the class size
    CHECK_THROWS_AS(law_from_json(json::parse(
                        R"({"states":["0","1"],"partition":[[1,2]],"orbits":{"3,1":"1"}})")),
                    std::invalid_argument);
    // unknown state in a point key
    CHECK_THROWS_AS(law_from_json(json::parse(
                        R"({"states":["0","1"],"partition":[[1]],"table":{"2":"1"}})")),
                    std::invalid_argument);
    // duplicate state labels
    CHECK_THROWS_AS(law_from_json(json::parse(
                        R"({"states":["0","0"],"partition":[[1]],"orbits":{}})")),
                    std::invalid_argument);
}

TEST_CASE("cli: malformed input and guard overflow exit codes") {
    auto garbage = run_cli("check-mixture -", "{nope");
    CHECK(garbage.exit_code == 2);

    auto bad_partition = run_cli("validate -",
                                 R"({"states":["0","1"],"partition":[[1,3]],"orbits":{}})");
    CHECK(bad_partition.exit_code == 2);

    auto bad_cycles = run_cli("reduce-group --n 3 --gens \"(1 2\"");
    CHECK(bad_cycles.exit_code == 2);

    // 12^9 > 10^7 table points
    auto big = run_cli("represent -",
                       R"({"states":["a","b","c","d","e","f","g","h","i","j","k","l"],
                           "partition":[[1,2,3,4,5,6,7,8,9]],"orbits":{}})");
    CHECK(big.exit_code == 3);
}

TEST_CASE("cli: output is byte-identical across runs") {
    auto a = run_cli("counterexample --n 6");
    auto b = run_cli("counterexample --n 6");
    CHECK(a.output == b.output);
    auto c = run_cli("represent -", kAntitheticLaw);
    auto d = run_cli("represent -", kAntitheticLaw);
    CHECK(c.output == d.output);
}
