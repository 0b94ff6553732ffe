#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <sstream>

#include "twistlab/coverage.hpp"
#include "twistlab/harness.hpp"
#include "twistlab/report.hpp"

using namespace twistlab;
using namespace twistlab::harness;

namespace {

const Cell* find_cell(const ScenarioResult& r, const std::string& name) {
    for (const auto& c : r.cells)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("scenario registry") {
    auto names = registered_scenarios();
    CHECK(names.size() == 9);
    for (const char* expected :
         {"claimA", "claimC", "schreier_isometry", "c0_blocks", "kp_spread",
          "centralizer_axioms", "couple_consistency", "ackermann", "growth_pipeline"}) {
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    }
    try {
        run_scenario("no_such_scenario", {});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        // the error names the available scenarios
        CHECK(std::string(e.what()).find("claimC") != std::string::npos);
    }
    CHECK_THROWS_AS(run_scenario("claimC", {{"bogus_param", "1"}}), std::invalid_argument);
}

TEST_CASE("kp_spread pins the logarithmic growth") {
    auto r = run_scenario("kp_spread", {{"seed", "5"}});
    REQUIRE(r.all_pass());
    const Cell* c = find_cell(r, "spread_n100");
    REQUIRE(c != nullptr);
    CHECK(c->computed == doctest::Approx(10.0 * std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("claimC pins the euclidean constant") {
    auto r = run_scenario("claimC", {{"n", "4"}, {"seed", "5"}});
    REQUIRE(r.all_pass());
    const Cell* k = find_cell(r, "K_flat_n4");
    REQUIRE(k != nullptr);
    CHECK(k->expected == doctest::Approx(1.0 + 4.0 * std::log(2.0)).epsilon(1e-12));
    const Cell* c7 = find_cell(r, "eq7_coefficient_n4");
    REQUIRE(c7 != nullptr);
    CHECK(c7->computed == doctest::Approx(-2.0));
}

TEST_CASE("ackermann scenario honors the limit parameter") {
    auto r = run_scenario("ackermann", {{"limit", "10000"}});
    CHECK(r.all_pass());
    for (const auto& c : r.cells) CHECK(c.diagnostic.empty());
}

TEST_CASE("scenarios are deterministic per seed") {
    auto a = run_scenario("schreier_isometry", {{"seed", "11"}});
    auto b = run_scenario("schreier_isometry", {{"seed", "11"}});
    a.runtime_ms = b.runtime_ms = 0;
    CHECK(to_json(a) == to_json(b));
    auto c = run_scenario("schreier_isometry", {{"seed", "12"}});
    c.runtime_ms = 0;
    CHECK(to_json(a) != to_json(c));
}

TEST_CASE("pass rule uses relative slack") {
    ScenarioResult r;
    r.name = "synthetic";
    Cell eq{"close"};
    eq.computed = 100.0 + 5e-7;
    eq.expected = 100.0;
    eq.tolerance = 1e-8;
    // |c - e| = 5e-7 <= 1e-8 * max(1, 100) = 1e-6
    r.cells.push_back(eq);
    CHECK(r.cells[0].computed - r.cells[0].expected <=
          r.cells[0].tolerance * std::max(1.0, std::fabs(r.cells[0].expected)));
}

TEST_CASE("json report shape") {
    auto r = run_scenario("kp_spread", {{"seed", "3"}});
    auto parsed = nlohmann::json::parse(to_json(r));
    CHECK(parsed["name"] == "kp_spread");
    CHECK(parsed["seed"] == 3);
    CHECK(parsed["pass"] == r.all_pass());
    REQUIRE(parsed["cells"].size() == r.cells.size());
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
        const auto& cj = parsed["cells"][i];
        CHECK(cj["name"] == r.cells[i].name);
        CHECK(cj["computed"] == format_number(r.cells[i].computed));
        CHECK(cj["expected"] == format_number(r.cells[i].expected));
        CHECK(cj["relation"] == relation_name(r.cells[i].relation));
        CHECK(cj["pass"] == r.cells[i].pass);
        CHECK_FALSE(cj.contains("runtime_ms"));
    }
    std::vector<ScenarioResult> all = {r, r};
    auto combined = nlohmann::json::parse(to_json(all));
    CHECK(combined["results"].size() == 2);
    CHECK(combined["pass"] == r.all_pass());
}

TEST_CASE("csv report shape") {
    auto r = run_scenario("kp_spread", {{"seed", "3"}});
    std::vector<ScenarioResult> all = {r};
    std::istringstream csv(to_csv(all));
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line == "scenario,cell,inputs,computed,expected,tolerance,pass");
    std::size_t rows = 0;
    while (std::getline(csv, line))
        if (!line.empty()) ++rows;
    CHECK(rows == r.cells.size());
    CHECK(to_csv({}) == "scenario,cell,inputs,computed,expected,tolerance,pass\n");
}

TEST_CASE("number formatting") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(INFINITY) == "inf");
    CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("default scenarios cover the whole surface") {
    auto results = run_all({{"seed", "7"}});
    REQUIRE(results.size() == registered_scenarios().size());
    for (const auto& r : results) {
        INFO(r.name);
        CHECK(r.all_pass());
    }
    auto touched = coverage::touched();
    for (const char* op :
         {"is_admissible", "enumerate_admissible", "norm", "schreier_norm", "convexify2_norm",
          "l2sum_blocks_norm", "sym_tsirelson2_norm", "jspace_params", "tsirelson_norm",
          "dual_norm", "kalton_peck", "scaled_centralizer", "lozanovskii_factorize",
          "couple_centralizer", "apply_centralizer", "twisted_quasinorm", "centralizer_defect",
          "symmetry_defect", "euclidean_constant", "rademacher_average", "type2_ratio",
          "cotype2_ratio", "type2_search", "kwapien_bound", "bm_distance_lp",
          "twisted_distance_bound", "norming_dim", "ackermann_g", "inverse_ackermann",
          "verify_alpha_shift", "growth_bound"}) {
        INFO(op);
        CHECK(touched.count(op) == 1);
    }
}
