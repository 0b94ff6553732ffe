#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace twistlab::harness {

/// Comparison mode for a cell, relative to `expected`:
///   Eq: |computed - expected| <= tol * max(1, |expected|)
///   Ge: computed >= expected - tol * max(1, |expected|)
///   Le: computed <= expected + tol * max(1, |expected|)
enum class Relation { Eq, Ge, Le };

struct Cell {
    std::string name;
    std::string inputs;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::Eq;
    bool pass = false;
    std::string diagnostic;  // nonempty when the cell raised an error
};

struct ScenarioResult {
    std::string name;
    std::vector<Cell> cells;
    std::uint64_t seed = 0;
    std::int64_t runtime_ms = 0;
    bool all_pass() const;
};

/// Scenario parameters as parsed from the CLI: "n" (comma-separated list),
/// "limit", "seed", "eta", "rho". Unknown keys are rejected.
using Params = std::map<std::string, std::string>;

const std::vector<std::string>& registered_scenarios();

/// Runs one scenario. Cells execute on a worker pool (capped by the
/// TWISTLAB_THREADS environment variable); each cell derives a deterministic
/// sub-seed from (master seed, cell index). Unknown names raise
/// std::invalid_argument listing the registered scenarios.
ScenarioResult run_scenario(const std::string& name, const Params& params = {});

/// The default suite: every registered scenario at default parameters.
std::vector<ScenarioResult> run_all(const Params& params = {});

std::string relation_name(Relation r);

}  // namespace twistlab::harness
