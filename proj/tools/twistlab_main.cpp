// twistlab: command-line front end for the norm/centralizer laboratory.
//
//   twistlab norm --space <name> --vector <json>
//   twistlab dual --space <name> --vector <json> [--tol t]
//   twistlab centralizer --spec <kp|scaled:n|couple:space> --vector <json>
//   twistlab verify <scenario>|all [--n a,b,c] [--limit N] [--seed S]
//                   [--eta E] [--rho R] [--format json|csv] [--out path]
//
// Vectors are JSON: a dense array ([1, -2, 3], index 1 first) or a sparse
// object ({"3": 2.0, "7": -1.5}). Exit code 0 iff all requested cells pass.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistlab/ackermann.hpp"
#include "twistlab/centralizer.hpp"
#include "twistlab/dual_norm.hpp"
#include "twistlab/harness.hpp"
#include "twistlab/norms.hpp"
#include "twistlab/report.hpp"

namespace {

twistlab::RealVector parse_vector(const std::string& text) {
    nlohmann::json parsed = nlohmann::json::parse(text);
    std::vector<twistlab::RealVector::Entry> entries;
    if (parsed.is_array()) {
        long long index = 1;
        for (const auto& v : parsed) entries.push_back({index++, v.get<double>()});
    } else if (parsed.is_object()) {
        for (const auto& [key, v] : parsed.items()) {
            entries.push_back({std::stoll(key), v.get<double>()});
        }
    } else {
        throw std::invalid_argument("vector must be a JSON array or object");
    }
    return twistlab::RealVector::from_entries(std::move(entries));
}

std::string print_vector(const twistlab::RealVector& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& e : v.entries()) {
        out[std::to_string(e.index)] = e.value;
    }
    return out.dump();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-dimensional laboratory for twisted Hilbert sequence spaces"};
    app.require_subcommand(1);

    std::string space_name, vector_text, spec_name, scenario;
    double tol = twistlab::kDefaultDualTol;
    std::string ns, format = "json", out_path;
    long long limit = -1;
    long long seed = -1;
    double eta = -1.0, rho = -1.0;

    CLI::App* norm_cmd = app.add_subcommand("norm", "Evaluate a norm");
    norm_cmd->add_option("--space", space_name, "Space name")->required();
    norm_cmd->add_option("--vector", vector_text, "Vector as JSON")->required();

    CLI::App* dual_cmd = app.add_subcommand("dual", "Evaluate a dual norm with certificates");
    dual_cmd->add_option("--space", space_name, "Base space name")->required();
    dual_cmd->add_option("--vector", vector_text, "Vector as JSON")->required();
    dual_cmd->add_option("--tol", tol, "Relative certificate tolerance");

    CLI::App* cent_cmd = app.add_subcommand("centralizer", "Apply a centralizer");
    cent_cmd->add_option("--spec", spec_name, "kp | scaled:<n> | couple:<space>")->required();
    cent_cmd->add_option("--vector", vector_text, "Vector as JSON")->required();

    int gtable_n = 3;
    long long gtable_k = 16;
    long long alpha_limit = 4096;
    CLI::App* gtable_cmd =
        app.add_subcommand("gtable", "Emit the g-table and an alpha scan as CSV");
    gtable_cmd->add_option("--max-n", gtable_n, "Largest hierarchy level");
    gtable_cmd->add_option("--max-k", gtable_k, "Largest argument");
    gtable_cmd->add_option("--alpha-limit", alpha_limit, "Alpha scan upper bound");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run scenario checks");
    verify_cmd->add_option("scenario", scenario, "Scenario name, or 'all'")->required();
    verify_cmd->add_option("--n", ns, "Comma-separated n list");
    verify_cmd->add_option("--limit", limit, "Scan limit (ackermann)");
    verify_cmd->add_option("--seed", seed, "Master seed");
    verify_cmd->add_option("--eta", eta, "Eta parameter (growth_pipeline)");
    verify_cmd->add_option("--rho", rho, "Rho parameter (growth_pipeline)");
    verify_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--out", out_path, "Report file path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (norm_cmd->parsed()) {
            twistlab::SpaceSpec space = twistlab::SpaceSpec::from_name(space_name);
            std::printf("%.15g\n", twistlab::norm(space, parse_vector(vector_text)));
            return 0;
        }
        if (dual_cmd->parsed()) {
            twistlab::SpaceSpec space = twistlab::SpaceSpec::from_name(space_name);
            twistlab::DualNormResult r =
                twistlab::dual_norm(space, parse_vector(vector_text), tol);
            std::printf("value %.15g\nlower %.15g\nupper %.15g\niterations %d\n", r.value,
                        r.lower, r.upper, r.iterations);
            return 0;
        }
        if (cent_cmd->parsed()) {
            twistlab::CentralizerSpec spec = twistlab::CentralizerSpec::from_name(spec_name);
            std::cout << print_vector(
                             twistlab::apply_centralizer(spec, parse_vector(vector_text)))
                      << "\n";
            return 0;
        }

        if (gtable_cmd->parsed()) {
            std::printf("table,n,k,value\n");
            for (const auto& row :
                 twistlab::g_table(gtable_n, static_cast<std::uint64_t>(gtable_k))) {
                std::printf("g,%d,%llu,%s\n", row.n, static_cast<unsigned long long>(row.k),
                            row.value.to_string().c_str());
            }
            for (long long n = 1; n <= alpha_limit; n *= 2) {
                std::printf("alpha,%lld,,%d\n", n,
                            twistlab::inverse_ackermann(
                                twistlab::ExtNat(static_cast<std::uint64_t>(n))));
            }
            return 0;
        }

        twistlab::harness::Params params;
        if (!ns.empty()) params["n"] = ns;
        if (limit >= 0) params["limit"] = std::to_string(limit);
        if (seed >= 0) params["seed"] = std::to_string(seed);
        if (eta >= 0.0) params["eta"] = std::to_string(eta);
        if (rho >= 0.0) params["rho"] = std::to_string(rho);

        std::vector<twistlab::harness::ScenarioResult> results;
        if (scenario == "all") {
            results = twistlab::harness::run_all(params);
        } else {
            results.push_back(twistlab::harness::run_scenario(scenario, params));
        }

        std::string report = format == "csv" ? twistlab::harness::to_csv(results)
                                             : twistlab::harness::to_json(results);
        if (out_path.empty()) {
            std::cout << report;
        } else {
            twistlab::harness::export_report(results,
                                             format == "csv"
                                                 ? twistlab::harness::ReportFormat::Csv
                                                 : twistlab::harness::ReportFormat::Json,
                                             out_path);
        }
        for (const auto& r : results) {
            if (!r.all_pass()) return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
