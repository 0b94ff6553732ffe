#include "twistlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "twistlab/ackermann.hpp"
#include "twistlab/admissible.hpp"
#include "twistlab/centralizer.hpp"
#include "twistlab/dual_norm.hpp"
#include "twistlab/estimates.hpp"
#include "twistlab/norms.hpp"
#include "twistlab/tsirelson.hpp"

namespace twistlab::harness {

namespace {

constexpr double kLog2 = 0.6931471805599453;

// Prefilled cell metadata plus the body that computes it. The body receives
// the cell's deterministic sub-seed and may adjust expected/tolerance (for
// sample-dependent targets) before returning the computed value.
struct Job {
    Cell cell;
    std::function<double(std::uint64_t, Cell&)> body;
};

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t sub_seed(std::uint64_t master, std::size_t cell_index) {
    return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(cell_index) + 1));
}

int worker_count() {
    if (const char* env = std::getenv("TWISTLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : static_cast<int>(std::min(hw, 8u));
}

bool cell_passes(const Cell& c) {
    if (!c.diagnostic.empty() || !std::isfinite(c.computed)) return false;
    double slack = c.tolerance * std::max(1.0, std::fabs(c.expected));
    switch (c.relation) {
        case Relation::Eq: return std::fabs(c.computed - c.expected) <= slack;
        case Relation::Ge: return c.computed >= c.expected - slack;
        case Relation::Le: return c.computed <= c.expected + slack;
    }
    return false;
}

// ---- parameter parsing ----------------------------------------------------

const Params::mapped_type* find_param(const Params& p, const std::string& key) {
    auto it = p.find(key);
    return it == p.end() ? nullptr : &it->second;
}

std::vector<int> param_ns(const Params& p, std::vector<int> fallback) {
    const std::string* raw = find_param(p, "n");
    if (!raw) return fallback;
    std::vector<int> out;
    std::stringstream ss(*raw);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty n list");
    return out;
}

long long param_ll(const Params& p, const std::string& key, long long fallback) {
    const std::string* raw = find_param(p, key);
    return raw ? std::stoll(*raw) : fallback;
}

double param_double(const Params& p, const std::string& key, double fallback) {
    const std::string* raw = find_param(p, key);
    return raw ? std::stod(*raw) : fallback;
}

void reject_unknown_params(const Params& p) {
    for (const auto& [key, value] : p) {
        if (key != "n" && key != "limit" && key != "seed" && key != "eta" && key != "rho") {
            throw std::invalid_argument("unknown parameter: " + key);
        }
    }
}

// ---- random inputs --------------------------------------------------------

RealVector random_vector(std::mt19937_64& rng, long long max_index, int support) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<long long> pick(1, max_index);
    std::vector<RealVector::Entry> entries;
    for (int i = 0; i < support; ++i) entries.push_back({pick(rng), gauss(rng)});
    RealVector v = RealVector::from_entries(std::move(entries));
    return v.is_zero() ? RealVector::basis(1) : v;
}

// Random vector supported on a random admissible subset of {1..max_index}.
RealVector random_admissible_vector(std::mt19937_64& rng, long long max_index) {
    std::uniform_int_distribution<long long> min_pick(2, max_index / 2);
    long long m = min_pick(rng);
    long long room = max_index - m;  // indices above m available
    std::uniform_int_distribution<long long> size_pick(1, std::min(m, room + 1));
    long long k = size_pick(rng);
    std::vector<long long> pool;
    for (long long j = m + 1; j <= max_index; ++j) pool.push_back(j);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<long long> support = {m};
    for (long long i = 0; i < k - 1; ++i) support.push_back(pool[i]);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<RealVector::Entry> entries;
    for (long long j : support) {
        double v = gauss(rng);
        entries.push_back({j, v == 0.0 ? 1.0 : v});
    }
    return RealVector::from_entries(std::move(entries));
}

RealVector unit(const RealVector& v) { return v.scaled(1.0 / v.l2_norm()); }

// Lemma 4.2 block u_n = 2^{(1-n)/2} sum_{j=2^{n-1}}^{2^n-1} e_j.
RealVector c0_block(int n) {
    std::vector<RealVector::Entry> entries;
    long long lo = 1LL << (n - 1);
    long long hi = (1LL << n) - 1;
    double coeff = std::pow(2.0, (1.0 - n) / 2.0);
    for (long long j = lo; j <= hi; ++j) entries.push_back({j, coeff});
    return RealVector::from_entries(std::move(entries));
}

RealVector flat(long long count) {
    std::vector<long long> indices(count);
    for (long long j = 0; j < count; ++j) indices[j] = j + 1;
    return RealVector::indicator(indices);
}

std::function<long long(long long)> random_permutation(std::mt19937_64& rng, long long width) {
    auto table = std::make_shared<std::vector<long long>>(width);
    for (long long j = 0; j < width; ++j) (*table)[j] = j + 1;
    std::shuffle(table->begin(), table->end(), rng);
    return [table, width](long long j) { return j <= width ? (*table)[j - 1] : j; };
}

// ---- scenarios ------------------------------------------------------------

Job make(std::string name, std::string inputs, double expected, double tol, Relation rel,
         std::function<double(std::uint64_t, Cell&)> body) {
    Job job;
    job.cell.name = std::move(name);
    job.cell.inputs = std::move(inputs);
    job.cell.expected = expected;
    job.cell.tolerance = tol;
    job.cell.relation = rel;
    job.body = std::move(body);
    return job;
}

std::vector<Job> scenario_claim_c(const Params& params) {
    std::vector<Job> jobs;
    for (int n : param_ns(params, {4, 9, 16})) {
        double root = std::sqrt(static_cast<double>(n));
        long long count = 1LL << n;
        std::string tag = "n=" + std::to_string(n) + " |B|=" + std::to_string(count);
        jobs.push_back(make(
            "eq7_coefficient_n" + std::to_string(n), tag, -4.0 / root, 1e-12, Relation::Eq,
            [n](std::uint64_t, Cell&) {
                JSpaceParams jp = jspace_params(n);
                double inv_star = jp.p_star == kInfExponent ? 0.0 : 1.0 / jp.p_star;
                return 2.0 * inv_star - 2.0 / jp.p;
            }));
        jobs.push_back(make(
            "eq8_norm_n" + std::to_string(n), tag,
            2.0 * root * std::sqrt(static_cast<double>(count)) * kLog2, 1e-9, Relation::Eq,
            [n, count](std::uint64_t, Cell&) {
                return scaled_centralizer(n, flat(count)).l2_norm();
            }));
        double k_flat = 1.0 + 2.0 * root * kLog2;
        jobs.push_back(make(
            "K_flat_n" + std::to_string(n), tag + " flat+sign coefficients", k_flat, 1e-9,
            Relation::Eq, [n, count](std::uint64_t seed, Cell&) {
                std::vector<long long> J(count);
                for (long long j = 0; j < count; ++j) J[j] = j + 1;
                CoefficientSampler sampler{seed, 0, 0};
                return euclidean_constant(CentralizerSpec::scaled_for_jspace(n), J, sampler);
            }));
        jobs.push_back(make(
            "K_minus_one_lower_n" + std::to_string(n), tag, 2.0 * root * kLog2, 1e-9,
            Relation::Ge, [n, count](std::uint64_t seed, Cell&) {
                std::vector<long long> J(count);
                for (long long j = 0; j < count; ++j) J[j] = j + 1;
                CoefficientSampler sampler{seed, 0, 0};
                return euclidean_constant(CentralizerSpec::scaled_for_jspace(n), J, sampler) - 1.0;
            }));
    }
    return jobs;
}

std::vector<Job> scenario_claim_a(const Params& params) {
    std::vector<Job> jobs;
    for (int n : param_ns(params, {4, 9, 16, 25})) {
        double root = std::sqrt(static_cast<double>(n));
        jobs.push_back(make(
            "distance_n" + std::to_string(n),
            "d(l_p^k, l_2^k) at p=p_" + std::to_string(n) + ", k=2^" + std::to_string(n + 1),
            std::pow(2.0, root) * std::pow(2.0, 1.0 / root), 1e-12, Relation::Eq,
            [n](std::uint64_t, Cell&) {
                JSpaceParams jp = jspace_params(n);
                return bm_distance_lp(jp.p, jp.k);
            }));
    }
    // Eq (5): per-block type-2 ratios of the tail blocks m >= n^2 stay <= 4.
    // Truncation: only the first two blocks above n^2 are materialized.
    jobs.push_back(make(
        "type2_blocks_tail_n4", "blocks m=16,17 of l_2(l_{p_m}^{k_m}); truncated after 2 blocks",
        4.0, 0.0, Relation::Le, [](std::uint64_t seed, Cell&) {
            std::vector<SpaceSpec::Block> blocks;
            for (int m : {16, 17}) {
                JSpaceParams jp = jspace_params(m);
                blocks.push_back({jp.p, jp.k});
            }
            SearchBudget budget{4, seed};
            return type2_search(SpaceSpec::l2_sum_blocks(blocks), 6, budget);
        }));
    jobs.push_back(make(
        "cotype2_ell2_basis", "e_1..e_8 in l_2, exact signs", 1.0, 1e-12, Relation::Eq,
        [](std::uint64_t, Cell&) {
            std::vector<RealVector> family;
            for (long long j = 1; j <= 8; ++j) family.push_back(RealVector::basis(j));
            return cotype2_ratio(SpaceSpec::ell2(), family, RademacherMethod::Exact);
        }));
    jobs.push_back(make(
        "rademacher_mc_vs_exact", "e_1..e_10 in l_1, 10^5 samples, 3 half-widths", 0.0, 1.0,
        Relation::Le, [](std::uint64_t seed, Cell& cell) {
            std::vector<RealVector> family;
            for (long long j = 1; j <= 10; ++j) family.push_back(RealVector::basis(j));
            SpaceSpec l1 = SpaceSpec::lp(1.0);
            double exact = rademacher_average(l1, family, RademacherMethod::Exact).mean;
            MonteCarloBudget mc{100000, seed};
            RademacherEstimate est =
                rademacher_average(l1, family, RademacherMethod::MonteCarlo, mc);
            cell.tolerance = 3.0 * est.half_width;
            return std::fabs(est.mean - exact);
        }));
    jobs.push_back(make(
        "kwapien_product", "a_2=2, c_2=2", 4.0, 1e-12, Relation::Eq,
        [](std::uint64_t, Cell&) { return kwapien_bound(2.0, 2.0).upper; }));
    return jobs;
}

std::vector<Job> scenario_schreier_isometry(const Params&) {
    std::vector<Job> jobs;
    for (int i = 0; i < 6; ++i) {
        std::string tag = "random admissible support, dim<=30, draw " + std::to_string(i);
        jobs.push_back(make(
            "s2_equals_l2_" + std::to_string(i), tag, 0.0, 1e-12, Relation::Eq,
            [](std::uint64_t seed, Cell& cell) {
                std::mt19937_64 rng(seed);
                RealVector y = random_admissible_vector(rng, 30);
                cell.expected = y.l2_norm();
                return norm(SpaceSpec::convexify2(SpaceSpec::schreier()), y);
            }));
        jobs.push_back(make(
            "dual_equals_l2_" + std::to_string(i), tag, 0.0, 1e-6, Relation::Eq,
            [](std::uint64_t seed, Cell& cell) {
                std::mt19937_64 rng(seed);
                RealVector y = random_admissible_vector(rng, 30);
                cell.expected = y.l2_norm();
                return dual_norm(SpaceSpec::convexify2(SpaceSpec::schreier()), y).value;
            }));
    }
    jobs.push_back(make(
        "half_set_admissible", "B = random 8-subset of {1..30}, A = upper half", 4.0, 0.0,
        Relation::Ge, [](std::uint64_t seed, Cell&) {
            std::mt19937_64 rng(seed);
            std::vector<long long> pool(30);
            for (long long j = 0; j < 30; ++j) pool[j] = j + 1;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<long long> B(pool.begin(), pool.begin() + 8);
            std::sort(B.begin(), B.end());
            // Upper half of B: each element exceeds the |B|/2 elements below
            // it, hence min A >= |A| and A is admissible (Lemma 4.4).
            std::vector<long long> A(B.begin() + 4, B.end());
            if (!is_admissible(A)) return -1.0;
            return static_cast<double>(A.size());
        }));
    jobs.push_back(make(
        "admissible_count_10", "enumerate_admissible(10) vs brute force over 1023 subsets", 0.0,
        0.0, Relation::Eq, [](std::uint64_t, Cell& cell) {
            long long brute = 0;
            for (unsigned mask = 1; mask < (1u << 10); ++mask) {
                std::vector<long long> s;
                for (long long j = 0; j < 10; ++j) {
                    if ((mask >> j) & 1) s.push_back(j + 1);
                }
                if (is_admissible(s)) ++brute;
            }
            cell.expected = static_cast<double>(brute);
            return static_cast<double>(enumerate_admissible(10).size());
        }));
    jobs.push_back(make(
        "quasinorm_additivity", "couple:s2 on unit y with admissible support; ||x-Omega(y)||+||y||",
        0.0, 1e-9, Relation::Eq, [](std::uint64_t seed, Cell& cell) {
            std::mt19937_64 rng(seed);
            RealVector y = unit(random_admissible_vector(rng, 30));
            RealVector x = random_vector(rng, 10, 5);
            cell.expected = x.l2_norm() + 1.0;
            CentralizerSpec omega =
                CentralizerSpec::from_couple(SpaceSpec::convexify2(SpaceSpec::schreier()));
            return twisted_quasinorm(omega, {x, y});
        }));
    return jobs;
}

std::vector<Job> scenario_c0_blocks(const Params&) {
    std::vector<Job> jobs;
    const std::vector<std::vector<int>> subsets = {
        {1}, {1, 2}, {2, 5, 8}, {1, 3, 5, 7}, {3, 4, 5, 6, 7, 8}, {1, 2, 3, 4, 5, 6}};
    for (const auto& subset : subsets) {
        std::string tag = "u_n for n in {";
        for (std::size_t i = 0; i < subset.size(); ++i) {
            tag += (i ? "," : "") + std::to_string(subset[i]);
        }
        tag += "}";
        jobs.push_back(make(
            "unit_sum_N" + std::to_string(subset.size()), tag, 1.0, 1e-12, Relation::Eq,
            [subset](std::uint64_t, Cell&) {
                RealVector sum;
                for (int n : subset) sum = sum.plus(c0_block(n));
                return norm(SpaceSpec::convexify2(SpaceSpec::schreier()), sum);
            }));
    }
    for (int i = 0; i < 5; ++i) {
        jobs.push_back(make(
            "dual_lower_" + std::to_string(i),
            "random lambda on u_1..u_5; dual norm vs sum |lambda_n|", 0.0, 1e-6, Relation::Ge,
            [](std::uint64_t seed, Cell& cell) {
                std::mt19937_64 rng(seed);
                std::normal_distribution<double> gauss(0.0, 1.0);
                RealVector y;
                double target = 0.0;
                for (int n = 1; n <= 5; ++n) {
                    double lambda = gauss(rng);
                    if (lambda == 0.0) lambda = 1.0;
                    target += std::fabs(lambda);
                    y = y.plus(c0_block(n).scaled(lambda));
                }
                cell.expected = target;
                return dual_norm(SpaceSpec::convexify2(SpaceSpec::schreier()), y).value;
            }));
    }
    return jobs;
}

std::vector<Job> scenario_kp_spread(const Params& params) {
    std::vector<Job> jobs;
    for (int n : param_ns(params, {100, 10000})) {
        double root = std::sqrt(static_cast<double>(n));
        jobs.push_back(make(
            "spread_n" + std::to_string(n), "||Omega(sum_{j<=n} e_j)||_2",
            root * std::log(root), 1e-12, Relation::Eq,
            [n](std::uint64_t, Cell&) { return kalton_peck(flat(n)).l2_norm(); }));
    }
    return jobs;
}

std::vector<Job> scenario_centralizer_axioms(const Params&) {
    std::vector<Job> jobs;
    jobs.push_back(make(
        "defect_unimodular", "random +-1 multiplier on supp y, dim<=12", 0.0, 1e-12, Relation::Eq,
        [](std::uint64_t seed, Cell&) {
            std::mt19937_64 rng(seed);
            RealVector y = random_vector(rng, 12, 8);
            std::vector<RealVector::Entry> signs;
            for (const auto& e : y.entries()) signs.push_back({e.index, rng() % 2 ? 1.0 : -1.0});
            RealVector a = RealVector::from_entries(std::move(signs));
            return centralizer_defect(CentralizerSpec::kalton_peck(), a, y);
        }));
    jobs.push_back(make(
        "kp_symmetry_eq17", "max symmetry defect over 10 random permutations of {1..12}", 0.0,
        1e-12, Relation::Eq, [](std::uint64_t seed, Cell&) {
            std::mt19937_64 rng(seed);
            double worst = 0.0;
            for (int i = 0; i < 10; ++i) {
                RealVector y = random_vector(rng, 12, 7);
                auto sigma = random_permutation(rng, 12);
                worst = std::max(worst,
                                 symmetry_defect(CentralizerSpec::kalton_peck(), sigma, y));
            }
            return worst;
        }));
    jobs.push_back(make(
        "scaled_symmetry_eq17", "scaled:9 under a random permutation of {1..12}", 0.0, 1e-12,
        Relation::Eq, [](std::uint64_t seed, Cell&) {
            std::mt19937_64 rng(seed);
            RealVector y = random_vector(rng, 12, 7);
            auto sigma = random_permutation(rng, 12);
            return symmetry_defect(CentralizerSpec::scaled_for_jspace(9), sigma, y);
        }));
    jobs.push_back(make(
        "quasinorm_fiber_only", "||(x,0)|| vs ||x||_2", 0.0, 1e-12, Relation::Eq,
        [](std::uint64_t seed, Cell& cell) {
            std::mt19937_64 rng(seed);
            RealVector x = random_vector(rng, 20, 9);
            cell.expected = x.l2_norm();
            return twisted_quasinorm(CentralizerSpec::kalton_peck(), {x, RealVector()});
        }));
    jobs.push_back(make(
        "eq1_empirical_C", "sup over 40 Gaussian pairs of ||Omega(y+z)-Omega(y)-Omega(z)||/(||y||+||z||)",
        4.0, 0.0, Relation::Le, [](std::uint64_t seed, Cell&) {
            std::mt19937_64 rng(seed);
            double worst = 0.0;
            for (int i = 0; i < 40; ++i) {
                RealVector y = random_vector(rng, 12, 6);
                RealVector z = random_vector(rng, 12, 6);
                RealVector sum = y.plus(z);
                if (sum.is_zero()) continue;
                double defect = kalton_peck(sum)
                                    .minus(kalton_peck(y))
                                    .minus(kalton_peck(z))
                                    .l2_norm();
                worst = std::max(worst, defect / (y.l2_norm() + z.l2_norm()));
            }
            return worst;
        }));
    return jobs;
}

std::vector<Job> scenario_couple_consistency(const Params&) {
    std::vector<Job> jobs;
    for (double p : {4.0 / 3.0, 1.5}) {
        double p_star = conjugate_exponent(p);
        double coeff = 2.0 / p_star - 2.0 / p;
        std::string tag = "l_p couple, p=" + std::to_string(p) + ", 8 random unit vectors";
        jobs.push_back(make(
            "couple_vs_kp_p" + std::to_string(p).substr(0, 4), tag, 0.0, 1e-4, Relation::Eq,
            [p, coeff](std::uint64_t seed, Cell&) {
                std::mt19937_64 rng(seed);
                double worst = 0.0;
                for (int i = 0; i < 8; ++i) {
                    RealVector y = unit(random_vector(rng, 16, 8));
                    RealVector derived = couple_centralizer(SpaceSpec::lp(p), y, 1e-6);
                    RealVector reference = kalton_peck(y).scaled(coeff);
                    worst = std::max(worst, derived.minus(reference).linf_norm());
                }
                return worst;
            }));
        jobs.push_back(make(
            "lozanovskii_product_p" + std::to_string(p).substr(0, 4), tag, 1.0, 1e-6,
            Relation::Eq, [p](std::uint64_t seed, Cell&) {
                std::mt19937_64 rng(seed);
                double worst = 1.0;
                for (int i = 0; i < 8; ++i) {
                    RealVector y = unit(random_vector(rng, 16, 8));
                    LozanovskiiResult f = lozanovskii_factorize(SpaceSpec::lp(p), y, 1e-8);
                    if (std::fabs(f.product - 1.0) > std::fabs(worst - 1.0)) worst = f.product;
                }
                return worst;
            }));
    }
    // (l_1, l_inf) couple: the derived map is -2x the Kalton-Peck map; the
    // comparison is by magnitude with the scalar documented here.
    jobs.push_back(make(
        "couple_l1_magnitude", "couple:l1 vs 2|KP|, 8 random unit vectors", 0.0, 1e-4,
        Relation::Eq, [](std::uint64_t seed, Cell&) {
            std::mt19937_64 rng(seed);
            double worst = 0.0;
            for (int i = 0; i < 8; ++i) {
                RealVector y = unit(random_vector(rng, 16, 8));
                RealVector derived = couple_centralizer(SpaceSpec::lp(1.0), y, 1e-6).abs();
                RealVector reference = kalton_peck(y).scaled(2.0).abs();
                worst = std::max(worst, derived.minus(reference).linf_norm());
            }
            return worst;
        }));
    return jobs;
}

std::vector<Job> scenario_ackermann(const Params& params) {
    long long limit = param_ll(params, "limit", 1000000);
    std::vector<Job> jobs;
    jobs.push_back(make(
        "g1_closed_form", "g_1(k) vs k-fold iterate of g_0, k<=20", 0.0, 0.0, Relation::Eq,
        [](std::uint64_t, Cell&) {
            int mismatches = 0;
            for (std::uint64_t k = 1; k <= 20; ++k) {
                ExtNat iterated(k);
                for (std::uint64_t i = 0; i < k; ++i) iterated = ackermann_g(0, iterated);
                if (!(ackermann_g(1, ExtNat(k)) == iterated)) ++mismatches;
            }
            return static_cast<double>(mismatches);
        }));
    jobs.push_back(make(
        "g2_closed_form", "g_2(k) vs k-fold iterate of g_1, k<=20", 0.0, 0.0, Relation::Eq,
        [](std::uint64_t, Cell&) {
            int mismatches = 0;
            for (std::uint64_t k = 1; k <= 20; ++k) {
                ExtNat iterated(k);
                for (std::uint64_t i = 0; i < k; ++i) iterated = ackermann_g(1, iterated);
                if (!(ackermann_g(2, ExtNat(k)) == iterated)) ++mismatches;
            }
            return static_cast<double>(mismatches);
        }));
    jobs.push_back(make("g3_at_2", "g_3(2)", 2048.0, 0.0, Relation::Eq, [](std::uint64_t, Cell&) {
        ExtNat v = ackermann_g(3, ExtNat(2));
        return v.is_huge() ? -1.0 : static_cast<double>(v.value());
    }));
    for (int i = 0; i <= 3; ++i) {
        jobs.push_back(make(
            "alpha_diagonal_" + std::to_string(i), "alpha(g_" + std::to_string(i) + "(2))",
            static_cast<double>(i), 0.0, Relation::Eq, [i](std::uint64_t, Cell&) {
                return static_cast<double>(inverse_ackermann(ackermann_g(i, ExtNat(2))));
            }));
    }
    jobs.push_back(make(
        "alpha_shift", "alpha(n^n) <= alpha(n)+2 for n <= " + std::to_string(limit), 1.0, 0.0,
        Relation::Eq, [limit](std::uint64_t, Cell&) {
            return verify_alpha_shift(limit).pass ? 1.0 : 0.0;
        }));
    jobs.push_back(make(
        "growth_bound_2048", "2^{c alpha(n)} at n=2048, c=1", 8.0, 1e-12, Relation::Eq,
        [](std::uint64_t, Cell&) { return growth_bound(ExtNat(2048), 1.0); }));
    return jobs;
}

std::vector<Job> scenario_growth_pipeline(const Params& params) {
    double eta = param_double(params, "eta", 1.0);
    double rho = param_double(params, "rho", 2.0);
    std::string tag = "eta=" + std::to_string(eta) + ", rho=" + std::to_string(rho);
    std::vector<Job> jobs;
    for (double d : {1.0, 2.0}) {
        jobs.push_back(make(
            "final_bound_d" + std::to_string(static_cast<int>(d)),
            tag + ", d_n(X)=" + std::to_string(static_cast<int>(d)),
            4.0 * eta * std::pow(5.0, 2.0 * d), 1e-12, Relation::Eq,
            [d, eta, rho](std::uint64_t, Cell&) {
                return twisted_distance_bound(d, eta, rho).final_bound;
            }));
    }
    jobs.push_back(make(
        "via_duality", tag + ", D_n=3", 9.0 * eta, 1e-12, Relation::Eq,
        [eta, rho](std::uint64_t, Cell&) {
            return twisted_distance_bound(1.0, eta, rho).via_duality(3.0);
        }));
    jobs.push_back(make(
        "type2_transfer", tag + ", A_n=2", 8.0 * rho, 1e-12, Relation::Eq,
        [eta, rho](std::uint64_t, Cell&) {
            return twisted_distance_bound(1.0, eta, rho).type2_transfer(2.0);
        }));
    jobs.push_back(make(
        "norming_dim_3", "5^{dim E} at dim E = 3", 125.0, 0.0, Relation::Eq,
        [](std::uint64_t, Cell&) {
            ExtNat v = norming_dim(3);
            return v.is_huge() ? -1.0 : static_cast<double>(v.value());
        }));
    jobs.push_back(make(
        "norming_dim_saturates", "5^{dim E} at dim E = 40 collapses to Huge", 1.0, 0.0,
        Relation::Eq,
        [](std::uint64_t, Cell&) { return norming_dim(40).is_huge() ? 1.0 : 0.0; }));
    jobs.push_back(make(
        "tsirelson_singleton_lower", "sum_{j=6}^{11} e_j, singleton family bound n/2", 3.0, 0.0,
        Relation::Ge, [](std::uint64_t, Cell&) {
            std::vector<long long> indices;
            for (long long j = 6; j <= 11; ++j) indices.push_back(j);
            return tsirelson_norm(RealVector::indicator(indices));
        }));
    jobs.push_back(make(
        "ts2_dominates_t2", "x=(1,.5,.25,.125): symmetric T^2 norm vs T^2 norm", 0.0, 1e-12,
        Relation::Ge, [](std::uint64_t, Cell& cell) {
            RealVector x = RealVector::from_dense({1.0, 0.5, 0.25, 0.125});
            cell.expected = norm(SpaceSpec::convexify2(SpaceSpec::tsirelson()), x);
            return sym_tsirelson2_norm(x, SymMode::Exact).value;
        }));
    return jobs;
}

using ScenarioBuilder = std::vector<Job> (*)(const Params&);

const std::vector<std::pair<std::string, ScenarioBuilder>>& registry() {
    static const std::vector<std::pair<std::string, ScenarioBuilder>> table = {
        {"claimC", scenario_claim_c},
        {"claimA", scenario_claim_a},
        {"schreier_isometry", scenario_schreier_isometry},
        {"c0_blocks", scenario_c0_blocks},
        {"kp_spread", scenario_kp_spread},
        {"centralizer_axioms", scenario_centralizer_axioms},
        {"couple_consistency", scenario_couple_consistency},
        {"ackermann", scenario_ackermann},
        {"growth_pipeline", scenario_growth_pipeline},
    };
    return table;
}

}  // namespace

bool ScenarioResult::all_pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.pass; });
}

const std::vector<std::string>& registered_scenarios() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, builder] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Eq: return "eq";
        case Relation::Ge: return "ge";
        case Relation::Le: return "le";
    }
    return "eq";
}

ScenarioResult run_scenario(const std::string& name, const Params& params) {
    reject_unknown_params(params);
    ScenarioBuilder builder = nullptr;
    for (const auto& [registered, fn] : registry()) {
        if (registered == name) builder = fn;
    }
    if (!builder) {
        std::string msg = "unknown scenario '" + name + "'; registered:";
        for (const auto& known : registered_scenarios()) msg += " " + known;
        throw std::invalid_argument(msg);
    }

    auto started = std::chrono::steady_clock::now();
    std::uint64_t master_seed = static_cast<std::uint64_t>(param_ll(params, "seed", 1));
    std::vector<Job> jobs = builder(params);

    // Worker pool over cells; each cell owns a sub-seed derived from
    // (master seed, cell index) so the schedule cannot affect the output.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            Cell& cell = jobs[i].cell;
            try {
                cell.computed = jobs[i].body(sub_seed(master_seed, i), cell);
            } catch (const std::exception& e) {
                cell.diagnostic = e.what();
                cell.computed = std::numeric_limits<double>::quiet_NaN();
            }
        }
    };
    int threads = std::min<int>(worker_count(), static_cast<int>(jobs.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // Single-threaded assembly.
    ScenarioResult result;
    result.name = name;
    result.seed = master_seed;
    for (Job& job : jobs) {
        job.cell.pass = cell_passes(job.cell);
        result.cells.push_back(std::move(job.cell));
    }
    result.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return result;
}

std::vector<ScenarioResult> run_all(const Params& params) {
    std::vector<ScenarioResult> results;
    for (const auto& name : registered_scenarios()) {
        results.push_back(run_scenario(name, params));
    }
    return results;
}

}  // namespace twistlab::harness
