#include "twistlab/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "twistlab/coverage.hpp"
#include "twistlab/norms.hpp"

namespace twistlab {

namespace {

constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

double sign_combination_norm(const SpaceSpec& space, const std::vector<RealVector>& vectors,
                             std::uint64_t mask) {
    RealVector sum;
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        sum = (mask >> j) & 1 ? sum.minus(vectors[j]) : sum.plus(vectors[j]);
    }
    return norm(space, sum);
}

double sq_sum_norms(const SpaceSpec& space, const std::vector<RealVector>& vectors) {
    double s = 0.0;
    for (const RealVector& v : vectors) {
        double n = norm(space, v);
        s += n * n;
    }
    return std::sqrt(s);
}

}  // namespace

RademacherEstimate rademacher_average(const SpaceSpec& space,
                                      const std::vector<RealVector>& vectors,
                                      RademacherMethod method, const MonteCarloBudget& budget) {
    coverage::touch("rademacher_average");
    if (vectors.empty()) throw std::invalid_argument("rademacher_average: empty family");
    int n = static_cast<int>(vectors.size());
    if (method == RademacherMethod::Exact) {
        if (n > kExactSignLimit) {
            throw std::invalid_argument("rademacher_average: exact method limited to " +
                                        std::to_string(kExactSignLimit) + " vectors");
        }
        std::uint64_t total = 1ULL << n;
        // compensated accumulation
        double sum = 0.0, comp = 0.0;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            double v = sign_combination_norm(space, vectors, mask) - comp;
            double t = sum + v;
            comp = (t - sum) - v;
            sum = t;
        }
        return {sum / static_cast<double>(total), 0.0, RademacherMethod::Exact, total, 0};
    }
    std::mt19937_64 rng(budget.seed);
    std::uniform_int_distribution<std::uint64_t> bits;
    double sum = 0.0, sumsq = 0.0, comp = 0.0;
    for (std::uint64_t i = 0; i < budget.samples; ++i) {
        double v = sign_combination_norm(space, vectors, bits(rng));
        double d = v - comp;
        double t = sum + d;
        comp = (t - sum) - d;
        sum = t;
        sumsq += v * v;
    }
    double N = static_cast<double>(budget.samples);
    double mean = sum / N;
    double variance = std::max(0.0, sumsq / N - mean * mean) * N / std::max(1.0, N - 1.0);
    double half_width = kZ99 * std::sqrt(variance / N);
    return {mean, half_width, RademacherMethod::MonteCarlo, budget.samples, budget.seed};
}

double type2_ratio(const SpaceSpec& space, const std::vector<RealVector>& vectors,
                   RademacherMethod method, const MonteCarloBudget& budget) {
    coverage::touch("type2_ratio");
    for (const RealVector& v : vectors) {
        if (v.is_zero()) throw std::invalid_argument("type2_ratio: vectors must be nonzero");
    }
    return rademacher_average(space, vectors, method, budget).mean /
           sq_sum_norms(space, vectors);
}

double cotype2_ratio(const SpaceSpec& space, const std::vector<RealVector>& vectors,
                     RademacherMethod method, const MonteCarloBudget& budget) {
    coverage::touch("cotype2_ratio");
    for (const RealVector& v : vectors) {
        if (v.is_zero()) throw std::invalid_argument("cotype2_ratio: vectors must be nonzero");
    }
    return sq_sum_norms(space, vectors) /
           rademacher_average(space, vectors, method, budget).mean;
}

double type2_search(const SpaceSpec& space, int n, const SearchBudget& budget) {
    coverage::touch("type2_search");
    if (n < 1) throw std::invalid_argument("type2_search: need at least one vector");
    auto ratio_of = [&](const std::vector<RealVector>& family) {
        if (static_cast<int>(family.size()) <= kExactSignLimit) {
            return type2_ratio(space, family, RademacherMethod::Exact);
        }
        MonteCarloBudget mc{20000, budget.seed};
        return type2_ratio(space, family, RademacherMethod::MonteCarlo, mc);
    };

    double best = 0.0;
    // basis subsets e_1..e_m
    for (int m = 1; m <= n; ++m) {
        std::vector<RealVector> family;
        for (int j = 1; j <= m; ++j) family.push_back(RealVector::basis(j));
        best = std::max(best, ratio_of(family));
    }
    // disjointly supported blocks of equal length
    for (int width : {2, 3, 4}) {
        std::vector<RealVector> family;
        for (int j = 0; j < n; ++j) {
            std::vector<RealVector::Entry> entries;
            for (int t = 0; t < width; ++t) entries.push_back({1LL + j * width + t, 1.0});
            family.push_back(RealVector::from_entries(std::move(entries)));
        }
        best = std::max(best, ratio_of(family));
    }
    // random Gaussian and coordinate-scaled families
    std::mt19937_64 rng(budget.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<long long> pick(1, 2LL * n + 4);
    for (int trial = 0; trial < budget.random_families; ++trial) {
        std::vector<RealVector> family;
        for (int j = 0; j < n; ++j) {
            std::vector<RealVector::Entry> entries;
            int width = 1 + static_cast<int>(rng() % 4);
            for (int t = 0; t < width; ++t) {
                entries.push_back({pick(rng), gauss(rng)});
            }
            RealVector v = RealVector::from_entries(std::move(entries));
            if (v.is_zero()) v = RealVector::basis(1);
            family.push_back(std::move(v));
        }
        best = std::max(best, ratio_of(family));
        // coordinate-scaled variant
        for (RealVector& v : family) v = v.scaled(1.0 + 0.5 * gauss(rng) * gauss(rng));
        for (RealVector& v : family) {
            if (v.is_zero()) v = RealVector::basis(1);
        }
        best = std::max(best, ratio_of(family));
    }
    return best;
}

DistanceBound kwapien_bound(double a2, double c2) {
    coverage::touch("kwapien_bound");
    if (a2 < 1.0 || c2 < 1.0) {
        throw std::invalid_argument("kwapien_bound: type/cotype constants are >= 1");
    }
    return {1.0, a2 * c2, "kwapien: a_2 * c_2"};
}

double bm_distance_lp(double p, long long k) {
    coverage::touch("bm_distance_lp");
    if (!(p >= 1.0)) throw std::invalid_argument("bm_distance_lp: p must be >= 1");
    if (k < 1) throw std::invalid_argument("bm_distance_lp: k must be positive");
    double gap = p == kInfExponent ? 0.5 : std::fabs(1.0 / p - 0.5);
    return std::pow(static_cast<double>(k), gap);
}

TwistedDistanceChain twisted_distance_bound(double d_n_X, double eta, double rho) {
    coverage::touch("twisted_distance_bound");
    if (d_n_X < 1.0) throw std::invalid_argument("twisted_distance_bound: d_n(X) >= 1");
    if (eta <= 0.0) throw std::invalid_argument("twisted_distance_bound: eta must be positive");
    TwistedDistanceChain chain{eta, rho, 0.0};
    chain.final_bound = 4.0 * eta * std::pow(5.0, 2.0 * d_n_X);  // inf on overflow
    return chain;
}

ExtNat norming_dim(int dim_E) {
    coverage::touch("norming_dim");
    if (dim_E < 1) throw std::invalid_argument("norming_dim: dimension must be positive");
    return ExtNat(5).pow(static_cast<std::uint64_t>(dim_E));
}

}  // namespace twistlab
