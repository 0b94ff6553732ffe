#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistlab/ext_nat.hpp"
#include "twistlab/real_vector.hpp"
#include "twistlab/space.hpp"

namespace twistlab {

enum class RademacherMethod { Exact, MonteCarlo };

inline constexpr int kExactSignLimit = 14;

struct RademacherEstimate {
    double mean;
    double half_width;        // 99% confidence; 0 for exact
    RademacherMethod method;
    std::uint64_t samples;    // 2^n for exact
    std::uint64_t seed;       // Monte Carlo only
};

struct MonteCarloBudget {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
};

/// E || sum_j eps_j x_j || over uniform signs: exact enumeration (n <= 14)
/// or seeded Monte Carlo with a 99% confidence half-width.
RademacherEstimate rademacher_average(const SpaceSpec& space,
                                      const std::vector<RealVector>& vectors,
                                      RademacherMethod method,
                                      const MonteCarloBudget& budget = {});

/// rademacher_average / (sum ||x_j||^2)^{1/2}; a certified lower bound for
/// the type-2 constant when exact.
double type2_ratio(const SpaceSpec& space, const std::vector<RealVector>& vectors,
                   RademacherMethod method, const MonteCarloBudget& budget = {});

/// (sum ||x_j||^2)^{1/2} / rademacher_average.
double cotype2_ratio(const SpaceSpec& space, const std::vector<RealVector>& vectors,
                     RademacherMethod method, const MonteCarloBudget& budget = {});

struct SearchBudget {
    int random_families = 20;
    std::uint64_t seed = 1;
};

/// Best type-2 ratio found over a candidate family zoo (basis subsets,
/// Gaussian vectors, disjoint blocks, coordinate-scaled variants); a
/// certified lower bound on the n-vector type-2 constant of the space.
double type2_search(const SpaceSpec& space, int n, const SearchBudget& budget = {});

struct DistanceBound {
    double lower = 1.0;
    double upper;
    std::string provenance;
};

/// Kwapien: d_E <= a_2(E) c_2(E).
DistanceBound kwapien_bound(double a2, double c2);

/// d(l_p^k, l_2^k) = k^{|1/p - 1/2|}.
double bm_distance_lp(double p, long long k);

/// The twisted distance pipeline d_n(Z(X)) <= 4 eta 5^{2 d_n(X)}, with the
/// intermediate chain d_n(Z(X)) <= eta D_n^2 and a_{n,2}(Z(X)) <= 4 rho A_n.
struct TwistedDistanceChain {
    double eta;
    double rho;
    double final_bound;           // 4 eta 5^{2 d_n(X)} (inf on overflow)
    double via_duality(double D_n) const { return eta * D_n * D_n; }
    double type2_transfer(double A_n) const { return 4.0 * rho * A_n; }
};
TwistedDistanceChain twisted_distance_bound(double d_n_X, double eta, double rho = 2.0);

/// dim F <= 5^{dim E} for a half-norming subspace; saturating.
ExtNat norming_dim(int dim_E);

}  // namespace twistlab
