#pragma once

#include "twistlab/real_vector.hpp"
#include "twistlab/space.hpp"

namespace twistlab {

/// Evaluates the norm of the given space variant on x.
/// Dual dispatches to dual_norm with the default tolerance.
double norm(const SpaceSpec& space, const RealVector& x);

/// Schreier norm: sup over admissible A of sum_{j in A} |x_j|.
/// Equivalently max over m of the m largest |x_j| with j >= m.
double schreier_norm(const RealVector& x);

/// sqrt(norm(base, x^2)), the 2-convexification of a lattice norm.
double convexify2_norm(const SpaceSpec& base, const RealVector& x);

/// (sum_n ||x|_{block n}||_{p_n}^2)^{1/2} over consecutive block intervals.
double l2sum_blocks_norm(const std::vector<SpaceSpec::Block>& blocks, const RealVector& x);

enum class SymMode { Exact, Heuristic };

inline constexpr int kSymTsirelson2ExactLimit = 8;

struct SymTsirelson2Result {
    double value;
    bool is_lower_bound;  // heuristic mode only certifies a lower bound
};

/// Symmetric version of the 2-convexified Tsirelson norm: max over
/// rearrangements of the values across the support positions. Exact mode
/// enumerates all permutations (support <= 8); heuristic mode runs a local
/// search over adjacent transpositions from both monotone rearrangements.
SymTsirelson2Result sym_tsirelson2_norm(const RealVector& x, SymMode mode);

struct JSpaceParams {
    double p;        // p_n
    double p_star;   // conjugate, +infinity sentinel at n = 4
    long long k;     // 2^{n+1}
};

/// Parameters of the ell_2(ell_{p_n}^{k_n}) construction:
/// 1/p_n - 1/2 = 1/sqrt(n) = 1/2 - 1/p_n*, k_n = 2^{n+1}. Requires n >= 4;
/// below that the defining identity forces p_n < 1.
JSpaceParams jspace_params(int n);

}  // namespace twistlab
