#pragma once

#include <stdexcept>
#include <vector>

#include "twistlab/real_vector.hpp"
#include "twistlab/space.hpp"

namespace twistlab {

inline constexpr double kDefaultDualTol = 1e-6;
inline constexpr int kDualIterBudget = 100000;

struct DualNormResult {
    double value;   // certified: |value - sup| <= tol * value
    double lower;   // from a feasible primal point <x, y>, norm(base, x) <= 1
    double upper;   // from an atomic decomposition or closed form
    int iterations;
};

/// Raised when the primal/dual gap fails to close within the iteration
/// budget; carries the best certified pair found.
class DualGapError : public std::runtime_error {
public:
    DualGapError(double lower, double upper);
    double lower;
    double upper;
};

/// sup { <x, y> : norm(base, x) <= 1 }.
///
/// Closed forms for Lp, Ell2, L2SumBlocks and Dual bases. For the
/// 2-convexified Schreier space the value is computed by column generation
/// over admissible supports: the restricted dual is an atomic decomposition
/// y = sum_A y_A minimizing sum_A ||y_A||_2, solved by ADMM, and the
/// separation oracle is the Schreier-norm argmax itself. Other bases fall
/// back to a heuristic primal ascent plus a singleton decomposition and
/// throw DualGapError when the gap stays open.
DualNormResult dual_norm(const SpaceSpec& base, const RealVector& y,
                         double tol = kDefaultDualTol);

/// Schreier-norm maximizer: the admissible set attaining
/// sup_A sum_{j in A} |x_j| together with the attained value.
struct SchreierArgmax {
    double value;
    std::vector<long long> set;
};
SchreierArgmax schreier_argmax(const RealVector& x);

}  // namespace twistlab
