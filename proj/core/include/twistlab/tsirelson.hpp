#pragma once

#include "twistlab/real_vector.hpp"

namespace twistlab {

inline constexpr int kTsirelsonSupportLimit = 16;

/// Tsirelson norm: least fixed point of
///   ||x|| = max(||x||_inf, 1/2 sup { sum_j ||x|E_j|| }),
/// the sup over successive finite sets E_1 < ... < E_k with k <= min E_1.
/// Evaluated by memoized recursion over interval restrictions of the support;
/// replacing each E_j by its interval hull is lossless by lattice
/// monotonicity. Refuses support sizes above kTsirelsonSupportLimit.
double tsirelson_norm(const RealVector& x);

}  // namespace twistlab
