#pragma once

#include <vector>

namespace twistlab {

/// A finite set {n1 < ... < nk} of positive integers is admissible if k <= n1.
/// The empty set is admissible by convention. Subsets of admissible sets are
/// admissible, so the family is downward closed.
bool is_admissible(const std::vector<long long>& indices);

inline constexpr int kEnumerateAdmissibleLimit = 24;

/// All nonempty admissible subsets of {1..n}. Refuses n above the exhaustive
/// limit (default 24).
std::vector<std::vector<long long>> enumerate_admissible(int n);

}  // namespace twistlab
