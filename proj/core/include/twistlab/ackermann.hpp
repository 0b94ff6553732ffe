#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistlab/ext_nat.hpp"

namespace twistlab {

/// The rapidly growing hierarchy: g_0(k) = k + 1, g_{n+1}(k) = g_n^{(k)}(k)
/// (k-fold iterate). g_1(k) = 2k, g_2(k) = k 2^k; g_3 is a stacked tower.
/// Saturates to Huge above the ExtNat threshold.
ExtNat ackermann_g(int n, ExtNat k);

/// Inverse of n -> g_n(2): the unique i with g_i(2) <= n < g_{i+1}(2).
/// Extended by alpha(1) = alpha(2) = 0 (the defining inequality has no
/// solution below g_0(2) = 3). Huge arguments land in the g_4(2) band,
/// alpha = 4.
int inverse_ackermann(ExtNat n);

struct AlphaShiftReport {
    bool pass;
    long long checked;            // number of n scanned
    long long first_counterexample;  // 0 when pass
};

/// Checks alpha(n^n) <= alpha(n) + 2 for 3 <= n <= limit, n^n in saturating
/// arithmetic.
AlphaShiftReport verify_alpha_shift(long long limit);

/// 2^{c alpha(n)}.
double growth_bound(ExtNat n, double c);

struct GTableRow {
    int n;
    std::uint64_t k;
    ExtNat value;
};

/// The g-table used by the CLI CSV export: g_n(k) for n <= n_max, k <= k_max.
std::vector<GTableRow> g_table(int n_max, std::uint64_t k_max);

}  // namespace twistlab
