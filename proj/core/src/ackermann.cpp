#include "twistlab/ackermann.hpp"

#include <cmath>
#include <stdexcept>

#include "twistlab/coverage.hpp"

namespace twistlab {

ExtNat ExtNat::operator+(ExtNat other) const {
    if (huge_ || other.huge_) return huge();
    std::uint64_t r = value_ + other.value_;
    if (r < value_) return huge();
    return ExtNat(r);
}

ExtNat ExtNat::operator*(ExtNat other) const {
    if (huge_ || other.huge_) return huge();
    if (value_ == 0 || other.value_ == 0) return ExtNat(0);
    if (value_ > kDefaultThreshold / other.value_) return huge();
    return ExtNat(value_ * other.value_);
}

ExtNat ExtNat::pow(std::uint64_t exponent) const {
    if (huge_) return exponent == 0 ? ExtNat(1) : huge();
    ExtNat acc(1);
    ExtNat base = *this;
    while (exponent > 0) {
        if (exponent & 1) acc = acc * base;
        if (acc.is_huge()) return huge();
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
            if (base.is_huge() && exponent > 0) return huge();
        }
    }
    return acc;
}

ExtNat ExtNat::two_to(ExtNat exponent) {
    if (exponent.is_huge() || exponent.value() >= 64) return huge();
    return ExtNat(1ULL << exponent.value());
}

ExtNat ackermann_g(int n, ExtNat k) {
    coverage::touch("ackermann_g");
    if (n < 0) throw std::invalid_argument("ackermann_g: level must be nonnegative");
    if (k.is_huge()) return ExtNat::huge();
    switch (n) {
        case 0: return k + ExtNat(1);
        case 1: return k * ExtNat(2);           // closed form of the k-fold successor iterate
        case 2: return k * ExtNat::two_to(k);   // closed form of the k-fold doubling iterate
        default: break;
    }
    // g_n(k) = g_{n-1}^{(k)}(k)
    ExtNat x = k;
    for (std::uint64_t i = 0; i < k.value(); ++i) {
        x = ackermann_g(n - 1, x);
        if (x.is_huge()) return ExtNat::huge();
    }
    return x;
}

namespace {

// g_i(2) thresholds: 3, 4, 8, 2048, Huge (g_4(2) = g_3(2048), a tower of
// height 2048, far beyond any threshold).
const ExtNat kDiagonal[] = {ExtNat(3), ExtNat(4), ExtNat(8), ExtNat(2048), ExtNat::huge()};

}  // namespace

int inverse_ackermann(ExtNat n) {
    coverage::touch("inverse_ackermann");
    if (!n.is_huge() && n.value() < 1)
        throw std::invalid_argument("inverse_ackermann: n must be positive");
    // A saturated argument sits in the g_4(2) band; every representable
    // value at or above 2048 has alpha = 3.
    if (n.is_huge()) return 4;
    int i = 0;
    while (!kDiagonal[i + 1].is_huge() && kDiagonal[i + 1] <= n) ++i;
    return i;
}

AlphaShiftReport verify_alpha_shift(long long limit) {
    coverage::touch("verify_alpha_shift");
    if (limit < 3) throw std::invalid_argument("verify_alpha_shift: limit must be >= 3");
    AlphaShiftReport report{true, 0, 0};
    for (long long n = 3; n <= limit; ++n) {
        ExtNat power = ExtNat(static_cast<std::uint64_t>(n)).pow(static_cast<std::uint64_t>(n));
        int lhs = inverse_ackermann(power);
        int rhs = inverse_ackermann(ExtNat(static_cast<std::uint64_t>(n))) + 2;
        ++report.checked;
        if (lhs > rhs) {
            report.pass = false;
            report.first_counterexample = n;
            return report;
        }
    }
    return report;
}

double growth_bound(ExtNat n, double c) {
    coverage::touch("growth_bound");
    return std::pow(2.0, c * inverse_ackermann(n));
}

std::vector<GTableRow> g_table(int n_max, std::uint64_t k_max) {
    std::vector<GTableRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        for (std::uint64_t k = 1; k <= k_max; ++k) {
            rows.push_back({n, k, ackermann_g(n, ExtNat(k))});
        }
    }
    return rows;
}

}  // namespace twistlab
