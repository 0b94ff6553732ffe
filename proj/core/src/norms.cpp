#include "twistlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "twistlab/admissible.hpp"
#include "twistlab/coverage.hpp"
#include "twistlab/dual_norm.hpp"
#include "twistlab/tsirelson.hpp"

namespace twistlab {

namespace {

double lp_norm(double p, const RealVector& x) {
    if (p == kInfExponent) return x.linf_norm();
    if (p == 1.0) return x.l1_norm();
    if (p == 2.0) return x.l2_norm();
    double s = 0.0;
    for (const auto& e : x.entries()) s += std::pow(std::fabs(e.value), p);
    return std::pow(s, 1.0 / p);
}

}  // namespace

double schreier_norm(const RealVector& x) {
    coverage::touch("schreier_norm");
    if (x.is_zero()) return 0.0;
    // max over m of (sum of the m largest |x_j| with j >= m): every admissible
    // set of size k lives in {j >= k}, and conversely the top-k values at
    // indices >= k form an admissible set.
    const auto& entries = x.entries();
    int n = static_cast<int>(entries.size());
    double best = 0.0;
    for (int start = 0; start < n; ++start) {
        // For m with entries[start] the first surviving index, the best size
        // cap is m = entries[start].index; the count is limited by the pool.
        long long remaining = n - start;
        long long m = std::min(entries[start].index, remaining);
        std::vector<double> vals;
        vals.reserve(remaining);
        for (int t = start; t < n; ++t) vals.push_back(std::fabs(entries[t].value));
        std::sort(vals.begin(), vals.end(), std::greater<double>());
        double s = 0.0;
        for (long long t = 0; t < m; ++t) s += vals[t];
        best = std::max(best, s);
    }
    return best;
}

double convexify2_norm(const SpaceSpec& base, const RealVector& x) {
    coverage::touch("convexify2_norm");
    return std::sqrt(norm(base, x.squared()));
}

double l2sum_blocks_norm(const std::vector<SpaceSpec::Block>& blocks, const RealVector& x) {
    coverage::touch("l2sum_blocks_norm");
    double sq = 0.0;
    auto it = x.entries().begin();
    const auto end = x.entries().end();
    long long start = 1;  // first index of the current block
    for (const SpaceSpec::Block& b : blocks) {
        bool unbounded = b.size >= kBlockSizeCap || start > kBlockSizeCap;
        long long stop = unbounded ? 0 : start + b.size;  // exclusive
        std::vector<RealVector::Entry> part;
        while (it != end && (unbounded || it->index < stop)) {
            part.push_back({it->index - start + 1, it->value});
            ++it;
        }
        if (!part.empty()) {
            double v = lp_norm(b.p, RealVector::from_entries(std::move(part)));
            sq += v * v;
        }
        if (unbounded) break;
        start = stop;
    }
    if (it != end) {
        throw std::invalid_argument("l2sum_blocks_norm: support extends past declared blocks");
    }
    return std::sqrt(sq);
}

SymTsirelson2Result sym_tsirelson2_norm(const RealVector& x, SymMode mode) {
    coverage::touch("sym_tsirelson2_norm");
    std::vector<long long> positions = x.support();
    std::vector<double> values;
    values.reserve(positions.size());
    for (const auto& e : x.entries()) values.push_back(std::fabs(e.value));
    int n = static_cast<int>(positions.size());
    if (n == 0) return {0.0, false};

    SpaceSpec t = SpaceSpec::tsirelson();
    auto eval = [&](const std::vector<double>& arrangement) {
        std::vector<RealVector::Entry> entries;
        for (int i = 0; i < n; ++i) entries.push_back({positions[i], arrangement[i]});
        return convexify2_norm(t, RealVector::from_entries(std::move(entries)));
    };

    if (mode == SymMode::Exact) {
        if (n > kSymTsirelson2ExactLimit) {
            throw std::invalid_argument("sym_tsirelson2_norm: exact mode limited to support " +
                                        std::to_string(kSymTsirelson2ExactLimit));
        }
        std::vector<double> arrangement = values;
        std::sort(arrangement.begin(), arrangement.end());
        double best = 0.0;
        do {
            best = std::max(best, eval(arrangement));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        return {best, false};
    }

    // Heuristic: both monotone rearrangements, then adjacent-swap hill climbing.
    std::vector<double> decreasing = values;
    std::sort(decreasing.begin(), decreasing.end(), std::greater<double>());
    std::vector<double> increasing(decreasing.rbegin(), decreasing.rend());
    double best = 0.0;
    std::vector<double> best_arr;
    for (auto* seed : {&decreasing, &increasing}) {
        double v = eval(*seed);
        if (v > best) { best = v; best_arr = *seed; }
    }
    int budget = 4 * n * n;
    bool improved = true;
    while (improved && budget > 0) {
        improved = false;
        for (int i = 0; i + 1 < n && budget > 0; ++i) {
            std::swap(best_arr[i], best_arr[i + 1]);
            double v = eval(best_arr);
            --budget;
            if (v > best) {
                best = v;
                improved = true;
            } else {
                std::swap(best_arr[i], best_arr[i + 1]);
            }
        }
    }
    return {best, true};
}

JSpaceParams jspace_params(int n) {
    coverage::touch("jspace_params");
    if (n < 4) {
        throw std::invalid_argument(
            "jspace_params: n must be >= 4 (n <= 3 would force p_n < 1)");
    }
    double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n));
    JSpaceParams out;
    out.p = 1.0 / (0.5 + inv_sqrt);
    out.p_star = (n == 4) ? kInfExponent : 1.0 / (0.5 - inv_sqrt);
    out.k = 1LL << (n + 1);
    return out;
}

double norm(const SpaceSpec& space, const RealVector& x) {
    coverage::touch("norm");
    switch (space.kind()) {
        case SpaceSpec::Kind::Lp: {
            if (space.dim() && x.max_index() > *space.dim()) {
                throw std::invalid_argument("norm: support exceeds declared dimension " +
                                            std::to_string(*space.dim()));
            }
            return lp_norm(space.p(), x);
        }
        case SpaceSpec::Kind::Ell2: return x.l2_norm();
        case SpaceSpec::Kind::Schreier: return schreier_norm(x);
        case SpaceSpec::Kind::Tsirelson: return tsirelson_norm(x);
        case SpaceSpec::Kind::Convexify2: return convexify2_norm(space.base(), x);
        case SpaceSpec::Kind::Dual: return dual_norm(space.base(), x, kDefaultDualTol).value;
        case SpaceSpec::Kind::L2SumBlocks: return l2sum_blocks_norm(space.blocks(), x);
        case SpaceSpec::Kind::SymTsirelson2: {
            SymMode mode = x.support_size() <= kSymTsirelson2ExactLimit ? SymMode::Exact
                                                                       : SymMode::Heuristic;
            return sym_tsirelson2_norm(x, mode).value;
        }
    }
    throw std::logic_error("norm: unhandled space kind");
}

}  // namespace twistlab
