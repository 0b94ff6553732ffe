#include "twistlab/tsirelson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/coverage.hpp"

namespace twistlab {

namespace {

// Evaluator over interval restrictions of a fixed support.
class TsirelsonEval {
public:
    explicit TsirelsonEval(const RealVector& x) {
        for (const auto& e : x.entries()) {
            idx_.push_back(e.index);
            val_.push_back(std::fabs(e.value));
        }
        n_ = static_cast<int>(idx_.size());
        memo_.assign(n_ * n_, -1.0);
    }

    double value() {
        if (n_ == 0) return 0.0;
        return eval(0, n_ - 1);
    }

private:
    // Norm of the restriction to support positions [i..j].
    double eval(int i, int j) {
        double& slot = memo_[i * n_ + j];
        if (slot >= 0.0) return slot;
        double best = 0.0;
        for (int t = i; t <= j; ++t) best = std::max(best, val_[t]);

        // Families of successive blocks inside [i..j]. Blocks are position
        // intervals; k blocks require k <= index of the first block's min.
        // D(t, r): best sum of r blocks placed within positions [t..j].
        int len = j - i + 1;
        std::vector<double> prev(len + 1, 0.0), cur(len + 1, 0.0);
        const double kNegInf = -1.0;
        double family_best = 0.0;
        // family sums for r blocks, r from 1 upward; iterate r and DP right-to-left
        // D_r(t) = max(D_r(t+1), max_e T(t,e) + D_{r-1}(e+1))
        std::vector<std::vector<double>> D(1, std::vector<double>(len + 2, 0.0));
        int max_blocks = std::min<long long>(len, idx_[j]);
        for (int r = 1; r <= max_blocks; ++r) {
            std::vector<double> Dr(len + 2, kNegInf);
            const std::vector<double>& Dprev = D[r - 1];
            for (int t = len - 1; t >= 0; --t) {
                double b = Dr[t + 1];
                for (int e = t; e < len; ++e) {
                    double rest = Dprev[e + 1];
                    if (rest < 0.0) continue;
                    if (r == 1 && t == 0 && e == len - 1) continue;  // self-reference
                    b = std::max(b, eval(i + t, i + e) + rest);
                }
                Dr[t] = b;
            }
            D.push_back(Dr);
            // First block starts at position s with r <= idx[s]; Dr computed with
            // first block anywhere >= t, and allowing a later start only relaxes
            // the admissibility constraint, so scanning start positions suffices.
            for (int s = 0; s < len; ++s) {
                if (static_cast<long long>(r) > idx_[i + s]) continue;
                // family whose first block starts exactly at s
                for (int e = s; e < len; ++e) {
                    if (r == 1 && s == 0 && e == len - 1) continue;
                    double rest = D[r - 1][e + 1];
                    if (rest < 0.0) continue;
                    family_best = std::max(family_best, eval(i + s, i + e) + rest);
                }
            }
        }
        best = std::max(best, 0.5 * family_best);
        slot = best;
        return best;
    }

    int n_ = 0;
    std::vector<long long> idx_;
    std::vector<double> val_;
    std::vector<double> memo_;
};

}  // namespace

double tsirelson_norm(const RealVector& x) {
    coverage::touch("tsirelson_norm");
    if (x.support_size() > kTsirelsonSupportLimit) {
        throw std::invalid_argument("tsirelson_norm: support exceeds exhaustive limit " +
                                    std::to_string(kTsirelsonSupportLimit));
    }
    TsirelsonEval eval(x);
    return eval.value();
}

}  // namespace twistlab
