#include "twistlab/dual_norm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "twistlab/admissible.hpp"
#include "twistlab/coverage.hpp"
#include "twistlab/norms.hpp"

namespace twistlab {

DualGapError::DualGapError(double lo, double up)
    : std::runtime_error("dual_norm: gap failed to close (lower " + std::to_string(lo) +
                         ", upper " + std::to_string(up) + ")"),
      lower(lo), upper(up) {}

SchreierArgmax schreierArgmaxImpl(const RealVector& x) {
    const auto& entries = x.entries();
    int n = static_cast<int>(entries.size());
    SchreierArgmax best{0.0, {}};
    for (int start = 0; start < n; ++start) {
        long long m = std::min<long long>(entries[start].index, n - start);
        std::vector<std::pair<double, long long>> pool;
        for (int t = start; t < n; ++t)
            pool.push_back({std::fabs(entries[t].value), entries[t].index});
        std::sort(pool.begin(), pool.end(), std::greater<>());
        double s = 0.0;
        std::vector<long long> set;
        for (long long t = 0; t < m; ++t) {
            s += pool[t].first;
            set.push_back(pool[t].second);
        }
        if (s > best.value) {
            std::sort(set.begin(), set.end());
            best = {s, std::move(set)};
        }
    }
    return best;
}

SchreierArgmax schreier_argmax(const RealVector& x) { return schreierArgmaxImpl(x); }

namespace {

double s2_norm(const RealVector& x) { return std::sqrt(schreierArgmaxImpl(x.squared()).value); }

// The admissible set with the largest ell_2 mass of x.
SchreierArgmax s2_argmax(const RealVector& x) {
    SchreierArgmax a = schreierArgmaxImpl(x.squared());
    a.value = std::sqrt(a.value);
    return a;
}

struct Group {
    std::vector<long long> indices;
};

// min sum_A ||y_A||_2  s.t.  sum_A y_A = y, supp y_A in A, over a fixed pool
// of admissible groups. ADMM splitting: shrinkage on each block, then a
// per-coordinate projection onto the sum constraint. The scaled dual
// variables converge to the maximizing functional x of the restricted dual.
class AtomicDecomposition {
public:
    AtomicDecomposition(const RealVector& y, const std::vector<Group>& groups)
        : y_(y), groups_(groups) {
        for (const auto& e : y.entries()) coord_of_[e.index] = static_cast<int>(yvals_.size()),
                                          yvals_.push_back(e.value);
        nc_ = static_cast<int>(yvals_.size());
        member_count_.assign(nc_, 0);
        for (const Group& g : groups_) {
            std::vector<int> coords;
            for (long long j : g.indices) {
                auto it = coord_of_.find(j);
                if (it != coord_of_.end()) coords.push_back(it->second);
            }
            for (int c : coords) ++member_count_[c];
            coords_.push_back(std::move(coords));
        }
        int ng = static_cast<int>(groups_.size());
        z_.resize(ng); w_.resize(ng); u_.resize(ng);
        for (int g = 0; g < ng; ++g) {
            z_[g].assign(coords_[g].size(), 0.0);
            w_[g].assign(coords_[g].size(), 0.0);
            u_[g].assign(coords_[g].size(), 0.0);
        }
        project(w_);  // start from a feasible split of y
    }

    void iterate(int count) {
        for (int it = 0; it < count; ++it) {
            double primal_res = 0.0, dual_res = 0.0;
            // z-update: block shrinkage
            for (std::size_t g = 0; g < z_.size(); ++g) {
                double nrm = 0.0;
                for (std::size_t t = 0; t < z_[g].size(); ++t) {
                    double v = w_[g][t] - u_[g][t];
                    z_[g][t] = v;
                    nrm += v * v;
                }
                nrm = std::sqrt(nrm);
                double scale = nrm > 1.0 / rho_ ? 1.0 - 1.0 / (rho_ * nrm) : 0.0;
                for (double& v : z_[g]) v *= scale;
            }
            // w-update: projection of z + u onto the sum constraint
            std::vector<std::vector<double>> t = z_;
            for (std::size_t g = 0; g < t.size(); ++g)
                for (std::size_t k = 0; k < t[g].size(); ++k) t[g][k] += u_[g][k];
            std::vector<std::vector<double>> w_old = w_;
            w_ = std::move(t);
            project(w_);
            // u-update and residuals
            for (std::size_t g = 0; g < z_.size(); ++g) {
                for (std::size_t k = 0; k < z_[g].size(); ++k) {
                    double r = z_[g][k] - w_[g][k];
                    u_[g][k] += r;
                    primal_res += r * r;
                    double d = w_[g][k] - w_old[g][k];
                    dual_res += d * d;
                }
            }
            ++iterations_;
            if (iterations_ % 50 == 0) rebalance(std::sqrt(primal_res), std::sqrt(dual_res));
        }
    }

    // Feasible decomposition cost (w satisfies the sum constraint exactly).
    double upper_bound() const {
        double cost = 0.0;
        for (const auto& wg : w_) {
            double n2 = 0.0;
            for (double v : wg) n2 += v * v;
            cost += std::sqrt(n2);
        }
        return cost;
    }

    // Scaled-dual estimate of the maximizing functional.
    RealVector multiplier() const {
        std::vector<double> acc(nc_, 0.0);
        std::vector<int> cnt(nc_, 0);
        for (std::size_t g = 0; g < u_.size(); ++g) {
            for (std::size_t k = 0; k < u_[g].size(); ++k) {
                acc[coords_[g][k]] += rho_ * u_[g][k];
                ++cnt[coords_[g][k]];
            }
        }
        std::vector<RealVector::Entry> entries;
        int c = 0;
        for (const auto& [index, coord] : coord_of_) {
            if (cnt[coord] > 0 && acc[coord] != 0.0)
                entries.push_back({index, acc[coord] / cnt[coord]});
            ++c;
        }
        return RealVector::from_entries(std::move(entries));
    }

    int iterations() const { return iterations_; }

    void add_group(const Group& g) {
        groups_.push_back(g);
        std::vector<int> coords;
        for (long long j : g.indices) {
            auto it = coord_of_.find(j);
            if (it != coord_of_.end()) coords.push_back(it->second);
        }
        for (int c : coords) ++member_count_[c];
        z_.push_back(std::vector<double>(coords.size(), 0.0));
        w_.push_back(std::vector<double>(coords.size(), 0.0));
        u_.push_back(std::vector<double>(coords.size(), 0.0));
        coords_.push_back(std::move(coords));
        project(w_);
    }

private:
    void project(std::vector<std::vector<double>>& w) const {
        std::vector<double> sums(nc_, 0.0);
        for (std::size_t g = 0; g < w.size(); ++g)
            for (std::size_t k = 0; k < w[g].size(); ++k) sums[coords_[g][k]] += w[g][k];
        for (std::size_t g = 0; g < w.size(); ++g) {
            for (std::size_t k = 0; k < w[g].size(); ++k) {
                int c = coords_[g][k];
                w[g][k] += (yvals_[c] - sums[c]) / member_count_[c];
            }
        }
    }

    void rebalance(double primal, double dual) {
        // classic residual balancing; rescale u when rho changes
        if (primal > 10.0 * dual) {
            rho_ *= 2.0;
            for (auto& ug : u_) for (double& v : ug) v *= 0.5;
        } else if (dual > 10.0 * primal) {
            rho_ *= 0.5;
            for (auto& ug : u_) for (double& v : ug) v *= 2.0;
        }
    }

    RealVector y_;
    std::vector<Group> groups_;
    std::map<long long, int> coord_of_;
    std::vector<double> yvals_;
    std::vector<int> member_count_;
    std::vector<std::vector<int>> coords_;
    std::vector<std::vector<double>> z_, w_, u_;
    double rho_ = 1.0;
    int nc_ = 0;
    int iterations_ = 0;
};

std::vector<long long> intersect_support(const std::vector<long long>& set,
                                         const std::set<long long>& support) {
    std::vector<long long> out;
    for (long long j : set)
        if (support.count(j)) out.push_back(j);
    return out;
}

DualNormResult dual_s2(const RealVector& y, double tol) {
    std::vector<long long> supp_vec = y.support();
    std::set<long long> support(supp_vec.begin(), supp_vec.end());
    std::set<std::vector<long long>> seen;
    std::vector<Group> groups;
    auto add = [&](std::vector<long long> set) {
        if (set.empty()) return;
        std::sort(set.begin(), set.end());
        if (seen.insert(set).second) groups.push_back({std::move(set)});
    };

    for (long long j : support) add({j});
    if (is_admissible(supp_vec)) add(supp_vec);
    // dyadic intervals [2^t, 2^{t+1}) are always admissible
    for (long long lo = 1; lo <= y.max_index(); lo *= 2) {
        std::vector<long long> part;
        for (long long j : supp_vec)
            if (j >= lo && j < 2 * lo) part.push_back(j);
        add(part);
    }
    add(s2_argmax(y).set);

    // greedy partition of the support into admissible chunks: seeds the upper
    // bound and a few useful groups
    double greedy_cost = 0.0;
    {
        RealVector rest = y;
        while (!rest.is_zero()) {
            SchreierArgmax chunk = s2_argmax(rest);
            if (chunk.set.empty()) break;
            add(chunk.set);
            std::set<long long> chosen(chunk.set.begin(), chunk.set.end());
            greedy_cost += chunk.value;
            rest = rest.filtered([&](long long j) { return !chosen.count(j); });
        }
    }

    double upper = std::min(greedy_cost, y.l1_norm());
    double ynorm = s2_norm(y);
    double lower = ynorm > 0.0 ? y.dot(y) / ynorm : 0.0;
    if (upper - lower <= tol * std::max(upper, 1e-300)) {
        return {upper, lower, upper, 0};
    }

    AtomicDecomposition solver(y, groups);
    int since_cut = 0;
    while (solver.iterations() < kDualIterBudget) {
        solver.iterate(25);
        upper = std::min(upper, solver.upper_bound());
        RealVector xhat = solver.multiplier();
        double xnorm = s2_norm(xhat);
        if (xnorm > 0.0) lower = std::max(lower, std::fabs(xhat.dot(y)) / xnorm);
        if (upper - lower <= tol * std::max(upper, 1e-300)) {
            return {upper, lower, upper, solver.iterations()};
        }
        // separation: most violated admissible cylinder under the current dual
        if (++since_cut >= 8) {
            since_cut = 0;
            SchreierArgmax cut = s2_argmax(xhat);
            std::vector<long long> set = intersect_support(cut.set, support);
            std::sort(set.begin(), set.end());
            if (!set.empty() && cut.value > 1.0 + tol && !seen.count(set)) {
                seen.insert(set);
                solver.add_group({set});
            }
        }
    }
    throw DualGapError(lower, upper);
}

double lp_dual_value(double p, const RealVector& y) {
    double q = conjugate_exponent(p);
    if (q == kInfExponent) return y.linf_norm();
    if (q == 1.0) return y.l1_norm();
    if (q == 2.0) return y.l2_norm();
    double s = 0.0;
    for (const auto& e : y.entries()) s += std::pow(std::fabs(e.value), q);
    return std::pow(s, 1.0 / q);
}

// Heuristic primal ascent + singleton decomposition for bases without a
// dedicated route. Honest: throws when the certificates do not meet.
DualNormResult dual_generic(const SpaceSpec& base, const RealVector& y, double tol) {
    double lower = 0.0;
    RealVector x = y;
    double xnorm = norm(base, x);
    if (xnorm > 0.0) lower = x.dot(y) / xnorm;
    // cyclic coordinate line search on <x,y>/||x||
    for (int sweep = 0; sweep < 40; ++sweep) {
        bool improved = false;
        for (const auto& e : y.entries()) {
            for (double step : {0.5, 1.0, 2.0}) {
                RealVector cand = x.plus(RealVector::basis(e.index, step * (e.value > 0 ? 1 : -1) *
                                                                        std::max(1e-3, x.linf_norm())));
                double cn = norm(base, cand);
                if (cn > 0.0 && cand.dot(y) / cn > lower * (1.0 + 1e-12)) {
                    lower = cand.dot(y) / cn;
                    x = cand;
                    improved = true;
                }
            }
        }
        if (!improved) break;
    }
    double upper = 0.0;
    for (const auto& e : y.entries()) {
        upper += std::fabs(e.value) / norm(base, RealVector::basis(e.index));
    }
    if (upper - lower <= tol * std::max(upper, 1e-300)) {
        return {upper, lower, upper, 0};
    }
    throw DualGapError(lower, upper);
}

}  // namespace

DualNormResult dual_norm(const SpaceSpec& base, const RealVector& y, double tol) {
    coverage::touch("dual_norm");
    if (tol < 1e-10) throw std::invalid_argument("dual_norm: tol must be >= 1e-10");
    if (y.is_zero()) return {0.0, 0.0, 0.0, 0};
    switch (base.kind()) {
        case SpaceSpec::Kind::Ell2: {
            double v = y.l2_norm();
            return {v, v, v, 0};
        }
        case SpaceSpec::Kind::Lp: {
            if (base.dim() && y.max_index() > *base.dim()) {
                throw std::invalid_argument("dual_norm: support exceeds declared dimension");
            }
            double v = lp_dual_value(base.p(), y);
            return {v, v, v, 0};
        }
        case SpaceSpec::Kind::L2SumBlocks: {
            std::vector<SpaceSpec::Block> conj;
            conj.reserve(base.blocks().size());
            for (const auto& b : base.blocks()) conj.push_back({conjugate_exponent(b.p), b.size});
            double v = l2sum_blocks_norm(conj, y);
            return {v, v, v, 0};
        }
        case SpaceSpec::Kind::Dual: {
            // finite supports: the bidual norm is the original norm
            double v = norm(base.base(), y);
            return {v, v, v, 0};
        }
        case SpaceSpec::Kind::Convexify2:
            if (base.base().kind() == SpaceSpec::Kind::Schreier) return dual_s2(y, tol);
            return dual_generic(base, y, tol);
        default:
            return dual_generic(base, y, tol);
    }
}

}  // namespace twistlab
