#include "twistlab/centralizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "twistlab/coverage.hpp"
#include "twistlab/dual_norm.hpp"
#include "twistlab/norms.hpp"

namespace twistlab {

CentralizerSpec CentralizerSpec::kalton_peck() { return {}; }

CentralizerSpec CentralizerSpec::scaled(double coefficient, CentralizerSpec base) {
    CentralizerSpec s;
    s.kind_ = Kind::Scaled;
    s.coefficient_ = coefficient;
    s.base_ = std::make_shared<CentralizerSpec>(std::move(base));
    return s;
}

CentralizerSpec CentralizerSpec::scaled_for_jspace(int n) {
    JSpaceParams params = jspace_params(n);  // validates n >= 4
    double two_over_pstar = params.p_star == kInfExponent ? 0.0 : 2.0 / params.p_star;
    CentralizerSpec s = scaled(two_over_pstar - 2.0 / params.p, kalton_peck());
    s.jspace_n_ = n;
    return s;
}

CentralizerSpec CentralizerSpec::from_couple(SpaceSpec base, double tol) {
    CentralizerSpec s;
    s.kind_ = Kind::FromCouple;
    s.tol_ = tol;
    s.couple_base_ = std::make_shared<SpaceSpec>(std::move(base));
    return s;
}

CentralizerSpec CentralizerSpec::from_name(const std::string& name) {
    if (name == "kp") return kalton_peck();
    if (name.rfind("scaled:", 0) == 0) return scaled_for_jspace(std::stoi(name.substr(7)));
    if (name.rfind("couple:", 0) == 0) return from_couple(SpaceSpec::from_name(name.substr(7)));
    throw std::invalid_argument("unknown centralizer spec: " + name +
                                " (expected kp, scaled:<n> or couple:<space>)");
}

std::string CentralizerSpec::name() const {
    switch (kind_) {
        case Kind::KaltonPeck: return "kp";
        case Kind::Scaled:
            if (jspace_n_ > 0) return "scaled:" + std::to_string(jspace_n_);
            return "scaled(" + std::to_string(coefficient_) + "," + base_->name() + ")";
        case Kind::FromCouple: return "couple:" + couple_base_->name();
    }
    return "?";
}

RealVector kalton_peck(const RealVector& y) {
    coverage::touch("kalton_peck");
    if (y.is_zero()) return {};
    double n2 = y.l2_norm();
    std::vector<RealVector::Entry> out;
    out.reserve(y.support_size());
    for (const auto& e : y.entries()) {
        out.push_back({e.index, e.value * std::log(std::fabs(e.value) / n2)});
    }
    return RealVector::from_entries(std::move(out));
}

RealVector scaled_centralizer(int n, const RealVector& y) {
    coverage::touch("scaled_centralizer");
    JSpaceParams params = jspace_params(n);
    double two_over_pstar = params.p_star == kInfExponent ? 0.0 : 2.0 / params.p_star;
    return kalton_peck(y).scaled(two_over_pstar - 2.0 / params.p);
}

namespace {

// Objective of the factorization search in the exponent parameterization
// a = |y| e^s, b = |y| e^{-s}: log ||a||_X + log ||b||_{X*}.
struct FactorObjective {
    const SpaceSpec& base;
    const std::vector<long long>& indices;
    const std::vector<double>& absy;
    double dual_tol;

    double operator()(const std::vector<double>& s) const {
        std::vector<RealVector::Entry> ea, eb;
        ea.reserve(indices.size());
        eb.reserve(indices.size());
        for (std::size_t i = 0; i < indices.size(); ++i) {
            ea.push_back({indices[i], absy[i] * std::exp(s[i])});
            eb.push_back({indices[i], absy[i] * std::exp(-s[i])});
        }
        double na = norm(base, RealVector::from_entries(std::move(ea)));
        double nb = dual_norm(base, RealVector::from_entries(std::move(eb)), dual_tol).value;
        return std::log(na) + std::log(nb);
    }
};

double golden_section(const std::function<double(double)>& f, double lo, double hi, int evals) {
    const double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < evals; ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace

LozanovskiiResult lozanovskii_factorize(const SpaceSpec& base, const RealVector& y, double tol) {
    coverage::touch("lozanovskii_factorize");
    if (std::fabs(y.l2_norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("lozanovskii_factorize: y must be ell_2-normalized");
    }
    std::vector<long long> indices = y.support();
    std::vector<double> absy;
    absy.reserve(indices.size());
    for (const auto& e : y.entries()) absy.push_back(std::fabs(e.value));
    int n = static_cast<int>(indices.size());

    // slow bases (iterative duals) get a looser inner tolerance and budget
    bool cheap_dual = base.kind() == SpaceSpec::Kind::Lp || base.kind() == SpaceSpec::Kind::Ell2 ||
                      base.kind() == SpaceSpec::Kind::L2SumBlocks;
    FactorObjective obj{base, indices, absy, cheap_dual ? kDefaultDualTol : std::max(tol, 1e-4)};
    int max_sweeps = cheap_dual ? 400 : 30;

    std::vector<double> s(n, 0.0);
    auto build = [&](const std::vector<double>& sv, double sign) {
        std::vector<RealVector::Entry> e;
        e.reserve(n);
        for (int i = 0; i < n; ++i) e.push_back({indices[i], absy[i] * std::exp(sign * sv[i])});
        return RealVector::from_entries(std::move(e));
    };
    auto product_of = [&](const std::vector<double>& sv) {
        return norm(base, build(sv, 1.0)) * dual_norm(base, build(sv, -1.0), obj.dual_tol).value;
    };
    // The objective is invariant under s -> s + c (a scales by e^c, b by
    // e^{-c}); pin the gauge the way the analytic optima do, with ||a|| = 1.
    auto gauge_fix = [&] {
        double c = std::log(norm(base, build(s, 1.0)));
        for (double& v : s) v -= c;
    };

    double best = obj(s);
    int sweeps = 0;
    bool solved = false;
    if (base.kind() == SpaceSpec::Kind::Lp) {
        // Alternating multiplicative updates. Stationarity of
        // log||a||_p + log||b||_q in each exponent balances the norming
        // weights a_j^p/||a||_p^p and b_j^q/||b||_q^q; the closed forms at
        // p = 1 and p = infinity are the degenerate limits.
        double p = base.p();
        double q = conjugate_exponent(p);
        if (p == kInfExponent) {
            for (int i = 0; i < n; ++i) s[i] = -std::log(absy[i]);
            solved = true;
        } else if (q == kInfExponent) {
            for (int i = 0; i < n; ++i) s[i] = std::log(absy[i]);
            solved = true;
        } else {
            auto weights = [&](double expo, double sign) {
                std::vector<double> lw(n);
                double max_lw = -1e300;
                for (int i = 0; i < n; ++i) {
                    lw[i] = expo * (std::log(absy[i]) + sign * s[i]);
                    max_lw = std::max(max_lw, lw[i]);
                }
                double lse = 0.0;
                for (double v : lw) lse += std::exp(v - max_lw);
                lse = max_lw + std::log(lse);
                for (double& v : lw) v -= lse;
                return lw;
            };
            for (sweeps = 1; sweeps <= 500; ++sweeps) {
                std::vector<double> la = weights(p, 1.0), lb = weights(q, -1.0);
                double shift = 0.0;
                for (int i = 0; i < n; ++i) {
                    double delta = (lb[i] - la[i]) / (p + q);
                    s[i] += delta;
                    shift = std::max(shift, std::fabs(delta));
                }
                if (shift < 1e-14) break;
            }
            solved = true;
        }
    }
    if (solved) {
        gauge_fix();
        best = obj(s);
    } else if (product_of(s) > 1.0 + tol) {
        double radius = 4.0;
        for (sweeps = 1; sweeps <= max_sweeps; ++sweeps) {
            double before = best;
            for (int i = 0; i < n; ++i) {
                double center = s[i];
                double si = golden_section(
                    [&](double v) {
                        std::vector<double> trial = s;
                        trial[i] = v;
                        return obj(trial);
                    },
                    center - radius, center + radius, 40);
                std::vector<double> trial = s;
                trial[i] = si;
                double val = obj(trial);
                if (val < best) { best = val; s = trial; }
            }
            double product = std::exp(best);
            if (product <= 1.0 + tol) break;
            if (before - best < 1e-14) {
                if (radius < 0.02) break;
                radius *= 0.25;  // refine the line-search window
            } else {
                radius = std::max(0.05, radius * 0.7);
            }
        }
        gauge_fix();
        best = obj(s);
    }

    LozanovskiiResult out{build(s, 1.0), build(s, -1.0), std::exp(best), sweeps};
    if (out.product > 1.0 + std::max(tol, 1e-3)) {
        throw std::runtime_error("lozanovskii_factorize: no convergence, best product " +
                                 std::to_string(out.product));
    }
    return out;
}

RealVector couple_centralizer(const SpaceSpec& base, const RealVector& y, double tol) {
    coverage::touch("couple_centralizer");
    if (y.is_zero()) return {};
    double scale = y.l2_norm();
    RealVector yhat = y.scaled(1.0 / scale);
    LozanovskiiResult fac = lozanovskii_factorize(base, yhat, tol);
    // log(b/a) entrywise; a_j and b_j share the factor |y_j|, so the ratio is
    // exactly exp(-2 s_j) and entries with a_j = b_j contribute 0.
    std::vector<RealVector::Entry> out;
    for (const auto& e : yhat.entries()) {
        double aj = fac.a.at(e.index);
        double bj = fac.b.at(e.index);
        if (aj == bj) continue;
        out.push_back({e.index, scale * e.value * std::log(bj / aj)});
    }
    return RealVector::from_entries(std::move(out));
}

RealVector apply_centralizer(const CentralizerSpec& spec, const RealVector& y) {
    coverage::touch("apply_centralizer");
    switch (spec.kind()) {
        case CentralizerSpec::Kind::KaltonPeck: return kalton_peck(y);
        case CentralizerSpec::Kind::Scaled:
            return apply_centralizer(spec.base(), y).scaled(spec.coefficient());
        case CentralizerSpec::Kind::FromCouple:
            return couple_centralizer(spec.couple_base(), y, spec.tol());
    }
    throw std::logic_error("apply_centralizer: unhandled kind");
}

double twisted_quasinorm(const CentralizerSpec& omega, const TwistedVector& v) {
    coverage::touch("twisted_quasinorm");
    if (v.y.is_zero()) return v.x.l2_norm();
    return v.x.minus(apply_centralizer(omega, v.y)).l2_norm() + v.y.l2_norm();
}

double centralizer_defect(const CentralizerSpec& omega, const RealVector& a,
                          const RealVector& y) {
    coverage::touch("centralizer_defect");
    if (y.is_zero()) throw std::invalid_argument("centralizer_defect: y must be nonzero");
    if (a.is_zero()) throw std::invalid_argument("centralizer_defect: multiplier must be nonzero");
    RealVector lhs = apply_centralizer(omega, a.hadamard(y));
    RealVector rhs = a.hadamard(apply_centralizer(omega, y));
    return lhs.minus(rhs).l2_norm() / (a.linf_norm() * y.l2_norm());
}

double symmetry_defect(const CentralizerSpec& omega,
                       const std::function<long long(long long)>& sigma, const RealVector& y) {
    coverage::touch("symmetry_defect");
    if (y.is_zero()) return 0.0;
    std::set<long long> images;
    for (long long j : y.support()) {
        if (!images.insert(sigma(j)).second) {
            throw std::invalid_argument("symmetry_defect: sigma not injective on support");
        }
    }
    RealVector lhs = apply_centralizer(omega, y).permuted(sigma);
    RealVector rhs = apply_centralizer(omega, y.permuted(sigma));
    return lhs.minus(rhs).l2_norm() / y.l2_norm();
}

double euclidean_constant(const CentralizerSpec& omega, const std::vector<long long>& J,
                          const CoefficientSampler& sampler) {
    coverage::touch("euclidean_constant");
    if (J.empty()) throw std::invalid_argument("euclidean_constant: empty index set");
    auto ratio = [&](const std::vector<double>& coeffs) {
        std::vector<RealVector::Entry> entries;
        for (std::size_t i = 0; i < J.size(); ++i) {
            if (coeffs[i] != 0.0) entries.push_back({J[i], coeffs[i]});
        }
        RealVector y = RealVector::from_entries(std::move(entries));
        if (y.is_zero()) return 1.0;
        double q = twisted_quasinorm(omega, {RealVector{}, y});
        double c2 = y.l2_norm();
        return std::max(q / c2, c2 / q);
    };

    int n = static_cast<int>(J.size());
    double best = 1.0;
    std::vector<double> c(n, 1.0);
    best = std::max(best, ratio(c));  // flat vector: analytic extremum for KP-type maps
    for (long long j : J) {
        double q = twisted_quasinorm(omega, {RealVector{}, RealVector::basis(j)});
        best = std::max(best, std::max(q, 1.0 / q));
    }

    std::mt19937_64 rng(sampler.seed);
    if (n <= kSignPatternExhaustiveLimit) {
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            for (int i = 0; i < n; ++i) c[i] = (mask >> i) & 1 ? -1.0 : 1.0;
            best = std::max(best, ratio(c));
        }
    } else {
        std::bernoulli_distribution flip(0.5);
        for (int t = 0; t < sampler.sign_patterns; ++t) {
            for (int i = 0; i < n; ++i) c[i] = flip(rng) ? -1.0 : 1.0;
            best = std::max(best, ratio(c));
        }
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < sampler.random_samples; ++t) {
        for (int i = 0; i < n; ++i) c[i] = gauss(rng);
        best = std::max(best, ratio(c));
    }
    return best;
}

}  // namespace twistlab
