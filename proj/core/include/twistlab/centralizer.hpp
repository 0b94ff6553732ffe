#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "twistlab/real_vector.hpp"
#include "twistlab/space.hpp"

namespace twistlab {

/// Symbolic centralizer: KaltonPeck | Scaled(coefficient, base) |
/// FromCouple(base space, tol). Addressable from the CLI as kp, scaled:<n>,
/// couple:<space-name>.
class CentralizerSpec {
public:
    enum class Kind { KaltonPeck, Scaled, FromCouple };

    static CentralizerSpec kalton_peck();
    static CentralizerSpec scaled(double coefficient, CentralizerSpec base);
    /// The scaled Kalton-Peck map of the ell_2(ell_{p_n}^{k_n}) scheme:
    /// coefficient 2/p_n* - 2/p_n = -4/sqrt(n). Requires n >= 4.
    static CentralizerSpec scaled_for_jspace(int n);
    static CentralizerSpec from_couple(SpaceSpec base, double tol = 1e-6);

    static CentralizerSpec from_name(const std::string& name);

    Kind kind() const { return kind_; }
    double coefficient() const { return coefficient_; }
    const CentralizerSpec& base() const { return *base_; }
    const SpaceSpec& couple_base() const { return *couple_base_; }
    double tol() const { return tol_; }

    std::string name() const;

private:
    Kind kind_ = Kind::KaltonPeck;
    double coefficient_ = 1.0;
    int jspace_n_ = 0;  // nonzero when built by scaled_for_jspace
    double tol_ = 1e-6;
    std::shared_ptr<const CentralizerSpec> base_;
    std::shared_ptr<const SpaceSpec> couple_base_;
};

/// Homogeneous Kalton-Peck map: entrywise y_j log(|y_j| / ||y||_2).
/// Restricts to y log|y| on the unit sphere; Omega(lambda y) = lambda Omega(y).
RealVector kalton_peck(const RealVector& y);

/// (2/p_n* - 2/p_n) * kalton_peck(y); the coefficient is -4/sqrt(n).
RealVector scaled_centralizer(int n, const RealVector& y);

struct LozanovskiiResult {
    RealVector a;     // in the base space
    RealVector b;     // in its dual
    double product;   // norm(base, a) * dual_norm(base, b), >= 1
    int iterations;
};

/// Splits y^2 = a * b entrywise with ||a||_X ||b||_{X*} minimized within tol
/// of the infimum (which is 1 for the couples used here). Requires ||y||_2 = 1.
LozanovskiiResult lozanovskii_factorize(const SpaceSpec& base, const RealVector& y, double tol);

/// Centralizer derived from the couple (X, X*) at theta = 1/2:
/// ||y||_2 * yhat * log(b/a) with (a, b) the Lozanovskii factors of yhat.
RealVector couple_centralizer(const SpaceSpec& base, const RealVector& y, double tol);

/// Applies any centralizer variant to y.
RealVector apply_centralizer(const CentralizerSpec& spec, const RealVector& y);

struct TwistedVector {
    RealVector x;  // fiber coordinate
    RealVector y;  // base coordinate
};

/// ||x - Omega(y)||_2 + ||y||_2.
double twisted_quasinorm(const CentralizerSpec& omega, const TwistedVector& v);

/// ||Omega(a.y) - a.Omega(y)||_2 / (||a||_inf ||y||_2), a acting entrywise.
double centralizer_defect(const CentralizerSpec& omega, const RealVector& a, const RealVector& y);

/// ||T_sigma(Omega(y)) - Omega(T_sigma y)||_2 / ||y||_2.
double symmetry_defect(const CentralizerSpec& omega,
                       const std::function<long long(long long)>& sigma, const RealVector& y);

struct CoefficientSampler {
    std::uint64_t seed = 1;
    int random_samples = 64;   // Gaussian coefficient draws
    int sign_patterns = 256;   // sampled when 2^|J| is too large
};

inline constexpr int kSignPatternExhaustiveLimit = 14;

/// Certified lower bound for the equivalence constant between (0, e_j)_{j in J}
/// and the ell_2 basis under the quasi-norm of omega: max over sampled
/// coefficient vectors c of max(Q(c)/||c||_2, ||c||_2/Q(c)). The flat vector
/// (the analytic extremum for Kalton-Peck-type maps) is always sampled.
double euclidean_constant(const CentralizerSpec& omega, const std::vector<long long>& J,
                          const CoefficientSampler& sampler);

}  // namespace twistlab
