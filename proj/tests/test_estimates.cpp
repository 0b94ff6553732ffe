#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "twistlab/estimates.hpp"
#include "twistlab/norms.hpp"
#include "twistlab/real_vector.hpp"
#include "twistlab/space.hpp"

using namespace twistlab;

namespace {

std::vector<RealVector> basis_family(int n) {
    std::vector<RealVector> v;
    for (long long j = 1; j <= n; ++j) v.push_back(RealVector::basis(j));
    return v;
}

}  // namespace

TEST_CASE("rademacher average exact") {
    auto e2 = basis_family(2);
    auto r = rademacher_average(SpaceSpec::lp(1), e2, RademacherMethod::Exact);
    CHECK(r.mean == doctest::Approx(2.0));
    CHECK(r.half_width == 0.0);
    CHECK(r.method == RademacherMethod::Exact);
    CHECK(r.samples == 4);

    for (int n : {1, 3, 6, 10}) {
        auto fam = basis_family(n);
        CHECK(rademacher_average(SpaceSpec::lp(2), fam, RademacherMethod::Exact).mean ==
              doctest::Approx(std::sqrt(double(n))).epsilon(1e-12));
        CHECK(rademacher_average(SpaceSpec::lp(kInfExponent), fam, RademacherMethod::Exact).mean ==
              doctest::Approx(1.0));
    }

    // single vector: E|eps| ||x|| = ||x||
    auto x = RealVector::from_dense({3, -4});
    CHECK(rademacher_average(SpaceSpec::lp(2), {x}, RademacherMethod::Exact).mean ==
          doctest::Approx(5.0));

    CHECK_THROWS_AS(rademacher_average(SpaceSpec::lp(1), basis_family(kExactSignLimit + 1),
                                       RademacherMethod::Exact),
                    std::invalid_argument);
    CHECK_THROWS_AS(rademacher_average(SpaceSpec::lp(1), {}, RademacherMethod::Exact),
                    std::invalid_argument);
}

TEST_CASE("rademacher average monte carlo") {
    // overlapping supports so the sign sums genuinely fluctuate
    std::mt19937_64 rng(99);
    std::normal_distribution<double> val(0.0, 1.0);
    std::vector<RealVector> fam;
    for (int i = 0; i < 6; ++i) {
        std::vector<double> v(4);
        for (auto& x : v) x = val(rng);
        fam.push_back(RealVector::from_dense(v));
    }
    MonteCarloBudget b{50000, 9};
    auto mc1 = rademacher_average(SpaceSpec::lp(1), fam, RademacherMethod::MonteCarlo, b);
    CHECK(mc1.method == RademacherMethod::MonteCarlo);
    CHECK(mc1.samples == 50000);
    CHECK(mc1.seed == 9);
    CHECK(mc1.half_width > 0.0);
    auto exact = rademacher_average(SpaceSpec::lp(1), fam, RademacherMethod::Exact);
    CHECK(std::fabs(mc1.mean - exact.mean) <= 3.0 * mc1.half_width);

    // deterministic per seed
    auto mc2 = rademacher_average(SpaceSpec::lp(1), fam, RademacherMethod::MonteCarlo, b);
    CHECK(mc1.mean == mc2.mean);
    CHECK(mc1.half_width == mc2.half_width);
    auto mc3 =
        rademacher_average(SpaceSpec::lp(1), fam, RademacherMethod::MonteCarlo, {50000, 10});
    CHECK(mc1.mean != mc3.mean);

    // a constant family has zero sample variance
    auto flatmc =
        rademacher_average(SpaceSpec::lp(2), basis_family(4), RademacherMethod::MonteCarlo, b);
    CHECK(flatmc.mean == doctest::Approx(2.0));
    CHECK(flatmc.half_width <= 1e-12);
}

TEST_CASE("type 2 and cotype 2 ratios") {
    auto e2 = basis_family(2);
    CHECK(type2_ratio(SpaceSpec::lp(1), e2, RademacherMethod::Exact) ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK(cotype2_ratio(SpaceSpec::lp(kInfExponent), e2, RademacherMethod::Exact) ==
          doctest::Approx(std::sqrt(2.0)));
    for (int n : {2, 5, 9}) {
        auto fam = basis_family(n);
        CHECK(type2_ratio(SpaceSpec::lp(2), fam, RademacherMethod::Exact) == doctest::Approx(1.0));
        CHECK(cotype2_ratio(SpaceSpec::lp(2), fam, RademacherMethod::Exact) ==
              doctest::Approx(1.0));
    }
    // hilbert space: both ratios never exceed 1 by the parallelogram law
    std::mt19937_64 rng(23);
    std::normal_distribution<double> val(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        std::vector<RealVector> fam;
        for (int i = 0; i < 5; ++i) {
            std::vector<double> v(6);
            for (auto& x : v) x = val(rng);
            fam.push_back(RealVector::from_dense(v));
        }
        CHECK(type2_ratio(SpaceSpec::lp(2), fam, RademacherMethod::Exact) <= 1.0 + 1e-12);
        CHECK(cotype2_ratio(SpaceSpec::lp(2), fam, RademacherMethod::Exact) >= 1.0 - 1e-12);
        CHECK(type2_ratio(SpaceSpec::lp(1), fam, RademacherMethod::Exact) *
                  cotype2_ratio(SpaceSpec::lp(1), fam, RademacherMethod::Exact) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(type2_ratio(SpaceSpec::lp(2), {RealVector()}, RademacherMethod::Exact),
                    std::invalid_argument);
}

TEST_CASE("type 2 search") {
    SearchBudget b{10, 3};
    CHECK(type2_search(SpaceSpec::lp(2), 4, b) == doctest::Approx(1.0).epsilon(1e-9));
    // the basis family is in the zoo, so l1 search dominates its ratio
    CHECK(type2_search(SpaceSpec::lp(1), 3, b) >=
          type2_ratio(SpaceSpec::lp(1), basis_family(3), RademacherMethod::Exact) - 1e-12);
    // never exceeds the true type 2 constant of l_p^k
    double p = 1.5;
    double t2 = std::pow(3.0, 1.0 / p - 0.5);
    CHECK(type2_search(SpaceSpec::lp(p), 3, b) <= t2 * (1.0 + 1e-6));
    // nondecreasing in the trial budget at a fixed seed
    CHECK(type2_search(SpaceSpec::lp(1), 4, SearchBudget{25, 3}) >=
          type2_search(SpaceSpec::lp(1), 4, SearchBudget{5, 3}) - 1e-12);
    CHECK_THROWS_AS(type2_search(SpaceSpec::lp(1), 0, b), std::invalid_argument);
}

TEST_CASE("kwapien bound") {
    auto k = kwapien_bound(1.0, 1.0);
    CHECK(k.lower == 1.0);
    CHECK(k.upper == doctest::Approx(1.0));
    CHECK(kwapien_bound(std::sqrt(2.0), std::sqrt(2.0)).upper == doctest::Approx(2.0));
    CHECK_FALSE(k.provenance.empty());
    CHECK_THROWS_AS(kwapien_bound(0.5, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(kwapien_bound(2.0, 0.5), std::invalid_argument);
}

TEST_CASE("banach mazur distance to euclidean") {
    CHECK(bm_distance_lp(1.0, 4) == doctest::Approx(2.0));
    CHECK(bm_distance_lp(2.0, 1000) == doctest::Approx(1.0));
    CHECK(bm_distance_lp(kInfExponent, 16) == doctest::Approx(4.0));
    CHECK(bm_distance_lp(4.0, 16) == doctest::Approx(bm_distance_lp(4.0 / 3.0, 16)).epsilon(1e-12));
    // the jspace blocks: d = 2^{sqrt n} 2^{1/sqrt n}
    for (int n : {4, 9, 16, 25}) {
        auto pr = jspace_params(n);
        double rn = std::sqrt(double(n));
        CHECK(bm_distance_lp(pr.p, pr.k) ==
              doctest::Approx(std::pow(2.0, rn) * std::pow(2.0, 1.0 / rn)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(bm_distance_lp(0.9, 4), std::invalid_argument);
    CHECK_THROWS_AS(bm_distance_lp(2.0, 0), std::invalid_argument);
}

TEST_CASE("twisted distance chain") {
    auto c = twisted_distance_bound(1.0, 1.0);
    CHECK(c.final_bound == doctest::Approx(100.0));
    CHECK(twisted_distance_bound(2.0, 1.0).final_bound == doctest::Approx(2500.0));
    CHECK(twisted_distance_bound(1.0, 3.0).final_bound == doctest::Approx(300.0));
    CHECK(c.via_duality(3.0) == doctest::Approx(9.0));
    CHECK(c.type2_transfer(2.0) == doctest::Approx(16.0));  // rho defaults to 2
    CHECK(twisted_distance_bound(1.0, 1.0, 3.0).type2_transfer(2.0) == doctest::Approx(24.0));
    CHECK(std::isinf(twisted_distance_bound(250.0, 1.0).final_bound));
    CHECK_THROWS_AS(twisted_distance_bound(0.5, 1.0), std::invalid_argument);
}

TEST_CASE("norming dimension bound") {
    CHECK(norming_dim(1) == ExtNat(5));
    CHECK(norming_dim(3) == ExtNat(125));
    CHECK(norming_dim(27) == ExtNat(5).pow(27));
    CHECK(norming_dim(30).is_huge());
    CHECK(norming_dim(100).is_huge());
    CHECK_THROWS_AS(norming_dim(0), std::invalid_argument);
}
