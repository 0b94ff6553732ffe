#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "twistlab/admissible.hpp"
#include "twistlab/dual_norm.hpp"
#include "twistlab/norms.hpp"
#include "twistlab/real_vector.hpp"
#include "twistlab/space.hpp"
#include "twistlab/tsirelson.hpp"

using namespace twistlab;

namespace {

RealVector random_vector(std::mt19937_64& rng, int max_index, int max_support) {
    std::uniform_int_distribution<int> count(1, max_support);
    std::uniform_int_distribution<int> idx(1, max_index);
    std::normal_distribution<double> val(0.0, 1.0);
    std::vector<RealVector::Entry> entries;
    int c = count(rng);
    for (int i = 0; i < c; ++i) entries.push_back({idx(rng), val(rng)});
    return RealVector::from_entries(entries);
}

RealVector random_dyadic(std::mt19937_64& rng, int max_index, int max_support) {
    std::uniform_int_distribution<int> count(1, max_support);
    std::uniform_int_distribution<int> idx(1, max_index);
    std::uniform_int_distribution<int> num(-32, 32);
    std::vector<RealVector::Entry> entries;
    int c = count(rng);
    for (int i = 0; i < c; ++i) entries.push_back({idx(rng), num(rng) / 16.0});
    return RealVector::from_entries(entries);
}

}  // namespace

TEST_CASE("real vector canonical form") {
    auto x = RealVector::from_entries({{5, 1.0}, {2, -3.0}, {5, 2.0}, {7, 0.0}});
    REQUIRE(x.support_size() == 2);
    CHECK(x.entries()[0].index == 2);
    CHECK(x.at(2) == -3.0);
    CHECK(x.at(5) == 3.0);
    CHECK(x.at(7) == 0.0);
    CHECK(x.max_index() == 5);

    auto d = RealVector::from_dense({1.0, 0.0, -2.0});
    CHECK(d.support_size() == 2);
    CHECK(d.at(1) == 1.0);
    CHECK(d.at(3) == -2.0);

    CHECK(RealVector().is_zero());
    CHECK(RealVector::basis(4).at(4) == 1.0);
    CHECK(RealVector::indicator({2, 6}).at(6) == 1.0);

    CHECK(x.l1_norm() == doctest::Approx(6.0));
    CHECK(x.l2_norm() == doctest::Approx(std::sqrt(18.0)));
    CHECK(x.linf_norm() == doctest::Approx(3.0));
    CHECK(x.dot(RealVector::basis(2)) == -3.0);

    auto p = x.permuted([](long long j) { return j + 1; });
    CHECK(p.at(3) == -3.0);
    CHECK(p.at(6) == 3.0);

    CHECK(x.minus(x).is_zero());
    CHECK(x.abs().at(2) == 3.0);
    CHECK(x.squared().at(2) == 9.0);
    CHECK(x.hadamard(RealVector::basis(2, 2.0)).at(2) == -6.0);
    CHECK(x.filtered([](long long j) { return j > 3; }).support_size() == 1);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible({}));
    CHECK(is_admissible({3, 5, 9}));
    CHECK_FALSE(is_admissible({2, 5, 9}));
    CHECK(is_admissible({1}));
    CHECK_FALSE(is_admissible({1, 2}));
    CHECK(is_admissible({5, 2}));  // order is irrelevant
    CHECK_THROWS_AS(is_admissible({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(is_admissible({0, 4}), std::invalid_argument);
}

TEST_CASE("admissible enumeration matches brute force") {
    auto one = enumerate_admissible(1);
    REQUIRE(one.size() == 1);  // just {1}; the empty set is left implicit

    for (int n = 1; n <= 12; ++n) {
        auto listed = enumerate_admissible(n);
        std::size_t brute = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<long long> set;
            for (int j = 0; j < n; ++j)
                if (mask & (1u << j)) set.push_back(j + 1);
            if (is_admissible(set)) ++brute;
        }
        CHECK(listed.size() == brute);
        for (const auto& set : listed) CHECK(is_admissible(set));
    }
    CHECK(enumerate_admissible(10).size() == 143);
    CHECK_THROWS_AS(enumerate_admissible(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_admissible(100), std::invalid_argument);
}

TEST_CASE("schreier norm examples") {
    CHECK(schreier_norm(RealVector::from_dense({1, 1, 1})) == doctest::Approx(2.0));
    CHECK(schreier_norm(RealVector::from_dense({4, 0, 2, 2, 1})) == doctest::Approx(5.0));
    CHECK(schreier_norm(RealVector::basis(1)) == doctest::Approx(1.0));
    CHECK(schreier_norm(RealVector()) == 0.0);
}

TEST_CASE("schreier norm equals brute force on random vectors") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 300; ++t) {
        auto x = random_vector(rng, 12, 8);
        CHECK(schreier_norm(x) == doctest::Approx(oracles::schreier_brute(x)).epsilon(1e-12));
        CHECK(schreier_norm(x) >= x.linf_norm() - 1e-12);
        CHECK(schreier_norm(x) <= x.l1_norm() + 1e-12);
        auto am = schreier_argmax(x);
        CHECK(is_admissible(am.set));
        CHECK(am.value == doctest::Approx(schreier_norm(x)));
    }
}

TEST_CASE("lp norms") {
    auto x = RealVector::from_dense({1, -2, 3});
    CHECK(norm(SpaceSpec::lp(1), x) == doctest::Approx(6.0));
    CHECK(norm(SpaceSpec::lp(2), x) == doctest::Approx(std::sqrt(14.0)));
    CHECK(norm(SpaceSpec::lp(kInfExponent), x) == doctest::Approx(3.0));
    CHECK(norm(SpaceSpec::lp(1.5), RealVector::from_dense({1, 1})) ==
          doctest::Approx(std::pow(2.0, 2.0 / 3.0)));
    CHECK_THROWS_AS(norm(SpaceSpec::lp(2, 2), x), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::lp(0.5), std::invalid_argument);
    CHECK(conjugate_exponent(1.0) == kInfExponent);
    CHECK(conjugate_exponent(kInfExponent) == 1.0);
    CHECK(conjugate_exponent(4.0 / 3.0) == doctest::Approx(4.0));
}

TEST_CASE("2-convexified schreier norm") {
    auto s2 = SpaceSpec::convexify2(SpaceSpec::schreier());
    CHECK(norm(s2, RealVector::from_dense({1, 1, 1})) == doctest::Approx(std::sqrt(2.0)));
    for (long long j = 1; j <= 5; ++j)
        CHECK(norm(s2, RealVector::basis(j)) == doctest::Approx(1.0));

    // On admissible supports the convexified norm is exactly euclidean
    std::mt19937_64 rng(7);
    std::normal_distribution<double> val(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> mdist(1, 15);
        int m = mdist(rng);
        std::uniform_int_distribution<int> size(1, m);
        std::vector<RealVector::Entry> entries;
        long long j = m;
        int count = size(rng);
        for (int i = 0; i < count; ++i) entries.push_back({j++, val(rng)});
        auto x = RealVector::from_entries(entries);
        CHECK(norm(s2, x) == doctest::Approx(x.l2_norm()).epsilon(1e-13));
    }
}

TEST_CASE("l2 sum of lp blocks") {
    std::vector<SpaceSpec::Block> b1 = {{1.0, 2}};
    CHECK(l2sum_blocks_norm(b1, RealVector::from_dense({1, 1})) == doctest::Approx(2.0));

    std::vector<SpaceSpec::Block> b2 = {{1.0, 2}, {2.0, 3}};
    CHECK(l2sum_blocks_norm(b2, RealVector::from_dense({1, 1, 1, 1, 0})) ==
          doctest::Approx(std::sqrt(6.0)));

    std::vector<SpaceSpec::Block> binf = {{kInfExponent, 3}};
    CHECK(l2sum_blocks_norm(binf, RealVector::from_dense({1, -2, 1})) == doctest::Approx(2.0));

    CHECK_THROWS_AS(l2sum_blocks_norm(b1, RealVector::basis(3)), std::invalid_argument);
    CHECK(norm(SpaceSpec::l2_sum_blocks(b2), RealVector::from_dense({1, 1, 1, 1, 0})) ==
          doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("tsirelson norm examples") {
    for (long long j = 1; j <= 6; ++j)
        CHECK(tsirelson_norm(RealVector::basis(j)) == doctest::Approx(1.0));
    CHECK(tsirelson_norm(RealVector::from_dense({1, 1, 1})) >= 1.0);
    // blocks past n have norm at least n/2
    for (int n = 4; n <= 7; ++n) {
        std::vector<long long> idx;
        for (long long j = n; j < 2 * n; ++j) idx.push_back(j);
        CHECK(tsirelson_norm(RealVector::indicator(idx)) >= n / 2.0 - 1e-12);
    }
    std::vector<long long> wide;
    for (long long j = 1; j <= kTsirelsonSupportLimit + 1; ++j) wide.push_back(j);
    CHECK_THROWS_AS(tsirelson_norm(RealVector::indicator(wide)), std::invalid_argument);
}

TEST_CASE("tsirelson norm equals interval recursion on dyadic vectors") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 60; ++t) {
        auto x = random_dyadic(rng, 12, 8);
        if (x.is_zero()) continue;
        double got = tsirelson_norm(x);
        double want = oracles::tsirelson_brute(x);
        CHECK(got == want);  // exact dyadic arithmetic on both sides
        CHECK(got >= x.linf_norm());
        CHECK(got <= x.l1_norm() + 1e-12);
    }
}

TEST_CASE("tsirelson norm properties") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 40; ++t) {
        auto x = random_vector(rng, 14, 7);
        auto y = random_vector(rng, 14, 7);
        double nx = tsirelson_norm(x);
        CHECK(tsirelson_norm(x.scaled(-2.5)) == doctest::Approx(2.5 * nx).epsilon(1e-12));
        CHECK(tsirelson_norm(x.plus(y)) <= nx + tsirelson_norm(y) + 1e-10);
        // lattice monotonicity: shrink entries pointwise
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::vector<RealVector::Entry> shrunk;
        for (const auto& e : x.entries()) shrunk.push_back({e.index, e.value * u(rng)});
        CHECK(tsirelson_norm(RealVector::from_entries(shrunk)) <= nx + 1e-12);
    }
}

TEST_CASE("symmetric 2-convexified tsirelson norm") {
    for (long long j = 1; j <= 4; ++j) {
        auto r = sym_tsirelson2_norm(RealVector::basis(j), SymMode::Exact);
        CHECK(r.value == doctest::Approx(1.0));
        CHECK_FALSE(r.is_lower_bound);
    }
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        auto x = random_vector(rng, 8, 5);
        auto exact = sym_tsirelson2_norm(x, SymMode::Exact);
        auto heur = sym_tsirelson2_norm(x, SymMode::Heuristic);
        CHECK(heur.is_lower_bound);
        CHECK(heur.value <= exact.value + 1e-10);
        // permutation invariance of the exact value
        auto shifted = x.permuted([](long long j) { return j + 3; });
        CHECK(sym_tsirelson2_norm(shifted, SymMode::Exact).value ==
              doctest::Approx(exact.value).epsilon(1e-12));
    }
    std::vector<RealVector::Entry> wide;
    for (long long j = 1; j <= kSymTsirelson2ExactLimit + 1; ++j) wide.push_back({j, 1.0});
    CHECK_THROWS_AS(sym_tsirelson2_norm(RealVector::from_entries(wide), SymMode::Exact),
                    std::invalid_argument);
}

TEST_CASE("jspace parameters") {
    auto p4 = jspace_params(4);
    CHECK(p4.p == doctest::Approx(1.0));
    CHECK(p4.p_star == kInfExponent);
    CHECK(p4.k == 32);

    auto p16 = jspace_params(16);
    CHECK(p16.p == doctest::Approx(4.0 / 3.0));
    CHECK(p16.p_star == doctest::Approx(4.0));
    CHECK(p16.k == 131072);

    for (int n = 5; n <= 30; ++n) {
        auto pn = jspace_params(n);
        CHECK(1.0 / pn.p - 0.5 == doctest::Approx(1.0 / std::sqrt(double(n))).epsilon(1e-12));
        CHECK(0.5 - 1.0 / pn.p_star == doctest::Approx(1.0 / std::sqrt(double(n))).epsilon(1e-12));
        CHECK(pn.k == (1LL << (n + 1)));
    }
    CHECK_THROWS_AS(jspace_params(3), std::invalid_argument);
}

TEST_CASE("dual norm closed forms and certificates") {
    auto y = RealVector::from_dense({3, -4});
    CHECK(dual_norm(SpaceSpec::lp(2), y).value == doctest::Approx(5.0));
    CHECK(dual_norm(SpaceSpec::lp(1), y).value == doctest::Approx(4.0));
    CHECK(dual_norm(SpaceSpec::lp(kInfExponent), y).value == doctest::Approx(7.0));
    CHECK(dual_norm(SpaceSpec::lp(4.0 / 3.0), y).value ==
          doctest::Approx(std::pow(std::pow(3.0, 4.0) + std::pow(4.0, 4.0), 0.25)));

    auto s2 = SpaceSpec::convexify2(SpaceSpec::schreier());
    auto ones = RealVector::from_dense({1, 1, 1});
    auto r = dual_norm(s2, ones);
    CHECK(r.value == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-5));
    CHECK(r.lower <= r.value + 1e-12);
    CHECK(r.value <= r.upper + 1e-12);

    // on admissible supports the dual is euclidean
    auto adm = RealVector::from_entries({{4, 1.0}, {5, -2.0}, {7, 0.5}});
    CHECK(dual_norm(s2, adm).value == doctest::Approx(adm.l2_norm()).epsilon(1e-5));

    CHECK_THROWS_AS(dual_norm(s2, ones, 1e-12), std::invalid_argument);
    CHECK(dual_norm(s2, RealVector()).value == 0.0);
}

TEST_CASE("dual norm weak duality on random vectors") {
    auto s2 = SpaceSpec::convexify2(SpaceSpec::schreier());
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        auto y = random_vector(rng, 10, 6);
        if (y.is_zero()) continue;
        auto r = dual_norm(s2, y);
        for (int k = 0; k < 10; ++k) {
            auto x = random_vector(rng, 10, 6);
            double nx = norm(s2, x);
            if (nx == 0.0) continue;
            CHECK(std::fabs(x.dot(y)) / nx <= r.value * (1.0 + 2e-6) + 1e-12);
        }
    }
}

TEST_CASE("space names round trip") {
    CHECK(SpaceSpec::from_name("l1").kind() == SpaceSpec::Kind::Lp);
    CHECK(SpaceSpec::from_name("linf").p() == kInfExponent);
    CHECK(SpaceSpec::from_name("lp:1.5").p() == doctest::Approx(1.5));
    CHECK(SpaceSpec::from_name("s2").kind() == SpaceSpec::Kind::Convexify2);
    CHECK(SpaceSpec::from_name("dual:s2").kind() == SpaceSpec::Kind::Dual);
    CHECK(SpaceSpec::from_name("blocks:1,2;2,3").blocks().size() == 2);
    CHECK_THROWS_AS(SpaceSpec::from_name("nope"), std::invalid_argument);
    for (const char* n : {"l1", "l2", "linf", "lp:1.5", "schreier", "s2", "tsirelson", "ts2"}) {
        auto spec = SpaceSpec::from_name(n);
        CHECK(SpaceSpec::from_name(spec.name()).name() == spec.name());
    }
}

TEST_CASE("norm axioms across variants") {
    std::vector<SpaceSpec> variants = {
        SpaceSpec::lp(1), SpaceSpec::lp(2), SpaceSpec::lp(kInfExponent),
        SpaceSpec::lp(1.5), SpaceSpec::schreier(),
        SpaceSpec::convexify2(SpaceSpec::schreier())};
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& sp : variants) {
        for (int t = 0; t < 30; ++t) {
            auto x = random_vector(rng, 12, 8);
            auto y = random_vector(rng, 12, 8);
            double nx = norm(sp, x);
            CHECK(norm(sp, x.scaled(3.0)) == doctest::Approx(3.0 * nx).epsilon(1e-12));
            CHECK(norm(sp, x.plus(y)) <= nx + norm(sp, y) + 1e-10);
            std::vector<RealVector::Entry> shrunk;
            for (const auto& e : x.entries()) shrunk.push_back({e.index, e.value * u(rng)});
            CHECK(norm(sp, RealVector::from_entries(shrunk)) <= nx + 1e-12);
            if (!x.is_zero()) CHECK(nx > 0.0);
        }
    }
}
