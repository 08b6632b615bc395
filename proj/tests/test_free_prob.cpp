#include <doctest.h>

#include <optional>

#include "freewitt/check/oracle.hpp"
#include "freewitt/errors.hpp"
#include "freewitt/free_prob.hpp"
#include "freewitt/partitions.hpp"
#include "freewitt/random.hpp"
#include "helpers.hpp"

using namespace freewitt;
using testing::R;
using testing::Rs;
using testing::S;

namespace {

Distribution random_law(Rng& rng, int N, std::optional<Rational> mean = std::nullopt) {
    auto m = rng.rationals(static_cast<std::size_t>(N));
    m[0] = mean ? *mean : rng.nonzero_rational();
    return Distribution(m);
}

} // namespace

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(1, PartitionMode::all).size() == 1);
    const auto p3 = enumerate_partitions(3, PartitionMode::all);
    CHECK(p3.size() == 5);
    for (const auto& p : p3) CHECK_FALSE(is_crossing(p));
    const auto all4 = enumerate_partitions(4, PartitionMode::all);
    CHECK(all4.size() == 15);
    CHECK(enumerate_partitions(4, PartitionMode::noncrossing).size() == 14);
    int crossing = 0;
    for (const auto& p : all4) {
        if (is_crossing(p)) {
            ++crossing;
            CHECK(p.blocks == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
        }
    }
    CHECK(crossing == 1);
    CHECK(enumerate_partitions(8, PartitionMode::noncrossing).size() == 1430);
    CHECK_THROWS_DOMAIN(enumerate_partitions(13, PartitionMode::all), "TooLarge");
}

TEST_CASE("moments from cumulants") {
    CHECK(moments_from_cumulants({Rs({"0", "1", "0", "0", "0", "0"})}).moments() == Rs({"0", "1", "0", "2", "0", "5"}));
    CHECK(moments_from_cumulants({Rs({"1", "1", "1", "1"})}).moments() == Rs({"1", "2", "5", "14"}));
    const Rational c = R("-2/3");
    CHECK(moments_from_cumulants({{c, 0, 0, 0}}) == Distribution::dirac(c, 4));
    CHECK(cumulants_from_moments(Distribution::dirac(c, 4)) == CumulantVector{{c, 0, 0, 0}});
    CHECK(cumulants_from_moments(Distribution(Rs({"1", "2", "5", "14", "42"}))) ==
          CumulantVector{Rs({"1", "1", "1", "1", "1"})});
    CHECK(cumulants_from_moments(Distribution(Rs({"0", "0", "0"}))) == CumulantVector{Rs({"0", "0", "0"})});

    Rng rng(21);
    for (int N = 1; N <= 8; ++N) {
        const CumulantVector k{rng.rationals(static_cast<std::size_t>(N))};
        const auto mu = moments_from_cumulants(k);
        CHECK(mu == moments_from_cumulants_nc(k));
        CHECK(cumulants_from_moments(mu) == k);
    }
}

TEST_CASE("R-transform") {
    CHECK(r_transform(Distribution::dirac(R("5/2"), 5)) == TruncSeries::monomial(1, R("5/2"), 5));
    CHECK(r_transform(Distribution::semicircle(6)) == TruncSeries::monomial(2, 1, 6));
    CHECK(r_transform(Distribution::dirac(0, 4)) == TruncSeries::zero(4));
    Rng rng(22);
    for (int N = 1; N <= 8; ++N) {
        const auto mu = random_law(rng, N);
        CHECK(r_transform(mu) == r_series(cumulants_from_moments(mu)));
    }
}

TEST_CASE("S-transform") {
    CHECK(s_transform(Distribution::dirac(1, 6)) == TruncSeries::one(5));
    CHECK(s_transform(Distribution::dirac(R("3"), 6)) == TruncSeries::constant(R("1/3"), 5));
    CHECK(s_transform(Distribution::free_poisson(6)) == testing::geometric(R("-1"), 5));
    CHECK_THROWS_DOMAIN(s_transform(Distribution::semicircle(4)), "MeanZero");
    Rng rng(23);
    for (int N = 1; N <= 8; ++N) {
        const auto mu = random_law(rng, N);
        CHECK(s_transform_from_moments(mu) == s_transform_from_cumulants(mu));
        CHECK(distribution_from_s(s_transform(mu)) == mu);
    }
}

TEST_CASE("free additive convolution") {
    CHECK(boxplus(Distribution::dirac(2, 5), Distribution::dirac(R("-1/2"), 5)) == Distribution::dirac(R("3/2"), 5));
    const auto two = boxplus(Distribution::semicircle(4), Distribution::semicircle(4));
    CHECK(cumulants_from_moments(two) == CumulantVector{Rs({"0", "2", "0", "0"})});
    CHECK(two.moment(2) == 2);
    CHECK(two.moment(4) == 8);
    Rng rng(24);
    const auto mu = random_law(rng, 6);
    CHECK(boxplus(mu, Distribution::dirac(0, 6)) == mu);
    CHECK_THROWS_DOMAIN(boxplus(mu, Distribution::dirac(0, 5)), "LengthMismatch");
}

TEST_CASE("free multiplicative convolution") {
    Rng rng(25);
    const auto mu = random_law(rng, 6);
    CHECK(boxtimes(Distribution::dirac(1, 6), mu) == mu);
    const Rational a = R("-3/2");
    const auto scaled = boxtimes(Distribution::dirac(a, 6), mu);
    for (int n = 1; n <= 6; ++n) CHECK(scaled.moment(n) == a.pow(n) * mu.moment(n));
    CHECK(boxtimes(Distribution::dirac(2, 5), Distribution::dirac(3, 5)) == Distribution::dirac(6, 5));
    const auto fp2 = boxtimes(Distribution::free_poisson(4), Distribution::free_poisson(4));
    CHECK(s_transform(fp2) == testing::geometric(R("-1"), 3) * testing::geometric(R("-1"), 3));
    CHECK(fp2.moment(1) == 1);
    CHECK(fp2.moment(2) == 3);
    // Invertible-mean laws form a group.
    CHECK(boxtimes(mu, boxtimes_inverse(mu)) == Distribution::dirac(1, 6));
}

TEST_CASE("circledast and boxdot") {
    Rng rng(26);
    const auto mu = random_law(rng, 8, Rational(1));
    const auto nu = random_law(rng, 8, Rational(1));
    CHECK(circledast(Distribution::dirac(1, 8), mu) == Distribution::dirac(1, 8));
    const auto unit = Distribution::circledast_unit(8);
    CHECK(unit.moments() == Rs({"1", "0", "-1", "0", "2", "0", "-5", "0"}));
    CHECK(circledast(unit, mu) == mu);
    CHECK(circledast(mu, nu) == circledast(nu, mu));
    CHECK_THROWS_DOMAIN(circledast(mu, Distribution::dirac(2, 8)), "NotMeanOne");

    CHECK(boxdot(Distribution::dirac(2, 5), Distribution::dirac(R("1/3"), 5)) == Distribution::dirac(R("2/3"), 5));
    const auto any = random_law(rng, 8);
    CHECK(boxdot(any, Distribution::free_poisson(8)) == any);
    CHECK(boxdot(any, Distribution::dirac(0, 8)) == Distribution::dirac(0, 8));
}

TEST_CASE("LOG and EXP") {
    CHECK(log_exp(Distribution::dirac(1, 6), LogExpDir::log) == Distribution::dirac(0, 5));
    CHECK(log_exp(Distribution::dirac(0, 5), LogExpDir::exp) == Distribution::dirac(1, 6));
    Rng rng(27);
    const auto mu = random_law(rng, 8, Rational(1));
    const auto nu = random_law(rng, 8, Rational(1));
    CHECK(log_exp(boxtimes(mu, nu), LogExpDir::log) ==
          boxplus(log_exp(mu, LogExpDir::log), log_exp(nu, LogExpDir::log)));
    CHECK(log_exp(log_exp(mu, LogExpDir::log), LogExpDir::exp) == mu);
    CHECK_THROWS_DOMAIN(log_exp(Distribution::dirac(2, 4), LogExpDir::log), "NotMeanOne");
}

TEST_CASE("multiplicative function transform") {
    CHECK(mult_fn_transform(TruncSeries::identity(6)) == TruncSeries::identity(6));
    const auto f = testing::geometric(R("1"), 7).shift_up(1).truncate(7);
    const auto g = mult_fn_transform(f);
    CHECK(g.truncate(5) == S({"0", "1", "-1", "2", "-5", "14"}));
    Rng rng(28);
    const auto r = mult_fn_transform(rng.series(7, {0, 1}));
    CHECK(r[0].is_zero());
    CHECK(r[1] == 1);
    CHECK_THROWS_DOMAIN(mult_fn_transform(S({"0", "2", "1"})), "NotStrict");
}

TEST_CASE("Catalan and Bell oracles") {
    CHECK(oracle::catalan(4) == 14);
    CHECK(oracle::bell(5) == 52);
    for (int n = 1; n <= 8; ++n) {
        CHECK(Rational(static_cast<long>(enumerate_partitions(n, PartitionMode::all).size())) == oracle::bell(n));
    }
}
