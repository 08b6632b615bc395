#include <doctest.h>

#include "freewitt/check/oracle.hpp"
#include "freewitt/errors.hpp"
#include "freewitt/genus.hpp"
#include "freewitt/random.hpp"
#include "helpers.hpp"

using namespace freewitt;
using testing::R;
using testing::Rs;
using testing::S;

namespace {

MultiPoly p(int i) { return MultiPoly::variable(elementary_var(i), i); }

} // namespace

TEST_CASE("genus and logarithm") {
    CHECK(log_from_genus(Genus(Rs({"1", "1", "1", "1"}))) == S({"0", "1", "1/2", "1/3", "1/4"}));
    CHECK(log_from_genus(Genus(Rs({"1", "0", "0"}))) == TruncSeries::identity(3));
    Rng rng(41);
    auto vals = rng.rationals(10);
    vals[0] = 1;
    const Genus g(vals);
    CHECK(genus_from_log(log_from_genus(g)) == g);
    CHECK_THROWS_DOMAIN(Genus(Rs({"2"})), "ConstantTermNotOne");
    CHECK_THROWS_DOMAIN(genus_from_log(S({"0", "2"})), "NotStrictAutomorphism");
}

TEST_CASE("characteristic series") {
    CHECK(q_from_log(TruncSeries::identity(6)).q == TruncSeries::one(5));
    const auto todd = q_from_log(log_from_genus(named_genus("todd", 9))).q;
    CHECK(todd == oracle::todd_q(8));
    CHECK(todd.truncate(4) == S({"1", "1/2", "1/12", "0", "-1/720"}));
    const auto ell = q_from_log(log_from_genus(named_genus("L", 9))).q;
    CHECK(ell == oracle::l_genus_q(8));
    CHECK(ell.truncate(4) == S({"1", "0", "1/3", "0", "-1/45"}));
    Rng rng(42);
    const auto log = rng.series(9, {0, 1});
    CHECK(log_from_q(q_from_log(log)) == log);
    CHECK_THROWS_DOMAIN(q_from_log(S({"0", "0", "1"})), "ZeroLinearTerm");
}

TEST_CASE("named genera") {
    CHECK(named_genus("trivial", 4).cp_values == Rs({"1", "0", "0", "0"}));
    CHECK(named_genus("todd", 4).cp_values == Rs({"1", "1", "1", "1"}));
    CHECK(named_genus("L", 5).cp_values == Rs({"1", "0", "1", "0", "1"}));
    CHECK_THROWS_DOMAIN(named_genus("elliptic"), "UnknownName");
}

TEST_CASE("multiplicative sequences") {
    const auto triv = msequence_from_q(CharSeries(TruncSeries::one(5)), 5);
    for (int n = 1; n <= 5; ++n) CHECK(triv.K[n].is_zero());
    const CharSeries todd(oracle::todd_q(8));
    const auto K = msequence_from_q(todd, 8);
    CHECK(K.K[0] == MultiPoly(1));
    CHECK(K.K[1] == Rational(1, 2) * p(1));
    CHECK(K.K[2] == Rational(1, 12) * (p(2) + p(1) * p(1)));
    CHECK(K.K[3] == Rational(1, 24) * p(1) * p(2));
    std::map<std::string, Rational> point;
    for (int i = 1; i <= 8; ++i) point[elementary_var(i)] = i == 1 ? 1 : 0;
    for (int n = 0; n <= 8; ++n) {
        CHECK(K.K[n].is_weighted_homogeneous(n));
        CHECK(K.K[n].evaluate(point) == todd.q[n]);
    }
    CHECK(oracle::msequence_matches_roots(todd.q, K, 4));
    Rng rng(43);
    const auto q = rng.series(4, {1});
    CHECK(oracle::msequence_matches_roots(q, msequence_from_q(CharSeries(q), 4), 4));
    CHECK_THROWS_DOMAIN(msequence_from_q(todd, 9), "TooLarge");
}

TEST_CASE("multiplicativity") {
    const auto K = msequence_from_q(CharSeries(oracle::todd_q(6)), 6);
    CHECK(msequence_multiplicativity_check(K, 4).pass);
    CHECK(msequence_multiplicativity_check(K, 6).pass);
    auto bad = K;
    bad.K[1] += p(1);
    const auto rep = msequence_multiplicativity_check(bad, 4);
    CHECK_FALSE(rep.pass);
    CHECK(rep.weight == 2);
    CHECK_FALSE(rep.monomial.empty());
    const auto triv = msequence_from_q(CharSeries(TruncSeries::one(6)), 6);
    CHECK(msequence_multiplicativity_check(triv, 6).pass);
}

TEST_CASE("two structures on genera") {
    const auto todd = q_from_log(log_from_genus(named_genus("todd", 7)));
    const auto ell = q_from_log(log_from_genus(named_genus("L", 7)));
    CHECK(genus_add_lambda(todd, ell).q == todd.q * ell.q);
    CHECK(genus_add_lambda(todd, CharSeries(TruncSeries::one(6))).q == todd.q);
    const auto a = log_from_genus(named_genus("todd", 7));
    const auto b = log_from_genus(named_genus("L", 7));
    const auto ab = genus_compose_log(a, b);
    CHECK(is_strict_log(ab));
    CHECK_FALSE(ab == genus_compose_log(b, a));
    CHECK(genus_compose_log(a, comp_inverse(a)) == TruncSeries::identity(7));
}

TEST_CASE("genus operator recovers Q") {
    for (const auto* name : {"trivial", "todd", "L"}) {
        const CharSeries q(q_from_log(log_from_genus(named_genus(name, 9))).q);
        CHECK(genus_fock_s(q) == q.q);
    }
    Rng rng(44);
    const CharSeries q(rng.series(8, {1}));
    CHECK(genus_fock_s(q) == q.q);
}
