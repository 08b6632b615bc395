#include <doctest.h>

#include "freewitt/check/oracle.hpp"
#include "freewitt/errors.hpp"
#include "freewitt/number_theory.hpp"
#include "freewitt/random.hpp"
#include "freewitt/witt.hpp"
#include "helpers.hpp"

using namespace freewitt;
using testing::R;
using testing::Rs;
using testing::S;

TEST_CASE("number theory") {
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(7) == -1);
}

TEST_CASE("necklace polynomials") {
    const auto x = MultiPoly::variable("x");
    CHECK(necklace_poly(x, 1) == x);
    CHECK(necklace_poly(x, 2) == Rational(1, 2) * (x * x - x));
    CHECK(necklace_poly(R("2"), 6) == R("9"));
    CHECK(oracle::primitive_binary_necklaces(6) == 9);
    for (int n = 1; n <= 10; ++n) {
        CHECK(necklace_poly(R("2"), n) == Rational(oracle::primitive_binary_necklaces(n)));
    }
}

TEST_CASE("ghost map") {
    const Rational a = R("-3/2");
    CHECK(ghost_map(WittVector(Rs({"-3/2", "0", "0", "0"}))) == GhostVector({a, a.pow(2), a.pow(3), a.pow(4)}));
    const Rational b = R("5");
    CHECK(ghost_map(WittVector({0, b, 0, 0, 0, 0})) == GhostVector({0, 2 * b, 0, 2 * b.pow(2), 0, 2 * b.pow(3)}));
    Rng rng(3);
    const WittVector w(rng.rationals(8));
    CHECK(ghost_inv(ghost_map(w)) == w);
}

TEST_CASE("gamma") {
    CHECK(gamma(WittVector(Rs({"2/3", "0", "0"}))).series() == testing::geometric(R("2/3"), 3));
    CHECK(gamma_inv(LambdaElement::one(5)) == WittVector::zero(5));
    CHECK(gamma(WittVector(Rs({"1", "1", "0", "0"}))).series() == S({"1", "1", "2", "2", "3"}));
    CHECK_THROWS_DOMAIN(LambdaElement(S({"2", "1"})), "ConstantTermNotOne");
}

TEST_CASE("necklace coordinates") {
    const auto e1 = NecklaceVector::unit_vector(1, 6);
    const auto e2 = NecklaceVector::unit_vector(2, 6);
    CHECK(g_tilde(e1) == GhostVector(std::vector<Rational>(6, Rational(1))));
    CHECK(g_tilde_inv(GhostVector(std::vector<Rational>(6, Rational(1)))) == e1);
    CHECK(g_tilde(e2) == GhostVector(Rs({"0", "2", "0", "2", "0", "2"})));

    const Rational a = R("3/5");
    std::vector<Rational> expected;
    for (int n = 1; n <= 6; ++n) expected.push_back(necklace_poly(a, n));
    CHECK(f_tilde(WittVector({a, 0, 0, 0, 0, 0})) == NecklaceVector(expected));
    CHECK(f_tilde(WittVector::zero(5)) == NecklaceVector::zero(5));

    CHECK(c_map(e1).series() == testing::geometric(R("1"), 6));
    CHECK(c_map(NecklaceVector::zero(4)) == LambdaElement::one(4));
}

TEST_CASE("Witt ring operations") {
    const Rational a(2), b(3);
    const WittVector va({a, 0, 0});
    const WittVector vb({b, 0, 0});
    CHECK(witt_ring_op(va, vb, RingOp::add) == WittVector({a + b, -a * b, -a * b * (a + b)}));
    CHECK(witt_ring_op(va, vb, RingOp::mul) == WittVector({a * b, 0, 0}));
    Rng rng(9);
    const WittVector w(rng.rationals(6));
    CHECK(witt_ring_op(w, WittVector::zero(6), RingOp::add) == w);
    CHECK_THROWS_DOMAIN(witt_ring_op(w, WittVector::zero(5), RingOp::add), "LengthMismatch");
    // Small-length formula for the second component of a sum.
    const WittVector u(rng.rationals(6));
    CHECK(witt_ring_op(w, u, RingOp::add).at(2) == w.at(2) + u.at(2) - w.at(1) * u.at(1));
}

TEST_CASE("Lambda ring operations") {
    const int L = 7;
    const auto f = LambdaElement(testing::geometric(R("2"), L));
    const auto g = LambdaElement(testing::geometric(R("-1/3"), L));
    CHECK(lambda_ring_op(f, g, RingOp::mul).series() == testing::geometric(R("-2/3"), L));
    CHECK(lambda_ring_op(f, LambdaElement::one(L), RingOp::add) == f);
    const LambdaElement unit(testing::geometric(R("1"), L));
    Rng rng(2);
    const LambdaElement h(rng.series(L, {1}));
    CHECK(lambda_ring_op(h, unit, RingOp::mul) == h);
    CHECK(lambda_ring_op(h, LambdaElement::one(L), RingOp::mul) == LambdaElement::one(L));
}

TEST_CASE("necklace ring operations") {
    Rng rng(4);
    const NecklaceVector beta(rng.rationals(8));
    CHECK(necklace_ring_op(NecklaceVector::unit_vector(1, 8), beta, RingOp::mul) == beta);
    const auto e2 = NecklaceVector::unit_vector(2, 8);
    CHECK(necklace_ring_op(e2, e2, RingOp::mul) == NecklaceVector(Rs({"0", "2", "0", "0", "0", "0", "0", "0"})));
    CHECK(necklace_ring_op(beta, NecklaceVector::zero(8), RingOp::add) == beta);
    const NecklaceVector alpha(rng.rationals(8));
    CHECK(necklace_ring_op(alpha, beta, RingOp::mul) == oracle::necklace_mul_lcm(alpha, beta));
}

TEST_CASE("Verschiebung and Frobenius") {
    CHECK(verschiebung(2, NecklaceVector::unit_vector(1, 6)) == NecklaceVector::unit_vector(2, 6));
    CHECK(frobenius(2, NecklaceVector::unit_vector(2, 6)) == NecklaceVector(Rs({"2", "0", "0"})));
    Rng rng(6);
    for (int r = 2; r <= 3; ++r) {
        const NecklaceVector alpha(rng.rationals(6));
        const auto fv = frobenius(r, verschiebung(r, alpha), 6 / r);
        for (int n = 1; n <= 6 / r; ++n) CHECK(fv.at(n) == Rational(r) * alpha.at(n));
    }
    CHECK_THROWS_DOMAIN(frobenius(2, NecklaceVector::unit_vector(1, 4), 3), "InsufficientLength");
}

TEST_CASE("isomorphisms and the coordinate diagram") {
    Rng rng(1);
    const int L = 8;
    for (int trial = 0; trial < 10; ++trial) {
        const WittVector a(rng.rationals(L));
        const WittVector b(rng.rationals(L));
        CHECK(z_dlog(gamma(a).series()) == gamma_w(ghost_map(a)));
        CHECK(g_tilde(f_tilde(a)) == ghost_map(a));
        CHECK(c_map(f_tilde(a)) == gamma(a));
        CHECK(gamma(witt_ring_op(a, b, RingOp::add)).series() == gamma(a).series() * gamma(b).series());
        CHECK(lambda_ghost(gamma(a)) == ghost_map(a));
        CHECK(lambda_from_ghost(ghost_map(a)) == gamma(a));
        CHECK(gamma_w_inv(gamma_w(ghost_map(a))) == ghost_map(a));
    }
    const auto unit = WittVector::unit_vector(1, L);
    CHECK(ghost_map(unit) == GhostVector(std::vector<Rational>(L, Rational(1))));
    CHECK(f_tilde(unit) == NecklaceVector::unit_vector(1, L));
}

TEST_CASE("finite-root products") {
    const auto xi = Rs({"2", "-1/2"});
    const auto eta = Rs({"1/3", "3", "-1"});
    const int L = 6;
    const LambdaElement f(oracle::root_product(xi, L));
    const LambdaElement g(oracle::root_product(eta, L));
    CHECK(lambda_ring_op(f, g, RingOp::mul).series() == oracle::root_product(oracle::product_roots(xi, eta), L));
}
