#include <doctest.h>

#include "freewitt/errors.hpp"
#include "freewitt/formal_group.hpp"
#include "freewitt/random.hpp"
#include "helpers.hpp"

using namespace freewitt;
using testing::R;
using testing::S;

namespace {

const MultiPoly X = MultiPoly::variable("x");
const MultiPoly Y = MultiPoly::variable("y");

TruncSeries ln1p(int N) {
    std::vector<Rational> c{0};
    for (int k = 1; k <= N; ++k) c.push_back(Rational(k % 2 == 1 ? 1 : -1, k));
    return TruncSeries(c);
}

TruncSeries expm1(int N) {
    std::vector<Rational> c{0};
    Rational f(1);
    for (int k = 1; k <= N; ++k) {
        f *= Rational(k);
        c.push_back(f.inverse());
    }
    return TruncSeries(c);
}

} // namespace

TEST_CASE("formal group laws from logarithms") {
    CHECK(fgl_from_log(TruncSeries::identity(6), 6).F == X + Y);
    CHECK(fgl_from_log(ln1p(8), 8).F == X + Y + X * Y);
    const auto F = fgl_from_log(S({"0", "1", "1/2", "0", "0", "0", "0"}), 6);
    CHECK(F.F.coeff({{"x", 1}, {"y", 1}}) == R("-1"));
    CHECK(fgl_check_axioms(F).pass);
    CHECK_THROWS_DOMAIN(fgl_from_log(S({"0", "2", "1"}), 2), "NotStrict");
    CHECK_THROWS_DOMAIN(fgl_from_log(S({"0", "0", "1"}), 2), "ZeroLinearTerm");
}

TEST_CASE("axiom checks") {
    CHECK(fgl_check_axioms(Fgl::additive(6)).pass);
    CHECK(fgl_check_axioms(Fgl::multiplicative(6)).pass);
    Fgl bad{X + Y + X * X, 4};
    const auto rep = fgl_check_axioms(bad);
    CHECK_FALSE(rep.pass);
    CHECK(rep.identity.find("F(x,0)") != std::string::npos);
}

TEST_CASE("formal inverse") {
    CHECK(fgl_formal_inverse(Fgl::additive(6)) == S({"0", "-1", "0", "0", "0", "0", "0"}));
    CHECK(fgl_formal_inverse(Fgl::multiplicative(6)) == S({"0", "-1", "1", "-1", "1", "-1", "1"}));
    const auto F = fgl_from_log(S({"0", "1", "0", "1", "0", "0", "0", "0"}), 7);
    const auto iota = fgl_formal_inverse(F);
    CHECK(iota[1] == R("-1"));
    CHECK(iota[2].is_zero());
    // F(x, iota(x)) = 0 = F(iota(x), x)
    const auto ix = series_as_poly(iota, "x");
    CHECK(F.F.substitute({{"y", ix}}, 7).truncated(7).is_zero());
    CHECK(F.F.substitute({{"y", X}, {"x", ix}}, 7).truncated(7).is_zero());
}

TEST_CASE("homomorphisms") {
    CHECK(fgl_is_hom(TruncSeries::identity(6), Fgl::additive(6), Fgl::additive(6)));
    CHECK(fgl_is_hom(expm1(8), Fgl::additive(8), Fgl::multiplicative(8)));
    CHECK_FALSE(fgl_is_hom(TruncSeries::monomial(2, 1, 6), Fgl::additive(6), Fgl::additive(6)));
}

TEST_CASE("Witt algebra of derivations") {
    const int N = 12;
    auto l = [N](int n) { return Derivation::basis(n, N); };
    auto same = [](const Derivation& a, const Derivation& b) {
        const int n = std::min(a.v.order(), b.v.order());
        return a.v.truncate(n) == b.v.truncate(n);
    };
    CHECK(same(derivation_bracket(l(1), l(2)), Rational(-1) * l(3)));
    CHECK(derivation_bracket(l(2), l(2)).v.valuation() > derivation_bracket(l(2), l(2)).v.order());
    CHECK(same(derivation_bracket(l(0), l(3)), Rational(-3) * l(3)));

    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Derivation u{rng.series(N)}, v{rng.series(N)}, w{rng.series(N)};
        CHECK(same(derivation_bracket(u, v), Rational(-1) * derivation_bracket(v, u)));
        const auto jacobi = derivation_bracket(u, derivation_bracket(v, w)) +
                            derivation_bracket(v, derivation_bracket(w, u)) +
                            derivation_bracket(w, derivation_bracket(u, v));
        CHECK(jacobi.v.valuation() > jacobi.v.order());
    }
}

TEST_CASE("exponentials of derivations") {
    CHECK(exp_derivation(Derivation{TruncSeries::zero(8)}, 8) == TruncSeries::identity(8));
    CHECK(exp_derivation(Derivation::basis(1, 10), 10) ==
          testing::geometric(R("-1"), 9).shift_up(1));
    const auto e2 = exp_derivation(Derivation::basis(2, 7), 7);
    CHECK(e2 == S({"0", "1", "0", "-1", "0", "3/2", "0", "-5/2"}));
    // u = v commute: exp(2v) = exp(v) o exp(v)
    Derivation v{S({"0", "0", "1", "-2", "1/3", "0", "0", "0", "0"})};
    const auto once = exp_derivation(v, 8);
    CHECK(exp_derivation(v + v, 8) == compose(once, once));
    CHECK_THROWS_DOMAIN(exp_derivation(Derivation::basis(0, 6), 6), "NotPositiveDerivation");
}

TEST_CASE("logarithm of a group law") {
    CHECK(fgl_logarithm(Fgl::multiplicative(8)) == ln1p(8));
    Rng rng(5);
    const auto log = rng.series(8, {0, 1});
    CHECK(fgl_logarithm(fgl_from_log(log, 8)) == log);
}
