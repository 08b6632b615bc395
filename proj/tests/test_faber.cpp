#include <doctest.h>

#include "freewitt/check/oracle.hpp"
#include "freewitt/errors.hpp"
#include "freewitt/faber.hpp"
#include "freewitt/random.hpp"
#include "freewitt/witt.hpp"
#include "helpers.hpp"

using namespace freewitt;
using testing::R;
using testing::Rs;

namespace {

const MultiPoly W = MultiPoly::variable(kFaberVar);
MultiPoly b(int j) { return MultiPoly::variable("b" + std::to_string(j), j); }
MultiPoly lam(int j) { return MultiPoly::variable("lambda" + std::to_string(j), j); }
MultiPoly at_zero(const MultiPoly& p) { return p.substitute({{kFaberVar, MultiPoly(Rational(0))}}); }

} // namespace

TEST_CASE("Faber polynomials by recursion") {
    const auto F = faber_recursion(FaberInput::symbolic(4), 4);
    CHECK(F[0] == MultiPoly(1));
    CHECK(F[1] == W - b(1));
    CHECK(F[2] == (W - b(1)) * (W - b(1)) - Rational(2) * b(2));
    CHECK(at_zero(F[3]) == -b(1) * b(1) * b(1) + Rational(3) * b(1) * b(2) - Rational(3) * b(3));
}

TEST_CASE("Faber values from the generating function") {
    const auto vals = faber_from_generating(FaberInput::symbolic(3), 3);
    CHECK(vals[0] == MultiPoly(1));
    CHECK(vals[2] == b(1) * b(1) - Rational(2) * b(2));
    // h = (1 - a z)^{-1}: F_n(0) = -a^n
    const Rational a = R("2/3");
    std::vector<Rational> bs;
    for (int n = 1; n <= 6; ++n) bs.push_back(a.pow(n));
    const auto F = faber_from_generating(FaberInput::numeric(bs), 6);
    for (int n = 1; n <= 6; ++n) CHECK(F[n] == MultiPoly(-a.pow(n)));
}

TEST_CASE("ghost components and Faber values") {
    // [z^n] z dlog h = -F_n(0)
    Rng rng(12);
    const auto bs = rng.rationals(7);
    const auto F = faber_from_generating(FaberInput::numeric(bs), 7);
    std::vector<Rational> h{Rational(1)};
    h.insert(h.end(), bs.begin(), bs.end());
    const auto ghost = lambda_ghost(LambdaElement(TruncSeries(h)));
    for (int n = 1; n <= 7; ++n) CHECK(ghost.at(n) == -F[n].constant_term());
}

TEST_CASE("determinant route") {
    const auto sb = FaberInput::symbolic(3);
    CHECK(faber_det(sb, 1) == W - b(1));
    CHECK(faber_det(sb, 2) == (W - b(1)) * (W - b(1)) - Rational(2) * b(2));
    Rng rng(8);
    const auto nb = FaberInput::numeric(rng.rationals(10));
    const auto rec = faber_recursion(nb, 10);
    const auto exp = faber_from_expansion(nb, 10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(faber_det(nb, n) == rec[n]);
        CHECK(exp[n] == rec[n]);
        CHECK(faber_det_at(nb, n, R("1/2")) == rec[n].substitute({{kFaberVar, MultiPoly(R("1/2"))}}));
    }
    // Coefficients beyond L vanish: b = (b1) describes g = z + b1 exactly.
    const auto short_b = FaberInput::numeric(Rs({"3"}));
    CHECK(faber_recursion(short_b, 4)[4] == (W - MultiPoly(3)).pow(4));
}

TEST_CASE("division-free determinant") {
    std::vector<std::vector<MultiPoly>> m{{MultiPoly(2), MultiPoly(1)}, {MultiPoly(5), MultiPoly(3)}};
    CHECK(determinant(m) == MultiPoly(1));
    CHECK(determinant({}) == MultiPoly(1));
}

TEST_CASE("Grunsky coefficients") {
    const auto t0 = grunsky_coeffs(FaberInput::numeric(Rs({"7/2"})), 5);
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) CHECK(t0.at(m, n).is_zero());
    }
    const auto t = grunsky_coeffs(FaberInput::symbolic(2), 4);
    CHECK(t.at(1, 1) == b(2));
    CHECK(t.at(2, 2) == Rational(1, 2) * b(2) * b(2));
    CHECK(t.at(1, 2).is_zero());
    Rng rng(13);
    const auto nb = FaberInput::numeric(rng.rationals(8));
    const auto full = grunsky_coeffs(nb, 8);
    CHECK(full.is_symmetric());
    const auto bi = grunsky_bivariate(nb, 8, 8);
    for (int m = 1; m <= 8; ++m) {
        for (int n = 1; m + n <= 8; ++n) CHECK(bi.at(m, n) == full.at(m, n));
    }
}

TEST_CASE("Adams operations") {
    CHECK(adams_poly(1) == lam(1));
    CHECK(adams_poly(2) == lam(1) * lam(1) - Rational(2) * lam(2));
    CHECK(adams_poly(3) == lam(1).pow(3) - Rational(3) * lam(1) * lam(2) + Rational(3) * lam(3));
    CHECK(check_adams_lemma(6));
}
