#pragma once

#include <string>

#include "freewitt/multipoly.hpp"
#include "freewitt/series.hpp"

namespace freewitt {

// One-dimensional commutative formal group law F(x, y) over Q, truncated at
// total degree `degree`.
struct Fgl {
    MultiPoly F;
    int degree = 0;

    static Fgl additive(int degree);
    static Fgl multiplicative(int degree);
};

// Outcome of an identity check. When `pass` is false, `identity` names the
// violated identity and `monomial`/`coefficient` give the lowest offending term
// of (lhs - rhs).
struct IdentityReport {
    bool pass = true;
    std::string identity;
    Monomial monomial;
    Rational coefficient;

    std::string str() const;
};

// Evaluates sum_k f_k * arg^k keeping total degree <= max_degree. arg must
// have zero constant term.
MultiPoly compose_into(const TruncSeries& f, const MultiPoly& arg, int max_degree);
// Series in the single variable `var` as a polynomial (coefficients 0..order).
MultiPoly series_as_poly(const TruncSeries& s, const std::string& var);

// F(x,y) = f^{-1}(f(x) + f(y)) for a strict logarithm f = z + O(z^2).
Fgl fgl_from_log(const TruncSeries& logf, int degree);
// Neutral element, commutativity, associativity as degree-filtered identities.
IdentityReport fgl_check_axioms(const Fgl& F);
// The series iota with F(x, iota(x)) = 0, solved degree by degree.
TruncSeries fgl_formal_inverse(const Fgl& F);
// f(F(x,y)) == G(f(x), f(y)) up to min(F.degree, G.degree, order f).
bool fgl_is_hom(const TruncSeries& f, const Fgl& F, const Fgl& G);
// log_F with log_F'(x) = 1 / (dF/dy)(x, 0).
TruncSeries fgl_logarithm(const Fgl& F);

// The derivation v(z) d/dz.
struct Derivation {
    TruncSeries v;

    // l_n = -z^{n+1} d/dz, n >= 0.
    static Derivation basis(int n, int order);
    // v * g'
    TruncSeries apply(const TruncSeries& g) const;
};

Derivation operator+(const Derivation& a, const Derivation& b);
Derivation operator*(const Rational& c, const Derivation& d);
bool operator==(const Derivation& a, const Derivation& b);

// [u, v] = (u v' - v u') d/dz.
Derivation derivation_bracket(const Derivation& u, const Derivation& v);
// sum_k v^k(z) / k! truncated at `order`; v must have valuation >= 2.
TruncSeries exp_derivation(const Derivation& v, int order);

} // namespace freewitt
