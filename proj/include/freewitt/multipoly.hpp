#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freewitt/rational.hpp"

namespace freewitt {

// A monomial: (variable, exponent) pairs sorted by variable name, exponents > 0.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

// Graded-lexicographic order: total degree first, then lexicographic on the
// exponent vector with variables ordered by name.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);

// Multivariate polynomial over Q with named variables and an optional positive
// integer weight per variable (unlisted variables have weight 1).
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
    MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT

    static MultiPoly variable(const std::string& name, int weight = 1);
    static MultiPoly monomial(Monomial m, const Rational& c);

    const Terms& terms() const { return terms_; }
    const std::map<std::string, int>& weights() const { return weights_; }
    MultiPoly& set_weight(const std::string& var, int weight);
    int weight_of(const std::string& var) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    std::size_t size() const { return terms_.size(); }

    unsigned total_degree() const;
    unsigned degree_in(const std::string& var) const;
    int weighted_degree(const Monomial& m) const;
    // True iff every term has weighted degree exactly w (zero counts as homogeneous).
    bool is_weighted_homogeneous(int w) const;
    std::vector<std::string> variables() const;

    // Coefficient of var^e, as a polynomial in the remaining variables.
    MultiPoly coefficient_of(const std::string& var, unsigned e) const;

    // Terms of weighted degree <= max_weight.
    MultiPoly truncated(int max_weight) const;
    // Terms of weighted degree exactly w.
    MultiPoly homogeneous_part(int w) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    // Product keeping only terms of weighted degree <= max_weight.
    static MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_weight);
    MultiPoly pow(unsigned e, std::optional<int> max_weight = std::nullopt) const;

    // Simultaneous substitution of variables; unlisted variables are kept.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& repl,
                         std::optional<int> max_weight = std::nullopt) const;
    Rational evaluate(const std::map<std::string, Rational>& values) const;

    // Canonical text, leading (grlex-largest) term first, e.g. "x^2*y - 1/2*y + 3".
    std::string str() const;

private:
    void merge_weights(const MultiPoly& o);
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
    std::map<std::string, int> weights_;
};

bool is_zero(const MultiPoly& p);
MultiPoly unit_inverse(const MultiPoly& p);

} // namespace freewitt
