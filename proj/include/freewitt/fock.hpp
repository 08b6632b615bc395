#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freewitt/free_prob.hpp"
#include "freewitt/rational.hpp"
#include "freewitt/series.hpp"

namespace freewitt {

// The normal-ordered word l_{i1}...l_{im} l*_{j1}...l*_{jn}; generators are 1-based.
struct OpWord {
    std::vector<std::uint8_t> creators;
    std::vector<std::uint8_t> annihilators;

    std::size_t length() const { return creators.size() + annihilators.size(); }
    bool empty() const { return creators.empty() && annihilators.empty(); }
    friend auto operator<=>(const OpWord&, const OpWord&) = default;
};

// Finite rational combination of normal-ordered words in k free generators,
// with words longer than degree_cap discarded.
class OpElement {
public:
    OpElement(int generators, int degree_cap);

    static OpElement scalar(const Rational& c, int generators, int degree_cap);
    static OpElement creator(int gen, int generators, int degree_cap);
    static OpElement annihilator(int gen, int generators, int degree_cap);
    // f(l*_gen) = sum_j f_j (l*_gen)^j.
    static OpElement annihilator_series(const TruncSeries& f, int gen, int generators, int degree_cap);

    int generators() const { return generators_; }
    int degree_cap() const { return cap_; }
    const std::map<OpWord, Rational>& terms() const { return terms_; }
    void add_term(const OpWord& w, const Rational& c);

    // Coefficient of the empty word: the vacuum state.
    Rational vacuum() const;
    std::size_t max_creators() const;

    OpElement operator-() const;
    friend OpElement operator+(const OpElement& a, const OpElement& b);
    friend OpElement operator-(const OpElement& a, const OpElement& b);
    friend OpElement operator*(const Rational& c, const OpElement& a);
    friend bool operator==(const OpElement& a, const OpElement& b);

private:
    int generators_;
    int cap_;
    std::map<OpWord, Rational> terms_;
};

// Product with Cuntz reduction l*_i l_j = delta_ij.
OpElement op_mul(const OpElement& a, const OpElement& b);
// The involution l <-> l*, reversing word order.
OpElement adjoint(const OpElement& a);
// a^e by iterated op_mul.
OpElement op_pow(const OpElement& a, unsigned e);

// tau(X_1 ... X_r), evaluated left to right keeping only creator-free words
// whose annihilators can still be cancelled by later factors.
Rational vacuum_of_product(const std::vector<OpElement>& factors);
// m_n = tau(a^n), n = 1..N. Requires degree_cap >= N.
Distribution vacuum_moments(const OpElement& a, int N);

// l_gen + f(l*_gen).
OpElement additive_op(const TruncSeries& f, int gen, int generators, int degree_cap);
// l + sum_n k_{n+1} (l*)^n, whose distribution has free cumulants k.
OpElement canonical_T(const CumulantVector& k, int N);
// (1 + l_gen) f(l*_gen); requires f(0) != 0.
OpElement haagerup_op(const TruncSeries& f, int N, int gen = 1, int generators = 1, int degree_cap = -1);
// (1 + l)(1/Q)(l*), whose distribution has S-transform Q.
OpElement genus_operator(const TruncSeries& q, int N);

struct FreenessReport {
    bool additive = false;        // moments of a+b equal the boxplus of the marginals
    bool multiplicative = false;  // moments of ab equal the boxtimes of the marginals
    bool multiplicative_checked = false;  // false when f(0) g(0) = 0 and boxtimes is undefined
    bool alternating = false;     // centered alternating products have vacuum 0
    int patterns_checked = 0;
    std::string failure;

    bool pass() const { return additive && (multiplicative || !multiplicative_checked) && alternating; }
};

// Builds a on generator 1 and b on generator 2 in both canonical forms and
// checks freeness three ways up to order N. The boxtimes check is skipped
// unless f(0) g(0) != 0.
FreenessReport freeness_witness(const TruncSeries& f, const TruncSeries& g, int N);

} // namespace freewitt
