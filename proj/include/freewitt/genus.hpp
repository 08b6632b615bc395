#pragma once

#include <string>
#include <vector>

#include "freewitt/multipoly.hpp"
#include "freewitt/rational.hpp"
#include "freewitt/series.hpp"

namespace freewitt {

// A genus through its values on CP^0 = 1, CP^1, ..., CP^{L-1}.
struct Genus {
    std::vector<Rational> cp_values;

    explicit Genus(std::vector<Rational> values);
    int length() const { return static_cast<int>(cp_values.size()); }
    friend bool operator==(const Genus&, const Genus&) = default;
};

// A unital characteristic power series Q.
struct CharSeries {
    TruncSeries q;

    explicit CharSeries(TruncSeries series);
    int order() const { return q.order(); }
};

// K_0..K_D in p_1..p_D, weight(p_i) = i.
struct MSequence {
    std::vector<MultiPoly> K;
    int degree() const { return static_cast<int>(K.size()) - 1; }
};

// log(z) = sum_n cp[n-1]/n z^n; L values give an order-L series.
TruncSeries log_from_genus(const Genus& g);
Genus genus_from_log(const TruncSeries& log);

// Q = z / log^{-1}(z); an order-L log gives an order-(L-1) Q.
CharSeries q_from_log(const TruncSeries& log);
// Inverse of q_from_log; order M gives order M+1.
TruncSeries log_from_q(const CharSeries& q);

std::string elementary_var(int i);
// Weight-n parts of prod_i Q(x_i) rewritten in the elementary symmetric
// polynomials p_k. D <= 8.
MSequence msequence_from_q(const CharSeries& q, int D);

struct MultiplicativityReport {
    bool pass = true;
    int weight = 0;          // first weight where the identity fails
    std::string monomial;    // leading monomial of the discrepancy
    Rational coefficient;

    std::string str() const;
};

// Checks K(p) = K(p') K(p'') for p = p' * p'' (as total Chern classes) up to weight D <= 6.
MultiplicativityReport msequence_multiplicativity_check(const MSequence& K, int D);

// trivial, todd or L, with `length` CP-values.
Genus named_genus(const std::string& name, int length = 10);

// Commutative structure: product of characteristic series.
CharSeries genus_add_lambda(const CharSeries& a, const CharSeries& b);
// Non-commutative structure: composition of strict logarithms a(b(z)).
TruncSeries genus_compose_log(const TruncSeries& a, const TruncSeries& b);

bool is_strict_log(const TruncSeries& log);

// S-transform of the vacuum distribution of the genus operator, to the order of q.
TruncSeries genus_fock_s(const CharSeries& q);

} // namespace freewitt
