#pragma once

// Straightforward reference implementations used to cross-check the library.
// They share only the Rational and series containers with the code under test.

#include <cstdint>
#include <map>
#include <vector>

#include "freewitt/fock.hpp"
#include "freewitt/genus.hpp"
#include "freewitt/rational.hpp"
#include "freewitt/series.hpp"
#include "freewitt/witt.hpp"

namespace freewitt::oracle {

long gcd(long a, long b);
long lcm(long a, long b);

Rational catalan(int n);
Rational bell(int n);
Rational factorial(int n);

// (alpha * beta)_n = sum_{lcm(i,j) = n} gcd(i,j) alpha_i beta_j.
NecklaceVector necklace_mul_lcm(const NecklaceVector& a, const NecklaceVector& b);
// prod_i (1 - xi_i z)^{-1} to order L.
TruncSeries root_product(const std::vector<Rational>& roots, int L);
// Roots xi_i eta_j of the Lambda-ring product.
std::vector<Rational> product_roots(const std::vector<Rational>& xi, const std::vector<Rational>& eta);
// Number of aperiodic binary strings of length n, divided by n.
long primitive_binary_necklaces(int n);

// exp(g) = sum_k g^k / k!, g(0) = 0.
TruncSeries exp_by_powers(const TruncSeries& g);
// 1 - e^{-z}, tanh z and z/(those) to the given order.
TruncSeries todd_q(int order);
TruncSeries l_genus_q(int order);

// F(g(z)) as a Laurent series in z, for F a polynomial in w given by its
// coefficients and g(z) = z + b_1 + b_2/z + ...; keeps exponents >= low.
std::map<int, Rational> compose_laurent(const std::vector<Rational>& F, const std::vector<Rational>& b, int low);

// Applies X_1 ... X_r to the vacuum vector of the full Fock space and
// returns <vacuum, X_1 ... X_r vacuum>.
Rational fock_vacuum(const std::vector<OpElement>& factors);

// Weight-n part of prod_{i=1}^D Q(x_i) minus K_n(e_1(x), ..., e_n(x)), all
// n <= D, must vanish. D <= 4.
bool msequence_matches_roots(const TruncSeries& q, const MSequence& K, int D);

} // namespace freewitt::oracle
