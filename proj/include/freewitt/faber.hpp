#pragma once

#include <string>
#include <vector>

#include "freewitt/multipoly.hpp"
#include "freewitt/rational.hpp"

namespace freewitt {

// Coefficients b_1..b_L of h(z) = 1 + b_1 z + ... + b_L z^L, i.e. of the germ
// g(z) = z h(1/z) = z + b_1 + b_2/z + ... at infinity. Coefficients past L are
// zero: the input describes g exactly. Entries may be symbolic.
struct FaberInput {
    std::vector<MultiPoly> b;

    static FaberInput numeric(const std::vector<Rational>& values);
    // b_j = variable "<prefix><j>" (weight j), j = 1..len.
    static FaberInput symbolic(int len, const std::string& prefix = "b");

    // b_j for j >= 1, zero past the stored length.
    MultiPoly at(int j) const;
    int length() const { return static_cast<int>(b.size()); }
};

// Name of the polynomial variable of Faber polynomials.
inline const std::string kFaberVar = "w";

// F_0..F_{n_max} as polynomials in w: F_0 = 1, F_1 = w - b_1, then
// F_{n+1} = (w - b_1) F_n - sum_{k=1}^{n-1} b_{n-k+1} F_k - (n+1) b_{n+1}.
std::vector<MultiPoly> faber_recursion(const FaberInput& b, int n_max);

// F_n(w) = -n [u^n] log(h(u) - w u), the defining expansion at infinity.
std::vector<MultiPoly> faber_from_expansion(const FaberInput& b, int n_max);

// F_n(0) = -n [z^n] log h.
std::vector<MultiPoly> faber_values_from_log(const FaberInput& b, int n_max);
// F_n(0) = -[u^n] u h'(u)/h(u), i.e. z d/dz log g in the chart u = 1/z (F_0 = 1).
std::vector<MultiPoly> faber_values_from_dlog(const FaberInput& b, int n_max);
// F_0(0)..F_{n_max}(0); both generating-function routes are computed and must agree.
std::vector<MultiPoly> faber_from_generating(const FaberInput& b, int n_max);

// det(w 1 - A_n) with A_n the companion-type matrix of b.
MultiPoly faber_det(const FaberInput& b, int n);
MultiPoly faber_det_at(const FaberInput& b, int n, const Rational& w_value);

// Division-free determinant (Laplace expansion over column subsets).
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

// beta_{mn}, 1 <= m, n <= M (stored 0-based).
struct GrunskyTable {
    int M = 0;
    std::vector<std::vector<MultiPoly>> beta;

    const MultiPoly& at(int m, int n) const { return beta.at(m - 1).at(n - 1); }
    bool is_symmetric() const;
};

// From F_n(g(z)) = z^n + n sum_m beta_{mn} z^{-m}; the bivariate definition is
// recomputed for m + n <= M and must agree.
GrunskyTable grunsky_coeffs(const FaberInput& b, int M);
// From log((g(z) - g(w))/(z - w)) = -sum beta_{mn} z^{-m} w^{-n}, entries with
// m + n <= max_total (others left zero).
GrunskyTable grunsky_bivariate(const FaberInput& b, int M, int max_total);

// Psi^n as the determinant in the variables lambda1..lambdan.
MultiPoly adams_poly(int n);
// Psi^n == (-1)^n F_n(lambda^1..lambda^n) for all n <= n_max, via both the
// determinant and the recursion.
bool check_adams_lemma(int n_max);

} // namespace freewitt
