#pragma once

#include <vector>

#include "freewitt/rational.hpp"
#include "freewitt/series.hpp"

namespace freewitt {

// A law mu in Sigma given by its moments m_1..m_N (m_0 = 1 implicitly).
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(std::vector<Rational> moments) : m_(std::move(moments)) {}

    static Distribution dirac(const Rational& c, int order);
    // Cumulants (0, 1, 0, ...).
    static Distribution semicircle(int order);
    // Cumulants all equal to 1; the unit of boxdot.
    static Distribution free_poisson(int order);
    // S = (1 - z)^{-1}; the unit of circledast.
    static Distribution circledast_unit(int order);

    int order() const { return static_cast<int>(m_.size()); }
    const std::vector<Rational>& moments() const { return m_; }
    // m_n for 0 <= n <= order, with m_0 = 1.
    Rational moment(int n) const;
    const Rational& mean() const;

    bool invertible_mean() const { return order() >= 1 && !mean().is_zero(); }
    bool mean_one() const { return order() >= 1 && mean() == Rational(1); }

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::vector<Rational> m_;
};

struct CumulantVector {
    std::vector<Rational> k;
    int order() const { return static_cast<int>(k.size()); }
    friend bool operator==(const CumulantVector&, const CumulantVector&) = default;
};

// m_n = sum_{pi in NC(n)} prod_{V in pi} k_{|V|}, via M = 1 + sum_s k_s z^s M^s.
Distribution moments_from_cumulants(const CumulantVector& k);
// The same sum evaluated by enumerating NC(n); order <= 12.
Distribution moments_from_cumulants_nc(const CumulantVector& k);
CumulantVector cumulants_from_moments(const Distribution& mu);

// sum_{n>=0} m_n u^{n+1}: the Cauchy transform in the chart u = 1/z.
TruncSeries cauchy_chart(const Distribution& mu);
// R(z) = z R(z) from the inverse Cauchy transform; equals sum k_n z^n.
TruncSeries r_transform(const Distribution& mu);
TruncSeries r_series(const CumulantVector& k);
Distribution distribution_from_r(const TruncSeries& r);

// S = (1+z)/z M^{-1}(z).
TruncSeries s_transform_from_moments(const Distribution& mu);
// S = R^{-1}(z)/z.
TruncSeries s_transform_from_cumulants(const Distribution& mu);
// Both routes, which must agree. Requires m_1 != 0.
TruncSeries s_transform(const Distribution& mu);
// Inverse of the S-transform: M^{-1} = z S/(1+z). An order-(N-1) S gives N moments.
Distribution distribution_from_s(const TruncSeries& s);

Distribution boxplus(const Distribution& mu, const Distribution& nu);
Distribution boxplus_inverse(const Distribution& mu);
Distribution boxtimes(const Distribution& mu, const Distribution& nu);
Distribution boxtimes_inverse(const Distribution& mu);
// S^{-1}(S(mu) * S(nu)) with * the Lambda-ring product; mean-one inputs.
Distribution circledast(const Distribution& mu, const Distribution& nu);
// Componentwise product of free cumulants.
Distribution boxdot(const Distribution& mu, const Distribution& nu);

enum class LogExpDir { log, exp };
// LOG: Sigma_1^x -> Sigma, mu -> R^{-1}(z d/dz log S(mu)); order N -> N-1.
// EXP: the inverse; order N -> N+1.
Distribution log_exp(const Distribution& mu, LogExpDir dir);

// (z^2 / f^{-1})^{-1}: multiplicative functions on NC to those on all partitions.
TruncSeries mult_fn_transform(const TruncSeries& f);

} // namespace freewitt
