#include "freewitt/free_prob.hpp"

#include "freewitt/errors.hpp"
#include "freewitt/partitions.hpp"
#include "freewitt/witt.hpp"

namespace freewitt {

namespace {

void require_same_order(const Distribution& a, const Distribution& b) {
    if (a.order() != b.order()) throw DomainError("LengthMismatch", "distributions have different orders");
}

void require_mean_nonzero(const Distribution& mu) {
    if (!mu.invertible_mean()) throw DomainError("MeanZero", "distribution has zero (or missing) mean");
}

void require_mean_one(const Distribution& mu) {
    if (!mu.mean_one()) throw DomainError("NotMeanOne", "distribution must have mean 1");
}

// 1 + m_1 z + ... + m_N z^N
TruncSeries moment_generating(const Distribution& mu) {
    std::vector<Rational> c{Rational(1)};
    c.insert(c.end(), mu.moments().begin(), mu.moments().end());
    return TruncSeries(std::move(c));
}

Distribution from_series_tail(const TruncSeries& s) {
    return Distribution(std::vector<Rational>(s.coeffs().begin() + 1, s.coeffs().end()));
}

} // namespace

Distribution Distribution::dirac(const Rational& c, int order) {
    std::vector<Rational> m;
    for (int n = 1; n <= order; ++n) m.push_back(c.pow(n));
    return Distribution(std::move(m));
}

Distribution Distribution::semicircle(int order) {
    CumulantVector k{std::vector<Rational>(static_cast<std::size_t>(order), Rational(0))};
    if (order >= 2) k.k[1] = Rational(1);
    return moments_from_cumulants(k);
}

Distribution Distribution::free_poisson(int order) {
    return moments_from_cumulants({std::vector<Rational>(static_cast<std::size_t>(order), Rational(1))});
}

Distribution Distribution::circledast_unit(int order) {
    if (order < 1) throw DomainError("OrderTooLow", "order must be >= 1");
    std::vector<Rational> geom(static_cast<std::size_t>(order), Rational(1));
    return distribution_from_s(TruncSeries(std::move(geom)));
}

Rational Distribution::moment(int n) const {
    if (n == 0) return Rational(1);
    if (n < 0 || n > order()) throw DomainError("BeyondOrder", "moment index beyond the distribution's order");
    return m_[static_cast<std::size_t>(n - 1)];
}

const Rational& Distribution::mean() const {
    if (m_.empty()) throw DomainError("OrderTooLow", "order-0 distribution has no mean");
    return m_.front();
}

Distribution moments_from_cumulants(const CumulantVector& k) {
    const int N = k.order();
    std::vector<Rational> m(static_cast<std::size_t>(N) + 1, Rational(0));
    m[0] = Rational(1);
    // powers[s][j] = [z^j] M^s, filled as the moments become known.
    std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(N) + 1,
                                              std::vector<Rational>(static_cast<std::size_t>(N) + 1, Rational(0)));
    for (int s = 0; s <= N; ++s) powers[s][0] = Rational(1);
    for (int n = 1; n <= N; ++n) {
        // [z^j] M^s for j = n - s needs m_1..m_{n-s}, all known.
        for (int s = 2; s <= n; ++s) {
            const int j = n - s;
            if (j == 0) continue;
            Rational acc(0);
            for (int i = 0; i <= j; ++i) acc += powers[s - 1][j - i] * m[i];
            powers[s][j] = acc;
        }
        Rational total(0);
        for (int s = 1; s <= n; ++s) {
            const auto& ks = k.k[static_cast<std::size_t>(s - 1)];
            if (!ks.is_zero()) total += ks * powers[s][n - s];
        }
        m[n] = total;
        powers[1][n] = total;
    }
    return Distribution(std::vector<Rational>(m.begin() + 1, m.end()));
}

Distribution moments_from_cumulants_nc(const CumulantVector& k) {
    std::vector<Rational> m;
    for (int n = 1; n <= k.order(); ++n) {
        Rational total(0);
        for (const auto& pi : enumerate_partitions(n, PartitionMode::noncrossing)) {
            Rational term(1);
            for (const auto& block : pi.blocks) term *= k.k[block.size() - 1];
            total += term;
        }
        m.push_back(total);
    }
    return Distribution(std::move(m));
}

CumulantVector cumulants_from_moments(const Distribution& mu) {
    const int N = mu.order();
    std::vector<Rational> m(static_cast<std::size_t>(N) + 1);
    m[0] = Rational(1);
    for (int n = 1; n <= N; ++n) m[n] = mu.moment(n);
    // [z^j] M^s for all s, j <= N.
    std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(N) + 1,
                                              std::vector<Rational>(static_cast<std::size_t>(N) + 1, Rational(0)));
    powers[0][0] = Rational(1);
    for (int s = 1; s <= N; ++s) {
        for (int j = 0; j <= N; ++j) {
            Rational acc(0);
            for (int i = 0; i <= j; ++i) acc += powers[s - 1][j - i] * m[i];
            powers[s][j] = acc;
        }
    }
    CumulantVector k{std::vector<Rational>(static_cast<std::size_t>(N), Rational(0))};
    for (int n = 1; n <= N; ++n) {
        Rational rest(0);
        for (int s = 1; s < n; ++s) rest += k.k[s - 1] * powers[s][n - s];
        k.k[n - 1] = m[n] - rest;
    }
    return k;
}

TruncSeries cauchy_chart(const Distribution& mu) {
    return moment_generating(mu).shift_up(1);
}

TruncSeries r_transform(const Distribution& mu) {
    const int N = mu.order();
    if (N == 0) return TruncSeries::zero(0);
    const auto u_hat = comp_inverse(cauchy_chart(mu));  // order N+1
    const auto w = TruncSeries::identity(N + 1);
    // calR(w) = (w - u_hat)/w^2 * (w/u_hat)
    const auto numerator = (w - u_hat).shift_down(2);
    const auto calR = numerator * u_hat.shift_down(1).reciprocal();
    return calR.shift_up(1);
}

TruncSeries r_series(const CumulantVector& k) {
    std::vector<Rational> c{Rational(0)};
    c.insert(c.end(), k.k.begin(), k.k.end());
    return TruncSeries(std::move(c));
}

Distribution distribution_from_r(const TruncSeries& r) {
    if (!r[0].is_zero()) throw DomainError("ConstantTermNotZero", "R-transforms vanish at 0");
    return moments_from_cumulants({std::vector<Rational>(r.coeffs().begin() + 1, r.coeffs().end())});
}

TruncSeries s_transform_from_moments(const Distribution& mu) {
    require_mean_nonzero(mu);
    const int N = mu.order();
    auto M = moment_generating(mu) - TruncSeries::one(N);
    const auto inv = comp_inverse(M);
    return inv.shift_down(1) * (TruncSeries::one(N - 1) + TruncSeries::identity(N - 1));
}

TruncSeries s_transform_from_cumulants(const Distribution& mu) {
    require_mean_nonzero(mu);
    return comp_inverse(r_series(cumulants_from_moments(mu))).shift_down(1);
}

TruncSeries s_transform(const Distribution& mu) {
    auto s = s_transform_from_moments(mu);
    if (!(s == s_transform_from_cumulants(mu))) {
        throw DomainError("RouteMismatch", "moment and cumulant routes of the S-transform disagree");
    }
    return s;
}

Distribution distribution_from_s(const TruncSeries& s) {
    if (s[0].is_zero()) throw DomainError("MeanZero", "S-transform must have nonzero constant term");
    const int K = s.order();
    const auto m_inv = s.shift_up(1) / (TruncSeries::one(K + 1) + TruncSeries::identity(K + 1));
    return from_series_tail(comp_inverse(m_inv));
}

Distribution boxplus(const Distribution& mu, const Distribution& nu) {
    require_same_order(mu, nu);
    auto k = cumulants_from_moments(mu);
    const auto l = cumulants_from_moments(nu);
    for (std::size_t i = 0; i < k.k.size(); ++i) k.k[i] += l.k[i];
    return moments_from_cumulants(k);
}

Distribution boxplus_inverse(const Distribution& mu) {
    auto k = cumulants_from_moments(mu);
    for (auto& x : k.k) x = -x;
    return moments_from_cumulants(k);
}

Distribution boxtimes(const Distribution& mu, const Distribution& nu) {
    require_same_order(mu, nu);
    return distribution_from_s(s_transform(mu) * s_transform(nu));
}

Distribution boxtimes_inverse(const Distribution& mu) {
    return distribution_from_s(s_transform(mu).reciprocal());
}

Distribution circledast(const Distribution& mu, const Distribution& nu) {
    require_same_order(mu, nu);
    require_mean_one(mu);
    require_mean_one(nu);
    const auto prod = lambda_ring_op(LambdaElement(s_transform(mu)), LambdaElement(s_transform(nu)), RingOp::mul);
    return distribution_from_s(prod.series());
}

Distribution boxdot(const Distribution& mu, const Distribution& nu) {
    require_same_order(mu, nu);
    auto k = cumulants_from_moments(mu);
    const auto l = cumulants_from_moments(nu);
    for (std::size_t i = 0; i < k.k.size(); ++i) k.k[i] *= l.k[i];
    return moments_from_cumulants(k);
}

Distribution log_exp(const Distribution& mu, LogExpDir dir) {
    if (dir == LogExpDir::log) {
        require_mean_one(mu);
        return distribution_from_r(z_dlog(s_transform(mu)));
    }
    return distribution_from_s(z_dlog_inv(r_series(cumulants_from_moments(mu))));
}

TruncSeries mult_fn_transform(const TruncSeries& f) {
    if (f.order() < 1 || f[1].is_zero()) throw DomainError("ZeroLinearTerm", "linear coefficient is zero");
    if (f[1] != Rational(1)) throw DomainError("NotStrict", "linear coefficient must be 1");
    const auto g = comp_inverse(f);
    const auto h = g.shift_down(1).reciprocal().shift_up(1);  // z^2 / g
    return comp_inverse(h);
}

} // namespace freewitt
