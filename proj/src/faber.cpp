#include "freewitt/faber.hpp"

#include <bit>
#include <map>

#include "freewitt/errors.hpp"
#include "freewitt/series.hpp"

namespace freewitt {

namespace {

const MultiPoly& w_var() {
    static const MultiPoly w = MultiPoly::variable(kFaberVar);
    return w;
}

// h(u) = 1 + b_1 u + ... as a series of the given order.
PolySeries h_series(const FaberInput& b, int order) {
    std::vector<MultiPoly> c(static_cast<std::size_t>(order) + 1);
    c[0] = MultiPoly(1);
    for (int j = 1; j <= order; ++j) c[j] = b.at(j);
    return PolySeries(std::move(c));
}

void require_nonnegative(int n) {
    if (n < 0) throw DomainError("InvalidIndex", "index must be non-negative");
}

// Bivariate polynomial in (u, v) with MultiPoly coefficients.
using BiPoly = std::map<std::pair<int, int>, MultiPoly>;

BiPoly bi_mul(const BiPoly& a, const BiPoly& b, int max_total) {
    BiPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            const int i = ea.first + eb.first;
            const int j = ea.second + eb.second;
            if (i + j > max_total) continue;
            auto& slot = out[{i, j}];
            slot += ca * cb;
            if (slot.is_zero()) out.erase({i, j});
        }
    }
    return out;
}

} // namespace

FaberInput FaberInput::numeric(const std::vector<Rational>& values) {
    FaberInput in;
    for (const auto& v : values) in.b.emplace_back(v);
    return in;
}

FaberInput FaberInput::symbolic(int len, const std::string& prefix) {
    FaberInput in;
    for (int j = 1; j <= len; ++j) in.b.push_back(MultiPoly::variable(prefix + std::to_string(j), j));
    return in;
}

MultiPoly FaberInput::at(int j) const {
    if (j < 1) throw DomainError("InvalidIndex", "Faber coefficients are indexed from 1");
    return j <= length() ? b[static_cast<std::size_t>(j - 1)] : MultiPoly();
}

std::vector<MultiPoly> faber_recursion(const FaberInput& b, int n_max) {
    require_nonnegative(n_max);
    std::vector<MultiPoly> F;
    F.emplace_back(1);
    if (n_max >= 1) F.push_back(w_var() - b.at(1));
    for (int n = 1; n + 1 <= n_max; ++n) {
        MultiPoly next = (w_var() - b.at(1)) * F[n];
        for (int k = 1; k <= n - 1; ++k) next -= b.at(n - k + 1) * F[k];
        next -= b.at(n + 1) * Rational(n + 1);
        F.push_back(std::move(next));
    }
    return F;
}

std::vector<MultiPoly> faber_from_expansion(const FaberInput& b, int n_max) {
    require_nonnegative(n_max);
    auto arg = h_series(b, n_max);
    if (n_max >= 1) arg = arg - PolySeries::monomial(1, w_var(), n_max);
    const auto lg = log_unit(arg);
    std::vector<MultiPoly> F;
    F.emplace_back(1);
    for (int n = 1; n <= n_max; ++n) F.push_back(lg[n] * Rational(-n));
    return F;
}

std::vector<MultiPoly> faber_values_from_log(const FaberInput& b, int n_max) {
    require_nonnegative(n_max);
    const auto lg = log_unit(h_series(b, n_max));
    std::vector<MultiPoly> F;
    F.emplace_back(1);
    for (int n = 1; n <= n_max; ++n) F.push_back(lg[n] * Rational(-n));
    return F;
}

std::vector<MultiPoly> faber_values_from_dlog(const FaberInput& b, int n_max) {
    require_nonnegative(n_max);
    const auto h = h_series(b, n_max);
    // z d/dz log g = 1 - u h'(u)/h(u)
    std::vector<MultiPoly> uh(static_cast<std::size_t>(n_max) + 1);
    for (int k = 1; k <= n_max; ++k) uh[k] = h[k] * Rational(k);
    const auto series = PolySeries::one(n_max) - PolySeries(std::move(uh)) * h.reciprocal();
    return series.coeffs();
}

std::vector<MultiPoly> faber_from_generating(const FaberInput& b, int n_max) {
    auto from_log = faber_values_from_log(b, n_max);
    if (from_log != faber_values_from_dlog(b, n_max)) {
        throw DomainError("RouteMismatch", "log and z d/dz log extractions of F_n(0) disagree");
    }
    return from_log;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly(1);
    if (n > 20) throw DomainError("TooLarge", "subset determinant limited to n <= 20");
    for (const auto& row : m) {
        if (row.size() != n) throw DomainError("NotSquare", "determinant of a non-square matrix");
    }
    // dp[mask]: signed sum over bijections of rows 0..popcount(mask)-1 onto mask.
    std::vector<MultiPoly> dp(std::size_t{1} << n);
    dp[0] = MultiPoly(1);
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask].is_zero()) continue;
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        if (row == n) continue;
        for (std::size_t col = 0; col < n; ++col) {
            if (mask & (std::size_t{1} << col)) continue;
            const MultiPoly& entry = m[row][col];
            if (entry.is_zero()) continue;
            // Parity of the inversions introduced by placing `col` after the columns in mask.
            const int above = std::popcount(mask >> (col + 1));
            MultiPoly term = dp[mask] * entry;
            if (above % 2 != 0) term = -term;
            dp[mask | (std::size_t{1} << col)] += term;
        }
    }
    return dp.back();
}

namespace {

// A_n with (i, j) entry: 1 on the superdiagonal, (i+1) b_{i+1} in column 0,
// b_{i-j+1} below the diagonal otherwise.
std::vector<std::vector<MultiPoly>> companion(const FaberInput& b, int n) {
    std::vector<std::vector<MultiPoly>> a(static_cast<std::size_t>(n), std::vector<MultiPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i + 1) {
                a[i][j] = MultiPoly(1);
            } else if (j == 0) {
                a[i][j] = b.at(i + 1) * Rational(i + 1);
            } else if (j <= i) {
                a[i][j] = b.at(i - j + 1);
            }
        }
    }
    return a;
}

} // namespace

MultiPoly faber_det(const FaberInput& b, int n) {
    require_nonnegative(n);
    auto a = companion(b, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i][j] = (i == j ? w_var() : MultiPoly()) - a[i][j];
        }
    }
    return determinant(a);
}

MultiPoly faber_det_at(const FaberInput& b, int n, const Rational& w_value) {
    return faber_det(b, n).substitute({{kFaberVar, MultiPoly(w_value)}});
}

bool GrunskyTable::is_symmetric() const {
    for (int m = 1; m <= M; ++m) {
        for (int n = m + 1; n <= M; ++n) {
            if (!(at(m, n) == at(n, m))) return false;
        }
    }
    return true;
}

GrunskyTable grunsky_bivariate(const FaberInput& b, int M, int max_total) {
    require_nonnegative(M);
    // (g(z) - g(w))/(z - w) = 1 - sum_{k>=1} b_{k+1} sum_{i+j=k-1} u^{i+1} v^{j+1}
    BiPoly x;
    for (int k = 1; k + 1 <= max_total; ++k) {
        const MultiPoly coeff = -b.at(k + 1);
        if (coeff.is_zero()) continue;
        for (int i = 0; i <= k - 1; ++i) {
            const int j = k - 1 - i;
            x[{i + 1, j + 1}] += coeff;
        }
    }
    // log(1 + x) = sum_r (-1)^{r+1} x^r / r; x has total degree >= 2.
    BiPoly log_sum;
    BiPoly power = x;
    for (int r = 1; 2 * r <= max_total; ++r) {
        const Rational scale = Rational(r % 2 == 1 ? 1 : -1, r);
        for (const auto& [e, c] : power) {
            auto& slot = log_sum[e];
            slot += c * scale;
        }
        power = bi_mul(power, x, max_total);
    }
    GrunskyTable t;
    t.M = M;
    t.beta.assign(static_cast<std::size_t>(M), std::vector<MultiPoly>(static_cast<std::size_t>(M)));
    for (const auto& [e, c] : log_sum) {
        const auto [m, n] = e;
        if (m >= 1 && n >= 1 && m <= M && n <= M && m + n <= max_total) t.beta[m - 1][n - 1] = -c;
    }
    return t;
}

GrunskyTable grunsky_coeffs(const FaberInput& b, int M) {
    require_nonnegative(M);
    GrunskyTable t;
    t.M = M;
    t.beta.assign(static_cast<std::size_t>(M), std::vector<MultiPoly>(static_cast<std::size_t>(M)));
    const auto F = faber_recursion(b, M);
    for (int n = 1; n <= M; ++n) {
        const int order = n + M;
        const auto h = h_series(b, order);
        // u^n F_n(g) = sum_k c_k u^{n-k} h(u)^k with F_n(w) = sum_k c_k w^k
        auto total = PolySeries::zero(order);
        auto hk = PolySeries::one(order);
        for (int k = 0; k <= n; ++k) {
            const MultiPoly ck = F[n].coefficient_of(kFaberVar, static_cast<unsigned>(k));
            if (!ck.is_zero()) total = total + hk.scaled(ck).shift_up(n - k).truncate(order);
            hk = hk * h;
        }
        if (!(total[0] == MultiPoly(1))) {
            throw DomainError("RouteMismatch", "F_n(g(z)) does not start with z^n");
        }
        for (int k = 1; k <= n; ++k) {
            if (!total[k].is_zero()) throw DomainError("RouteMismatch", "F_n(g(z)) has non-negative powers below z^n");
        }
        for (int m = 1; m <= M; ++m) t.beta[m - 1][n - 1] = total[n + m] * Rational(1, n);
    }
    const auto check = grunsky_bivariate(b, M, M);
    for (int m = 1; m <= M; ++m) {
        for (int n = 1; m + n <= M; ++n) {
            if (!(check.at(m, n) == t.at(m, n))) {
                throw DomainError("RouteMismatch", "Faber and bivariate Grunsky coefficients disagree");
            }
        }
    }
    return t;
}

MultiPoly adams_poly(int n) {
    require_nonnegative(n);
    return determinant(companion(FaberInput::symbolic(n, "lambda"), n));
}

bool check_adams_lemma(int n_max) {
    const auto lam = FaberInput::symbolic(n_max, "lambda");
    const auto rec = faber_recursion(lam, n_max);
    for (int n = 1; n <= n_max; ++n) {
        const MultiPoly psi = adams_poly(n);
        const Rational sign(n % 2 == 0 ? 1 : -1);
        const MultiPoly by_det = faber_det_at(lam, n, Rational(0)) * sign;
        const MultiPoly by_rec = rec[n].substitute({{kFaberVar, MultiPoly()}}) * sign;
        if (!(psi == by_det) || !(psi == by_rec)) return false;
    }
    return true;
}

} // namespace freewitt
