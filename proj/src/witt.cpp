#include "freewitt/witt.hpp"

#include <numeric>

#include "freewitt/errors.hpp"
#include "freewitt/number_theory.hpp"

namespace freewitt {

namespace {

template <class Tag>
void require_same_length(const CompVector<Tag>& a, const CompVector<Tag>& b) {
    if (a.size() != b.size()) throw DomainError("LengthMismatch", "vectors have different lengths");
}

int len_of(std::size_t n) { return static_cast<int>(n); }

} // namespace

LambdaElement::LambdaElement(TruncSeries series) : series_(std::move(series)) {
    if (series_[0] != Rational(1)) throw DomainError("ConstantTermNotOne", "Lambda elements have constant term 1");
}

Rational necklace_poly(const Rational& x, int n) {
    if (n < 1) throw DomainError("InvalidIndex", "necklace polynomial index must be >= 1");
    Rational sum(0);
    for (int d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu != 0) sum += Rational(mu) * x.pow(d);
    }
    return sum / Rational(n);
}

MultiPoly necklace_poly(const MultiPoly& x, int n) {
    if (n < 1) throw DomainError("InvalidIndex", "necklace polynomial index must be >= 1");
    MultiPoly sum;
    for (int d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu != 0) sum += x.pow(static_cast<unsigned>(d)) * Rational(mu);
    }
    return sum * Rational(1, n);
}

GhostVector ghost_map(const WittVector& a) {
    const int L = len_of(a.size());
    auto x = GhostVector::zero(a.size());
    for (int n = 1; n <= L; ++n) {
        Rational s(0);
        for (int d : divisors(n)) s += Rational(d) * a.at(d).pow(n / d);
        x.at(n) = s;
    }
    return x;
}

WittVector ghost_inv(const GhostVector& x) {
    const int L = len_of(x.size());
    auto a = WittVector::zero(x.size());
    for (int n = 1; n <= L; ++n) {
        Rational rest(0);
        for (int d : divisors(n)) {
            if (d < n) rest += Rational(d) * a.at(d).pow(n / d);
        }
        a.at(n) = (x.at(n) - rest) / Rational(n);
    }
    return a;
}

LambdaElement gamma(const WittVector& a) {
    const int L = len_of(a.size());
    auto prod = TruncSeries::one(L);
    for (int n = 1; n <= L; ++n) {
        if (a.at(n).is_zero()) continue;
        std::vector<Rational> geom(static_cast<std::size_t>(L) + 1, Rational(0));
        for (int k = 0; n * k <= L; ++k) geom[static_cast<std::size_t>(n * k)] = a.at(n).pow(k);
        prod = prod * TruncSeries(std::move(geom));
    }
    return LambdaElement(prod);
}

WittVector gamma_inv(const LambdaElement& f) {
    const int L = f.length();
    auto a = WittVector::zero(static_cast<std::size_t>(L));
    auto rest = f.series();
    for (int n = 1; n <= L; ++n) {
        // rest = prod_{m >= n} (1 - a_m z^m)^{-1} = 1 + a_n z^n + O(z^{n+1})
        a.at(n) = rest[n];
        if (!a.at(n).is_zero()) {
            auto factor = TruncSeries::one(L);
            factor = factor - TruncSeries::monomial(n, a.at(n), L);
            rest = rest * factor;
        }
    }
    return a;
}

TruncSeries gamma_w(const GhostVector& x) {
    std::vector<Rational> c(x.size() + 1, Rational(0));
    for (int n = 1; n <= len_of(x.size()); ++n) c[static_cast<std::size_t>(n)] = x.at(n);
    return TruncSeries(std::move(c));
}

GhostVector gamma_w_inv(const TruncSeries& s) {
    if (!s[0].is_zero()) throw DomainError("ConstantTermNotZero", "ghost series must vanish at 0");
    return GhostVector(std::vector<Rational>(s.coeffs().begin() + 1, s.coeffs().end()));
}

GhostVector lambda_ghost(const LambdaElement& f) { return gamma_w_inv(z_dlog(f.series())); }

LambdaElement lambda_from_ghost(const GhostVector& x) { return LambdaElement(z_dlog_inv(gamma_w(x))); }

GhostVector g_tilde(const NecklaceVector& alpha) {
    const int L = len_of(alpha.size());
    auto x = GhostVector::zero(alpha.size());
    for (int n = 1; n <= L; ++n) {
        Rational s(0);
        for (int d : divisors(n)) s += Rational(d) * alpha.at(d);
        x.at(n) = s;
    }
    return x;
}

NecklaceVector g_tilde_inv(const GhostVector& x) {
    const int L = len_of(x.size());
    auto alpha = NecklaceVector::zero(x.size());
    for (int n = 1; n <= L; ++n) {
        Rational s(0);
        for (int d : divisors(n)) {
            const int mu = mobius(n / d);
            if (mu != 0) s += Rational(mu) * x.at(d);
        }
        alpha.at(n) = s / Rational(n);
    }
    return alpha;
}

NecklaceVector f_tilde(const WittVector& a) {
    const int L = len_of(a.size());
    auto alpha = NecklaceVector::zero(a.size());
    for (int m = 1; m <= L; ++m) {
        Rational s(0);
        for (int n : divisors(m)) s += necklace_poly(a.at(n), m / n);
        alpha.at(m) = s;
    }
    return alpha;
}

LambdaElement c_map(const NecklaceVector& alpha) {
    const int L = len_of(alpha.size());
    auto prod = TruncSeries::one(L);
    for (int n = 1; n <= L; ++n) {
        const Rational& e = alpha.at(n);
        if (e.is_zero()) continue;
        // (1 - x)^{-e} = sum_k binom(e + k - 1, k) x^k with x = z^n
        std::vector<Rational> factor(static_cast<std::size_t>(L) + 1, Rational(0));
        for (int k = 0; n * k <= L; ++k) factor[static_cast<std::size_t>(n * k)] = binomial(e + Rational(k - 1), k);
        prod = prod * TruncSeries(std::move(factor));
    }
    return LambdaElement(prod);
}

GhostVector ghost_ring_op(const GhostVector& a, const GhostVector& b, RingOp op) {
    require_same_length(a, b);
    auto out = GhostVector::zero(a.size());
    for (int n = 1; n <= len_of(a.size()); ++n) {
        out.at(n) = op == RingOp::add ? a.at(n) + b.at(n) : a.at(n) * b.at(n);
    }
    return out;
}

WittVector witt_ring_op(const WittVector& a, const WittVector& b, RingOp op) {
    require_same_length(a, b);
    return ghost_inv(ghost_ring_op(ghost_map(a), ghost_map(b), op));
}

LambdaElement lambda_ring_op(const LambdaElement& f, const LambdaElement& g, RingOp op) {
    if (f.length() != g.length()) throw DomainError("LengthMismatch", "Lambda elements have different lengths");
    if (op == RingOp::add) return LambdaElement(f.series() * g.series());
    return lambda_from_ghost(ghost_ring_op(lambda_ghost(f), lambda_ghost(g), RingOp::mul));
}

NecklaceVector necklace_ring_op(const NecklaceVector& a, const NecklaceVector& b, RingOp op) {
    require_same_length(a, b);
    if (op == RingOp::add) {
        auto out = NecklaceVector::zero(a.size());
        for (int n = 1; n <= len_of(a.size()); ++n) out.at(n) = a.at(n) + b.at(n);
        return out;
    }
    return g_tilde_inv(ghost_ring_op(g_tilde(a), g_tilde(b), RingOp::mul));
}

NecklaceVector verschiebung(int r, const NecklaceVector& alpha) {
    if (r < 1) throw DomainError("InvalidIndex", "Verschiebung index must be >= 1");
    auto out = NecklaceVector::zero(alpha.size());
    for (int n = r; n <= len_of(alpha.size()); n += r) out.at(n) = alpha.at(n / r);
    return out;
}

NecklaceVector frobenius(int r, const NecklaceVector& alpha, std::size_t out_len) {
    if (r < 1) throw DomainError("InvalidIndex", "Frobenius index must be >= 1");
    if (alpha.size() < static_cast<std::size_t>(r) * out_len) {
        throw DomainError("InsufficientLength", "Frobenius F_r needs r * output-length input components");
    }
    auto out = NecklaceVector::zero(out_len);
    for (int n = 1; n <= len_of(out_len); ++n) {
        Rational s(0);
        for (int d : divisors(n * r)) {
            if (std::lcm(r, d) == n * r) s += Rational(d, n) * alpha.at(d);
        }
        out.at(n) = s;
    }
    return out;
}

NecklaceVector frobenius(int r, const NecklaceVector& alpha) {
    if (r < 1) throw DomainError("InvalidIndex", "Frobenius index must be >= 1");
    return frobenius(r, alpha, alpha.size() / static_cast<std::size_t>(r));
}

} // namespace freewitt
