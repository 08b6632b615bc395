#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "freewitt/errors.hpp"
#include "freewitt/multipoly.hpp"
#include "freewitt/rational.hpp"

namespace freewitt {

// Truncated power series sum_{k<=order} c_k z^k over a coefficient ring R.
// Coefficients up to `order` are exact; nothing beyond them is known.
//
// R must provide ring arithmetic, construction from int, multiplication by a
// Rational, is_zero(R) and unit_inverse(R). Rational and MultiPoly qualify.
template <class R>
class BasicSeries {
public:
    BasicSeries() : c_(1, R(0)) {}
    explicit BasicSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw DomainError("EmptySeries", "a series needs at least one coefficient");
    }

    static BasicSeries zero(int order) { return BasicSeries(std::vector<R>(check_order(order) + 1, R(0))); }
    static BasicSeries one(int order) { return constant(R(1), order); }
    static BasicSeries constant(const R& c, int order) {
        auto s = zero(order);
        s.c_[0] = c;
        return s;
    }
    // c * z^k truncated at `order` (k > order yields zero).
    static BasicSeries monomial(int k, const R& c, int order) {
        auto s = zero(order);
        if (k <= order) s.c_[static_cast<std::size_t>(k)] = c;
        return s;
    }
    static BasicSeries identity(int order) { return monomial(1, R(1), order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    // Coefficient of z^k; k must not exceed the order.
    const R& coeff(int k) const {
        if (k < 0 || k > order()) throw DomainError("BeyondOrder", "coefficient index beyond truncation order");
        return c_[static_cast<std::size_t>(k)];
    }

    // Index of the first nonzero coefficient, or order()+1 if all stored ones vanish.
    int valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (!is_zero(c_[k])) return static_cast<int>(k);
        }
        return order() + 1;
    }

    BasicSeries truncate(int new_order) const {
        if (new_order > order()) {
            throw DomainError("BeyondOrder", "cannot raise truncation order without information");
        }
        return BasicSeries(std::vector<R>(c_.begin(), c_.begin() + check_order(new_order) + 1));
    }

    BasicSeries operator-() const {
        BasicSeries out = *this;
        for (auto& x : out.c_) x = R(0) - x;
        return out;
    }

    friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
        const int n = std::min(a.order(), b.order());
        std::vector<R> out(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) out[k] = a.c_[k] + b.c_[k];
        return BasicSeries(std::move(out));
    }
    friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) {
        const int n = std::min(a.order(), b.order());
        std::vector<R> out(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) out[k] = a.c_[k] - b.c_[k];
        return BasicSeries(std::move(out));
    }
    // Cauchy product; result order is the minimum of the input orders.
    friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
        return mul_to(a, b, std::min(a.order(), b.order()));
    }
    friend BasicSeries operator/(const BasicSeries& a, const BasicSeries& b) {
        const int n = std::min(a.order(), b.order());
        return a.truncate(n) * b.truncate(n).reciprocal();
    }

    BasicSeries scaled(const R& s) const {
        BasicSeries out = *this;
        for (auto& x : out.c_) x = x * s;
        return out;
    }

    // 1/f; requires an invertible constant term.
    BasicSeries reciprocal() const {
        const R inv0 = unit_inverse_checked(c_[0]);
        std::vector<R> out(c_.size(), R(0));
        out[0] = inv0;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            R acc(0);
            for (std::size_t k = 1; k <= n; ++k) acc = acc + c_[k] * out[n - k];
            out[n] = R(0) - acc * inv0;
        }
        return BasicSeries(std::move(out));
    }

    // f'; the order drops by one.
    BasicSeries derivative() const {
        if (order() < 1) throw DomainError("OrderTooLow", "derivative of an order-0 series is unknown");
        std::vector<R> out(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return BasicSeries(std::move(out));
    }

    // Antiderivative with zero constant term; the order rises by one.
    BasicSeries integral() const {
        std::vector<R> out(c_.size() + 1, R(0));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            out[k + 1] = c_[k] * Rational(1, static_cast<long>(k + 1));
        }
        return BasicSeries(std::move(out));
    }

    // z^k * f, exact to order()+k.
    BasicSeries shift_up(int k) const {
        std::vector<R> out(static_cast<std::size_t>(k), R(0));
        out.insert(out.end(), c_.begin(), c_.end());
        return BasicSeries(std::move(out));
    }

    // f / z^k; requires the first k coefficients to vanish.
    BasicSeries shift_down(int k) const {
        if (k > order()) throw DomainError("OrderTooLow", "cannot divide by z^k beyond the truncation order");
        for (int i = 0; i < k; ++i) {
            if (!is_zero(c_[static_cast<std::size_t>(i)])) {
                throw DomainError("DivisionByNonUnit", "series is not divisible by z^" + std::to_string(k));
            }
        }
        return BasicSeries(std::vector<R>(c_.begin() + k, c_.end()));
    }

    BasicSeries pow(unsigned e) const {
        BasicSeries out = one(order());
        for (unsigned i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    // Product whose order accounts for valuations: min(a.order + val b, b.order + val a).
    static BasicSeries mul_tracking_valuation(const BasicSeries& a, const BasicSeries& b) {
        const int n = std::min(a.order() + b.valuation(), b.order() + a.valuation());
        std::vector<R> out(static_cast<std::size_t>(n) + 1, R(0));
        for (int i = 0; i <= std::min(a.order(), n); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; j <= std::min(b.order(), n - i); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return BasicSeries(std::move(out));
    }

    friend bool operator==(const BasicSeries& a, const BasicSeries& b) { return a.c_ == b.c_; }

private:
    static int check_order(int order) {
        if (order < 0) throw DomainError("NegativeOrder", "truncation order must be >= 0");
        return order;
    }

    static R unit_inverse_checked(const R& c) {
        if (is_zero(c)) throw DomainError("DivisionByNonUnit", "constant term is zero");
        return unit_inverse(c);
    }

    static BasicSeries mul_to(const BasicSeries& a, const BasicSeries& b, int n) {
        std::vector<R> out(static_cast<std::size_t>(n) + 1, R(0));
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; j <= n - i; ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return BasicSeries(std::move(out));
    }

    std::vector<R> c_;
};

using TruncSeries = BasicSeries<Rational>;
using PolySeries = BasicSeries<MultiPoly>;

enum class ArithKind { add, sub, mul, div };

template <class R>
BasicSeries<R> series_arith(const BasicSeries<R>& a, const BasicSeries<R>& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::mul: return a * b;
        case ArithKind::div:
            if (is_zero(b[0])) throw DomainError("DivisionByNonUnit", "divisor has zero constant term");
            return a / b;
    }
    return a;
}

// f(g(z)), order min(order f, order g); requires g(0) = 0.
template <class R>
BasicSeries<R> compose(const BasicSeries<R>& f, const BasicSeries<R>& g) {
    if (!is_zero(g[0])) throw DomainError("InnerConstantTermNonzero", "inner series must have g(0) = 0");
    const int n = std::min(f.order(), g.order());
    const auto inner = g.truncate(n);
    auto acc = BasicSeries<R>::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) acc = acc * inner + BasicSeries<R>::constant(f[k], n);
    return acc;
}

// Compositional inverse by Lagrange inversion: [z^n] g = (1/n) [w^{n-1}] (w/f(w))^n.
template <class R>
BasicSeries<R> comp_inverse(const BasicSeries<R>& f) {
    if (!is_zero(f[0])) throw DomainError("InnerConstantTermNonzero", "series must vanish at 0");
    if (f.order() < 1 || is_zero(f[1])) throw DomainError("ZeroLinearTerm", "linear coefficient is zero");
    const int n = f.order();
    const auto phi = f.shift_down(1).reciprocal();  // w / f(w), order n-1
    std::vector<R> out(static_cast<std::size_t>(n) + 1, R(0));
    auto power = phi;
    for (int k = 1; k <= n; ++k) {
        out[k] = power[k - 1] * Rational(1, k);
        if (k < n) power = power * phi;
    }
    return BasicSeries<R>(std::move(out));
}

// log f for f(0) = 1.
template <class R>
BasicSeries<R> log_unit(const BasicSeries<R>& f) {
    if (!(f[0] == R(1))) throw DomainError("ConstantTermNotOne", "log requires constant term 1");
    if (f.order() == 0) return BasicSeries<R>::zero(0);
    return (f.derivative() * f.truncate(f.order() - 1).reciprocal()).integral();
}

// exp g for g(0) = 0, via n e_n = sum_{k=1}^n k g_k e_{n-k}.
template <class R>
BasicSeries<R> exp_zero(const BasicSeries<R>& g) {
    if (!is_zero(g[0])) throw DomainError("ConstantTermNotZero", "exp requires constant term 0");
    const int n = g.order();
    std::vector<R> e(static_cast<std::size_t>(n) + 1, R(0));
    e[0] = R(1);
    for (int m = 1; m <= n; ++m) {
        R acc(0);
        for (int k = 1; k <= m; ++k) {
            if (!is_zero(g[k])) acc = acc + g[k] * e[m - k] * Rational(k);
        }
        e[m] = acc * Rational(1, m);
    }
    return BasicSeries<R>(std::move(e));
}

// z f'/f for f(0) = 1; lands in zA[[z]] at the same order.
template <class R>
BasicSeries<R> z_dlog(const BasicSeries<R>& f) {
    if (!(f[0] == R(1))) throw DomainError("ConstantTermNotOne", "z d/dz log requires constant term 1");
    std::vector<R> zf(f.coeffs().size(), R(0));
    for (int k = 1; k <= f.order(); ++k) zf[k] = f[k] * Rational(k);
    return BasicSeries<R>(std::move(zf)) * f.reciprocal();
}

// exp(sum x_n z^n / n), inverse of z_dlog.
template <class R>
BasicSeries<R> z_dlog_inv(const BasicSeries<R>& x) {
    if (!is_zero(x[0])) throw DomainError("ConstantTermNotZero", "ghost series must vanish at 0");
    std::vector<R> c(x.coeffs().size(), R(0));
    for (int k = 1; k <= x.order(); ++k) c[k] = x[k] * Rational(1, k);
    return exp_zero(BasicSeries<R>(std::move(c)));
}

TruncSeries series_from_strings(const std::vector<std::string>& coeffs);
PolySeries to_poly_series(const TruncSeries& s);
std::string to_string(const TruncSeries& s);

} // namespace freewitt
