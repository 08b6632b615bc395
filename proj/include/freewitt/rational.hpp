#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace freewitt {

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p/q" or "p"; rejects decimals, exponents, zero denominators.
    static Rational parse(std::string_view text);

    // Canonical "p/q" encoding (integers carry "/1").
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational inverse() const;
    Rational pow(long e) const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// Division by a coefficient that must be a unit of the coefficient ring.
Rational unit_inverse(const Rational& r);

Rational binomial(const Rational& top, long k);
Rational factorial(long n);

} // namespace freewitt
