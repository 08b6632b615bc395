#include "freewitt/rational.hpp"

#include <cctype>
#include <ostream>

#include "freewitt/errors.hpp"

namespace freewitt {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string owned(s);
    if (!owned.empty() && owned[0] == '+') owned.erase(0, 1);
    return mpz_class(owned, 10);
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("DivisionByZero", "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    }
    mpq_class q;
    if (slash == std::string_view::npos) {
        q = mpq_class(parse_integer(num_text));
    } else {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text)) {
            throw ParseError("invalid rational literal: '" + std::string(text) + "'");
        }
        const mpz_class den = parse_integer(den_text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        q = mpq_class(parse_integer(num_text), den);
        q.canonicalize();
    }
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("DivisionByZero", "inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("DivisionByZero", "rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    if (r.is_integer()) return os << r.num().get_str();
    return os << r.str();
}

Rational unit_inverse(const Rational& r) {
    if (r.is_zero()) throw DomainError("DivisionByNonUnit", "coefficient is zero");
    return r.inverse();
}

Rational binomial(const Rational& top, long k) {
    Rational out(1);
    for (long i = 0; i < k; ++i) {
        out *= (top - Rational(i));
        out /= Rational(i + 1);
    }
    return out;
}

Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

} // namespace freewitt
