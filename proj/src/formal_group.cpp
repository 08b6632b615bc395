#include "freewitt/formal_group.hpp"

#include <algorithm>
#include <sstream>

namespace freewitt {

namespace {

const MultiPoly& var_x() {
    static const MultiPoly x = MultiPoly::variable("x");
    return x;
}
const MultiPoly& var_y() {
    static const MultiPoly y = MultiPoly::variable("y");
    return y;
}

// Lowest (grlex) term of a nonzero difference.
IdentityReport violation(const std::string& identity, const MultiPoly& diff) {
    IdentityReport r;
    if (diff.is_zero()) return r;
    r.pass = false;
    r.identity = identity;
    r.monomial = diff.terms().begin()->first;
    r.coefficient = diff.terms().begin()->second;
    return r;
}

TruncSeries poly_to_series(const MultiPoly& p, const std::string& var, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (const auto& [m, coeff] : p.terms()) {
        unsigned e = 0;
        for (const auto& [v, k] : m) {
            if (v != var) throw DomainError("UnexpectedVariable", "polynomial involves " + v);
            e = k;
        }
        if (static_cast<int>(e) <= order) c[e] = coeff;
    }
    return TruncSeries(std::move(c));
}

} // namespace

std::string IdentityReport::str() const {
    if (pass) return "pass";
    std::ostringstream os;
    os << "fail: " << identity << " at " << MultiPoly::monomial(monomial, Rational(1)).str()
       << " (coefficient " << coefficient << ")";
    return os.str();
}

Fgl Fgl::additive(int degree) { return {var_x() + var_y(), degree}; }

Fgl Fgl::multiplicative(int degree) {
    return {(var_x() + var_y() + var_x() * var_y()).truncated(degree), degree};
}

MultiPoly compose_into(const TruncSeries& f, const MultiPoly& arg, int max_degree) {
    if (!arg.constant_term().is_zero()) {
        throw DomainError("InnerConstantTermNonzero", "argument must have zero constant term");
    }
    const int n = std::min(f.order(), max_degree);
    MultiPoly acc(f[n]);
    for (int k = n - 1; k >= 0; --k) acc = MultiPoly::mul_truncated(acc, arg, max_degree) + MultiPoly(f[k]);
    return acc.truncated(max_degree);
}

MultiPoly series_as_poly(const TruncSeries& s, const std::string& var) {
    MultiPoly out;
    for (int k = 0; k <= s.order(); ++k) {
        if (s[k].is_zero()) continue;
        out += MultiPoly::monomial(k == 0 ? Monomial{} : Monomial{{var, static_cast<unsigned>(k)}}, s[k]);
    }
    return out;
}

Fgl fgl_from_log(const TruncSeries& logf, int degree) {
    if (logf.order() < 1 || logf[1].is_zero()) throw DomainError("ZeroLinearTerm", "logarithm has zero linear term");
    if (!logf[0].is_zero()) throw DomainError("InnerConstantTermNonzero", "logarithm must vanish at 0");
    if (logf[1] != Rational(1)) throw DomainError("NotStrict", "logarithm must have linear coefficient 1");
    if (logf.order() < degree) throw DomainError("OrderTooLow", "logarithm order is below the requested degree");
    const auto f = logf.truncate(degree);
    const auto expf = comp_inverse(f);
    const MultiPoly sum = compose_into(f, var_x(), degree) + compose_into(f, var_y(), degree);
    return {compose_into(expf, sum, degree), degree};
}

IdentityReport fgl_check_axioms(const Fgl& F) {
    const int d = F.degree;
    const MultiPoly zero;
    const MultiPoly z = MultiPoly::variable("z");

    auto r = violation("F(x,0) = x", F.F.substitute({{"y", zero}}).truncated(d) - var_x());
    if (!r.pass) return r;
    r = violation("F(0,y) = y", F.F.substitute({{"x", zero}}).truncated(d) - var_y());
    if (!r.pass) return r;
    r = violation("F(x,y) = F(y,x)", F.F.substitute({{"x", var_y()}, {"y", var_x()}}).truncated(d) - F.F.truncated(d));
    if (!r.pass) return r;

    const MultiPoly Fyz = F.F.substitute({{"x", var_y()}, {"y", z}}, d);
    const MultiPoly left = F.F.substitute({{"y", Fyz}}, d);
    const MultiPoly right = F.F.substitute({{"x", F.F}, {"y", z}}, d);
    return violation("F(x,F(y,z)) = F(F(x,y),z)", (left - right).truncated(d));
}

TruncSeries fgl_formal_inverse(const Fgl& F) {
    const int d = F.degree;
    std::vector<Rational> a(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int n = 1; n <= d; ++n) {
        const MultiPoly iota = series_as_poly(TruncSeries(a), "x");
        const MultiPoly value = F.F.substitute({{"y", iota}}, n);
        // [x^n] F(x, iota) = a_n + (terms in a_1..a_{n-1}); a_n is currently 0.
        a[n] = -value.coeff(n == 0 ? Monomial{} : Monomial{{"x", static_cast<unsigned>(n)}});
    }
    return TruncSeries(std::move(a));
}

bool fgl_is_hom(const TruncSeries& f, const Fgl& F, const Fgl& G) {
    if (!f[0].is_zero()) throw DomainError("InnerConstantTermNonzero", "homomorphism must vanish at 0");
    const int d = std::min({F.degree, G.degree, f.order()});
    const MultiPoly lhs = compose_into(f, F.F.truncated(d), d);
    const MultiPoly fx = compose_into(f, var_x(), d);
    const MultiPoly fy = compose_into(f, var_y(), d);
    const MultiPoly rhs = G.F.substitute({{"x", fx}, {"y", fy}}, d);
    return (lhs - rhs).truncated(d).is_zero();
}

TruncSeries fgl_logarithm(const Fgl& F) {
    const MultiPoly dFdy0 = F.F.coefficient_of("y", 1);
    const auto deriv = poly_to_series(dFdy0, "x", F.degree - 1);
    return deriv.reciprocal().integral();
}

Derivation Derivation::basis(int n, int order) {
    if (n < 0) throw DomainError("InvalidIndex", "only l_n with n >= 0 are supported");
    return {TruncSeries::monomial(n + 1, Rational(-1), order)};
}

TruncSeries Derivation::apply(const TruncSeries& g) const {
    return TruncSeries::mul_tracking_valuation(v, g.derivative());
}

Derivation operator+(const Derivation& a, const Derivation& b) { return {a.v + b.v}; }
Derivation operator*(const Rational& c, const Derivation& d) { return {d.v.scaled(c)}; }
bool operator==(const Derivation& a, const Derivation& b) { return a.v == b.v; }

Derivation derivation_bracket(const Derivation& u, const Derivation& v) {
    const auto a = TruncSeries::mul_tracking_valuation(u.v, v.v.derivative());
    const auto b = TruncSeries::mul_tracking_valuation(v.v, u.v.derivative());
    return {a - b};
}

TruncSeries exp_derivation(const Derivation& v, int order) {
    if (v.v.valuation() < 2) {
        throw DomainError("NotPositiveDerivation", "exp is only implemented on z^2 A[[z]] d/dz");
    }
    auto term = TruncSeries::identity(order);
    auto sum = term;
    for (int k = 1; k <= order && term.valuation() <= order; ++k) {
        term = v.apply(term);
        term = term.truncate(std::min(term.order(), order)).scaled(Rational(1, k));
        sum = sum + term;
    }
    return sum;
}

} // namespace freewitt
