#include "freewitt/genus.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "freewitt/errors.hpp"
#include "freewitt/fock.hpp"
#include "freewitt/free_prob.hpp"

namespace freewitt {

namespace {

using Partition = std::vector<int>;

void partitions_of(int n, int max_part, Partition& current, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_of(n - p, p, current, out);
        current.pop_back();
    }
}

// Partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition current;
    partitions_of(n, n, current, out);
    return out;
}

Partition conjugate(const Partition& lambda) {
    Partition c;
    if (lambda.empty()) return c;
    for (int i = 1; i <= lambda.front(); ++i) {
        c.push_back(static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [i](int p) { return p >= i; })));
    }
    return c;
}

std::string root_var(int i) { return "x" + std::to_string(i); }

MultiPoly elementary_in_roots(int k, int nvars) {
    MultiPoly e;
    std::function<void(int, int, Monomial&)> rec = [&](int start, int left, Monomial& m) {
        if (left == 0) {
            e += MultiPoly::monomial(m, Rational(1));
            return;
        }
        for (int i = start; i <= nvars - left + 1; ++i) {
            m.emplace_back(root_var(i), 1u);
            rec(i + 1, left - 1, m);
            m.pop_back();
        }
    };
    Monomial m;
    rec(1, k, m);
    return e;
}

// The monomial x1^{l1} x2^{l2} ... for a partition l.
Monomial leading_monomial(const Partition& lambda) {
    Monomial m;
    for (std::size_t i = 0; i < lambda.size(); ++i) m.emplace_back(root_var(static_cast<int>(i) + 1), lambda[i]);
    std::sort(m.begin(), m.end());
    return m;
}

} // namespace

std::string elementary_var(int i) { return "p" + std::to_string(i); }

Genus::Genus(std::vector<Rational> values) : cp_values(std::move(values)) {
    if (cp_values.empty() || cp_values.front() != Rational(1)) {
        throw DomainError("ConstantTermNotOne", "a genus takes the value 1 on CP^0");
    }
}

CharSeries::CharSeries(TruncSeries series) : q(std::move(series)) {
    if (q[0] != Rational(1)) throw DomainError("ConstantTermNotOne", "characteristic series must be unital");
}

bool is_strict_log(const TruncSeries& log) {
    return log.order() >= 1 && log[0].is_zero() && log[1] == Rational(1);
}

TruncSeries log_from_genus(const Genus& g) {
    std::vector<Rational> c(static_cast<std::size_t>(g.length()) + 1, Rational(0));
    for (int n = 1; n <= g.length(); ++n) c[n] = g.cp_values[n - 1] / Rational(n);
    return TruncSeries(std::move(c));
}

Genus genus_from_log(const TruncSeries& log) {
    if (!is_strict_log(log)) throw DomainError("NotStrictAutomorphism", "log must be z + O(z^2)");
    std::vector<Rational> v;
    for (int n = 1; n <= log.order(); ++n) v.push_back(Rational(n) * log[n]);
    return Genus(std::move(v));
}

CharSeries q_from_log(const TruncSeries& log) {
    if (log.order() >= 1 && log[1].is_zero()) throw DomainError("ZeroLinearTerm", "log has no linear term");
    if (!is_strict_log(log)) throw DomainError("NotStrictAutomorphism", "log must be z + O(z^2)");
    return CharSeries(comp_inverse(log).shift_down(1).reciprocal());
}

TruncSeries log_from_q(const CharSeries& q) {
    return comp_inverse(q.q.reciprocal().shift_up(1));
}

MSequence msequence_from_q(const CharSeries& q, int D) {
    if (D < 0 || D > 8) throw DomainError("TooLarge", "multiplicative sequences are computed for D <= 8");
    if (q.order() < D) throw DomainError("OrderTooLow", "characteristic series shorter than D");
    MSequence out;
    out.K.emplace_back(Rational(1));
    for (int n = 1; n <= D; ++n) {
        const auto parts = partitions(n);
        // Coefficient of the monomial symmetric function m_lambda in prod Q(x_i).
        std::map<Partition, Rational> target;
        for (const auto& lambda : parts) {
            Rational c(1);
            for (int p : lambda) c *= q.q[p];
            if (!c.is_zero()) target[lambda] = c;
        }
        std::vector<MultiPoly> e;
        e.emplace_back(Rational(1));
        for (int k = 1; k <= n; ++k) e.push_back(elementary_in_roots(k, n));

        MultiPoly K;
        for (int k = 1; k <= D; ++k) K.set_weight(elementary_var(k), k);
        for (const auto& lambda : parts) {  // decreasing lex order
            const auto it = target.find(lambda);
            if (it == target.end()) continue;
            const Rational c = it->second;
            // e_{lambda'} has leading monomial x^lambda with coefficient 1.
            const Partition mu = conjugate(lambda);
            MultiPoly e_mu(Rational(1));
            MultiPoly p_mu(Rational(1));
            for (int part : mu) {
                e_mu *= e[part];
                p_mu *= MultiPoly::variable(elementary_var(part), part);
            }
            K += c * p_mu;
            for (const auto& nu : parts) {
                const Rational d = e_mu.coeff(leading_monomial(nu));
                if (d.is_zero()) continue;
                auto [jt, inserted] = target.try_emplace(nu, Rational(0));
                jt->second -= c * d;
                if (jt->second.is_zero()) target.erase(jt);
            }
            if (target.count(lambda)) throw DomainError("ReductionFailure", "triangular elimination did not clear a term");
        }
        if (!target.empty()) throw DomainError("ReductionFailure", "symmetric reduction left a remainder");
        out.K.push_back(std::move(K));
    }
    return out;
}

std::string MultiplicativityReport::str() const {
    if (pass) return "pass";
    return "fails at weight " + std::to_string(weight) + ": coefficient " + coefficient.str() + " on " + monomial;
}

MultiplicativityReport msequence_multiplicativity_check(const MSequence& K, int D) {
    if (D < 0 || D > 6) throw DomainError("TooLarge", "multiplicativity is checked for D <= 6");
    if (K.degree() < D) throw DomainError("OrderTooLow", "sequence shorter than D");
    auto named = [](const std::string& prefix, int i) { return MultiPoly::variable(prefix + std::to_string(i), i); };
    std::map<std::string, MultiPoly> to_a;
    std::map<std::string, MultiPoly> to_b;
    std::map<std::string, MultiPoly> to_ab;
    for (int k = 1; k <= D; ++k) {
        to_a[elementary_var(k)] = named("p'", k);
        to_b[elementary_var(k)] = named("p''", k);
        MultiPoly conv = named("p'", k) + named("p''", k);
        for (int i = 1; i < k; ++i) conv += named("p'", i) * named("p''", k - i);
        to_ab[elementary_var(k)] = conv;
    }
    // Variables beyond D do not occur in weight <= D, but keep them out explicitly.
    MultiplicativityReport report;
    for (int k = 1; k <= D; ++k) {
        const MultiPoly lhs = K.K[k].substitute(to_ab);
        MultiPoly rhs;
        for (int i = 0; i <= k; ++i) rhs += K.K[i].substitute(to_a) * K.K[k - i].substitute(to_b);
        const MultiPoly diff = lhs - rhs;
        if (!diff.is_zero()) {
            const auto& [mono, c] = *diff.terms().rbegin();
            report.pass = false;
            report.weight = k;
            report.monomial = MultiPoly::monomial(mono, Rational(1)).str();
            report.coefficient = c;
            return report;
        }
    }
    return report;
}

Genus named_genus(const std::string& name, int length) {
    if (length < 1) throw DomainError("OrderTooLow", "genus needs at least one value");
    std::vector<Rational> v(static_cast<std::size_t>(length), Rational(0));
    if (name == "trivial") {
        v[0] = Rational(1);
    } else if (name == "todd") {
        std::fill(v.begin(), v.end(), Rational(1));
    } else if (name == "L") {
        for (int i = 0; i < length; i += 2) v[i] = Rational(1);
    } else {
        throw DomainError("UnknownName", "unknown genus '" + name + "'");
    }
    return Genus(std::move(v));
}

CharSeries genus_add_lambda(const CharSeries& a, const CharSeries& b) { return CharSeries(a.q * b.q); }

TruncSeries genus_compose_log(const TruncSeries& a, const TruncSeries& b) {
    if (!is_strict_log(a) || !is_strict_log(b)) throw DomainError("NotStrictAutomorphism", "logs must be z + O(z^2)");
    return compose(a, b);
}

TruncSeries genus_fock_s(const CharSeries& q) {
    const int N = q.order() + 1;
    return s_transform(vacuum_moments(genus_operator(q.q, N), N));
}

} // namespace freewitt
