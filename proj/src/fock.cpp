#include "freewitt/fock.hpp"

#include <algorithm>
#include <functional>

#include "freewitt/errors.hpp"

namespace freewitt {

namespace {

void require_compatible(const OpElement& a, const OpElement& b) {
    if (a.generators() != b.generators() || a.degree_cap() != b.degree_cap()) {
        throw DomainError("GeneratorMismatch", "operands live in different operator algebras");
    }
}

void require_generator(int gen, int generators) {
    if (gen < 1 || gen > generators || generators > 255) {
        throw DomainError("GeneratorMismatch", "generator index out of range");
    }
}

void require_cap(const OpElement& a, int N) {
    if (a.degree_cap() < N) throw DomainError("DegreeCapTooSmall", "degree cap is below the requested order");
}

using Annihilators = std::vector<std::uint8_t>;

} // namespace

OpElement::OpElement(int generators, int degree_cap) : generators_(generators), cap_(degree_cap) {
    if (generators < 1 || generators > 255) throw DomainError("GeneratorMismatch", "generator count out of range");
    if (degree_cap < 0) throw DomainError("DegreeCapTooSmall", "degree cap must be non-negative");
}

OpElement OpElement::scalar(const Rational& c, int generators, int degree_cap) {
    OpElement e(generators, degree_cap);
    e.add_term(OpWord{}, c);
    return e;
}

OpElement OpElement::creator(int gen, int generators, int degree_cap) {
    require_generator(gen, generators);
    OpElement e(generators, degree_cap);
    e.add_term(OpWord{{static_cast<std::uint8_t>(gen)}, {}}, Rational(1));
    return e;
}

OpElement OpElement::annihilator(int gen, int generators, int degree_cap) {
    require_generator(gen, generators);
    OpElement e(generators, degree_cap);
    e.add_term(OpWord{{}, {static_cast<std::uint8_t>(gen)}}, Rational(1));
    return e;
}

OpElement OpElement::annihilator_series(const TruncSeries& f, int gen, int generators, int degree_cap) {
    require_generator(gen, generators);
    OpElement e(generators, degree_cap);
    for (int j = 0; j <= std::min(f.order(), degree_cap); ++j) {
        e.add_term(OpWord{{}, Annihilators(static_cast<std::size_t>(j), static_cast<std::uint8_t>(gen))}, f[j]);
    }
    return e;
}

void OpElement::add_term(const OpWord& w, const Rational& c) {
    if (c.is_zero() || static_cast<int>(w.length()) > cap_) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational OpElement::vacuum() const {
    const auto it = terms_.find(OpWord{});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t OpElement::max_creators() const {
    std::size_t c = 0;
    for (const auto& [w, coeff] : terms_) c = std::max(c, w.creators.size());
    return c;
}

OpElement OpElement::operator-() const { return Rational(-1) * *this; }

OpElement operator+(const OpElement& a, const OpElement& b) {
    require_compatible(a, b);
    OpElement out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
}

OpElement operator-(const OpElement& a, const OpElement& b) { return a + (-b); }

OpElement operator*(const Rational& c, const OpElement& a) {
    OpElement out(a.generators_, a.cap_);
    for (const auto& [w, v] : a.terms_) out.add_term(w, c * v);
    return out;
}

bool operator==(const OpElement& a, const OpElement& b) {
    return a.generators_ == b.generators_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
}

OpElement op_mul(const OpElement& a, const OpElement& b) {
    require_compatible(a, b);
    OpElement out(a.generators(), a.degree_cap());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            // Cancel wa.annihilators (from the right) against wb.creators (from the left).
            std::size_t na = wa.annihilators.size();
            std::size_t nb = 0;
            bool vanished = false;
            while (na > 0 && nb < wb.creators.size()) {
                if (wa.annihilators[na - 1] != wb.creators[nb]) {
                    vanished = true;
                    break;
                }
                --na;
                ++nb;
            }
            if (vanished) continue;
            OpWord w;
            w.creators = wa.creators;
            w.creators.insert(w.creators.end(), wb.creators.begin() + static_cast<std::ptrdiff_t>(nb), wb.creators.end());
            w.annihilators.assign(wa.annihilators.begin(), wa.annihilators.begin() + static_cast<std::ptrdiff_t>(na));
            w.annihilators.insert(w.annihilators.end(), wb.annihilators.begin(), wb.annihilators.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

OpElement adjoint(const OpElement& a) {
    OpElement out(a.generators(), a.degree_cap());
    for (const auto& [w, c] : a.terms()) {
        OpWord r;
        r.creators.assign(w.annihilators.rbegin(), w.annihilators.rend());
        r.annihilators.assign(w.creators.rbegin(), w.creators.rend());
        out.add_term(r, c);
    }
    return out;
}

OpElement op_pow(const OpElement& a, unsigned e) {
    OpElement out = OpElement::scalar(Rational(1), a.generators(), a.degree_cap());
    for (unsigned i = 0; i < e; ++i) out = op_mul(out, a);
    return out;
}

namespace {

// Right-multiplies a creator-free state by `factor`, dropping words that pick
// up a leading creator (their vacuum value stays 0) or whose annihilators
// exceed `budget`.
std::map<Annihilators, Rational> advance(const std::map<Annihilators, Rational>& state, const OpElement& factor,
                                         std::size_t budget) {
    std::map<Annihilators, Rational> next;
    for (const auto& [word, c] : state) {
        for (const auto& [w, cf] : factor.terms()) {
            if (w.creators.size() > word.size()) continue;
            const std::size_t keep = word.size() - w.creators.size();
            if (!std::equal(w.creators.begin(), w.creators.end(), word.rbegin())) continue;
            if (keep + w.annihilators.size() > budget) continue;
            Annihilators out(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(keep));
            out.insert(out.end(), w.annihilators.begin(), w.annihilators.end());
            auto [it, inserted] = next.try_emplace(std::move(out), c * cf);
            if (!inserted) {
                it->second += c * cf;
                if (it->second.is_zero()) next.erase(it);
            }
        }
    }
    return next;
}

} // namespace

Rational vacuum_of_product(const std::vector<OpElement>& factors) {
    std::vector<std::size_t> budget(factors.size() + 1, 0);
    for (std::size_t i = factors.size(); i-- > 0;) budget[i] = budget[i + 1] + factors[i].max_creators();
    std::map<Annihilators, Rational> state{{Annihilators{}, Rational(1)}};
    for (std::size_t i = 0; i < factors.size() && !state.empty(); ++i) {
        state = advance(state, factors[i], budget[i + 1]);
    }
    const auto it = state.find(Annihilators{});
    return it == state.end() ? Rational(0) : it->second;
}

Distribution vacuum_moments(const OpElement& a, int N) {
    require_cap(a, N);
    const std::size_t per = a.max_creators();
    std::map<Annihilators, Rational> state{{Annihilators{}, Rational(1)}};
    std::vector<Rational> m;
    for (int n = 1; n <= N; ++n) {
        state = advance(state, a, per * static_cast<std::size_t>(N - n));
        const auto it = state.find(Annihilators{});
        m.push_back(it == state.end() ? Rational(0) : it->second);
    }
    return Distribution(std::move(m));
}

OpElement additive_op(const TruncSeries& f, int gen, int generators, int degree_cap) {
    return OpElement::creator(gen, generators, degree_cap) +
           OpElement::annihilator_series(f, gen, generators, degree_cap);
}

OpElement canonical_T(const CumulantVector& k, int N) {
    if (k.order() < N) throw DomainError("OrderTooLow", "need N cumulants");
    // calR(z) = sum_{n>=0} k_{n+1} z^n
    std::vector<Rational> r(k.k.begin(), k.k.begin() + N);
    if (r.empty()) r.emplace_back(0);
    return additive_op(TruncSeries(std::move(r)), 1, 1, N);
}

namespace {

OpElement haagerup_unchecked(const TruncSeries& f, int gen, int generators, int cap) {
    const auto one_plus_l = OpElement::scalar(Rational(1), generators, cap) + OpElement::creator(gen, generators, cap);
    return op_mul(one_plus_l, OpElement::annihilator_series(f, gen, generators, cap));
}

} // namespace

OpElement haagerup_op(const TruncSeries& f, int N, int gen, int generators, int degree_cap) {
    if (f[0].is_zero()) throw DomainError("ZeroConstantTerm", "Haagerup form needs f(0) != 0");
    const int cap = degree_cap < 0 ? N : degree_cap;
    if (cap < N) throw DomainError("DegreeCapTooSmall", "degree cap is below the requested order");
    return haagerup_unchecked(f, gen, generators, cap);
}

OpElement genus_operator(const TruncSeries& q, int N) {
    if (q[0] != Rational(1)) throw DomainError("ConstantTermNotOne", "characteristic series must be unital");
    return haagerup_op(q.reciprocal(), N);
}

namespace {

// Compositions of every total <= N into positive parts.
void compositions(int remaining, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (!current.empty()) out.push_back(current);
    for (int p = 1; p <= remaining; ++p) {
        current.push_back(p);
        compositions(remaining - p, current, out);
        current.pop_back();
    }
}

bool alternating_centered_vanish(const OpElement& a, const OpElement& b, int N, int& checked, std::string& failure,
                                 const char* form) {
    std::vector<OpElement> centered_a;
    std::vector<OpElement> centered_b;
    for (int p = 1; p <= N; ++p) {
        const auto ap = op_pow(a, static_cast<unsigned>(p));
        const auto bp = op_pow(b, static_cast<unsigned>(p));
        centered_a.push_back(ap - OpElement::scalar(ap.vacuum(), a.generators(), a.degree_cap()));
        centered_b.push_back(bp - OpElement::scalar(bp.vacuum(), b.generators(), b.degree_cap()));
    }
    std::vector<std::vector<int>> patterns;
    std::vector<int> current;
    compositions(N, current, patterns);
    for (const auto& exps : patterns) {
        for (int start = 0; start < 2; ++start) {
            std::vector<OpElement> factors;
            for (std::size_t i = 0; i < exps.size(); ++i) {
                const bool use_a = (static_cast<int>(i) + start) % 2 == 0;
                factors.push_back(use_a ? centered_a[exps[i] - 1] : centered_b[exps[i] - 1]);
            }
            ++checked;
            const Rational v = vacuum_of_product(factors);
            if (!v.is_zero()) {
                failure = std::string(form) + ": alternating centered product has vacuum " + v.str();
                return false;
            }
        }
    }
    return true;
}

} // namespace

FreenessReport freeness_witness(const TruncSeries& f, const TruncSeries& g, int N) {
    if (N < 1) throw DomainError("OrderTooLow", "freeness witness needs N >= 1");
    FreenessReport report;

    const auto a_add = additive_op(f, 1, 2, N);
    const auto b_add = additive_op(g, 2, 2, N);
    const auto sum_moments = vacuum_moments(a_add + b_add, N);
    report.additive = sum_moments == boxplus(vacuum_moments(a_add, N), vacuum_moments(b_add, N));
    if (!report.additive) report.failure = "moments of a+b differ from the boxplus of the marginals";

    // boxtimes needs invertible means, i.e. f(0) g(0) != 0.
    report.multiplicative_checked = !f[0].is_zero() && !g[0].is_zero();
    if (report.multiplicative_checked) {
        // Products of two factors carry up to two creators per term: cap 2N.
        const auto a_mul = haagerup_unchecked(f, 1, 2, 2 * N);
        const auto b_mul = haagerup_unchecked(g, 2, 2, 2 * N);
        const auto prod_moments = vacuum_moments(op_mul(a_mul, b_mul), N);
        report.multiplicative = prod_moments == boxtimes(vacuum_moments(a_mul, N), vacuum_moments(b_mul, N));
        if (!report.multiplicative && report.failure.empty()) {
            report.failure = "moments of ab differ from the boxtimes of the marginals";
        }
    }

    std::string failure;
    report.alternating = alternating_centered_vanish(a_add, b_add, N, report.patterns_checked, failure, "additive") &&
                         alternating_centered_vanish(haagerup_unchecked(f, 1, 2, N), haagerup_unchecked(g, 2, 2, N), N,
                                                     report.patterns_checked, failure, "haagerup");
    if (!report.alternating && report.failure.empty()) report.failure = failure;
    return report;
}

} // namespace freewitt
