#include "freewitt/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "freewitt/errors.hpp"

namespace freewitt {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da < db;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].second < b[j].second;
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            return false;  // a carries an earlier variable that b lacks
        } else {
            return true;
        }
    }
    return i == a.size() && j < b.size();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name, int weight) {
    MultiPoly p;
    p.terms_.emplace(Monomial{{name, 1U}}, Rational(1));
    if (weight != 1) p.weights_[name] = weight;
    return p;
}

MultiPoly MultiPoly::monomial(Monomial m, const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

MultiPoly& MultiPoly::set_weight(const std::string& var, int weight) {
    if (weight <= 0) throw DomainError("InvalidWeight", "variable weights must be positive");
    if (weight == 1) {
        weights_.erase(var);
    } else {
        weights_[var] = weight;
    }
    return *this;
}

int MultiPoly::weight_of(const std::string& var) const {
    const auto it = weights_.find(var);
    return it == weights_.end() ? 1 : it->second;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_term() const { return coeff(Monomial{}); }

Rational MultiPoly::coeff(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, freewitt::total_degree(m));
    return d;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m) {
            if (v == var) d = std::max(d, e);
        }
    }
    return d;
}

int MultiPoly::weighted_degree(const Monomial& m) const {
    int d = 0;
    for (const auto& [v, e] : m) d += weight_of(v) * static_cast<int>(e);
    return d;
}

bool MultiPoly::is_weighted_homogeneous(int w) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return weighted_degree(t.first) == w; });
}

std::vector<std::string> MultiPoly::variables() const {
    std::vector<std::string> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, unsigned e) const {
    MultiPoly out;
    out.weights_ = weights_;
    for (const auto& [m, c] : terms_) {
        unsigned have = 0;
        Monomial rest;
        for (const auto& ve : m) {
            if (ve.first == var) {
                have = ve.second;
            } else {
                rest.push_back(ve);
            }
        }
        if (have == e) out.add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::truncated(int max_weight) const {
    MultiPoly out;
    out.weights_ = weights_;
    for (const auto& [m, c] : terms_) {
        if (weighted_degree(m) <= max_weight) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

MultiPoly MultiPoly::homogeneous_part(int w) const {
    MultiPoly out;
    out.weights_ = weights_;
    for (const auto& [m, c] : terms_) {
        if (weighted_degree(m) == w) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

void MultiPoly::merge_weights(const MultiPoly& o) {
    for (const auto& [v, w] : o.weights_) {
        const auto it = weights_.find(v);
        if (it == weights_.end()) {
            // A variable already present with implicit weight 1 conflicts.
            for (const auto& [m, c] : terms_) {
                for (const auto& [var, e] : m) {
                    if (var == v) throw DomainError("WeightMismatch", "conflicting weight for " + v);
                }
            }
            weights_.emplace(v, w);
        } else if (it->second != w) {
            throw DomainError("WeightMismatch", "conflicting weight for " + v);
        }
    }
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    merge_weights(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    merge_weights(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    out.weights_ = a.weights_;
    out.merge_weights(b);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    }
    return out;
}

MultiPoly MultiPoly::mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_weight) {
    MultiPoly out;
    out.weights_ = a.weights_;
    out.merge_weights(b);
    for (const auto& [ma, ca] : a.terms_) {
        const int wa = out.weighted_degree(ma);
        if (wa > max_weight) continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (wa + out.weighted_degree(mb) > max_weight) continue;
            out.add_term(mono_mul(ma, mb), ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned e, std::optional<int> max_weight) const {
    MultiPoly result(1);
    result.weights_ = weights_;
    MultiPoly base = max_weight ? truncated(*max_weight) : *this;
    while (e > 0) {
        if (e & 1U) result = max_weight ? mul_truncated(result, base, *max_weight) : result * base;
        e >>= 1U;
        if (e > 0) base = max_weight ? mul_truncated(base, base, *max_weight) : base * base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& repl,
                                std::optional<int> max_weight) const {
    MultiPoly out;
    for (const auto& [v, w] : weights_) {
        if (!repl.count(v)) out.weights_[v] = w;
    }
    for (const auto& [v, p] : repl) out.merge_weights(p);

    std::map<std::pair<std::string, unsigned>, MultiPoly> power_cache;
    auto power = [&](const std::string& v, unsigned e) -> const MultiPoly& {
        const auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end()) {
            MultiPoly p = repl.at(v).pow(e, max_weight);
            it = power_cache.emplace(key, std::move(p)).first;
        }
        return it->second;
    };

    for (const auto& [m, c] : terms_) {
        MultiPoly term(c);
        term.weights_ = out.weights_;
        Monomial kept;
        for (const auto& [v, e] : m) {
            if (repl.count(v)) {
                term = max_weight ? mul_truncated(term, power(v, e), *max_weight) : term * power(v, e);
                if (term.is_zero()) break;
            } else {
                kept.emplace_back(v, e);
            }
        }
        if (term.is_zero()) continue;
        if (!kept.empty()) {
            MultiPoly k = MultiPoly::monomial(kept, Rational(1));
            k.weights_ = out.weights_;
            term = max_weight ? mul_truncated(term, k, *max_weight) : term * k;
        }
        out += term;
    }
    return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            const auto it = values.find(v);
            if (it == values.end()) throw DomainError("UnboundVariable", "no value for " + v);
            t *= it->second.pow(static_cast<long>(e));
        }
        total += t;
    }
    return total;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (m.empty() || mag != Rational(1)) {
            os << mag;
            need_star = true;
        }
        for (const auto& [v, e] : m) {
            if (need_star) os << "*";
            os << v;
            if (e != 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

bool is_zero(const MultiPoly& p) { return p.is_zero(); }

MultiPoly unit_inverse(const MultiPoly& p) {
    if (!p.is_constant() || p.is_zero()) {
        throw DomainError("DivisionByNonUnit", "polynomial coefficient is not a nonzero constant");
    }
    return MultiPoly(p.constant_term().inverse());
}

} // namespace freewitt
