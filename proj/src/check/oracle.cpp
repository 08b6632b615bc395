#include "freewitt/check/oracle.hpp"

#include <functional>

#include "freewitt/errors.hpp"

namespace freewitt::oracle {

long gcd(long a, long b) {
    while (b != 0) {
        const long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

Rational catalan(int n) {
    // binom(2n, n) / (n + 1)
    Rational r(1);
    for (int i = 1; i <= n; ++i) r = r * Rational(n + i) / Rational(i);
    return r / Rational(n + 1);
}

Rational bell(int n) {
    // Bell triangle.
    std::vector<Rational> row{Rational(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<Rational> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

NecklaceVector necklace_mul_lcm(const NecklaceVector& a, const NecklaceVector& b) {
    const auto L = static_cast<long>(a.size());
    auto out = NecklaceVector::zero(a.size());
    for (long i = 1; i <= L; ++i) {
        for (long j = 1; j <= L; ++j) {
            const long n = lcm(i, j);
            if (n <= L) out.at(static_cast<int>(n)) += Rational(gcd(i, j)) * a.at(static_cast<int>(i)) * b.at(static_cast<int>(j));
        }
    }
    return out;
}

TruncSeries root_product(const std::vector<Rational>& roots, int L) {
    auto out = TruncSeries::one(L);
    for (const auto& r : roots) {
        std::vector<Rational> geo;
        Rational p(1);
        for (int k = 0; k <= L; ++k) {
            geo.push_back(p);
            p *= r;
        }
        out = out * TruncSeries(geo);
    }
    return out;
}

std::vector<Rational> product_roots(const std::vector<Rational>& xi, const std::vector<Rational>& eta) {
    std::vector<Rational> out;
    for (const auto& x : xi) {
        for (const auto& y : eta) out.push_back(x * y);
    }
    return out;
}

long primitive_binary_necklaces(int n) {
    long aperiodic = 0;
    for (unsigned long s = 0; s < (1ul << n); ++s) {
        bool periodic = false;
        for (int d = 1; d < n && !periodic; ++d) {
            if (n % d != 0) continue;
            const unsigned long rotated = ((s >> d) | (s << (n - d))) & ((1ul << n) - 1);
            periodic = rotated == s;
        }
        if (!periodic) ++aperiodic;
    }
    return aperiodic / n;
}

TruncSeries exp_by_powers(const TruncSeries& g) {
    if (!g[0].is_zero()) throw DomainError("ConstantTermNotZero", "exp needs g(0) = 0");
    auto out = TruncSeries::one(g.order());
    auto power = TruncSeries::one(g.order());
    for (int k = 1; k <= g.order(); ++k) {
        power = power * g;
        out = out + power.scaled(factorial(k).inverse());
    }
    return out;
}

namespace {

// sum_{k>=0} sign^k z^{k+shift} / (k+shift)!, exact to `order`.
TruncSeries factorial_series(int order, int shift, int step, int sign) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    int s = 1;
    for (int k = shift; k <= order; k += step) {
        c[k] = Rational(s) / factorial(k);
        s *= sign;
    }
    return TruncSeries(std::move(c));
}

} // namespace

TruncSeries todd_q(int order) {
    // (1 - e^{-z})/z = sum_{k>=0} (-1)^k z^k / (k+1)!
    std::vector<Rational> c;
    for (int k = 0; k <= order; ++k) c.push_back(Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1));
    return TruncSeries(c).reciprocal();
}

TruncSeries l_genus_q(int order) {
    // z cosh z / sinh z, with sinh z / z = sum z^{2k}/(2k+1)!
    const auto cosh = factorial_series(order, 0, 2, 1);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int k = 0; k <= order; k += 2) c[k] = factorial(k + 1).inverse();
    return cosh * TruncSeries(c).reciprocal();
}

std::map<int, Rational> compose_laurent(const std::vector<Rational>& F, const std::vector<Rational>& b, int low) {
    using Laurent = std::map<int, Rational>;
    // Later factors of g can raise exponents by up to deg F.
    const int keep = low - static_cast<int>(F.size());
    auto mul = [keep](const Laurent& x, const Laurent& y) {
        Laurent out;
        for (const auto& [i, a] : x) {
            for (const auto& [j, c] : y) {
                if (i + j < keep) continue;
                out[i + j] += a * c;
            }
        }
        return out;
    };
    Laurent g{{1, Rational(1)}};
    for (std::size_t j = 0; j < b.size(); ++j) {
        const int e = -static_cast<int>(j);
        if (e >= keep) g[e] += b[j];
    }
    Laurent out;
    Laurent power{{0, Rational(1)}};
    for (const auto& c : F) {
        for (const auto& [e, v] : power) out[e] += c * v;
        power = mul(power, g);
    }
    for (auto it = out.begin(); it != out.end();) it = it->first < low || it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Rational fock_vacuum(const std::vector<OpElement>& factors) {
    using Vec = std::map<std::vector<std::uint8_t>, Rational>;
    Vec v{{{}, Rational(1)}};
    for (auto f = factors.rbegin(); f != factors.rend(); ++f) {
        Vec next;
        for (const auto& [word, c] : f->terms()) {
            for (const auto& [tensor, x] : v) {
                // Annihilators act first, rightmost letter first.
                std::vector<std::uint8_t> t = tensor;
                bool dead = false;
                for (auto a = word.annihilators.rbegin(); a != word.annihilators.rend() && !dead; ++a) {
                    if (t.empty() || t.front() != *a) {
                        dead = true;
                    } else {
                        t.erase(t.begin());
                    }
                }
                if (dead) continue;
                t.insert(t.begin(), word.creators.begin(), word.creators.end());
                next[t] += c * x;
            }
        }
        v.clear();
        for (auto& [t, x] : next) {
            if (!x.is_zero()) v.emplace(t, x);
        }
    }
    const auto it = v.find({});
    return it == v.end() ? Rational(0) : it->second;
}

bool msequence_matches_roots(const TruncSeries& q, const MSequence& K, int D) {
    if (D > 4) throw DomainError("TooLarge", "root oracle limited to D <= 4");
    std::vector<std::string> roots;
    for (int i = 1; i <= D; ++i) roots.push_back("r" + std::to_string(i));
    MultiPoly prod(Rational(1));
    for (const auto& r : roots) {
        MultiPoly Qr;
        for (int k = 0; k <= D; ++k) Qr += q[k] * MultiPoly::variable(r).pow(static_cast<unsigned>(k));
        prod = MultiPoly::mul_truncated(prod, Qr, D);
    }
    // e_k(r_1..r_D) by expanding prod (1 + r_i t).
    std::vector<MultiPoly> e(static_cast<std::size_t>(D) + 1, MultiPoly());
    e[0] = MultiPoly(Rational(1));
    for (const auto& r : roots) {
        for (int k = D; k >= 1; --k) e[k] += e[k - 1] * MultiPoly::variable(r);
    }
    std::map<std::string, MultiPoly> subst;
    for (int k = 1; k <= D; ++k) subst[elementary_var(k)] = e[k];
    for (int n = 0; n <= D; ++n) {
        const MultiPoly Kn = K.K.at(static_cast<std::size_t>(n)).substitute(subst);
        if (!(Kn == prod.homogeneous_part(n))) return false;
    }
    return true;
}

} // namespace freewitt::oracle
