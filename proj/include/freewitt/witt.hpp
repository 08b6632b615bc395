#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "freewitt/multipoly.hpp"
#include "freewitt/rational.hpp"
#include "freewitt/series.hpp"

namespace freewitt {

// A length-L coordinate vector (v_1, ..., v_L) tagged by its coordinate system.
template <class Tag>
class CompVector {
public:
    CompVector() = default;
    explicit CompVector(std::vector<Rational> comps) : comps_(std::move(comps)) {}
    static CompVector zero(std::size_t len) { return CompVector(std::vector<Rational>(len, Rational(0))); }
    // The basis vector e_n (1-based).
    static CompVector unit_vector(int n, std::size_t len) {
        auto v = zero(len);
        v.comps_.at(static_cast<std::size_t>(n - 1)) = Rational(1);
        return v;
    }

    std::size_t size() const { return comps_.size(); }
    const std::vector<Rational>& comps() const { return comps_; }
    // 1-based component access.
    const Rational& at(int n) const { return comps_.at(static_cast<std::size_t>(n - 1)); }
    Rational& at(int n) { return comps_.at(static_cast<std::size_t>(n - 1)); }

    friend bool operator==(const CompVector& a, const CompVector& b) { return a.comps_ == b.comps_; }

private:
    std::vector<Rational> comps_;
};

struct WittTag {
    static constexpr std::string_view kind = "witt";
};
struct GhostTag {
    static constexpr std::string_view kind = "ghost";
};
struct NecklaceTag {
    static constexpr std::string_view kind = "necklace";
};

using WittVector = CompVector<WittTag>;
using GhostVector = CompVector<GhostTag>;
using NecklaceVector = CompVector<NecklaceTag>;

// An element 1 + s_1 z + ... + s_L z^L of Lambda(Q).
class LambdaElement {
public:
    explicit LambdaElement(TruncSeries series);
    static LambdaElement one(int len) { return LambdaElement(TruncSeries::one(len)); }
    const TruncSeries& series() const { return series_; }
    int length() const { return series_.order(); }
    friend bool operator==(const LambdaElement& a, const LambdaElement& b) { return a.series_ == b.series_; }

private:
    TruncSeries series_;
};

enum class RingOp { add, mul };

// M(x, n) = (1/n) sum_{d|n} mu(n/d) x^d.
Rational necklace_poly(const Rational& x, int n);
MultiPoly necklace_poly(const MultiPoly& x, int n);

// w(a)_n = sum_{d|n} d a_d^{n/d} and its triangular inverse.
GhostVector ghost_map(const WittVector& a);
WittVector ghost_inv(const GhostVector& x);

// gamma(a) = prod (1 - a_n z^n)^{-1} and the factor-peeling inverse.
LambdaElement gamma(const WittVector& a);
WittVector gamma_inv(const LambdaElement& f);
// gamma^w(x) = sum x_n z^n.
TruncSeries gamma_w(const GhostVector& x);
GhostVector gamma_w_inv(const TruncSeries& s);
// z d/dz log as a map Lambda -> ghost vectors.
GhostVector lambda_ghost(const LambdaElement& f);
LambdaElement lambda_from_ghost(const GhostVector& x);

// g~(alpha)_n = sum_{d|n} d alpha_d and Moebius inversion.
GhostVector g_tilde(const NecklaceVector& alpha);
NecklaceVector g_tilde_inv(const GhostVector& x);
// f~(a)_m = sum_{n|m} M(a_n, m/n).
NecklaceVector f_tilde(const WittVector& a);
// c(alpha) = prod (1 - z^n)^{-alpha_n}, expanded with generalized binomials.
LambdaElement c_map(const NecklaceVector& alpha);

WittVector witt_ring_op(const WittVector& a, const WittVector& b, RingOp op);
GhostVector ghost_ring_op(const GhostVector& a, const GhostVector& b, RingOp op);
LambdaElement lambda_ring_op(const LambdaElement& f, const LambdaElement& g, RingOp op);
NecklaceVector necklace_ring_op(const NecklaceVector& a, const NecklaceVector& b, RingOp op);

// (V_r alpha)_n = alpha_{n/r} if r | n, else 0.
NecklaceVector verschiebung(int r, const NecklaceVector& alpha);
// (F_r alpha)_n = sum_{lcm(r,d) = nr} (d/n) alpha_d. Producing out_len
// components consumes r * out_len input components.
NecklaceVector frobenius(int r, const NecklaceVector& alpha, std::size_t out_len);
NecklaceVector frobenius(int r, const NecklaceVector& alpha);

} // namespace freewitt
