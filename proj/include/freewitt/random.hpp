#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "freewitt/rational.hpp"
#include "freewitt/series.hpp"

namespace freewitt {

// Seeded generator with platform-independent bounded draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [lo, hi], by rejection.
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x = eng_();
        while (x >= limit) x = eng_();
        return lo + static_cast<long>(x % span);
    }

    // p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(long max_num = 5, long max_den = 4) {
        return Rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

    Rational nonzero_rational(long max_num = 5, long max_den = 4) {
        Rational r = rational(max_num, max_den);
        while (r.is_zero()) r = rational(max_num, max_den);
        return r;
    }

    std::vector<Rational> rationals(std::size_t n, long max_num = 5, long max_den = 4) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rational(max_num, max_den));
        return v;
    }

    // c_0 + c_1 z + ... with the first coefficients pinned.
    TruncSeries series(int order, std::vector<Rational> prefix = {}) {
        auto c = std::move(prefix);
        while (static_cast<int>(c.size()) <= order) c.push_back(rational());
        c.resize(static_cast<std::size_t>(order) + 1);
        return TruncSeries(std::move(c));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace freewitt
