#pragma once

#include <string>
#include <vector>

#include "freewitt/rational.hpp"
#include "freewitt/series.hpp"

namespace testing {

inline freewitt::Rational R(const char* s) { return freewitt::Rational::parse(s); }

inline freewitt::TruncSeries S(const std::vector<std::string>& coeffs) {
    return freewitt::series_from_strings(coeffs);
}

inline std::vector<freewitt::Rational> Rs(const std::vector<std::string>& xs) {
    std::vector<freewitt::Rational> out;
    for (const auto& x : xs) out.push_back(freewitt::Rational::parse(x));
    return out;
}

// sum_k r^k z^k to `order`.
inline freewitt::TruncSeries geometric(const freewitt::Rational& r, int order) {
    std::vector<freewitt::Rational> c;
    freewitt::Rational p(1);
    for (int k = 0; k <= order; ++k) {
        c.push_back(p);
        p *= r;
    }
    return freewitt::TruncSeries(c);
}

#define CHECK_THROWS_DOMAIN(expr, err_name)                                      \
    do {                                                                          \
        bool thrown_ = false;                                                     \
        try {                                                                     \
            (void)(expr);                                                         \
        } catch (const freewitt::DomainError& e_) {                               \
            thrown_ = true;                                                       \
            CHECK(e_.name() == std::string(err_name));                            \
        }                                                                         \
        CHECK_MESSAGE(thrown_, "expected DomainError " err_name);                 \
    } while (false)

} // namespace testing
