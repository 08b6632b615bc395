#include "freewitt/series.hpp"

#include <sstream>

namespace freewitt {

TruncSeries series_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(Rational::parse(s));
    return TruncSeries(std::move(c));
}

PolySeries to_poly_series(const TruncSeries& s) {
    std::vector<MultiPoly> c;
    c.reserve(s.coeffs().size());
    for (const auto& r : s.coeffs()) c.emplace_back(r);
    return PolySeries(std::move(c));
}

std::string to_string(const TruncSeries& s) {
    std::ostringstream os;
    bool any = false;
    for (int k = 0; k <= s.order(); ++k) {
        const auto& c = s[k];
        if (c.is_zero()) continue;
        if (any) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0 || mag != Rational(1)) os << mag << (k == 0 ? "" : "*");
        if (k == 1) os << "z";
        if (k > 1) os << "z^" << k;
        any = true;
    }
    if (!any) os << "0";
    os << " + O(z^" << s.order() + 1 << ")";
    return os.str();
}

} // namespace freewitt
