#include "freewitt/number_theory.hpp"

#include "freewitt/errors.hpp"

namespace freewitt {

std::vector<int> divisors(int n) {
    if (n < 1) throw DomainError("InvalidIndex", "divisors of a non-positive integer");
    std::vector<int> out;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

int mobius(int n) {
    if (n < 1) throw DomainError("InvalidIndex", "Moebius function of a non-positive integer");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

} // namespace freewitt
