#pragma once

#include <vector>

namespace freewitt {

// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);
// Classical Moebius function, by trial division.
int mobius(int n);

} // namespace freewitt
