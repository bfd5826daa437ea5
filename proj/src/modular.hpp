#pragma once

#include <cstdint>
#include <vector>

#include "hyperct/upoly.hpp"

namespace hyperct::modp {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

/// Word-size primes just below 2^62, in decreasing order.
u64 prime(std::size_t i);

u64 mul(u64 a, u64 b, u64 p);
u64 inv(u64 a, u64 p);
u64 to_mod(const Rat& r, u64 p, bool& ok);

/// Image of a mod p, or false if some denominator vanishes mod p.
bool reduce(const UPoly& a, u64 p, Vec& out);
/// Monic gcd in Z_p[t].
Vec gcd(Vec a, Vec b, u64 p);
u64 eval(const Vec& a, u64 t, u64 p);
int degree(const Vec& a);

/// gcd over Q[t] by Chinese remaindering; monic result.
UPoly gcd_q(const UPoly& a, const UPoly& b);

}  // namespace hyperct::modp
