#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>

namespace weylhom {

/// Exact arbitrary-precision signed integer.
using BigInt = mpz_class;

/// A verified prime, checked eagerly by trial division at construction.
class Prime {
public:
    explicit Prime(long p);

    long value() const { return p_; }

    bool operator==(const Prime&) const = default;
    auto operator<=>(const Prime&) const = default;

private:
    long p_;
};

/// C(n, k), exactly. Returns 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

/// C(n, k) mod p, computed digit-by-digit in base p (Lucas).
/// Agrees with binomial(n, k) % p; the agreement is itself a test.
long binomial_mod(long n, long k, Prime p);

/// Number of base-p digits of y, equivalently the least i with p^i > y.
/// Requires y >= 1.
int base_p_digits(long y, Prime p);

/// gcd{ C(x,1), C(x+1,2), ..., C(x+y-1,y) }, exactly.
/// Requires x >= 1, y >= 1.
BigInt binomial_gcd(long x, long y);

/// Whether p divides binomial_gcd(x, y). Decided by the divisibility
/// shortcut p^{base_p_digits(y)} | x rather than by computing the gcd.
bool p_divides_binomial_gcd(long x, long y, Prime p);

/// Whether the Garnir content of the sequence `a` vanishes mod p, i.e.
/// p divides every C(a_i, j) with 1 <= j <= a_{i+1}-1, 1 <= i < N.
/// An empty constraint set counts as vanishing (gcd of nothing is 0).
/// Requires a nonempty, entries >= 1.
bool garnir_content_is_zero(std::span<const long> a, Prime p);

} // namespace weylhom
