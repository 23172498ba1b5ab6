#include "weylhom/arith.hpp"

namespace weylhom {

Prime::Prime(long p) : p_(p) {
    if (p < 2)
        throw std::invalid_argument("not a prime: " + std::to_string(p));
    if (p > 2147483647L) // keeps products of residues inside a long
        throw std::invalid_argument("prime too large: " + std::to_string(p));
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("not a prime: " + std::to_string(p));
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

long binomial_mod(long n, long k, Prime p) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    const long q = p.value();
    long result = 1;
    while (n > 0 || k > 0) {
        long nd = n % q, kd = k % q;
        if (kd > nd)
            return 0;
        // digits are < p, so the factor fits comfortably in a long
        BigInt digit = binomial(nd, kd) % q;
        result = (result * digit.get_si()) % q;
        n /= q;
        k /= q;
    }
    return result;
}

int base_p_digits(long y, Prime p) {
    if (y < 1)
        throw std::domain_error("base_p_digits requires y >= 1");
    int i = 0;
    BigInt pw = 1;
    while (pw <= y) {
        pw *= p.value();
        ++i;
    }
    return i;
}

BigInt binomial_gcd(long x, long y) {
    if (x < 1 || y < 1)
        throw std::domain_error("binomial_gcd requires x, y >= 1");
    BigInt g = 0;
    for (long i = 1; i <= y; ++i) {
        BigInt b = binomial(x + i - 1, i);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

bool p_divides_binomial_gcd(long x, long y, Prime p) {
    if (x < 1 || y < 1)
        throw std::domain_error("p_divides_binomial_gcd requires x, y >= 1");
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p.value()),
                  static_cast<unsigned long>(base_p_digits(y, p)));
    return mpz_divisible_p(BigInt(x).get_mpz_t(), pw.get_mpz_t()) != 0;
}

bool garnir_content_is_zero(std::span<const long> a, Prime p) {
    if (a.empty())
        throw std::domain_error("garnir content of an empty sequence");
    for (long v : a)
        if (v < 1)
            throw std::domain_error("garnir content entries must be >= 1");
    for (size_t i = 0; i + 1 < a.size(); ++i)
        for (long j = 1; j <= a[i + 1] - 1; ++j)
            if (!mpz_divisible_ui_p(binomial(a[i], j).get_mpz_t(),
                                    static_cast<unsigned long>(p.value())))
                return false;
    return true;
}

} // namespace weylhom
