#include "cbs/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbs {

namespace {
void require_non_negative(long v, const char* what) {
    if (v < 0) throw std::domain_error(std::string(what) + " must be non-negative");
}
}  // namespace

BigInt binomial(long n, long k) {
    require_non_negative(n, "binomial: n");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    require_non_negative(n, "factorial: n");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt stirling2(long n, long k) {
    require_non_negative(n, "stirling2: n");
    require_non_negative(k, "stirling2: k");
    if (k > n) return 0;
    // row[j] = S(m, j), advanced with S(m+1, j) = j S(m, j) + S(m, j-1)
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1);
    row[0] = 1;
    for (long m = 0; m < n; ++m) {
        for (long j = std::min(k, m + 1); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

Rat pochhammer(const Rat& x, long j) {
    require_non_negative(j, "pochhammer: j");
    Rat acc(1);
    for (long i = 0; i < j; ++i) acc *= x + Rat(i);
    return acc;
}

Poly pochhammer_poly(long j) {
    require_non_negative(j, "pochhammer_poly: j");
    Poly acc = Poly::constant(Rat(1));
    for (long i = 0; i < j; ++i) acc = acc * Poly({Rat(i), Rat(1)});
    return acc;
}

Poly falling_factorial_poly(long k) {
    require_non_negative(k, "falling_factorial_poly: k");
    Poly acc = Poly::constant(Rat(1));
    for (long i = 0; i < k; ++i) acc = acc * Poly({Rat(-i), Rat(1)});
    return acc;
}

BigInt double_factorial_odd(long n) {
    require_non_negative(n, "double_factorial_odd: n");
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * n + 1));
    return r;
}

}  // namespace cbs
