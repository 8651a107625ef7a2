#include <doctest.h>

#include <functional>
#include <random>

#include "cbs/combinatorics.hpp"
#include "cbs/errors.hpp"
#include "cbs/polynomial.hpp"
#include "cbs/rational.hpp"
#include "cbs/series.hpp"

using namespace cbs;

namespace {

// Oracle: count k-element subsets of an n-set by scanning bitmasks.
long count_subsets(int n, int k) {
    long count = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask)
        if (__builtin_popcount(mask) == k) ++count;
    return count;
}

// Oracle: count set partitions into k blocks via restricted growth strings.
long count_partitions(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    long count = 0;
    std::function<void(int, int)> rec = [&](int i, int max_block) {
        if (i == n) {
            if (max_block + 1 == k) ++count;
            return;
        }
        for (int b = 0; b <= max_block + 1; ++b) {
            a[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(max_block, b));
        }
    };
    rec(1, 0);  // a_0 = 0
    return count;
}

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    return Rat(num(rng), den(rng));
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rat> c;
    for (int i = 0, d = deg(rng); i <= d; ++i) c.push_back(random_rat(rng));
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    const Rat r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK((Rat(2, 3) * Rat(3, 2)).is_integer());
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(0).pow(0) == Rat(1));
    CHECK(Rat::parse("-10/4") == Rat(-5, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat(-5, 2).to_string() == "-5/2");
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
}

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == count_subsets(6, 3));
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == count_subsets(n, k));
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("stirling2") {
    for (int n = 0; n <= 10; ++n) CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(3, 2) == count_partitions(3, 2));
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == count_partitions(4, 2));
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(2, 5) == 0);
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == count_partitions(n, k));
}

TEST_CASE("stirling numbers expand powers into falling factorials") {
    for (int n = 0; n <= 12; ++n) {
        Poly sum;
        for (int k = 0; k <= n; ++k) sum += Rat(stirling2(n, k)) * falling_factorial_poly(k);
        for (long y = 1; y <= 5; ++y) CHECK(sum.eval(Rat(y)) == Rat(y).pow(n));
    }
}

TEST_CASE("pochhammer and odd double factorial") {
    CHECK(pochhammer(Rat(7, 3), 0) == Rat(1));
    CHECK(pochhammer(Rat(1), 3) == Rat(6));
    CHECK(pochhammer(Rat(1, 2), 2) == Rat(3, 4));
    CHECK(pochhammer(Rat(-2), 3) == Rat(0));
    CHECK(pochhammer_poly(3).eval(Rat(1, 2)) == pochhammer(Rat(1, 2), 3));
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(2) == 15);
    CHECK(double_factorial_odd(4) == 1 * 3 * 5 * 7 * 9);
    CHECK(double_factorial_odd(4) == 945);
}

TEST_CASE("polynomial basics") {
    const Poly p{Rat(1), Rat(2), Rat(0)};
    CHECK(p.degree() == 1);
    CHECK(Poly().degree() == -1);
    CHECK((p - p).is_zero());
    CHECK(Poly({Rat(0), Rat(0), Rat(3)}).derivative() == Poly({Rat(0), Rat(6)}));
    CHECK(Poly({Rat(7), Rat(8)}).to_string() == "8x + 7");
    CHECK(Poly({Rat(1), Rat(10), Rat(4)}).to_string() == "4x^2 + 10x + 1");
    CHECK(Poly({Rat(-1), Rat(1)}).pow(2) == Poly({Rat(1), Rat(-2), Rat(1)}));
    CHECK(p.eval(0.5) == doctest::Approx(2.0));
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly p = random_poly(rng, 8), q = random_poly(rng, 8);
        const Rat a = random_rat(rng);
        CHECK((p * q).eval(a) == p.eval(a) * q.eval(a));
        CHECK((p + q).eval(a) == p.eval(a) + q.eval(a));
    }
}

TEST_CASE("bivariate polynomials") {
    const BiPoly x = BiPoly::x(), y = BiPoly::y();
    const BiPoly f = x * y + y * y * Rat(3);  // xy + 3y^2
    CHECK(f.coeff(1, 1) == Rat(1));
    CHECK(f.coeff(0, 2) == Rat(3));
    CHECK(f.partial_x() == y);
    CHECK(f.substitute_y(Rat(2)) == Poly({Rat(12), Rat(2)}));
    CHECK(f.substitute_x(Rat(1)) == Poly({Rat(0), Rat(1), Rat(3)}));
    CHECK(f.eval(Rat(1, 2), Rat(2)) == Rat(13));
    CHECK((f - f).is_zero());
    CHECK(f.to_string() == "xy + 3y^2");
}

TEST_CASE("series reciprocal is exact to the truncation order") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> c;
        for (int i = 0; i <= 20; ++i) c.push_back(random_rat(rng));
        if (c[0].is_zero()) c[0] = Rat(1);
        const Series s(20, c);
        CHECK(s * s.reciprocal() == Series::one(20));
    }
}

TEST_CASE("series exp, log and powers") {
    const std::size_t N = 12;
    const Series t = Series::variable(N);
    CHECK(t.exp() == Series::exp_linear(Rat(1), N));
    const Series one_plus_t = Series::one(N) + t;
    CHECK(one_plus_t.log().exp() == one_plus_t);
    // (1+t)^{1/2} squared
    const Series root = one_plus_t.pow(Rat(1, 2));
    CHECK(root * root == one_plus_t);
    CHECK(one_plus_t.pow(3U) == one_plus_t * one_plus_t * one_plus_t);
    CHECK(one_plus_t.pow(Rat(3)) == one_plus_t.pow(3U));
    // exp(t) composed with 2t is exp(2t)
    CHECK(Series::exp_linear(Rat(1), N).compose(t * Rat(2)) == Series::exp_linear(Rat(2), N));
    CHECK(Series::exp_linear(Rat(1), N).derivative() == Series::exp_linear(Rat(1), N - 1));
    CHECK(t.shift(2)[3] == Rat(1));
}

TEST_CASE("series errors") {
    CHECK_THROWS_AS(Series(3) + Series(4), OrderMismatch);
    CHECK_THROWS_AS(Series(3) * Series(4), OrderMismatch);
    CHECK_THROWS_AS(Series::variable(3).reciprocal(), std::domain_error);
    CHECK_THROWS_AS(Series::one(3).exp(), std::domain_error);
    CHECK_THROWS_AS((Series::one(3) * Rat(2)).log(), std::domain_error);
    CHECK_THROWS_AS(Series::one(3).compose(Series::one(3)), std::domain_error);
    CHECK_THROWS_AS(Series(3).truncate(4), OrderMismatch);
    CHECK(Series(4, {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)}).order() == 4);
}
