#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cbs/combinatorics.hpp"
#include "cbs/errors.hpp"
#include "cbs/eulerian.hpp"

using namespace cbs;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

// y^3 + 3xy^2 + x^2y + xy
BiPoly f3() { return BiPoly({P({0, 0, 0, 1}), P({0, 1, 3}), P({0, 1})}); }

// Oracle: count permutations of [n] with k excedances through a plain next_permutation loop.
long brute_eulerian(int n, int k) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    long count = 0;
    do {
        int e = 0;
        for (int i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] > i + 1) ++e;
        if (e == k) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    return count;
}

}  // namespace

TEST_CASE("permutation validation and structure") {
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 4}), std::invalid_argument);
    const Permutation p({3, 1, 2});
    CHECK(p.position(3) == 1);
    CHECK(p.position(1) == 2);
    const auto cycles = p.cycles();
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == std::vector<int>{1, 3, 2});
    CHECK(Permutation({1, 3, 2}).cycles().size() == 2);
}

TEST_CASE("exc and cyc reproduce the S_3 weights") {
    CHECK(exc(Permutation::identity(5)) == 0);
    CHECK(exc(Permutation({1, 3, 2})) == 1);
    CHECK(exc(Permutation({2, 3, 1})) == 2);
    CHECK(exc(Permutation({3, 2, 1})) == 1);
    CHECK(exc(Permutation({2, 1, 3})) == 1);
    CHECK(exc(Permutation({3, 1, 2})) == 1);
    for (int n = 1; n <= 6; ++n) CHECK(cyc(Permutation::identity(n)) == n);
    CHECK(cyc(Permutation({2, 3, 1})) == 1);
    CHECK(cyc(Permutation({2, 1, 3})) == 2);
    CHECK(cyc(Permutation({1, 3, 2})) == 2);
    CHECK(cyc(Permutation({3, 1, 2})) == 1);
    CHECK(cyc(Permutation({3, 2, 1})) == 2);
}

TEST_CASE("Eulerian numbers") {
    CHECK(eulerian_number(3, 1) == 4);
    for (int n = 1; n <= 8; ++n) CHECK(eulerian_number(n, 0) == 1);
    CHECK(eulerian_number(5, 2) == brute_eulerian(5, 2));
    CHECK(eulerian_number(5, 2) == 66);
    CHECK(eulerian_number(4, 4) == 0);
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k < n; ++k) CHECK(eulerian_number(n, k) == brute_eulerian(n, k));
}

TEST_CASE("bivariate Eulerian polynomial by recursion") {
    CHECK(f_bipoly(0) == BiPoly::constant(Rat(1)));
    CHECK(f_bipoly(1) == BiPoly::y());
    CHECK(f_bipoly(3) == f3());
}

TEST_CASE("bivariate Eulerian polynomial by enumeration") {
    CHECK(f_bipoly_brute(0) == BiPoly::constant(Rat(1)));
    CHECK(f_bipoly_brute(2) == BiPoly({P({0, 0, 1}), P({0, 1})}));
    CHECK(f_bipoly_brute(3) == f3());
    for (int n = 0; n <= 8; ++n) CHECK(f_bipoly(n) == f_bipoly_brute(n));
    CHECK_THROWS_AS(f_bipoly_brute(10), SizeError);
    try {
        (void)f_bipoly_brute(6, 5);
        FAIL("expected a size error");
    } catch (const SizeError& e) {
        CHECK(e.bound() == 5);
        CHECK(std::string(e.what()).find("5") != std::string::npos);
    }
}

TEST_CASE("special values of F_n") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Rat> a;
        for (int k = 0; k < n; ++k) a.emplace_back(eulerian_number(n, k));
        CHECK(f_at_y(n, Rat(1)) == Poly(std::move(a)));
        CHECK(f_at_y(n + 1, Rat(-1)) == -(P({-1, 1}).pow(static_cast<unsigned>(n))));
    }
    CHECK(f_at_y(1, Rat(-1)) == P({-1}));
    CHECK(f_at_y(2, Rat(1, 2)) == Poly({Rat(1, 4), Rat(1, 2)}));
    for (int n = 0; n <= 10; ++n) {
        CHECK(f_at_y(n, Rat(1)).eval(Rat(1)) == Rat(factorial(n)));
        CHECK(f_bipoly(n + 1).substitute_x(Rat(1)) == pochhammer_poly(n + 1));
    }
}

TEST_CASE("ascents of inversion sequences") {
    CHECK(asc(InversionSequence({0, 0, 0}, {1, 5, 2})) == 0);
    CHECK(asc(InversionSequence({0, 1}, {1, 3})) == 1);
    CHECK(asc(InversionSequence({0, 2}, {1, 3})) == 1);
    // 1/2 > 1/3 is a descent, 1/3 < 3/4 an ascent, plus the sentinel ascent at i = 0
    CHECK(asc(InversionSequence({1, 1, 3}, {2, 3, 4})) == 2);
    // equal fractions are not ascents: 1/2 = 2/4
    CHECK(asc(InversionSequence({1, 2}, {2, 4})) == 1);
    CHECK_THROWS_AS(InversionSequence({1}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(InversionSequence({0}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(InversionSequence({0, 0}, {1}), std::invalid_argument);
}

TEST_CASE("s-Eulerian polynomials") {
    const std::vector<int> classical{1, 2, 3};
    CHECK(s_eulerian(classical) == P({1, 4, 1}));
    // (0,0) -> 0, (0,1) -> 1, (0,2) -> 1
    const std::vector<int> odd{1, 3};
    CHECK(s_eulerian(odd) == P({1, 2}));
    CHECK(s_eulerian(odd) == Rat(4) * f_at_y(2, Rat(1, 2)));
    CHECK(s_eulerian(std::vector<int>{}) == P({1}));
    const std::vector<int> big{100, 100, 100, 100};
    CHECK_THROWS_AS(s_eulerian(big), SizeError);
    CHECK_NOTHROW(s_eulerian(big, 100'000'000));
}

TEST_CASE("1/k-Eulerian relation") {
    CHECK(one_over_k_bounds(4, 2) == std::vector<int>{1, 3, 5, 7});
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n)
            CHECK(s_eulerian(one_over_k_bounds(n, k)) == Rat(k).pow(n) * f_at_y(n, Rat(1, k)));
}

TEST_CASE("exponential generating function of F_n") {
    const std::vector<std::pair<Rat, Rat>> points{
        {Rat(1, 2), Rat(1, 2)}, {Rat(1, 3), Rat(2)}, {Rat(-2), Rat(3, 4)}, {Rat(3), Rat(-5, 3)}, {Rat(0), Rat(1)}};
    for (const auto& [x, y] : points) {
        const auto coeffs = bivariate_egf_coefficients(x, y, 10);
        for (int n = 0; n <= 10; ++n) CHECK(coeffs[static_cast<std::size_t>(n)] == f_bipoly(n).eval(x, y));
    }
    CHECK_THROWS_AS(bivariate_egf_coefficients(Rat(1), Rat(1), 3), std::domain_error);
}

TEST_CASE("permutation enumeration covers S_n once") {
    int count = 0;
    for_each_permutation(5, kDefaultPermutationCap, [&](const Permutation&) { ++count; });
    CHECK(count == 120);
    count = 0;
    for_each_permutation(0, kDefaultPermutationCap, [&](const Permutation& p) {
        ++count;
        CHECK(p.size() == 0);
    });
    CHECK(count == 1);
}
