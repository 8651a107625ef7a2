// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cbs/combinatorics.hpp"
#include "cbs/eulerian.hpp"
#include "cbs/lehmer.hpp"
#include "cbs/polybernoulli.hpp"
#include "cbs/verify.hpp"

using namespace cbs;

namespace {

// Empty string means the criterion holds, otherwise the first failure.
using Criterion = std::function<std::string()>;

Poly P(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

const char* const kB[] = {"1",
                          "2",
                          "4",
                          "10",
                          "32",
                          "126",
                          "588",
                          "3170",
                          "19384",
                          "132550",
                          "1002212",
                          "8301930",
                          "74767056",
                          "727348814",
                          "7601002876",
                          "84920459890",
                          "1010058659048",
                          "12742908917718",
                          "169962226236180",
                          "2389587638934650",
                          "35321010036943360",
                          "547577222471444062",
                          "8884170182467063724",
                          "150552144787642407810",
                          "2659909525720675219992",
                          "48913769201463577948646"};

Rat b(int n) { return Rat::parse(kB[n]); }

std::string at(const std::string& what, long n) { return what + " fails at n = " + std::to_string(n); }

std::string close(const std::string& what, double a, double b, double tol) {
    const double d = std::abs(a - b);
    if (d < tol) return {};
    std::ostringstream os;
    os.precision(17);
    os << what << ": |" << a << " - " << b << "| = " << d << " >= " << tol;
    return os.str();
}

std::string first_failure(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return r.suite + ": " + r.detail;
    return {};
}

std::string c1() {
    if (pq_polys(0).p != P({1}) || pq_polys(1).p != P({3}) || pq_polys(2).p != P({7, 8})) return "p_k for k <= 2";
    if (pq_polys(0).q != P({1}) || pq_polys(1).q != P({1, 2}) || pq_polys(2).q != P({1, 10, 4})) return "q_k for k <= 2";
    const std::vector<Poly> table{P({1}), P({1}), P({1, 2}), P({1, 10, 4}), P({1, 36, 60, 8}), P({1, 116, 516, 296, 16})};
    for (int n = -1; n <= 4; ++n)
        if (pq_polys(n).q != table[static_cast<std::size_t>(n + 1)]) return at("q_n table row", n);
    for (int n = 0; n <= 5; ++n)
        if (Rat(2).pow(n) * f_at_y(n, Rat(1, 2)) != table[static_cast<std::size_t>(n)]) return at("2^n F_n(x,1/2) table row", n);
    const BiPoly f3({P({0, 0, 0, 1}), P({0, 1, 3}), P({0, 1})});
    if (f_bipoly(3) != f3) return "F_3(x,y)";
    if (eulerian_number(3, 1) != 4) return "A(3,1)";
    return {};
}

std::string c2() {
    const std::vector<ZetaValue> expected{{Rat(1, 3), Rat(2, 9)}, {Rat(2, 3), Rat(2, 9)}, {Rat(4, 3), Rat(10, 27)}};
    for (int k = 0; k <= 2; ++k)
        if (zeta_cb_neg(k) != expected[static_cast<std::size_t>(k)]) return "zeta value at k = " + std::to_string(k);
    for (int k = 0; k <= 6; ++k)
        if (auto f = close("k = " + std::to_string(k), zeta_cb_neg(k).approx(), dirichlet_partial_sum(k, 60), 1e-9);
            !f.empty())
            return f;
    return {};
}

std::string c3() {
    for (int n = -1; n <= 20; ++n)
        if (pq_polys(n).q != Rat(2).pow(n + 1) * f_at_y(n + 1, Rat(1, 2))) return at("q_n = 2^{n+1} F_{n+1}(x,1/2)", n);
    return {};
}

std::string c4() {
    for (int n = 0; n <= 25; ++n) {
        const Rat lhs = Rat(2, 3).pow(n) * pq_polys(n).p.eval(Rat(1, 4));
        if (lhs != b_sum(n)) return at("(2/3)^n p_n(1/4) = b_n", n);
    }
    return {};
}

std::string c5() {
    for (int n = 0; n <= 15; ++n)
        if (p_via_eulerian(n) != pq_polys(n).p) return at("convolution formula for p_n", n);
    return {};
}

std::string c6() {
    std::vector<Rat> c{Rat(1)};
    for (int n = 0; n < 25; ++n) c.push_back(antidiagonal_recursion_step(c));
    for (int n = 0; n <= 25; ++n) {
        const Rat& v = c[static_cast<std::size_t>(n)];
        if (v != b_sum(n)) return at("recursion vs b_n", n);
        if (v != a_seq(n)) return at("recursion vs a_n", n);
    }
    return {};
}

std::string c7() {
    for (int n = 0; n <= 20; ++n)
        if (b_explicit(n) != b(n)) return at("explicit formula", n);
    return {};
}

std::string c8() {
    const Series ogf = bn_ogf_series(25);
    for (int n = 0; n <= 25; ++n)
        if (ogf[static_cast<std::size_t>(n)] != b(n)) return at("OGF coefficient", n);
    return {};
}

std::string c9() {
    if (!key_equality_check(25)) return "key equality to order 25";
    SuiteOptions o;
    o.max_n = 6;
    return first_failure(run_suite("lemma", o));
}

std::string c10() {
    for (int n = 1; n <= 25; ++n)
        if (!alternating_sum(n).is_zero()) return at("alternating sum", n);
    return {};
}

std::string c11() {
    for (int n = 0; n <= 8; ++n)
        if (f_bipoly_brute(n) != f_bipoly(n)) return at("F_n enumeration", n);
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n)
            if (s_eulerian(one_over_k_bounds(n, k)) != Rat(k).pow(n) * f_at_y(n, Rat(1, k)))
                return at("s-Eulerian k = " + std::to_string(k), n);
    for (int n = 0; n <= 7; ++n)
        if (Rat(ascending_to_max_count(n + 1)) != b(n)) return at("ascending-to-max count", n);
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= 10; ++k)
            if (poly_bernoulli_egf(n, -k) != poly_bernoulli_stirling(n, k))
                return at("poly-Bernoulli routes, k = " + std::to_string(k), n);
    return {};
}

std::string c12() {
    constexpr double tol = 1e-10;
    std::vector<std::string> failures;
    auto note = [&](std::string f) {
        if (!f.empty()) failures.push_back(std::move(f));
    };
    for (int k = -1; k <= 5; ++k)
        for (double x : {0.1, 0.25, 0.3, 0.4}) {
            std::ostringstream what;
            what << "arcsin series k = " << k << ", x = " << x;
            note(close(what.str(), series_partial_sum(k, x, 80), closed_form_rhs(k, x), tol));
        }
    for (auto [x, t] : {std::pair{0.2, 0.0}, {0.2, 0.1}, {0.04, 0.3}})
        note(close("P at x = " + std::to_string(x) + ", t = " + std::to_string(t), p_egf_closed(x, t),
                   p_egf_truncated(x, t, 25), tol));
    for (auto [x, t] : {std::pair{0.2, 0.0}, {0.2, 0.1}, {0.5, 0.05}})
        note(close("Q at x = " + std::to_string(x) + ", t = " + std::to_string(t), q_egf_closed(x, t),
                   q_egf_truncated(x, t, 25), tol));
    for (double t : {0.0, 0.2, 1.0})
        note(close("a-EGF at t = " + std::to_string(t) + " with 25 terms", a_egf_closed(t), a_egf_truncated(t, 25), tol));
    for (const auto& r : q_ode_residual(12))
        if (!r.is_zero()) note("Q ODE residual to order 12");
    if (!a_ode_residual(12).is_zero()) note("a-EGF ODE residual to order 12");
    std::string out;
    for (const auto& f : failures) out += (out.empty() ? "" : "; ") + f;
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Criterion>> criteria{
        {"table values and worked examples", c1},
        {"zeta values at non-positive integers", c2},
        {"q_n from F_{n+1}(x,1/2)", c3},
        {"b_n from p_n(1/4)", c4},
        {"p_n by bivariate Eulerian convolution", c5},
        {"shared recursion for a_n and b_n", c6},
        {"explicit Stirling-sum formula", c7},
        {"ordinary generating function", c8},
        {"key equality and contiguous relation", c9},
        {"alternating antidiagonal sum", c10},
        {"brute-force oracle equivalences", c11},
        {"numeric closed forms and ODE invariants", c12},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string failure;
        try {
            failure = criteria[i].second();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure.empty()) {
            std::printf("PASS %2zu %s\n", i + 1, criteria[i].first);
        } else {
            ++failed;
            std::printf("FAIL %2zu %s: %s\n", i + 1, criteria[i].first, failure.c_str());
        }
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu criteria, %d failed, %lld ms\n", criteria.size(), failed, static_cast<long long>(ms));
    return failed == 0 ? 0 : 1;
}
