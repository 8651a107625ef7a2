#include "cbs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cbs/combinatorics.hpp"
#include "cbs/errors.hpp"
#include "cbs/eulerian.hpp"
#include "cbs/lehmer.hpp"
#include "cbs/polybernoulli.hpp"

namespace cbs {

UnknownSuiteError::UnknownSuiteError(std::string_view name)
    : std::invalid_argument("unknown suite '" + std::string(name) + "'") {}

namespace {

using Failure = std::optional<std::string>;
using Params = std::map<std::string, std::string>;

// Largest n each brute-force family enumerates; keeps every suite desk-scale.
constexpr int kAtmLimit = 7;
constexpr int kBruteFLimit = 8;
constexpr int kSEulerianLimit = 6;
constexpr int kRoutesLimit = 10;
constexpr int kEgfBivariateLimit = 10;
constexpr int kLemmaPoints = 20;
constexpr int kLemmaMaxJ = 6;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string poly_str(const Poly& p) { return "[" + p.to_string() + "]"; }

template <class T>
std::string mismatch(std::string_view what, std::string_view where, const T& lhs, const T& rhs) {
    std::ostringstream os;
    os << what << " fails at " << where << ": lhs = " << lhs << ", rhs = " << rhs;
    return os.str();
}

std::string mismatch(std::string_view what, std::string_view where, const Poly& lhs, const Poly& rhs) {
    return mismatch(what, where, poly_str(lhs), poly_str(rhs));
}

std::string mismatch(std::string_view what, std::string_view where, const BiPoly& lhs, const BiPoly& rhs) {
    return mismatch(what, where, "[" + lhs.to_string() + "]", "[" + rhs.to_string() + "]");
}

std::string at_n(long n) { return "n = " + std::to_string(n); }

CheckResult run_check(std::string_view suite, Params params, const std::function<Failure()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.suite = std::string(suite);
    r.params = std::move(params);
    try {
        const Failure failure = body();
        r.passed = !failure.has_value();
        r.detail = failure.value_or("ok");
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Params range_params(std::string check, long lo, long hi) {
    return {{"check", std::move(check)}, {"n_min", std::to_string(lo)}, {"n_max", std::to_string(hi)}};
}

Poly parse_poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

// ---------------------------------------------------------------- tables

std::vector<CheckResult> suite_table_q(const SuiteOptions&) {
    constexpr std::string_view s = "tableQ";
    std::vector<CheckResult> out;
    out.push_back(run_check(s, {{"check", "p_k, q_k for k <= 2"}}, []() -> Failure {
        const std::vector<std::pair<Poly, Poly>> expected{
            {Poly(), parse_poly({1})},
            {parse_poly({1}), parse_poly({1})},
            {parse_poly({3}), parse_poly({1, 2})},
            {parse_poly({7, 8}), parse_poly({1, 10, 4})},
        };
        for (int k = -1; k <= 2; ++k) {
            const PQPair pq = pq_polys(k);
            const auto& [p, q] = expected[static_cast<std::size_t>(k + 1)];
            if (pq.p != p) return mismatch("p_k", "k = " + std::to_string(k), pq.p, p);
            if (pq.q != q) return mismatch("q_k", "k = " + std::to_string(k), pq.q, q);
        }
        return std::nullopt;
    }));
    out.push_back(run_check(s, {{"check", "q_n values n <= 4"}}, []() -> Failure {
        const std::vector<Poly> expected{parse_poly({1}),          parse_poly({1}),
                                         parse_poly({1, 2}),       parse_poly({1, 10, 4}),
                                         parse_poly({1, 36, 60, 8}), parse_poly({1, 116, 516, 296, 16})};
        for (int n = -1; n <= 4; ++n) {
            const Poly q = pq_polys(n).q;
            if (q != expected[static_cast<std::size_t>(n + 1)])
                return mismatch("q_n table", at_n(n), q, expected[static_cast<std::size_t>(n + 1)]);
        }
        return std::nullopt;
    }));
    out.push_back(run_check(s, {{"check", "2^n F_n(x,1/2) values n <= 5"}}, []() -> Failure {
        const std::vector<Poly> expected{parse_poly({1}),          parse_poly({1}),
                                         parse_poly({1, 2}),       parse_poly({1, 10, 4}),
                                         parse_poly({1, 36, 60, 8}), parse_poly({1, 116, 516, 296, 16})};
        for (int n = 0; n <= 5; ++n) {
            const Poly f = Rat(2).pow(n) * f_at_y(n, Rat(1, 2));
            if (f != expected[static_cast<std::size_t>(n)])
                return mismatch("2^n F_n(x,1/2) table", at_n(n), f, expected[static_cast<std::size_t>(n)]);
        }
        return std::nullopt;
    }));
    out.push_back(run_check(s, {{"check", "F_3 value"}}, []() -> Failure {
        // y^3 + 3xy^2 + x^2y + xy
        const BiPoly expected({parse_poly({0, 0, 0, 1}), parse_poly({0, 1, 3}), parse_poly({0, 1})});
        if (f_bipoly(3) != expected) return mismatch("F_3 recursion", at_n(3), f_bipoly(3), expected);
        if (f_bipoly_brute(3) != expected) return mismatch("F_3 enumeration", at_n(3), f_bipoly_brute(3), expected);
        return std::nullopt;
    }));
    out.push_back(run_check(s, {{"check", "exc and cyc on S_3"}}, []() -> Failure {
        const std::vector<std::tuple<std::vector<int>, int, int>> rows{
            {{1, 2, 3}, 0, 3}, {{1, 3, 2}, 1, 2}, {{2, 1, 3}, 1, 2},
            {{2, 3, 1}, 2, 1}, {{3, 1, 2}, 1, 1}, {{3, 2, 1}, 1, 2}};
        for (const auto& [line, e, c] : rows) {
            const Permutation p(line);
            std::string name;
            for (int v : line) name += std::to_string(v);
            if (exc(p) != e) return mismatch("exc", name, exc(p), e);
            if (cyc(p) != c) return mismatch("cyc", name, cyc(p), c);
        }
        return std::nullopt;
    }));
    out.push_back(run_check(s, {{"check", "A(3,1) = 4"}}, []() -> Failure {
        if (eulerian_number(3, 1) != 4) return mismatch("A(3,1)", "(3,1)", eulerian_number(3, 1), BigInt(4));
        return std::nullopt;
    }));
    return out;
}

// ---------------------------------------------------------------- Lehmer / Eulerian

std::vector<CheckResult> suite_qf(const SuiteOptions& o) {
    return {run_check("qF", range_params("q_n = 2^{n+1} F_{n+1}(x,1/2)", -1, o.max_n), [&]() -> Failure {
        for (int n = -1; n <= o.max_n; ++n) {
            const Poly lhs = pq_polys(n).q, rhs = q_via_eulerian(n);
            if (lhs != rhs) return mismatch("q vs Eulerian", at_n(n), lhs, rhs);
        }
        return std::nullopt;
    })};
}

std::vector<CheckResult> suite_pf(const SuiteOptions& o) {
    return {run_check("pF", range_params("p_n = Eulerian convolution", 0, o.max_n), [&]() -> Failure {
        for (int n = 0; n <= o.max_n; ++n) {
            const Poly lhs = pq_polys(n).p, rhs = p_via_eulerian(n);
            if (lhs != rhs) return mismatch("p vs Eulerian convolution", at_n(n), lhs, rhs);
        }
        return std::nullopt;
    })};
}

std::vector<CheckResult> suite_ode_q(const SuiteOptions& o) {
    Params params{{"check", "Q ODE residual"}, {"order", std::to_string(o.max_n)}};
    return {run_check("odeQ", std::move(params), [&]() -> Failure {
        const auto residual = q_ode_residual(o.max_n);
        for (std::size_t n = 0; n < residual.size(); ++n)
            if (!residual[n].is_zero())
                return mismatch("Q ODE", "t^" + std::to_string(n), residual[n], Poly());
        return std::nullopt;
    })};
}

std::vector<CheckResult> suite_ode_a(const SuiteOptions& o) {
    Params params{{"check", "a-EGF ODE residual"}, {"order", std::to_string(o.max_n)}};
    return {run_check("odeA", std::move(params), [&]() -> Failure {
        const Series residual = a_ode_residual(o.max_n);
        for (std::size_t n = 0; n <= residual.order(); ++n)
            if (!residual[n].is_zero()) return mismatch("a-EGF ODE", "t^" + std::to_string(n), residual[n], Rat());
        return std::nullopt;
    })};
}

std::vector<CheckResult> suite_special_values(const SuiteOptions& o) {
    constexpr std::string_view s = "special_values";
    const int m = o.max_n;
    std::vector<CheckResult> out;
    const int brute = std::min(m, kBruteFLimit);
    out.push_back(run_check(s, range_params("F_n brute force = recursion", 0, brute), [&]() -> Failure {
        for (int n = 0; n <= brute; ++n)
            if (f_bipoly(n) != f_bipoly_brute(n)) return mismatch("F_n", at_n(n), f_bipoly(n), f_bipoly_brute(n));
        return std::nullopt;
    }));
    out.push_back(run_check(s, range_params("F_n(x,1) = A_n(x)", 1, m), [&]() -> Failure {
        for (int n = 1; n <= m; ++n) {
            std::vector<Rat> a;
            for (int k = 0; k < n; ++k) a.emplace_back(eulerian_number(n, k));
            const Poly lhs = f_at_y(n, Rat(1)), rhs(std::move(a));
            if (lhs != rhs) return mismatch("F_n(x,1)", at_n(n), lhs, rhs);
        }
        return std::nullopt;
    }));
    out.push_back(run_check(s, range_params("F_{n+1}(x,-1) = -(x-1)^n", 0, m), [&]() -> Failure {
        for (int n = 0; n <= m; ++n) {
            const Poly lhs = f_at_y(n + 1, Rat(-1));
            const Poly rhs = -(Poly({Rat(-1), Rat(1)}).pow(static_cast<unsigned>(n)));
            if (lhs != rhs) return mismatch("F_{n+1}(x,-1)", at_n(n), lhs, rhs);
        }
        return std::nullopt;
    }));
    out.push_back(run_check(s, range_params("F_{n+1}(1,y) = (y)_{n+1}", 0, m), [&]() -> Failure {
        for (int n = 0; n <= m; ++n) {
            const Poly lhs = f_bipoly(n + 1).substitute_x(Rat(1)), rhs = pochhammer_poly(n + 1);
            if (lhs != rhs) return mismatch("F_{n+1}(1,y)", at_n(n), lhs, rhs);
        }
        return std::nullopt;
    }));
    out.push_back(run_check(s, range_params("F_n(1,1) = n!", 0, m), [&]() -> Failure {
        for (int n = 0; n <= m; ++n) {
            const Rat lhs = f_at_y(n, Rat(1)).eval(Rat(1)), rhs(factorial(n));
            if (lhs != rhs) return mismatch("row sum", at_n(n), lhs, rhs);
        }
        return std::nullopt;
    }));
    out.push_back(run_check(s, range_params("q_n(1) = (2n+1)!!", 0, m), [&]() -> Failure {
        for (int n = 0; n <= m; ++n) {
            const Rat lhs = pq_polys(n).q.eval(Rat(1)), rhs(double_factorial_odd(n));
            if (lhs != rhs) return mismatch("q_n(1)", at_n(n), lhs, rhs);
        }
        return std::nullopt;
    }));
    const int egf_order = std::min(m, kEgfBivariateLimit);
    out.push_back(run_check(s, range_params("bivariate EGF coefficients", 0, egf_order), [&]() -> Failure {
        const std::vector<std::pair<Rat, Rat>> points{
            {Rat(1, 2), Rat(1, 2)}, {Rat(1, 3), Rat(2)}, {Rat(-2), Rat(3, 4)}, {Rat(3), Rat(-5, 3)}};
        for (const auto& [x, y] : points) {
            const auto coeffs = bivariate_egf_coefficients(x, y, static_cast<std::size_t>(egf_order));
            for (int n = 0; n <= egf_order; ++n) {
                const Rat lhs = f_bipoly(n).eval(x, y);
                if (lhs != coeffs[static_cast<std::size_t>(n)])
                    return mismatch("F_n(x,y) vs EGF", at_n(n) + ", x = " + x.to_string() + ", y = " + y.to_string(),
                                    lhs, coeffs[static_cast<std::size_t>(n)]);
            }
        }
        return std::nullopt;
    }));
    return out;
}

std::vector<CheckResult> suite_s_eulerian(const SuiteOptions& o) {
    constexpr std::string_view s = "sEulerian";
    const int lim = std::min(o.max_n, kSEulerianLimit);
    std::vector<CheckResult> out;
    out.push_back(run_check(s, range_params("bounds (1,2,...,n) give A_n(x)", 0, lim), [&]() -> Failure {
        for (int n = 0; n <= lim; ++n) {
            std::vector<int> bounds;
            for (int i = 1; i <= n; ++i) bounds.push_back(i);
            const Poly lhs = s_eulerian(bounds), rhs = f_at_y(n, Rat(1));
            if (lhs != rhs) return mismatch("classical s-Eulerian", at_n(n), lhs, rhs);
        }
        return std::nullopt;
    }));
    for (int k = 1; k <= 3; ++k) {
        Params params = range_params("E_n^(s) = k^n F_n(x,1/k)", 0, lim);
        params["k"] = std::to_string(k);
        out.push_back(run_check(s, std::move(params), [&, k]() -> Failure {
            for (int n = 0; n <= lim; ++n) {
                const Poly lhs = s_eulerian(one_over_k_bounds(n, k));
                const Poly rhs = Rat(k).pow(n) * f_at_y(n, Rat(1, k));
                if (lhs != rhs) return mismatch("1/k-Eulerian", at_n(n) + ", k = " + std::to_string(k), lhs, rhs);
            }
            return std::nullopt;
        }));
    }
    return out;
}

// ---------------------------------------------------------------- poly-Bernoulli

std::vector<CheckResult> suite_stephan(const SuiteOptions& o) {
    return {run_check("stephan", range_params("(2/3)^n p_n(1/4) = b_n", 0, o.max_n), [&]() -> Failure {
        for (int n = 0; n <= o.max_n; ++n)
            if (a_seq(n) != b_sum(n)) return mismatch("a_n = b_n", at_n(n), a_seq(n), b_sum(n));
        return std::nullopt;
    })};
}

Failure satisfies_recursion(const std::function<Rat(int)>& seq, int max_n, std::string_view label) {
    std::vector<Rat> prefix{seq(0)};
    if (prefix[0] != Rat(1)) return mismatch(label, at_n(0), prefix[0], Rat(1));
    for (int n = 0; n < max_n; ++n) {
        const Rat expected = antidiagonal_recursion_step(prefix);
        const Rat actual = seq(n + 1);
        if (actual != expected) return mismatch(label, at_n(n + 1), actual, expected);
        prefix.push_back(actual);
    }
    return std::nullopt;
}

std::vector<CheckResult> suite_recursion(const SuiteOptions& o) {
    constexpr std::string_view s = "recursion";
    const int m = o.max_n;
    std::vector<CheckResult> out;
    out.push_back(run_check(s, range_params("b_rec = b_sum", 0, m), [&]() -> Failure {
        for (int n = 0; n <= m; ++n)
            if (b_rec(n) != b_sum(n)) return mismatch("b_rec = b_sum", at_n(n), b_rec(n), b_sum(n));
        return std::nullopt;
    }));
    out.push_back(run_check(s, range_params("b_sum satisfies the recursion", 0, m),
                            [&]() { return satisfies_recursion(b_sum, m, "b recursion"); }));
    out.push_back(run_check(s, range_params("a_n satisfies the recursion", 0, m),
                            [&]() { return satisfies_recursion(a_seq, m, "a recursion"); }));
    out.push_back(run_check(s, range_params("a_n = b_rec", 0, m), [&]() -> Failure {
        for (int n = 0; n <= m; ++n)
            if (a_seq(n) != b_rec(n)) return mismatch("a_n = b_rec", at_n(n), a_seq(n), b_rec(n));
        return std::nullopt;
    }));
    return out;
}

std::vector<CheckResult> suite_explicit(const SuiteOptions& o) {
    constexpr std::string_view s = "explicit";
    const int m = o.max_n;
    std::vector<CheckResult> out;
    out.push_back(run_check(s, range_params("b_explicit = b_sum", 0, m), [&]() -> Failure {
        for (int n = 0; n <= m; ++n)
            if (b_explicit(n) != b_sum(n)) return mismatch("explicit formula", at_n(n), b_explicit(n), b_sum(n));
        return std::nullopt;
    }));
    out.push_back(run_check(s, range_params("b_n positive integer", 0, m), [&]() -> Failure {
        for (int n = 0; n <= m; ++n) {
            const Rat b = b_sum(n);
            if (!b.is_integer() || b.sign() <= 0) return "b_n is not a positive integer at " + at_n(n) + ": " + b.to_string();
        }
        return std::nullopt;
    }));
    return out;
}

std::vector<CheckResult> suite_ogf(const SuiteOptions& o) {
    return {run_check("ogf", range_params("OGF coefficients = b_n", 0, o.max_n), [&]() -> Failure {
        const Series ogf = bn_ogf_series(static_cast<std::size_t>(o.max_n));
        for (int n = 0; n <= o.max_n; ++n)
            if (ogf[static_cast<std::size_t>(n)] != b_sum(n))
                return mismatch("OGF coefficient", at_n(n), ogf[static_cast<std::size_t>(n)], b_sum(n));
        return std::nullopt;
    })};
}

std::vector<CheckResult> suite_keyeq(const SuiteOptions& o) {
    Params params{{"check", "key generating-function equality"}, {"order", std::to_string(o.max_n)}};
    return {run_check("keyeq", std::move(params), [&]() -> Failure {
        const auto [lhs, rhs] = key_equality_sides(static_cast<std::size_t>(o.max_n));
        for (std::size_t n = 0; n <= lhs.order(); ++n)
            if (lhs[n] != rhs[n]) return mismatch("key equality", "x^" + std::to_string(n), lhs[n], rhs[n]);
        return std::nullopt;
    })};
}

std::vector<CheckResult> suite_lemma(const SuiteOptions& o) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    const int j_max = std::min(o.max_n, kLemmaMaxJ);
    for (int j = 0; j <= j_max; ++j) {
        // Points are drawn before the check runs so the sample plan depends only on the seed.
        std::vector<std::pair<Rat, Rat>> points;
        while (static_cast<int>(points.size()) < kLemmaPoints) {
            const Rat x(num(rng), den(rng));
            const Rat y(num(rng), den(rng));
            try {
                (void)lemma_3f2_residual(x, y, j);
            } catch (const PoleError&) {
                continue;
            }
            points.emplace_back(x, y);
        }
        Params params{{"check", "contiguous relation residual"},
                      {"j", std::to_string(j)},
                      {"points", std::to_string(kLemmaPoints)},
                      {"seed", std::to_string(o.seed)}};
        out.push_back(run_check("lemma", std::move(params), [points, j]() -> Failure {
            for (const auto& [x, y] : points) {
                const Rat r = lemma_3f2_residual(x, y, j);
                if (!r.is_zero())
                    return mismatch("residual", "x = " + x.to_string() + ", y = " + y.to_string(), r, Rat());
            }
            return std::nullopt;
        }));
    }
    return out;
}

std::vector<CheckResult> suite_altsum(const SuiteOptions& o) {
    return {run_check("altsum", range_params("alternating antidiagonal sum = 0", 1, o.max_n), [&]() -> Failure {
        for (int n = 1; n <= o.max_n; ++n)
            if (!alternating_sum(n).is_zero()) return mismatch("alternating sum", at_n(n), alternating_sum(n), Rat());
        return std::nullopt;
    })};
}

std::vector<CheckResult> suite_routes(const SuiteOptions& o) {
    constexpr std::string_view s = "routes";
    const int lim = std::min(o.max_n, kRoutesLimit);
    std::vector<CheckResult> out;
    out.push_back(run_check(s, range_params("EGF route = Stirling route for B_n^(-k)", 0, lim), [&]() -> Failure {
        for (int n = 0; n <= lim; ++n)
            for (int k = 0; k <= lim; ++k) {
                const Rat lhs = poly_bernoulli_egf(n, -k), rhs = poly_bernoulli_stirling(n, k);
                if (lhs != rhs)
                    return mismatch("B_n^(-k)", "n = " + std::to_string(n) + ", k = " + std::to_string(k), lhs, rhs);
            }
        return std::nullopt;
    }));
    out.push_back(run_check(s, range_params("boundary values", 0, lim), [&]() -> Failure {
        for (int k = -lim; k <= lim; ++k)
            if (poly_bernoulli_egf(0, k) != Rat(1))
                return mismatch("B_0^(k)", "k = " + std::to_string(k), poly_bernoulli_egf(0, k), Rat(1));
        for (int n = 0; n <= lim; ++n) {
            if (poly_bernoulli_egf(n, 0) != Rat(1)) return mismatch("B_n^(0)", at_n(n), poly_bernoulli_egf(n, 0), Rat(1));
            if (poly_bernoulli_egf(n, -1) != Rat(2).pow(n))
                return mismatch("B_n^(-1)", at_n(n), poly_bernoulli_egf(n, -1), Rat(2).pow(n));
        }
        return std::nullopt;
    }));
    return out;
}

std::vector<CheckResult> suite_atm(const SuiteOptions& o) {
    const int lim = std::min(o.max_n, kAtmLimit);
    return {run_check("atm", range_params("ascending-to-max count in S_{n+1} = b_n", 0, lim), [&]() -> Failure {
        for (int n = 0; n <= lim; ++n) {
            const Rat count(ascending_to_max_count(n + 1));
            if (count != b_sum(n)) return mismatch("ascending-to-max", at_n(n), count, b_sum(n));
        }
        return std::nullopt;
    })};
}

// ---------------------------------------------------------------- numerics

Failure close_enough(std::string_view what, std::string_view where, double lhs, double rhs, double tol) {
    if (std::abs(lhs - rhs) < tol) return std::nullopt;
    return mismatch(what, std::string(where) + " (|diff| = " + fmt(std::abs(lhs - rhs)) + ")", fmt(lhs), fmt(rhs));
}

std::vector<CheckResult> suite_numeric_zeta(const SuiteOptions& o) {
    constexpr std::string_view s = "numeric_zeta";
    const std::string tol = fmt(o.tolerance);
    std::vector<CheckResult> out;
    out.push_back(run_check(s, {{"check", "exact values k = 0..2"}}, []() -> Failure {
        const std::vector<ZetaValue> expected{
            {Rat(1, 3), Rat(2, 9)}, {Rat(2, 3), Rat(2, 9)}, {Rat(4, 3), Rat(10, 27)}};
        for (int k = 0; k <= 2; ++k) {
            const ZetaValue z = zeta_cb_neg(k);
            if (z != expected[static_cast<std::size_t>(k)])
                return mismatch("zeta_CB(-k)", "k = " + std::to_string(k), z.to_string(),
                                expected[static_cast<std::size_t>(k)].to_string());
        }
        return std::nullopt;
    }));
    out.push_back(run_check(s, {{"check", "Dirichlet partial sums"}, {"k_max", "6"}, {"terms", "60"}, {"tolerance", tol}},
                            [&]() -> Failure {
                                for (int k = 0; k <= 6; ++k)
                                    if (auto f = close_enough("zeta_CB(-k)", "k = " + std::to_string(k),
                                                              zeta_cb_neg(k).approx(), dirichlet_partial_sum(k, 60),
                                                              o.tolerance))
                                        return f;
                                return std::nullopt;
                            }));
    out.push_back(run_check(
        s, {{"check", "central binomial series vs arcsin closed form"}, {"terms", "80"}, {"tolerance", tol}},
        [&]() -> Failure {
            for (int k = -1; k <= 5; ++k)
                for (double x : {0.1, 0.25, 0.3, 0.4})
                    if (auto f = close_enough("closed form", "k = " + std::to_string(k) + ", x = " + fmt(x),
                                              series_partial_sum(k, x, 80), closed_form_rhs(k, x), o.tolerance))
                        return f;
            return std::nullopt;
        }));
    return out;
}

std::vector<CheckResult> suite_numeric_egf(const SuiteOptions& o) {
    constexpr std::string_view s = "numeric_egf";
    const std::string tol = fmt(o.tolerance);
    std::vector<CheckResult> out;
    out.push_back(run_check(s, {{"check", "P closed form"}, {"terms", "25"}, {"tolerance", tol}}, [&]() -> Failure {
        for (auto [x, t] : {std::pair{0.2, 0.0}, {0.2, 0.1}, {0.04, 0.3}})
            if (auto f = close_enough("P(x,t)", "x = " + fmt(x) + ", t = " + fmt(t), p_egf_closed(x, t),
                                      p_egf_truncated(x, t, 25), o.tolerance))
                return f;
        return std::nullopt;
    }));
    out.push_back(run_check(s, {{"check", "Q closed form"}, {"terms", "25"}, {"tolerance", tol}}, [&]() -> Failure {
        for (auto [x, t] : {std::pair{0.2, 0.0}, {0.2, 0.1}, {0.5, 0.05}})
            if (auto f = close_enough("Q(x,t)", "x = " + fmt(x) + ", t = " + fmt(t), q_egf_closed(x, t),
                                      q_egf_truncated(x, t, 25), o.tolerance))
                return f;
        return std::nullopt;
    }));
    // t = 1.0 sits at 0.72 of the radius ln 4; 25 terms leave a 3e-4 tail there, 80 terms do not.
    out.push_back(run_check(s, {{"check", "a-EGF closed form"}, {"points", "t=0:25,0.2:25,1.0:80"}, {"tolerance", tol}},
                            [&]() -> Failure {
                                for (auto [t, terms] : {std::pair{0.0, 25}, {0.2, 25}, {1.0, 80}})
                                    if (auto f = close_enough("a-EGF", "t = " + fmt(t) + ", terms = " + std::to_string(terms),
                                                              a_egf_closed(t), a_egf_truncated(t, terms), o.tolerance))
                                        return f;
                                return std::nullopt;
                            }));
    return out;
}

// ---------------------------------------------------------------- registry

using SuiteFn = std::vector<CheckResult> (*)(const SuiteOptions&);

struct SuiteEntry {
    std::string_view name;
    SuiteFn run;
    int default_max_n;
};

constexpr SuiteEntry kSuites[] = {
    {"stephan", suite_stephan, 25},
    {"qF", suite_qf, 20},
    {"pF", suite_pf, 15},
    {"tableQ", suite_table_q, 5},
    {"odeQ", suite_ode_q, 12},
    {"odeA", suite_ode_a, 12},
    {"altsum", suite_altsum, 25},
    {"routes", suite_routes, 10},
    {"recursion", suite_recursion, 25},
    {"explicit", suite_explicit, 20},
    {"ogf", suite_ogf, 25},
    {"keyeq", suite_keyeq, 25},
    {"lemma", suite_lemma, 6},
    {"atm", suite_atm, 7},
    {"sEulerian", suite_s_eulerian, 6},
    {"special_values", suite_special_values, 15},
    {"numeric_zeta", suite_numeric_zeta, 6},
    {"numeric_egf", suite_numeric_egf, 25},
};

const SuiteEntry* find_suite(std::string_view name) {
    for (const auto& e : kSuites)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kSuites) v.emplace_back(e.name);
        v.emplace_back("all");
        return v;
    }();
    return names;
}

bool is_suite_name(std::string_view name) { return name == "all" || find_suite(name) != nullptr; }

int default_max_n(std::string_view name) {
    if (name == "all") return 15;
    if (const auto* e = find_suite(name)) return e->default_max_n;
    throw UnknownSuiteError(name);
}

std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& options) {
    if (options.max_n < 1) throw std::invalid_argument("max_n must be positive");
    if (name == "all") {
        std::vector<CheckResult> all;
        for (const auto& e : kSuites) {
            auto part = e.run(options);
            all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        std::stable_sort(all.begin(), all.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.suite < b.suite; });
        return all;
    }
    const auto* e = find_suite(name);
    if (!e) throw UnknownSuiteError(name);
    return e->run(options);
}

bool all_passed(std::span<const CheckResult> results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string to_json_line(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["params"] = r.params;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

CheckResult check_result_from_json(std::string_view line) {
    const auto j = nlohmann::json::parse(line);
    CheckResult r;
    r.suite = j.at("suite").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.passed = j.at("passed").get<bool>();
    r.detail = j.at("detail").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    if (r.elapsed_ms < 0) throw std::invalid_argument("elapsed_ms must be non-negative");
    return r;
}

std::string serialize_report(std::span<const CheckResult> results) {
    std::string out;
    for (const auto& r : results) {
        out += to_json_line(r);
        out += '\n';
    }
    return out;
}

std::vector<CheckResult> parse_report(std::string_view text) {
    std::vector<CheckResult> out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        if (!line.empty()) out.push_back(check_result_from_json(line));
        start = end + 1;
    }
    return out;
}

}  // namespace cbs
