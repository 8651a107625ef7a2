#pragma once

#include <string>
#include <vector>

#include "cbs/polynomial.hpp"
#include "cbs/rational.hpp"
#include "cbs/series.hpp"

namespace cbs {

/// rational_part + pi_sqrt3_part * pi/sqrt(3), held exactly.
struct ZetaValue {
    Rat rational_part;
    Rat pi_sqrt3_part;

    double approx() const;
    /// e.g. "1/3 + 2/9*pi/sqrt(3) ~ 0.736399858718715"
    std::string to_string() const;
    friend bool operator==(const ZetaValue&, const ZetaValue&) = default;
};

struct PQPair {
    int index = -1;
    Poly p;
    Poly q;
};

/// (p_k, q_k) from the coupled recursion with p_{-1} = 0, q_{-1} = 1. Memoized.
PQPair pq_polys(int k);

/// zeta_CB(-k) = (1/3)(2/3)^k p_k(1/4) + (1/3)(2/3)^{k+1} q_k(1/4) pi/sqrt(3).
ZetaValue zeta_cb_neg(int k);

/// a_n = (2/3)^n p_n(1/4).
Rat a_seq(int n);

/// 2^n sum_k C(n+1, k) F_{n-k}(x, 1/2) F_k(x, 1/2).
Poly p_via_eulerian(int n);
/// 2^{n+1} F_{n+1}(x, 1/2).
Poly q_via_eulerian(int n);

// Floating-point side. All of these throw std::domain_error outside their domain.

/// sum_{n=1}^{terms} (2n)^k (2x)^{2n} / C(2n, n), |x| < 1.
double series_partial_sum(int k, double x, int terms);
/// x/(1-x^2)^{k+3/2} (x sqrt(1-x^2) p_k(x^2) + arcsin(x) q_k(x^2)), |x| < 1, k >= -1.
double closed_form_rhs(int k, double x);
/// sum_{n=1}^{terms} n^k / C(2n, n), the Dirichlet series at s = -k.
double dirichlet_partial_sum(int k, int terms);

/// P(x, t) = sum p_{n-1}(x) t^n/n! in closed form.
double p_egf_closed(double x, double t);
/// Q(x, t) = sum q_{n-1}(x) t^n/n! in closed form.
double q_egf_closed(double x, double t);
/// sum a_n t^{n+1}/(n+1)! in closed form, e^t < 4.
double a_egf_closed(double t);

/// sum_{n=1}^{terms} p_{n-1}(x) t^n/n!
double p_egf_truncated(double x, double t, int terms);
/// sum_{n=0}^{terms} q_{n-1}(x) t^n/n!
double q_egf_truncated(double x, double t, int terms);
/// sum_{n=0}^{terms} a_n t^{n+1}/(n+1)!
double a_egf_truncated(double t, int terms);

/// Coefficients of t^0..t^{order-1} of ((2xt-1) d/dt + 2x(1-x) d/dx + 1) Q_order,
/// where Q_order is Q truncated after t^order. All zero when the recursion is right.
std::vector<Poly> q_ode_residual(int order);
/// ((4-e^t) d/dt - 2) A - 3e^t for A = sum_{n<order} a_n t^{n+1}/(n+1)!, as an order-(order-1) series.
Series a_ode_residual(int order);

}  // namespace cbs
