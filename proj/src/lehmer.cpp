#include "cbs/lehmer.hpp"

#include <cmath>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "cbs/combinatorics.hpp"
#include "cbs/eulerian.hpp"

namespace cbs {

double ZetaValue::approx() const {
    return rational_part.to_double() + pi_sqrt3_part.to_double() * (std::numbers::pi / std::sqrt(3.0));
}

std::string ZetaValue::to_string() const {
    std::ostringstream os;
    os << rational_part << " + " << pi_sqrt3_part << "*pi/sqrt(3) ~ " << std::setprecision(15) << approx();
    return os.str();
}

namespace {

// Row i holds (p_{i-1}, q_{i-1}).
class PQTable {
   public:
    PQPair get(int k) {
        const auto row = static_cast<std::size_t>(k + 1);
        {
            std::shared_lock lock(mutex_);
            if (row < rows_.size()) return rows_[row];
        }
        std::unique_lock lock(mutex_);
        if (rows_.empty()) rows_.push_back({-1, Poly(), Poly::constant(Rat(1))});
        const Poly x = Poly::x();
        const Poly two_x_one_minus_x = Poly({Rat(0), Rat(2), Rat(-2)});
        while (rows_.size() <= row) {
            const PQPair& cur = rows_.back();
            const long j = cur.index;
            PQPair next;
            next.index = cur.index + 1;
            next.p = Poly({Rat(2), Rat(2 * j)}) * cur.p + two_x_one_minus_x * cur.p.derivative() + cur.q;
            next.q = Poly({Rat(1), Rat(2 * (j + 1))}) * cur.q + two_x_one_minus_x * cur.q.derivative();
            rows_.push_back(std::move(next));
        }
        return rows_[row];
    }

   private:
    std::shared_mutex mutex_;
    std::vector<PQPair> rows_;
};

PQTable& pq_table() {
    static PQTable table;
    return table;
}

const Rat kQuarter(1, 4);
const Rat kTwoThirds(2, 3);
const Rat kHalf(1, 2);

void require_open_unit(double x, const char* fn) {
    if (!(std::abs(x) < 1.0)) throw std::domain_error(std::string(fn) + ": requires |x| < 1");
}

}  // namespace

PQPair pq_polys(int k) {
    if (k < -1) throw std::domain_error("pq_polys: requires k >= -1");
    return pq_table().get(k);
}

ZetaValue zeta_cb_neg(int k) {
    if (k < 0) throw std::domain_error("zeta_cb_neg: requires k >= 0");
    const PQPair pq = pq_polys(k);
    const Rat scale = Rat(1, 3) * kTwoThirds.pow(k);
    return {scale * pq.p.eval(kQuarter), scale * kTwoThirds * pq.q.eval(kQuarter)};
}

Rat a_seq(int n) {
    if (n < 0) throw std::domain_error("a_seq: requires n >= 0");
    return kTwoThirds.pow(n) * pq_polys(n).p.eval(kQuarter);
}

Poly p_via_eulerian(int n) {
    if (n < 0) throw std::domain_error("p_via_eulerian: requires n >= 0");
    std::vector<Poly> f;
    f.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) f.push_back(f_at_y(k, kHalf));
    Poly sum;
    for (int k = 0; k <= n; ++k)
        sum += Rat(binomial(n + 1, k)) * (f[static_cast<std::size_t>(n - k)] * f[static_cast<std::size_t>(k)]);
    return Rat(2).pow(n) * sum;
}

Poly q_via_eulerian(int n) {
    if (n < -1) throw std::domain_error("q_via_eulerian: requires n >= -1");
    return Rat(2).pow(n + 1) * f_at_y(n + 1, kHalf);
}

double series_partial_sum(int k, double x, int terms) {
    require_open_unit(x, "series_partial_sum");
    if (terms < 1) throw std::domain_error("series_partial_sum: requires terms >= 1");
    // r_n = (2x)^{2n} / C(2n, n); r_1 = 2x^2, r_{n+1} = r_n * 2x^2 (n+1) / (2n+1)
    double r = 2.0 * x * x;
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        sum += std::pow(2.0 * n, k) * r;
        r *= 2.0 * x * x * (n + 1) / (2.0 * n + 1);
    }
    return sum;
}

double closed_form_rhs(int k, double x) {
    require_open_unit(x, "closed_form_rhs");
    if (k < -1) throw std::domain_error("closed_form_rhs: requires k >= -1");
    const PQPair pq = pq_polys(k);
    const double one_minus = 1.0 - x * x;
    const double x2 = x * x;
    return x / std::pow(one_minus, k + 1.5) * (x * std::sqrt(one_minus) * pq.p.eval(x2) + std::asin(x) * pq.q.eval(x2));
}

double dirichlet_partial_sum(int k, int terms) {
    if (terms < 1) throw std::domain_error("dirichlet_partial_sum: requires terms >= 1");
    // u_n = 1 / C(2n, n); u_1 = 1/2, u_{n+1} = u_n (n+1) / (2(2n+1))
    double u = 0.5;
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        sum += std::pow(static_cast<double>(n), k) * u;
        u *= (n + 1.0) / (2.0 * (2.0 * n + 1.0));
    }
    return sum;
}

double p_egf_closed(double x, double t) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("p_egf_closed: requires 0 < x < 1");
    const double growth = std::exp((1.0 - x) * t);
    const double arg = std::sqrt(x) * growth;
    const double radicand = 1.0 - x * growth * growth;
    if (!(arg <= 1.0) || !(radicand > 0.0))
        throw std::domain_error("p_egf_closed: requires x e^{2(1-x)t} < 1");
    return growth * (std::asin(arg) - std::asin(std::sqrt(x))) / (std::sqrt(x) * std::sqrt(radicand));
}

double q_egf_closed(double x, double t) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("q_egf_closed: requires 0 < x < 1");
    const double radicand = (1.0 - x) / (std::exp(2.0 * t * (x - 1.0)) - x);
    if (!(radicand > 0.0)) throw std::domain_error("q_egf_closed: requires e^{2t(x-1)} > x");
    return std::sqrt(radicand);
}

double a_egf_closed(double t) {
    const double et = std::exp(t);
    if (!(et < 4.0)) throw std::domain_error("a_egf_closed: requires e^t < 4");
    const double half = std::exp(t / 2.0);
    return 6.0 * half * (std::asin(half / 2.0) - std::asin(0.5)) / std::sqrt(4.0 - et);
}

double p_egf_truncated(double x, double t, int terms) {
    double sum = 0.0;
    double weight = 1.0;  // t^n / n!
    for (int n = 1; n <= terms; ++n) {
        weight *= t / n;
        sum += pq_polys(n - 1).p.eval(x) * weight;
    }
    return sum;
}

double q_egf_truncated(double x, double t, int terms) {
    double sum = 0.0;
    double weight = 1.0;
    for (int n = 0; n <= terms; ++n) {
        if (n > 0) weight *= t / n;
        sum += pq_polys(n - 1).q.eval(x) * weight;
    }
    return sum;
}

double a_egf_truncated(double t, int terms) {
    double sum = 0.0;
    double weight = 1.0;  // t^{n+1} / (n+1)!
    for (int n = 0; n <= terms; ++n) {
        weight *= t / (n + 1);
        sum += a_seq(n).to_double() * weight;
    }
    return sum;
}

std::vector<Poly> q_ode_residual(int order) {
    if (order < 1) throw std::domain_error("q_ode_residual: requires order >= 1");
    std::vector<Poly> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) c.push_back(pq_polys(n - 1).q * Rat(1, factorial(n)));
    const Poly x = Poly::x();
    const Poly two_x_one_minus_x = Poly({Rat(0), Rat(2), Rat(-2)});
    std::vector<Poly> residual;
    residual.reserve(static_cast<std::size_t>(order));
    for (int n = 0; n < order; ++n) {
        const Poly& cn = c[static_cast<std::size_t>(n)];
        residual.push_back(Rat(2 * n) * (x * cn) - Rat(n + 1) * c[static_cast<std::size_t>(n + 1)] +
                           two_x_one_minus_x * cn.derivative() + cn);
    }
    return residual;
}

Series a_ode_residual(int order) {
    if (order < 1) throw std::domain_error("a_ode_residual: requires order >= 1");
    const auto N = static_cast<std::size_t>(order);
    std::vector<Rat> coeffs(N + 1);
    for (int n = 0; n < order; ++n) coeffs[static_cast<std::size_t>(n) + 1] = a_seq(n) / Rat(factorial(n + 1));
    const Series a(N, std::move(coeffs));
    const Series et = Series::exp_linear(Rat(1), N - 1);
    const Series four_minus_et = Series::one(N - 1) * Rat(4) - et;
    return four_minus_et * a.derivative() - a.truncate(N - 1) * Rat(2) - et * Rat(3);
}

}  // namespace cbs
