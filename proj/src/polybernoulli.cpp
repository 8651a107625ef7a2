#include "cbs/polybernoulli.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbs/combinatorics.hpp"
#include "cbs/errors.hpp"

namespace cbs {

Rat poly_bernoulli_egf(int n, int k) {
    if (n < 0) throw std::domain_error("poly_bernoulli_egf: requires n >= 0");
    const auto order = static_cast<std::size_t>(n);
    // u = 1 - e^{-t} has zero constant term, so u^{m-1} vanishes to order n once m > n + 1.
    const Series u = Series::one(order) - Series::exp_linear(Rat(-1), order);
    Series acc(order);
    Series u_power = Series::one(order);
    for (int m = 1; m <= n + 1; ++m) {
        acc += u_power * Rat(m).pow(-static_cast<long>(k));
        u_power *= u;
    }
    return acc[order] * Rat(factorial(n));
}

Rat poly_bernoulli_stirling(int n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("poly_bernoulli_stirling: requires n, k >= 0");
    BigInt sum = 0;
    for (int j = 0; j <= std::min(n, k); ++j) {
        const BigInt f = factorial(j);
        sum += f * f * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1);
    }
    return Rat(sum);
}

Rat PolyBernoulliTable::get(int n, int k) {
    const auto key = std::make_pair(n, k);
    {
        std::shared_lock lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    Rat value = k <= 0 ? poly_bernoulli_stirling(n, -k) : poly_bernoulli_egf(n, k);
    std::unique_lock lock(mutex_);
    return entries_.try_emplace(key, std::move(value)).first->second;
}

std::size_t PolyBernoulliTable::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

PolyBernoulliTable& shared_poly_bernoulli_table() {
    static PolyBernoulliTable table;
    return table;
}

Rat b_sum(int n) {
    if (n < 0) throw std::domain_error("b_sum: requires n >= 0");
    auto& table = shared_poly_bernoulli_table();
    Rat sum;
    for (int k = 0; k <= n; ++k) sum += table.get(n - k, -k);
    return sum;
}

Rat alternating_sum(int n) {
    if (n < 1) throw std::domain_error("alternating_sum: requires n >= 1");
    auto& table = shared_poly_bernoulli_table();
    Rat sum;
    for (int k = 0; k <= n; ++k) {
        const Rat term = table.get(n - k, -k);
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

Rat antidiagonal_recursion_step(std::span<const Rat> prefix) {
    if (prefix.empty()) throw std::invalid_argument("recursion step needs c_0");
    const long n = static_cast<long>(prefix.size()) - 1;
    Rat rhs = Rat(2) * prefix.back() + Rat(3);
    for (long k = 0; k <= n; ++k) rhs += Rat(binomial(n + 1, k)) * prefix[static_cast<std::size_t>(k)];
    return rhs / Rat(3);
}

Rat b_rec(int n) {
    if (n < 0) throw std::domain_error("b_rec: requires n >= 0");
    std::vector<Rat> b{Rat(1)};
    while (static_cast<int>(b.size()) <= n) b.push_back(antidiagonal_recursion_step(b));
    return b[static_cast<std::size_t>(n)];
}

Rat b_explicit(int n) {
    if (n < 0) throw std::domain_error("b_explicit: requires n >= 0");
    Rat outer;
    Rat inner;  // sum_{i=0}^{j-1} 3^i / ((2i+1) C(2i, i))
    for (int j = 1; j <= n + 1; ++j) {
        const int i = j - 1;
        inner += Rat(3).pow(i) / Rat(BigInt((2 * i + 1) * binomial(2 * i, i)));
        Rat term = Rat(BigInt(factorial(j) * stirling2(n + 1, j) * binomial(2 * j, j))) / Rat(3).pow(j - 1) * inner;
        if (j % 2 != 0) term = -term;
        outer += term;
    }
    Rat result = outer / Rat(2);
    return (n + 1) % 2 == 0 ? result : -result;
}

Series bn_ogf_series(std::size_t order) {
    Series sum(order);
    const Series one = Series::one(order);
    Series denom = one;  // prod_{i=1}^{j+1} (1 - i x)^2
    Rat fact(1);
    for (std::size_t j = 0; 2 * j <= order; ++j) {
        if (j > 0) fact *= Rat(static_cast<long>(j));
        const Series linear = one - Series::variable(order) * Rat(static_cast<long>(j + 1));
        denom *= linear * linear;
        sum += (denom.reciprocal() * (fact * fact)).shift(2 * j);
    }
    return sum;
}

Rat f_j(const Rat& x, const Rat& y, int j) {
    if (j < -1) throw std::domain_error("f_j: requires j >= -1");
    if (j == -1) return Rat();
    const Rat px = pochhammer(x, j);
    const Rat py = pochhammer(y, j);
    if (px.is_zero() || py.is_zero())
        throw PoleError("f_j pole at x = " + x.to_string() + ", y = " + y.to_string() + ", j = " + std::to_string(j));
    const Rat f = Rat(factorial(j));
    return f * f / (px * py);
}

Rat lemma_3f2_residual(const Rat& x, const Rat& y, int j) {
    if (j < 0) throw std::domain_error("lemma_3f2_residual: requires j >= 0");
    const Rat one(1), two(2);
    const Rat lhs = (x - one) * (x - two) * (f_j(x - two, y, j) - f_j(x - two, y, j - 1)) +
                    (x - one) * (Rat(2) * x - Rat(5)) * f_j(x - one, y, j - 1) -
                    (x - one) * (x - y - one) * f_j(x - one, y, j) -
                    (x - two) * (x - two) * f_j(x, y, j - 1);
    const Rat rhs = j == 0 ? (x - one) * (y - one) : Rat();
    return lhs - rhs;
}

namespace {

// sum_j (j!)^2 x^{2j} / prod_{i=first}^{first+j-1} (1 - i x)^2
Series shifted_f_sum(std::size_t order, long first) {
    const Series one = Series::one(order);
    Series sum(order);
    Series denom = one;
    Rat fact(1);
    for (std::size_t j = 0; 2 * j <= order; ++j) {
        if (j > 0) {
            fact *= Rat(static_cast<long>(j));
            const Series linear = one - Series::variable(order) * Rat(first + static_cast<long>(j) - 1);
            denom *= linear * linear;
        }
        sum += (denom.reciprocal() * (fact * fact)).shift(2 * j);
    }
    return sum;
}

}  // namespace

std::pair<Series, Series> key_equality_sides(std::size_t order) {
    const Series one = Series::one(order);
    const Series x = Series::variable(order);
    const Series one_minus_x = one - x;
    const Series one_minus_2x = one - x * Rat(2);
    // f_j(2 - 1/x, 2 - 1/x) and f_j(3 - 1/x, 3 - 1/x) as series in x
    const Series f2 = shifted_f_sum(order, 2);
    const Series f3 = shifted_f_sum(order, 3);
    const Series lhs = (one * Rat(4) - x * Rat(2)) * (one_minus_x * one_minus_x).reciprocal() * f2;
    const Series rhs = one_minus_x.reciprocal() * Rat(3) +
                       one_minus_x * (one_minus_2x * one_minus_2x).reciprocal() * f3;
    return {lhs, rhs};
}

bool key_equality_check(std::size_t order) {
    const auto [lhs, rhs] = key_equality_sides(order);
    return lhs == rhs;
}

bool is_ascending_to_max(const Permutation& p) {
    const int m = p.size();
    if (m == 0) return true;
    const int max_pos = p.position(m);
    for (int i = 1; i <= m - 2; ++i) {
        const int a = p.position(i), b = p.position(i + 1);
        if (a < max_pos && b < max_pos && !(a < b)) return false;
        if (a > max_pos && b > max_pos && !(a > b)) return false;
    }
    return true;
}

BigInt ascending_to_max_count(int m, int cap) {
    if (m < 1) throw std::domain_error("ascending_to_max_count: requires m >= 1");
    BigInt count = 0;
    for_each_permutation(m, cap, [&](const Permutation& p) {
        if (is_ascending_to_max(p)) ++count;
    });
    return count;
}

}  // namespace cbs
