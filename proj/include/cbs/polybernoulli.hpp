#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <utility>

#include "cbs/eulerian.hpp"
#include "cbs/rational.hpp"
#include "cbs/series.hpp"

namespace cbs {

/// n! [t^n] of Li_k(1-e^{-t})/(1-e^{-t}) = sum_{m>=1} (1-e^{-t})^{m-1}/m^k. Any integer k.
Rat poly_bernoulli_egf(int n, int k);

/// B_n^{(-k)} = sum_j (j!)^2 S(n+1, j+1) S(k+1, j+1), for n, k >= 0.
Rat poly_bernoulli_stirling(int n, int k);

/// Memoized B_n^{(k)}: the Stirling form for k <= 0, the EGF for k > 0.
class PolyBernoulliTable {
   public:
    Rat get(int n, int k);
    std::size_t size() const;

   private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<int, int>, Rat> entries_;
};

PolyBernoulliTable& shared_poly_bernoulli_table();

/// b_n = sum_{k=0}^n B_{n-k}^{(-k)}.
Rat b_sum(int n);
/// b_n from 3 b_{n+1} = 2 b_n + sum_{k<=n} C(n+1, k) b_k + 3, b_0 = 1.
Rat b_rec(int n);
/// Closed form with Stirling numbers and central binomial coefficients.
Rat b_explicit(int n);
/// sum_{k=0}^n (-1)^k B_{n-k}^{(-k)}; zero for every n >= 1.
Rat alternating_sum(int n);

/// Right-hand side of 3 c_{n+1} = 2 c_n + sum_{k<=n} C(n+1, k) c_k + 3, divided by 3,
/// given c_0..c_n. Shared by the b and a recursions.
Rat antidiagonal_recursion_step(std::span<const Rat> prefix);

/// sum_j (j!)^2 x^{2j} / prod_{i=1}^{j+1} (1-ix)^2 truncated after x^order.
Series bn_ogf_series(std::size_t order);

/// (j!)^2 / ((x)_j (y)_j); j = -1 gives 0. Throws PoleError when a Pochhammer factor vanishes.
Rat f_j(const Rat& x, const Rat& y, int j);

/// Left side minus right side of the four-term contiguous relation among f_j values.
Rat lemma_3f2_residual(const Rat& x, const Rat& y, int j);

/// Both sides of the key generating-function equality, assembled as order-`order` series in x.
std::pair<Series, Series> key_equality_sides(std::size_t order);
bool key_equality_check(std::size_t order);

/// Is pi ascending-to-max: arrows i -> i+1 point right left of n and left right of n.
bool is_ascending_to_max(const Permutation& p);
/// Number of ascending-to-max permutations of S_m. SizeError when m > cap.
BigInt ascending_to_max_count(int m, int cap = kDefaultPermutationCap);

}  // namespace cbs
