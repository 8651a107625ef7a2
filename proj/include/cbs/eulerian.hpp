#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cbs/polynomial.hpp"
#include "cbs/rational.hpp"

namespace cbs {

/// Largest n for which brute-force enumeration of S_n is allowed by default.
inline constexpr int kDefaultPermutationCap = 9;
/// Largest number of s-inversion sequences enumerated by default.
inline constexpr std::uint64_t kDefaultInversionStateCap = 1'000'000;

/// A permutation of {1..n} in one-line notation.
class Permutation {
   public:
    /// Throws std::invalid_argument unless one_line is a permutation of 1..n.
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(one_line_.size()); }
    std::span<const int> one_line() const { return one_line_; }
    /// pi_i for 1-based i.
    int at(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
    /// pi^{-1}(v), 1-based.
    int position(int v) const { return inverse_[static_cast<std::size_t>(v - 1)]; }
    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    std::vector<std::vector<int>> cycles() const;

   private:
    struct Trusted {};
    Permutation(std::vector<int> one_line, Trusted);
    friend void for_each_permutation(int, int, const std::function<void(const Permutation&)>&);

    std::vector<int> one_line_;
    std::vector<int> inverse_;
};

/// Visits all of S_n in lexicographic order. Throws SizeError when n > cap.
void for_each_permutation(int n, int cap, const std::function<void(const Permutation&)>& visit);

/// Number of excedances |{i : pi_i > i}|.
int exc(const Permutation& p);
/// Number of cycles in the disjoint cycle decomposition.
int cyc(const Permutation& p);

/// A(n, k): permutations of [n] with k excedances; 0 for k >= n.
BigInt eulerian_number(int n, int k);

/// F_n(x, y) from F_{m+1} = (x(1-x) d/dx + m x + y) F_m, F_0 = 1.
BiPoly f_bipoly(int n);
/// sum over S_n of x^exc y^cyc by enumeration; SizeError when n > cap.
BiPoly f_bipoly_brute(int n, int cap = kDefaultPermutationCap);
/// F_n(x, y0).
Poly f_at_y(int n, const Rat& y0);

/// (e_1..e_n) with 0 <= e_i < s_i.
class InversionSequence {
   public:
    /// Throws std::invalid_argument on length mismatch, non-positive bounds or out-of-range entries.
    InversionSequence(std::vector<int> entries, std::vector<int> bounds);

    std::span<const int> entries() const { return entries_; }
    std::span<const int> bounds() const { return bounds_; }
    int size() const { return static_cast<int>(entries_.size()); }

   private:
    std::vector<int> entries_;
    std::vector<int> bounds_;
};

/// |{0 <= i < n : e_i/s_i < e_{i+1}/s_{i+1}}| with e_0/s_0 = 0.
int asc(const InversionSequence& e);

/// sum over I_n^(s) of x^asc(e). SizeError when prod(bounds) > state_cap.
Poly s_eulerian(std::span<const int> bounds, std::uint64_t state_cap = kDefaultInversionStateCap);

/// (1, k+1, 2k+1, ..., (n-1)k+1).
std::vector<int> one_over_k_bounds(int n, int k);

/// n! [t^n] ((1-x)/(e^{t(x-1)} - x))^y for n = 0..order, at fixed rational x != 1 and y.
std::vector<Rat> bivariate_egf_coefficients(const Rat& x, const Rat& y, std::size_t order);

}  // namespace cbs
