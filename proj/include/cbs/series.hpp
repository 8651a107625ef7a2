#pragma once

#include <cstddef>
#include <vector>

#include "cbs/polynomial.hpp"
#include "cbs/rational.hpp"

namespace cbs {

/// Truncated formal power series sum_{i<=N} c_i t^i over Rat, exact modulo t^{N+1}.
///
/// The order N is fixed at construction. Binary operations require equal
/// orders and throw OrderMismatch otherwise; use truncate() to lower an order
/// explicitly.
class Series {
   public:
    /// The zero series of the given order.
    explicit Series(std::size_t order);
    /// Coefficients beyond the order are dropped, missing ones are zero.
    Series(std::size_t order, std::vector<Rat> coeffs);

    static Series one(std::size_t order);
    /// The series t.
    static Series variable(std::size_t order);
    static Series from_poly(const Poly& p, std::size_t order);
    /// exp(c t) = sum c^n t^n / n!
    static Series exp_linear(const Rat& c, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& operator[](std::size_t i) const { return coeffs_.at(i); }

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const Rat& c);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }
    friend Series operator*(Series a, const Rat& c) { return a *= c; }
    friend Series operator*(const Rat& c, Series a) { return a *= c; }
    friend bool operator==(const Series&, const Series&) = default;

    /// Requires a nonzero constant term.
    Series reciprocal() const;
    /// d/dt; the result has order N-1 (order 0 maps to the zero series of order 0).
    Series derivative() const;
    /// this(inner(t)); inner must have zero constant term and the same order.
    Series compose(const Series& inner) const;
    /// Requires a zero constant term.
    Series exp() const;
    /// Requires constant term 1.
    Series log() const;
    /// exp(exponent * log(this)); requires constant term 1.
    Series pow(const Rat& exponent) const;
    Series pow(unsigned exponent) const;
    /// Multiplies by t^k, dropping what falls beyond the order.
    Series shift(std::size_t k) const;
    /// Keeps the coefficients up to new_order (which must not exceed order()).
    Series truncate(std::size_t new_order) const;

    bool is_zero() const;

   private:
    void require_same_order(const Series& o, const char* op) const;
    std::vector<Rat> coeffs_;
};

}  // namespace cbs
