#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cbs {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
   public:
    Rat() = default;
    template <std::integral I>
    Rat(I v) : value_(static_cast<long>(v)) {}
    Rat(const BigInt& v) : value_(v) {}
    /// Throws std::domain_error when den == 0.
    Rat(const BigInt& num, const BigInt& den);

    /// Accepts "p", "-p", "p/q".
    static Rat parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Integer power; negative exponents invert (zero base rejected).
    Rat pow(long exponent) const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    const mpq_class& gmp() const { return value_; }

   private:
    explicit Rat(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace cbs
