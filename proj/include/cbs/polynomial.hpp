#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cbs/rational.hpp"

namespace cbs {

/// Dense univariate polynomial over Rat. coeffs()[i] is the coefficient of x^i;
/// trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Poly {
   public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs);
    explicit Poly(std::vector<Rat> coeffs);

    static Poly constant(const Rat& c) { return Poly({c}); }
    static Poly monomial(const Rat& c, std::size_t degree);
    /// The polynomial x.
    static Poly x() { return monomial(Rat(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    /// Zero beyond the degree.
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative() const;
    Poly pow(unsigned exponent) const;
    Rat eval(const Rat& at) const;
    double eval(double at) const;

    /// Human-readable form such as "4x^2 + 10x + 1".
    std::string to_string(char var = 'x') const;

   private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Polynomial in x whose coefficients are polynomials in y, i.e. entry (i, j)
/// is the coefficient of x^i y^j.
class BiPoly {
   public:
    BiPoly() = default;
    /// rows[i] is the coefficient of x^i as a polynomial in y.
    explicit BiPoly(std::vector<Poly> rows);

    static BiPoly constant(const Rat& c) { return BiPoly({Poly::constant(c)}); }
    static BiPoly x() { return BiPoly({Poly(), Poly::constant(Rat(1))}); }
    static BiPoly y() { return BiPoly({Poly::x()}); }

    bool is_zero() const { return rows_.empty(); }
    int x_degree() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<Poly>& rows() const { return rows_; }
    Rat coeff(std::size_t i, std::size_t j) const { return i < rows_.size() ? rows_[i].coeff(j) : Rat(); }

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rat& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
    friend BiPoly operator*(const Rat& c, BiPoly a) { return a *= c; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly partial_x() const;
    /// y := value, leaving a polynomial in x.
    Poly substitute_y(const Rat& value) const;
    /// x := value, leaving a polynomial in y.
    Poly substitute_x(const Rat& value) const;
    Rat eval(const Rat& x, const Rat& y) const;

    std::string to_string() const;

   private:
    void trim();
    std::vector<Poly> rows_;
};

}  // namespace cbs
