#include "cbs/polynomial.hpp"

#include <sstream>

namespace cbs {

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::pow(unsigned exponent) const {
    Poly result = constant(Rat(1));
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Rat Poly::eval(const Rat& at) const {
    Rat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

double Poly::eval(double at) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->to_double();
    return acc;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rat mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != Rat(1)) os << mag;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

BiPoly::BiPoly(std::vector<Poly> rows) : rows_(std::move(rows)) { trim(); }

void BiPoly::trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
    for (auto& r : rows_) r *= c;
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Poly> out(a.rows_.size() + b.rows_.size() - 1);
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
        for (std::size_t j = 0; j < b.rows_.size(); ++j) out[i + j] += a.rows_[i] * b.rows_[j];
    return BiPoly(std::move(out));
}

BiPoly BiPoly::partial_x() const {
    if (rows_.size() <= 1) return {};
    std::vector<Poly> out(rows_.size() - 1);
    for (std::size_t i = 1; i < rows_.size(); ++i) out[i - 1] = rows_[i] * Rat(static_cast<long>(i));
    return BiPoly(std::move(out));
}

Poly BiPoly::substitute_y(const Rat& value) const {
    std::vector<Rat> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.eval(value));
    return Poly(std::move(out));
}

Poly BiPoly::substitute_x(const Rat& value) const {
    Poly acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const { return substitute_y(y).eval(x); }

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = x_degree(); i >= 0; --i) {
        const Poly& row = rows_[static_cast<std::size_t>(i)];
        for (int j = row.degree(); j >= 0; --j) {
            const Rat& c = row.coeffs()[static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            Rat mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) os << '-';
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            first = false;
            const bool bare = i == 0 && j == 0;
            if (bare || mag != Rat(1)) os << mag;
            if (i >= 1) os << 'x';
            if (i >= 2) os << '^' << i;
            if (j >= 1) os << 'y';
            if (j >= 2) os << '^' << j;
        }
    }
    return os.str();
}

}  // namespace cbs
