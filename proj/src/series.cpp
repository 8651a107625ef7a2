#include "cbs/series.hpp"

#include <stdexcept>
#include <string>

#include "cbs/errors.hpp"

namespace cbs {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::size_t order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

Series Series::one(std::size_t order) {
    Series s(order);
    s.coeffs_[0] = Rat(1);
    return s;
}

Series Series::variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = Rat(1);
    return s;
}

Series Series::from_poly(const Poly& p, std::size_t order) { return Series(order, p.coeffs()); }

Series Series::exp_linear(const Rat& c, std::size_t order) {
    Series s(order);
    Rat term(1);
    for (std::size_t n = 0; n <= order; ++n) {
        s.coeffs_[n] = term;
        term = term * c / Rat(static_cast<long>(n + 1));
    }
    return s;
}

void Series::require_same_order(const Series& o, const char* op) const {
    if (o.order() != order())
        throw OrderMismatch(std::string("series ") + op + " of order " + std::to_string(order()) +
                            " with order " + std::to_string(o.order()));
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) {
    require_same_order(o, "addition");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_same_order(o, "subtraction");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Series& Series::operator*=(const Series& o) {
    require_same_order(o, "product");
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

Series& Series::operator*=(const Rat& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Series Series::reciprocal() const {
    if (coeffs_[0].is_zero()) throw std::domain_error("reciprocal of a series with zero constant term");
    Series r(order());
    const Rat inv0 = Rat(1) / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
        Rat acc;
        for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
        r.coeffs_[n] = -acc * inv0;
    }
    return r;
}

Series Series::derivative() const {
    if (order() == 0) return Series(0);
    Series r(order() - 1);
    for (std::size_t i = 1; i <= order(); ++i) r.coeffs_[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return r;
}

Series Series::compose(const Series& inner) const {
    require_same_order(inner, "composition");
    if (!inner.coeffs_[0].is_zero())
        throw std::domain_error("composition with a series of nonzero constant term");
    Series acc(order());
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= inner;
        acc.coeffs_[0] += coeffs_[i];
    }
    return acc;
}

Series Series::exp() const {
    if (!coeffs_[0].is_zero()) throw std::domain_error("exp of a series with nonzero constant term");
    // E' = S' E  =>  n e_n = sum_{k=1}^{n} k s_k e_{n-k}
    Series e(order());
    e.coeffs_[0] = Rat(1);
    for (std::size_t n = 1; n <= order(); ++n) {
        Rat acc;
        for (std::size_t k = 1; k <= n; ++k)
            acc += Rat(static_cast<long>(k)) * coeffs_[k] * e.coeffs_[n - k];
        e.coeffs_[n] = acc / Rat(static_cast<long>(n));
    }
    return e;
}

Series Series::log() const {
    if (coeffs_[0] != Rat(1)) throw std::domain_error("log of a series whose constant term is not 1");
    // S L' = S'  =>  n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
    Series l(order());
    for (std::size_t n = 1; n <= order(); ++n) {
        Rat acc = Rat(static_cast<long>(n)) * coeffs_[n];
        for (std::size_t k = 1; k < n; ++k) acc -= Rat(static_cast<long>(k)) * l.coeffs_[k] * coeffs_[n - k];
        l.coeffs_[n] = acc / Rat(static_cast<long>(n));
    }
    return l;
}

Series Series::pow(const Rat& exponent) const { return (log() * exponent).exp(); }

Series Series::pow(unsigned exponent) const {
    Series result = one(order());
    Series base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Series Series::shift(std::size_t k) const {
    Series r(order());
    for (std::size_t i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

Series Series::truncate(std::size_t new_order) const {
    if (new_order > order())
        throw OrderMismatch("cannot raise series order from " + std::to_string(order()) + " to " +
                            std::to_string(new_order));
    return Series(new_order, coeffs_);
}

bool Series::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace cbs
