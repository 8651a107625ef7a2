#include "cbs/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cbs {

Rat::Rat(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
        std::string buf(s.front() == '+' ? s.substr(1) : s);
        return BigInt(buf, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rat Rat::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw std::domain_error("zero raised to a negative power");
        return (Rat(1) / *this).pow(-exponent);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rat(num, den);
}

std::string Rat::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace cbs
