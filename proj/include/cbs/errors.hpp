#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cbs {

/// An enumeration guard was exceeded. bound() is the configured limit.
class SizeError : public std::length_error {
   public:
    SizeError(const std::string& what, std::uint64_t bound) : std::length_error(what), bound_(bound) {}
    std::uint64_t bound() const noexcept { return bound_; }

   private:
    std::uint64_t bound_;
};

/// A rational function was evaluated at one of its poles.
class PoleError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Two truncated series of different order were combined.
class OrderMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cbs
