#pragma once

#include <stdexcept>
#include <string>

namespace hexafield {

/// Invalid input: malformed literals, non-group data, violated preconditions.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured enumeration cap would be exceeded.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

inline void require_cap(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap) {
    throw CapacityError(std::string(what) + " " + std::to_string(value) +
                        " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace hexafield
