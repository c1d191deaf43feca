#pragma once

#include <stdexcept>
#include <string>

namespace takagi {

/// Malformed textual input (rational or expansion literal).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Well-formed input outside an operation's domain, e.g. a dyadic point
/// passed to an operation that needs a non-dyadic one.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace takagi
