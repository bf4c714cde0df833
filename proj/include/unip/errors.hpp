#pragma once

#include <stdexcept>
#include <string>

namespace unip {

// Malformed textual input (labels, factored polynomials, flags).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input that the mathematics rejects: wrong rank, no chain, ...
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace unip
