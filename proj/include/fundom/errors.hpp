#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fundom {

// N must be at least 2.
struct InvalidLevel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotAUnit : std::domain_error {
  using std::domain_error::domain_error;
};

// gcd(a, b, N) > 1: the pair does not define a point of P^1(Z/NZ).
struct NotOnProjLine : std::domain_error {
  using std::domain_error::domain_error;
};

// M(a:b) is only defined on the points at infinity.
struct NotInH : std::domain_error {
  using std::domain_error::domain_error;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct WordParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DuplicateVertex : std::runtime_error {
  DuplicateVertex(const std::string& what, std::size_t first, std::size_t second)
      : std::runtime_error(what), first_index(first), second_index(second) {}
  std::size_t first_index;
  std::size_t second_index;
};

// Raised by verify() with every problem found; problems.front() names the
// first collision or omission.
struct VerificationFailed : std::runtime_error {
  explicit VerificationFailed(std::vector<std::string> issues)
      : std::runtime_error(issues.empty() ? std::string("verification failed")
                                          : "verification failed: " + issues.front()),
        problems(std::move(issues)) {}
  std::vector<std::string> problems;
};

}  // namespace fundom
