#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbi {

/// Malformed or invariant-violating input data (bad syntax, order < 2,
/// misaligned bundle data, ...). The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in a textual signature, carrying the byte offset where
/// parsing stopped and the set of tokens that would have been accepted.
class ParseError : public InvalidInput {
 public:
  ParseError(std::string message, std::size_t offset,
             std::vector<std::string> expected = {});

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Well-formed input outside an operation's mathematical domain
/// (non-hyperbolic signature, relation not satisfied by an action, ...).
/// The CLI maps this to exit code 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace orbi
