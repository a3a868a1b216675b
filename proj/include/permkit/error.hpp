#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permkit {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed values: duplicate entries, length mismatches, empty blocks.
class invalid_input : public error {
 public:
  using error::error;
};

/// Syntax error in a permutation literal or class expression.
class parse_error : public invalid_input {
 public:
  parse_error(const std::string& what, std::size_t position)
      : invalid_input(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A query reached past the length cap of a finite class.
class out_of_range : public error {
 public:
  using error::error;
};

/// A search or enumeration would exceed its configured budget.
class resource_limit : public error {
 public:
  resource_limit(const std::string& budget, const std::string& detail)
      : error("resource limit '" + budget + "' exceeded: " + detail),
        budget_(budget) {}

  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string budget_;
};

/// Caller broke an operation's precondition (e.g. a non-proper subclass).
class precondition_violation : public error {
 public:
  using error::error;
};

/// Argument lies outside the domain an operation is defined on.
class domain_error : public error {
 public:
  using error::error;
};

}  // namespace permkit
