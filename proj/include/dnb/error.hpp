#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace dnb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text: words, rationals, session files, Cayley tables.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Operands drawn from different bases or surfaces, or ill-typed groupoid
// composition.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Either a value or a human-readable diagnostic. Used where failure is a
// regular outcome rather than a programming error.
template <typename T>
class Checked {
 public:
  Checked(T value) : state_(std::move(value)) {}  // NOLINT(runtime/explicit)

  static Checked failure(std::string diagnostic) {
    return Checked(Failure{std::move(diagnostic)});
  }

  bool ok() const noexcept { return state_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    if (!ok()) {
      throw PreconditionError("no value: " + diagnostic());
    }
    return std::get<0>(state_);
  }

  T&& value() && {
    if (!ok()) {
      throw PreconditionError("no value: " + diagnostic());
    }
    return std::get<0>(std::move(state_));
  }

  const std::string& diagnostic() const {
    static const std::string empty;
    return ok() ? empty : std::get<1>(state_).message;
  }

 private:
  struct Failure {
    std::string message;
  };
  explicit Checked(Failure f) : state_(std::move(f)) {}

  std::variant<T, Failure> state_;
};

}  // namespace dnb
