#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperfront {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EvalError : public Error {
 public:
  enum class Kind { DivisionByZero, NonFinite };

  EvalError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// e^{±W} left the double range. Carries Re W for the report.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, double re_w) : Error(what), re_w_(re_w) {}

  [[nodiscard]] double re_w() const noexcept { return re_w_; }

 private:
  double re_w_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A module error annotated with the pipeline stage it occurred in.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error("stage '" + stage + "': " + what), stage_(std::move(stage)) {}

  [[nodiscard]] const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace hyperfront
