#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperbolica {

// Every library error carries a stable machine-readable code string so that
// front-ends can map failures without parsing prose messages.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Bad user-supplied data (malformed jobs, precondition violations).
class InputError : public Error {
 public:
  using Error::Error;
};

// A structural check on a candidate object failed; these map to the CLI's
// "validation failed" exit status.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// ---- core ------------------------------------------------------------

class ZeroDivisorError : public Error {
 public:
  explicit ZeroDivisorError(const std::string& what)
      : Error("zero-divisor", what) {}
};

class ZeroValueError : public Error {
 public:
  explicit ZeroValueError(const std::string& what)
      : Error("zero-value", what) {}
};

class EmptySetError : public Error {
 public:
  explicit EmptySetError(const std::string& what) : Error("empty-set", what) {}
};

class NonFiniteError : public InputError {
 public:
  explicit NonFiniteError(const std::string& what)
      : InputError("non-finite", what) {}
};

// ---- expressions -----------------------------------------------------

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : InputError("syntax-error", what + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifierError : public InputError {
 public:
  UnknownIdentifierError(const std::string& name, std::size_t offset)
      : InputError("unknown-identifier",
                   "unknown identifier '" + name + "' (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DivByZeroError : public Error {
 public:
  explicit DivByZeroError(const std::string& what)
      : Error("div-by-zero", what) {}
};

class NotDifferentiableError : public Error {
 public:
  explicit NotDifferentiableError(const std::string& node_kind)
      : Error("not-differentiable", "node kind '" + node_kind + "' has no symbolic derivative"),
        node_kind_(node_kind) {}

  const std::string& node_kind() const noexcept { return node_kind_; }

 private:
  std::string node_kind_;
};

class NonAffineJumpError : public Error {
 public:
  explicit NonAffineJumpError(const std::string& what)
      : Error("non-affine-jump", what) {}
};

class UnboundVariableError : public Error {
 public:
  explicit UnboundVariableError(const std::string& what)
      : Error("unbound-variable", what) {}
};

class InvalidFunctionError : public InputError {
 public:
  explicit InvalidFunctionError(const std::string& what)
      : InputError("invalid-function", what) {}
};

}  // namespace hyperbolica
