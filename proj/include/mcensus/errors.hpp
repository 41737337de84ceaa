// Copyright 2026 The matrix-census Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcensus {

/// Broad error classes. The CLI maps these onto process exit codes.
enum class ErrorKind { domain, usage, budget, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Stable machine-readable reason, e.g. "singular_matrix".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class DomainError : public Error {
 public:
  DomainError(std::string code, const std::string& message)
      : Error(ErrorKind::domain, std::move(code), message) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorKind::usage, "parse_error",
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message)
      : Error(ErrorKind::budget, "budget_exceeded", message) {}
};

/// Raised when a self-check fails. Never expected in a correct build.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::internal, "internal", message) {}
};

}  // namespace mcensus
