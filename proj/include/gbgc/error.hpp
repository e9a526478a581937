// Copyright 2026 The gbgc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbgc {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a documented precondition (index out of range,
/// inconsistent mapping, bad ratio, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation contract, e.g. asked for the quality of an
/// empty ball.
class ContractError : public Error {
 public:
  using Error::Error;
};

class NotSplittableError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Zero denominators in Rayleigh quotients.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the file and 1-based line when known.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

/// Structurally invalid dataset (cross-graph edge, missing graph id, ...).
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gbgc
