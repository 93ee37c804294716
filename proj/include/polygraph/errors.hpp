// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polygraph {

/// Input that violates a documented format (DIMACS, JSON schemas).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition gate fired (disconnected input, diameter bound).
/// Carries the verdict text when the gate itself decides the instance.
class GateError : public std::runtime_error {
public:
  explicit GateError(const std::string& what, std::string verdict = {})
      : std::runtime_error(what), verdict_(std::move(verdict)) {}
  const std::string& verdict() const { return verdict_; }

private:
  std::string verdict_;
};

/// An explicit enumeration or size budget was exceeded.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polygraph
