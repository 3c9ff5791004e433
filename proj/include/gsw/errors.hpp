// errors.hpp -- exception taxonomy shared across the workbench.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gsw {

// Malformed or out-of-contract input: bad permutation data, shape or degree
// mismatch, unsupported parameter ranges.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exhaustive search would exceed the configured candidate budget.
struct budget_error : input_error {
  explicit budget_error(const std::string& msg) : input_error(msg) {}
};

// A candidate solution failed the relator-exactness requirement.
struct non_solution_error : input_error {
  non_solution_error(const std::string& msg, int index, std::string relator)
      : input_error(msg), item_index(index), relator_text(std::move(relator)) {}
  int item_index;
  std::string relator_text;
};

// A quantitative inequality that must hold on valid input failed. Seeing this
// on uncorrupted data means a genuine bug, not a tolerance issue.
struct claim_violation : std::runtime_error {
  claim_violation(std::string inequality, const std::string& detail)
      : std::runtime_error(inequality + ": " + detail),
        inequality_name(std::move(inequality)) {}
  std::string inequality_name;
};

}  // namespace gsw
