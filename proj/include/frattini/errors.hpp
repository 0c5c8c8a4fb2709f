#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace frattini {

// Malformed input data (non-bijective images, bad file contents, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation applied outside its mathematical domain (p-power of a
// non-p-group, quotient by a non-normal subgroup, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Explicit refusal: the requested computation exceeds its budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Outcome of a budgeted computation: either a value or a skip reason.
// Exceeding a budget is an expected, typed result, never silence.
template <typename T>
struct Budgeted {
  std::optional<T> value;
  std::string skip_reason;

  static Budgeted ok(T v) { return {std::move(v), {}}; }
  static Budgeted skipped(std::string reason) { return {std::nullopt, std::move(reason)}; }

  bool has_value() const { return value.has_value(); }
  explicit operator bool() const { return has_value(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }
};

}  // namespace frattini
