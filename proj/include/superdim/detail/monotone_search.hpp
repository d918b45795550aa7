#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "superdim/scalar.hpp"

namespace superdim::detail {

/// Walks every integer vector x >= floor (componentwise) with value(x) <= limit,
/// where value is strictly increasing in each coordinate on that region.
/// Coordinates after the one being assigned sit at their floor, so value() of a
/// partial assignment is the minimal completion; a coordinate loop stops as soon
/// as that exceeds the limit.
class MonotoneSearch {
 public:
  // Guards against a value function that is not actually increasing.
  static constexpr long kMaxSteps = 1'000'000;

  MonotoneSearch(std::vector<long> floor, Rational limit) : floor_(std::move(floor)), limit_(std::move(limit)) {}

  /// Values of the first coordinate whose minimal completion stays within the limit.
  template <class Value>
  std::vector<long> first_level(Value&& value) const {
    std::vector<long> out;
    if (floor_.empty()) return out;
    std::vector<long> x = floor_;
    for (long steps = 0;; ++steps, ++x[0]) {
      if (steps > kMaxSteps) throw std::logic_error("monotone search did not terminate");
      if (value(x) > limit_) break;
      out.push_back(x[0]);
    }
    return out;
  }

  /// Visits all admissible vectors, optionally restricted to a fixed first coordinate.
  template <class Value, class Visit>
  void run(Value&& value, Visit&& visit, const long* first = nullptr) const {
    std::vector<long> x = floor_;
    if (floor_.empty()) {
      if (value(x) <= limit_) visit(x);
      return;
    }
    if (first) {
      x[0] = *first;
      if (value(x) <= limit_) descend(x, 1, value, visit);
      return;
    }
    descend(x, 0, value, visit);
  }

  const std::vector<long>& floor() const { return floor_; }

 private:
  template <class Value, class Visit>
  void descend(std::vector<long>& x, std::size_t k, Value& value, Visit& visit) const {
    if (k == x.size()) {
      visit(x);
      return;
    }
    for (long steps = 0;; ++steps, ++x[k]) {
      if (steps > kMaxSteps) throw std::logic_error("monotone search did not terminate");
      if (value(x) > limit_) break;
      descend(x, k + 1, value, visit);
    }
    x[k] = floor_[k];
  }

  std::vector<long> floor_;
  Rational limit_;
};

}  // namespace superdim::detail
