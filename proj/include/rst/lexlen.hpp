#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rst/graph.hpp"

namespace rst {

/// Perturbed length (x, y) in R x R^|E|, stored doubled so that half an edge
/// is still integral. The first coordinate is total2 / 2; the coefficient of
/// edge e is coeff(e) / 2.
class LexLen {
 public:
  LexLen() = default;

  /// Full length of a single edge: (1, unit vector of e).
  static LexLen edge(EdgeId e) { return LexLen(2, {{e, 2}}); }
  /// Half of an edge, the distance from an endpoint to its midpoint.
  static LexLen half_edge(EdgeId e) { return LexLen(1, {{e, 1}}); }

  std::int64_t total2() const { return total2_; }
  /// Doubled coefficient of edge e (0 when absent).
  std::int64_t coeff2(EdgeId e) const;
  /// Nonzero coefficients sorted by edge id.
  const std::vector<std::pair<EdgeId, std::int64_t>>& terms() const { return terms_; }
  bool is_zero() const { return total2_ == 0 && terms_.empty(); }

  LexLen& operator+=(const LexLen& other);
  friend LexLen operator+(LexLen a, const LexLen& b) { return a += b; }

  friend std::strong_ordering operator<=>(const LexLen& a, const LexLen& b);
  friend bool operator==(const LexLen& a, const LexLen& b) {
    return a.total2_ == b.total2_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  LexLen(std::int64_t total2, std::vector<std::pair<EdgeId, std::int64_t>> terms)
      : total2_(total2), terms_(std::move(terms)) {}

  std::int64_t total2_ = 0;
  std::vector<std::pair<EdgeId, std::int64_t>> terms_;
};

}  // namespace rst
