#include "rst/lexlen.hpp"

#include <algorithm>
#include <sstream>

namespace rst {

std::int64_t LexLen::coeff2(EdgeId e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const auto& t, EdgeId id) { return t.first < id; });
  return (it != terms_.end() && it->first == e) ? it->second : 0;
}

LexLen& LexLen::operator+=(const LexLen& other) {
  total2_ += other.total2_;
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<std::pair<EdgeId, std::int64_t>> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      std::int64_t c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

std::strong_ordering operator<=>(const LexLen& x, const LexLen& y) {
  if (auto c = x.total2_ <=> y.total2_; c != 0) return c;
  auto a = x.terms_.begin();
  auto b = y.terms_.begin();
  while (a != x.terms_.end() || b != y.terms_.end()) {
    // The first edge id where the coefficients differ decides.
    if (b == y.terms_.end() || (a != x.terms_.end() && a->first < b->first)) {
      return a->second <=> std::int64_t{0};
    }
    if (a == x.terms_.end() || b->first < a->first) {
      return std::int64_t{0} <=> b->second;
    }
    if (auto c = a->second <=> b->second; c != 0) return c;
    ++a;
    ++b;
  }
  return std::strong_ordering::equal;
}

std::string LexLen::to_string() const {
  std::ostringstream out;
  out << "(" << total2_ << "/2";
  for (auto [e, c] : terms_) out << ", e" << e << ":" << c << "/2";
  out << ")";
  return out.str();
}

}  // namespace rst
