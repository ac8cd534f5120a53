#pragma once

// Slope polygons (Newton and Hodge) as sorted multisets of exact rational
// slopes; cumulative heights give the usual lower-convex picture.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "absum/errors.hpp"
#include "absum/numeric.hpp"

namespace absum {

class SlopePolygon {
 public:
  SlopePolygon() = default;
  explicit SlopePolygon(std::vector<Rat> slopes) : slopes_(std::move(slopes)) {
    std::sort(slopes_.begin(), slopes_.end());
  }

  size_t degree() const { return slopes_.size(); }
  const std::vector<Rat>& slopes() const { return slopes_; }

  Rat height(size_t j) const {
    require(j <= slopes_.size(), errc::internal, "polygon height index out of range");
    Rat h = 0;
    for (size_t i = 0; i < j; ++i) h += slopes_[i];
    return h;
  }

  std::vector<Rat> heights() const {
    std::vector<Rat> h(slopes_.size() + 1, Rat(0));
    for (size_t i = 0; i < slopes_.size(); ++i) h[i + 1] = h[i] + slopes_[i];
    return h;
  }

  // Breakpoints (j, height(j)) where the slope changes, endpoints included.
  std::vector<std::pair<int64_t, Rat>> vertices() const {
    std::vector<std::pair<int64_t, Rat>> v;
    auto h = heights();
    v.emplace_back(0, h[0]);
    for (size_t j = 1; j < h.size(); ++j) {
      bool last = j == h.size() - 1;
      if (last || slopes_[j] != slopes_[j - 1]) v.emplace_back(static_cast<int64_t>(j), h[j]);
    }
    return v;
  }

  bool lies_above(const SlopePolygon& other) const {
    require(degree() == other.degree(), errc::degree_mismatch, "polygon degrees differ");
    auto a = heights(), b = other.heights();
    for (size_t j = 0; j < a.size(); ++j)
      if (a[j] < b[j]) return false;
    return true;
  }

  bool operator==(const SlopePolygon& o) const { return slopes_ == o.slopes_; }
  bool operator!=(const SlopePolygon& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < slopes_.size(); ++i) {
      if (i) s += ",";
      s += rat_string(slopes_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<Rat> slopes_;
};

// Pointwise minimum of cumulative heights across a family of polygons of the
// same degree (the lower envelope used by generic-Newton-polygon searches).
inline std::vector<Rat> min_heights(const std::vector<SlopePolygon>& polys) {
  require(!polys.empty(), errc::empty_input, "no polygons");
  auto h = polys[0].heights();
  for (size_t i = 1; i < polys.size(); ++i) {
    auto g = polys[i].heights();
    require(g.size() == h.size(), errc::degree_mismatch, "polygon degrees differ");
    for (size_t j = 0; j < h.size(); ++j)
      if (g[j] < h[j]) h[j] = g[j];
  }
  return h;
}

}  // namespace absum
