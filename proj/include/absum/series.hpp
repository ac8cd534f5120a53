#pragma once

// Power-series utilities over Q(zeta_p): the exponential of sum data,
// Pade / rational reconstruction, and q-adic Newton polygons of
// cyclotomic-integer coefficient lists.

#include <utility>
#include <vector>

#include "absum/cyclotomic.hpp"
#include "absum/errors.hpp"
#include "absum/numeric.hpp"
#include "absum/polygon.hpp"

namespace absum {

// Coefficients c_0..c_M of exp(sign * sum_{m<=M} S_m T^m / m), computed by
// the recurrence k c_k = sign * sum_{m=1}^{k} S_m c_{k-m}, c_0 = 1.
inline std::vector<CycRat> series_exp(const std::vector<CycRat>& sums, int sign, int M) {
  require(M >= 1, errc::internal, "series horizon must be >= 1");
  require(static_cast<int>(sums.size()) >= M, errc::internal, "need sums S_1..S_M");
  require(sign == 1 || sign == -1, errc::internal, "sign must be +-1");
  const int64_t p = sums[0].p();
  std::vector<CycRat> c(static_cast<size_t>(M) + 1, CycRat(p));
  c[0] = CycRat::from_int(p, 1);
  for (int k = 1; k <= M; ++k) {
    CycRat acc(p);
    for (int m = 1; m <= k; ++m) acc = acc + sums[static_cast<size_t>(m - 1)] * c[static_cast<size_t>(k - m)];
    if (sign < 0) acc = -acc;
    c[static_cast<size_t>(k)] = acc * Rat(Int(1), Int(k));
  }
  return c;
}

inline std::vector<CycRat> series_exp(const std::vector<CycInt>& sums, int sign, int M) {
  std::vector<CycRat> s;
  s.reserve(sums.size());
  for (const auto& v : sums) s.emplace_back(v);
  return series_exp(s, sign, M);
}

namespace cycpoly {

using Poly = std::vector<CycRat>;  // little-endian over Q(zeta_p)

inline void trim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, CycRat(p));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

inline Poly sub(Poly a, const Poly& b, int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), CycRat(p));
  for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  trim(a);
  return a;
}

// Remainder and quotient of a by b over the fraction field.
inline Poly divmod(Poly a, const Poly& b, Poly& q, int64_t p) {
  require(!b.empty(), errc::internal, "division by zero polynomial");
  q.assign(a.size(), CycRat(p));
  while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) && !a.empty()) {
    CycRat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return a;
}

}  // namespace cycpoly

struct PadeResult {
  std::vector<CycRat> P;  // numerator, P/Q = series mod T^{M+1}
  std::vector<CycRat> Q;  // denominator, Q(0) = 1
};

// Extended Euclid on (T^{M+1}, series): walk the remainder sequence until
// deg r <= dP, keeping the cofactor of the series as the denominator.
inline PadeResult pade_reconstruct(const std::vector<CycRat>& series, int dP, int dQ) {
  require(!series.empty(), errc::empty_input, "empty series");
  const int M = static_cast<int>(series.size()) - 1;
  require(dP >= 0 && dQ >= 0 && dP + dQ <= M, errc::internal, "need dP + dQ <= M");
  const int64_t p = series[0].p();
  using cycpoly::Poly;
  Poly r0(static_cast<size_t>(M) + 2, CycRat(p));
  r0.back() = CycRat::from_int(p, 1);  // T^{M+1}
  Poly r1 = series;
  cycpoly::trim(r1);
  Poly v0, v1 = {CycRat::from_int(p, 1)};
  while (cycpoly::degree(r1) > dP) {
    Poly q;
    Poly r2 = cycpoly::divmod(r0, r1, q, p);
    Poly v2 = cycpoly::sub(v0, cycpoly::mul(q, v1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (cycpoly::degree(v1) > dQ || v1.empty() || v1[0].is_zero())
    fail(errc::reconstruction_unstable, "no (dP,dQ) Pade form with invertible constant term");
  // Normalize Q(0) = 1.
  CycRat inv = v1[0].inverse();
  Poly P = r1, Q = v1;
  for (auto& c : P) c = c * inv;
  for (auto& c : Q) c = c * inv;
  // Residual check: P - Q * series = 0 mod T^{M+1}.
  Poly prod = cycpoly::mul(Q, series, p);
  prod.resize(static_cast<size_t>(M) + 1, CycRat(p));
  Poly diff = cycpoly::sub(Poly(P), prod, p);
  for (size_t i = 0; i < diff.size() && i <= static_cast<size_t>(M); ++i)
    if (!diff[i].is_zero())
      fail(errc::reconstruction_unstable, "residual nonzero at T^" + std::to_string(i));
  if (P.empty()) P = {CycRat(p)};
  return PadeResult{std::move(P), std::move(Q)};
}

struct NewtonPolygonResult {
  SlopePolygon polygon;
  std::vector<std::pair<int64_t, Rat>> hull_vertices;  // (index, ord_q)
};

// Lower convex hull of {(j, ord_q c_j) : c_j != 0}; slopes as exact
// rationals with multiplicity equal to the horizontal run.
inline NewtonPolygonResult newton_polygon(const std::vector<CycInt>& coeffs, int s) {
  require(!coeffs.empty(), errc::empty_input, "no coefficients");
  require(!coeffs[0].is_zero(), errc::empty_input, "constant coefficient must be nonzero");
  std::vector<std::pair<int64_t, Rat>> pts;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    QAdicValuation v = ord_q(coeffs[j], s);
    pts.emplace_back(static_cast<int64_t>(j), v.value);
  }
  // Monotone-chain lower hull (points already sorted by abscissa).
  std::vector<std::pair<int64_t, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b if it is strictly below segment a->pt
      Rat cross = (b.second - a.second) * Rat(pt.first - a.first) -
                  (pt.second - a.second) * Rat(b.first - a.first);
      if (cross < 0) break;  // b below the chord: convex turn, keep
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<Rat> slopes;
  for (size_t i = 1; i < hull.size(); ++i) {
    Rat slope = (hull[i].second - hull[i - 1].second) / Rat(hull[i].first - hull[i - 1].first);
    for (int64_t k = 0; k < hull[i].first - hull[i - 1].first; ++k) slopes.push_back(slope);
  }
  return NewtonPolygonResult{SlopePolygon(std::move(slopes)), std::move(hull)};
}

}  // namespace absum
