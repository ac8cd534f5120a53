#pragma once

// The polytopes attached to the (A,B)-family: the full Newton polytope
// Delta, its facial pieces Delta_1 / Delta_2, and the Delta_1..Delta_5
// complex used by the improved toric degree bound, together with the
// degree and Betti-number formulas.

#include <vector>

#include "absum/errors.hpp"
#include "absum/numeric.hpp"
#include "absum/polytope.hpp"

namespace absum {

namespace detail {

inline QVec axis_point(int ambient, Rat t0, int axis, Rat value) {
  QVec v(static_cast<size_t>(ambient), Rat(0));
  v[0] = t0;
  if (axis >= 1) v[static_cast<size_t>(axis)] = value;
  return v;
}

}  // namespace detail

// Delta: hull of (-B,0,...), (A,0,...), (A, d e_i); the Newton polytope of a
// generic member with deg P_B = B.
inline Polytope ab_polytope(int A, int B, int d, int n) {
  const int N = n + 1;
  std::vector<QVec> pts;
  pts.push_back(detail::axis_point(N, Rat(-B), 0, Rat(0)));
  pts.push_back(detail::axis_point(N, Rat(A), 0, Rat(0)));
  for (int i = 1; i <= n; ++i) pts.push_back(detail::axis_point(N, Rat(A), i, Rat(d)));
  pts.push_back(QVec(static_cast<size_t>(N), Rat(0)));
  return Polytope::hull(N, std::move(pts));
}

// Delta_1: hull of 0, (A,0,...), (A, d e_i).
inline Polytope delta1(int A, int d, int n) {
  const int N = n + 1;
  std::vector<QVec> pts;
  pts.push_back(QVec(static_cast<size_t>(N), Rat(0)));
  pts.push_back(detail::axis_point(N, Rat(A), 0, Rat(0)));
  for (int i = 1; i <= n; ++i) pts.push_back(detail::axis_point(N, Rat(A), i, Rat(d)));
  return Polytope::hull(N, std::move(pts));
}

// Delta_2 of the facial decomposition: hull of (-B,0,...), 0, (A, d e_i).
inline Polytope delta2_facial(int A, int B, int d, int n) {
  const int N = n + 1;
  std::vector<QVec> pts;
  pts.push_back(detail::axis_point(N, Rat(-B), 0, Rat(0)));
  pts.push_back(QVec(static_cast<size_t>(N), Rat(0)));
  for (int i = 1; i <= n; ++i) pts.push_back(detail::axis_point(N, Rat(A), i, Rat(d)));
  return Polytope::hull(N, std::move(pts));
}

// The toric-bound complex: Delta = Delta_1 u Delta_2 u Delta_3 with
// Delta_3 = Delta_4 \ Delta_5, in the regime d > e >= h d/(A+h).
struct DeltaComplex {
  Polytope delta;   // hull of all pieces
  Polytope delta1;  // 0, (A,0..), (A, d e_i)
  Polytope delta2;  // (-h,0..), 0, (0, e e_i)
  Polytope delta3;  // 0, (A, d e_i), (0, e e_i)
  Polytope delta4;  // 0, (-eA/(d-e),0..), (A, d e_i)
  Polytope delta5;  // 0, (-eA/(d-e),0..), (0, e e_i)
  Rat vol1, vol2, vol3, vol4, vol5;  // normalized (n+1)! vol
  Rat total_bound;                   // vol1 + vol2 + vol3 (AS degree bound for L*)
};

inline void check_theorem3_regime(int A, int d, int e, int h) {
  require(A >= 1 && d >= 1, errc::internal, "A and d must be positive");
  require(e >= 0 && h >= 0, errc::internal, "e and h must be non-negative here");
  require(d > e, errc::regime_violation, "need d > e");
  // e >= h d / (A + h), equivalently h <= e A / (d - e)
  if (Rat(e) < Rat(h * d, A + h))
    fail(errc::regime_violation, "need e >= h*d/(A+h) (equivalently h <= e*A/(d-e))");
}

inline DeltaComplex ab_delta_complex(int A, int B, int d, int e, int h, int n) {
  (void)B;  // the toric pieces depend on h = deg P_B, not on the cap B
  check_theorem3_regime(A, d, e, h);
  const int N = n + 1;
  const QVec zero(static_cast<size_t>(N), Rat(0));
  Rat spike = e == 0 ? Rat(0) : Rat(-e * A, d - e);  // t0-coordinate -eA/(d-e)

  std::vector<QVec> p1{zero, detail::axis_point(N, Rat(A), 0, Rat(0))};
  std::vector<QVec> p2{zero, detail::axis_point(N, Rat(-h), 0, Rat(0))};
  std::vector<QVec> p3{zero};
  std::vector<QVec> p4{zero, detail::axis_point(N, spike, 0, Rat(0))};
  std::vector<QVec> p5{zero, detail::axis_point(N, spike, 0, Rat(0))};
  for (int i = 1; i <= n; ++i) {
    auto top = detail::axis_point(N, Rat(A), i, Rat(d));
    auto mid = detail::axis_point(N, Rat(0), i, Rat(e));
    p1.push_back(top);
    p2.push_back(mid);
    p3.push_back(top);
    p3.push_back(mid);
    p4.push_back(top);
    p5.push_back(mid);
  }
  DeltaComplex C{Polytope::hull(N, [&] {
                   std::vector<QVec> all = p1;
                   all.insert(all.end(), p2.begin(), p2.end());
                   all.insert(all.end(), p3.begin(), p3.end());
                   return all;
                 }()),
                 Polytope::hull(N, p1),
                 Polytope::hull(N, p2),
                 Polytope::hull(N, p3),
                 Polytope::hull(N, p4),
                 Polytope::hull(N, p5),
                 {}, {}, {}, {}, {}, {}};
  C.vol1 = C.delta1.normalized_volume();
  C.vol2 = C.delta2.normalized_volume();
  C.vol3 = C.delta3.normalized_volume();
  C.vol4 = C.delta4.normalized_volume();
  C.vol5 = C.delta5.normalized_volume();
  require(C.vol3 == C.vol4 - C.vol5, errc::internal, "vol(Delta_3) != vol(Delta_4) - vol(Delta_5)");
  // Delta_5 sits inside Delta_4.
  for (const auto& v : C.delta5.vertices())
    require(C.delta4.contains(v), errc::internal, "Delta_5 escapes Delta_4");
  C.total_bound = C.vol1 + C.vol2 + C.vol3;
  return C;
}

// (A+B)(d-1)^n, with the inclusion-exclusion identity
// sum_S (-1)^{#S} d^{n-#S} (A+B) checked independently.
struct BettiBound {
  Int value;
  Int alternating_sum;
  bool agree;
};

inline BettiBound betti_bound_theorem1(int A, int B, int d, int n) {
  require(A >= 1 && B >= 1 && d >= 1 && n >= 0, errc::internal, "positive inputs expected");
  Int value = Int(A + B) * ipow(Int(d - 1), static_cast<unsigned>(n));
  Int alt = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) ++size;
    Int term = ipow(Int(d), static_cast<unsigned>(n - size)) * Int(A + B);
    alt += (size % 2 == 0) ? term : -term;
  }
  return BettiBound{value, alt, value == alt};
}

// (A + eA/(d-e)) (d+1)^n - (eA/(d-e) - h) (e+1)^n, exact rational.
inline Rat degree_bound_theorem3(int A, int d, int e, int h, int n) {
  require(e >= 1, errc::regime_violation, "degree bound needs e >= 1");
  check_theorem3_regime(A, d, e, h);
  Rat ratio = Rat(e * A, d - e);
  return (Rat(A) + ratio) * Rat(ipow(Int(d + 1), static_cast<unsigned>(n))) -
         (ratio - Rat(h)) * Rat(ipow(Int(e + 1), static_cast<unsigned>(n)));
}

// The two closed-form interiority thresholds in circulation for deg g; the
// geometric rule (weight < 1 on every exponent of g) is what the library
// enforces, and it agrees with the B-form.
struct InteriorityThresholds {
  Rat b_form;  // B d / (A + B): Theorem 1 hypothesis
  Rat a_form;  // A d / (A + B): the Newton-polygon section's display
};

inline InteriorityThresholds interiority_thresholds(int A, int B, int d) {
  return {Rat(Int(B) * d, Int(A) + B), Rat(Int(A) * d, Int(A) + B)};
}

// D(Delta_2) = [B, dB/(A+B, dB)], read off the outer facet functional
// -t0/B + (A+B)/(dB) (t1+...+tn) = 1; cross-checked against
// Polytope::denominator in the tests.
inline Int delta2_denominator_closed_form(int A, int B, int d) {
  Int dB = Int(d) * B;
  Int g = int_gcd(Int(A) + B, dB);
  return int_lcm(Int(B), dB / g);
}

}  // namespace absum
