#pragma once

// Hodge polygons: the Adolphson-Sperber lattice-point construction for an
// arbitrary full-dimensional polytope containing the origin, and the known
// closed-form products for the A=B=1 family.  The closed forms are the
// ground truth; the lattice count must reproduce them.

#include <vector>

#include "absum/errors.hpp"
#include "absum/numeric.hpp"
#include "absum/polygon.hpp"
#include "absum/polytope.hpp"

namespace absum {

struct HodgePolygon {
  SlopePolygon polygon;
  Int denominator = 1;  // D(Delta); every slope is a multiple of 1/D
};

// W(k) = #{u in Z^N : w(u) = k/D}, H(k) = sum_i (-1)^i C(N,i) W(k - iD);
// slope k/D appears with multiplicity H(k).  Checks sum H(k) = N! vol and
// H(k) >= 0.
inline HodgePolygon hodge_numbers_AS(const Polytope& P) {
  require(P.is_full_dim(), errc::internal, "Hodge numbers need a full-dimensional polytope");
  require(P.has_integral_vertices(), errc::internal, "Hodge numbers need a lattice polytope");
  const int N = P.ambient_dim();
  const Int D = P.denominator();
  const int64_t Dl = D.convert_to<int64_t>();

  // Every u with w(u) <= N lies in N*Delta, hence in the coordinate box of
  // radius N * max |vertex coordinate|.
  Int maxc = 0;
  for (const auto& v : P.vertices())
    for (const auto& c : v) {
      Int a = numerator(c);
      if (a < 0) a = -a;
      if (a > maxc) maxc = a;
    }
  const int64_t R = (maxc * N).convert_to<int64_t>();

  const int64_t kmax = static_cast<int64_t>(N) * Dl;
  std::vector<Int> W(static_cast<size_t>(kmax) + 1, 0);
  std::vector<int64_t> u(static_cast<size_t>(N), -R);
  for (;;) {
    QVec x(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) x[static_cast<size_t>(i)] = Rat(u[static_cast<size_t>(i)]);
    auto w = P.weight(x);
    if (w && *w <= Rat(N)) {
      Rat k = *w * Rat(D);
      require(rat_is_integer(k), errc::internal, "weight denominator exceeds D(Delta)");
      W[numerator(k).convert_to<size_t>()] += 1;
    }
    int i = 0;
    while (i < N && u[static_cast<size_t>(i)] == R) {
      u[static_cast<size_t>(i)] = -R;
      ++i;
    }
    if (i == N) break;
    ++u[static_cast<size_t>(i)];
  }

  std::vector<Int> binom(static_cast<size_t>(N) + 1, 1);
  for (int i = 1; i <= N; ++i)
    binom[static_cast<size_t>(i)] = binom[static_cast<size_t>(i - 1)] * (N - i + 1) / i;

  std::vector<Rat> slopes;
  Int total = 0;
  for (int64_t k = 0; k <= kmax; ++k) {
    Int h = 0;
    for (int i = 0; i <= N; ++i) {
      int64_t idx = k - static_cast<int64_t>(i) * Dl;
      if (idx < 0) break;
      Int term = binom[static_cast<size_t>(i)] * W[static_cast<size_t>(idx)];
      h += (i % 2 == 0) ? term : -term;
    }
    if (h < 0)
      fail(errc::negative_hodge_number, "H(" + std::to_string(k) + ") < 0 (weight-function bug)");
    total += h;
    for (Int c = 0; c < h; ++c) slopes.emplace_back(Int(k), D);
  }
  require(total == P.normalized_volume_int(), errc::internal,
          "Hodge numbers do not sum to the normalized volume");
  return HodgePolygon{SlopePolygon(std::move(slopes)), D};
}

enum class HodgeVariant { torus, affine };

// A=B=1 closed form: slopes r + {r} and r + 1 - {r} for r = sum j_i / d,
// with j_i over [0, d-1] (torus) or [1, d-1] (affine).
inline HodgePolygon hodge_closed_form(int d, int n, HodgeVariant variant) {
  require(d >= 1 && n >= 0, errc::internal, "bad parameters");
  const int lo = variant == HodgeVariant::torus ? 0 : 1;
  std::vector<Rat> slopes;
  std::vector<int> j(static_cast<size_t>(n), lo);
  for (;;) {
    Int sum = 0;
    for (int v : j) sum += v;
    Rat r(sum, Int(d));
    Rat frac = r - Rat(rat_floor(r));
    slopes.push_back(r + frac);
    slopes.push_back(r + 1 - frac);
    int i = 0;
    while (i < n && j[static_cast<size_t>(i)] == d - 1) {
      j[static_cast<size_t>(i)] = lo;
      ++i;
    }
    if (i == n) break;
    ++j[static_cast<size_t>(i)];
  }
  Int D = 1;
  for (const auto& s : slopes) D = int_lcm(D, denominator(s));
  return HodgePolygon{SlopePolygon(std::move(slopes)), D};
}

inline HodgePolygon hodge_closed_form_ab(int A, int B, int d, int n, HodgeVariant variant) {
  if (A != 1 || B != 1)
    fail(errc::unsupported_ab, "closed-form Hodge numbers are only available for A = B = 1");
  return hodge_closed_form(d, n, variant);
}

}  // namespace absum
