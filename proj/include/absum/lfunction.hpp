#pragma once

// From sums to L-functions: polynomial extraction with tail and integrality
// certificates, rational reconstruction for the toric pieces, purity and
// square-root-cancellation bound checks, and Newton-vs-Hodge comparisons.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "absum/ab_polynomial.hpp"
#include "absum/cyclotomic.hpp"
#include "absum/delta_complex.hpp"
#include "absum/errors.hpp"
#include "absum/exp_sum.hpp"
#include "absum/hodge.hpp"
#include "absum/polygon.hpp"
#include "absum/regularity.hpp"
#include "absum/series.hpp"

namespace absum {

enum class CheckKind { toric, theorem1, theorem2, theorem3, purity, np_vs_hp };

inline const char* check_kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::toric: return "Toric";
    case CheckKind::theorem1: return "T1";
    case CheckKind::theorem2: return "T2";
    case CheckKind::theorem3: return "T3";
    case CheckKind::purity: return "Purity";
    case CheckKind::np_vs_hp: return "NPvsHP";
  }
  return "?";
}

struct CheckVerdict {
  CheckKind kind = CheckKind::toric;
  bool pass = false;
  std::string lhs, rhs;
  double tolerance = 0.0;
  std::string notes;
};

struct LPolynomial {
  int64_t p = 3;
  int s = 1;
  std::vector<CycInt> coeffs;  // c_0 .. c_claimed, c_0 = 1
  int n_eff = 0;               // sign convention (-1)^{n_eff}
  int degree = 0;              // index of the last nonzero coefficient
  int horizon = 0;             // sums consumed
  int vanishing_checked_to = 0;
};

// Compute S_1..S_M over one domain (cache-aware).
inline std::vector<CycInt> compute_sums(const ABPolynomial& G, const SumDomain& domain, int M,
                                        SumOptions opts = {}) {
  if (opts.cache != nullptr && opts.cache_key.empty()) opts.cache_key = instance_hash(G);
  std::vector<CycInt> sums;
  sums.reserve(static_cast<size_t>(M));
  for (int m = 1; m <= M; ++m) sums.push_back(exp_sum(G, m, domain, opts).value);
  return sums;
}

// P(T) = exp((-1)^{n_eff} sum S_m T^m / m) truncated at the horizon, with
// two certificates: the tail coefficients T^{D+1}..T^M vanish, and every
// kept coefficient is an algebraic integer.
inline LPolynomial l_polynomial_extract(const std::vector<CycInt>& sums, int n_eff, int claimed_degree,
                                        int s = 1) {
  const int M = static_cast<int>(sums.size());
  require(claimed_degree >= 0, errc::internal, "claimed degree must be non-negative");
  require(M >= claimed_degree + 2, errc::internal,
          "need at least D+2 sums to certify a degree-D polynomial");
  const int sign = n_eff % 2 == 0 ? 1 : -1;
  auto series = series_exp(sums, sign, M);
  LPolynomial L;
  L.p = sums[0].p();
  L.s = s;
  L.n_eff = n_eff;
  L.horizon = M;
  L.vanishing_checked_to = M;
  for (int k = 0; k <= claimed_degree; ++k) {
    const auto& c = series[static_cast<size_t>(k)];
    if (!c.is_integral())
      fail(errc::non_integral, "coefficient of T^" + std::to_string(k) +
                                   " has denominator " + c.den().str() +
                                   " (sign convention or sum error)");
    L.coeffs.push_back(c.num());
  }
  for (int k = claimed_degree + 1; k <= M; ++k)
    if (!series[static_cast<size_t>(k)].is_zero())
      fail(errc::not_polynomial,
           "coefficient of T^" + std::to_string(k) + " is nonzero beyond the claimed degree " +
               std::to_string(claimed_degree));
  L.degree = 0;
  for (int k = claimed_degree; k >= 0; --k)
    if (!L.coeffs[static_cast<size_t>(k)].is_zero()) {
      L.degree = k;
      break;
    }
  return L;
}

struct RationalL {
  std::vector<CycRat> P, Q;
  int deg_p = 0, deg_q = 0;
};

// Rational form of L*(G_S, T) itself (sign +1), with the exact residual
// check done inside pade_reconstruct.
inline RationalL lstar_rational(const std::vector<CycInt>& sums, int dP, int dQ) {
  const int M = static_cast<int>(sums.size());
  require(dP + dQ <= M - 1, errc::internal, "need dP + dQ <= M - 1");
  auto series = series_exp(sums, +1, M);
  auto pade = pade_reconstruct(series, dP, dQ);
  RationalL out{pade.P, pade.Q, static_cast<int>(pade.P.size()) - 1, static_cast<int>(pade.Q.size()) - 1};
  return out;
}

namespace detail {

// Durand-Kerner simultaneous root iteration.
inline std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs) {
  const size_t deg = coeffs.size() - 1;
  require(deg >= 1, errc::internal, "root finding needs degree >= 1");
  std::vector<std::complex<double>> a(coeffs);
  for (auto& c : a) c /= coeffs.back();
  double radius = 0;
  for (size_t j = 0; j < deg; ++j) radius = std::max(radius, std::pow(std::abs(a[j]), 1.0 / (deg - j)));
  radius = std::max(radius, 0.5);
  std::vector<std::complex<double>> z(deg);
  for (size_t i = 0; i < deg; ++i) {
    double ang = 2 * 3.14159265358979323846 * (static_cast<double>(i) + 0.25) / static_cast<double>(deg);
    z[i] = radius * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0;
    for (size_t j = a.size(); j-- > 0;) v = v * x + a[j];
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double moved = 0;
    for (size_t i = 0; i < deg; ++i) {
      std::complex<double> denom = 1;
      for (size_t j = 0; j < deg; ++j)
        if (j != i) denom *= z[i] - z[j];
      std::complex<double> delta = eval(z[i]) / denom;
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * std::max(1.0, radius)) break;
  }
  for (const auto& root : z)
    if (!(std::abs(eval(root)) < 1e-6 * std::max(1.0, std::abs(a[0]))))
      fail(errc::root_finding_failed, "Durand-Kerner residual too large");
  return z;
}

inline std::string rat_or_float(const Rat& r) { return rat_string(r); }

}  // namespace detail

// Purity of weight w: every reciprocal root has |alpha| = q^{w/2}, checked
// numerically with relative tolerance, plus the exact constant-coefficient
// cross-check |c_D| = q^{w D / 2}.
inline CheckVerdict purity_check(const LPolynomial& L, uint64_t q, int weight, double tol = 1e-6) {
  require(L.degree >= 1, errc::internal, "purity needs degree >= 1");
  std::vector<std::complex<double>> coeffs;
  for (int j = 0; j <= L.degree; ++j) coeffs.push_back(complex_embed(L.coeffs[static_cast<size_t>(j)]));
  auto roots = detail::complex_roots(coeffs);
  const double target = std::pow(static_cast<double>(q), static_cast<double>(weight) / 2.0);
  CheckVerdict v;
  v.kind = CheckKind::purity;
  v.tolerance = tol;
  v.pass = true;
  double worst = 0;
  for (const auto& t : roots) {
    double alpha = 1.0 / std::abs(t);  // reciprocal root modulus
    double rel = std::abs(alpha - target) / target;
    worst = std::max(worst, rel);
    if (rel > tol) v.pass = false;
  }
  // exact cross-check on the top coefficient
  double top = std::abs(complex_embed(L.coeffs[static_cast<size_t>(L.degree)]));
  double expect = std::pow(static_cast<double>(q), static_cast<double>(weight) * L.degree / 2.0);
  if (std::abs(top - expect) / expect > tol) v.pass = false;
  v.lhs = "max relative deviation " + std::to_string(worst);
  v.rhs = "|alpha| = q^{w/2} = " + std::to_string(target);
  v.notes = "degree " + std::to_string(L.degree) + ", |c_D| = " + std::to_string(top) +
            " vs q^{wD/2} = " + std::to_string(expect);
  return v;
}

// S_m(G) = sum_S S*_m(G_S), exactly.
inline CheckVerdict toric_decomposition_check(const ABPolynomial& G, int m, SumOptions opts = {}) {
  if (opts.cache != nullptr && opts.cache_key.empty()) opts.cache_key = instance_hash(G);
  CycInt lhs = exp_sum(G, m, SumDomain::affine(), opts).value;
  CycInt rhs(G.field_ptr()->p());
  const int n = G.n();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) S.push_back(i + 1);
    rhs += exp_sum(G, m, SumDomain::subset_of(S), opts).value;
  }
  CheckVerdict v;
  v.kind = CheckKind::toric;
  v.pass = lhs == rhs;
  v.lhs = "S_m(G), m=" + std::to_string(m);
  v.rhs = "sum over " + std::to_string(uint64_t{1} << n) + " subsets";
  v.notes = v.pass ? "exact CycInt equality" : "MISMATCH";
  return v;
}

struct BoundCheckConfig {
  int regularity_ext = 2;          // bound for the Dwork/Deligne searches
  std::optional<int> chi_index;    // nontrivial multiplicative twist (float path)
  SumOptions sum;
};

// Hypothesis-checked square-root-cancellation bounds.  Throws
// HypothesisUnmet naming the failed clause; the verdict compares |S_1|
// against coefficient * q^{(n+1)/2}.
inline CheckVerdict bound_check(const ABPolynomial& G, CheckKind theorem, BoundCheckConfig cfg = {}) {
  const int64_t p = G.field_ptr()->p();
  const int n = G.n(), A = G.A(), B = G.B(), d = G.d(), e = G.e(), h = G.h();
  auto unmet = [](const std::string& clause) {
    fail(errc::hypothesis_unmet, clause);
  };
  require(theorem == CheckKind::theorem1 || theorem == CheckKind::theorem2 || theorem == CheckKind::theorem3,
          errc::internal, "bound_check wants T1, T2 or T3");

  if (gcd64(d, p) != 1) unmet("gcd(d,p)=1");
  if (gcd64(A, p) != 1) unmet("gcd(A,p)=1");
  Rat coefficient;
  std::string hypothesis_note;
  if (theorem == CheckKind::theorem1 || theorem == CheckKind::theorem2) {
    if (gcd64(B, p) != 1) unmet("gcd(B,p)=1");
    // deg(g) < Bd/(A+B); the degree sentinel compares below every threshold.
    Rat threshold = interiority_thresholds(A, B, d).b_form;
    if (!(e == kDegNegInf || Rat(e) < threshold)) unmet("deg(g)<Bd/(A+B)");
    if (theorem == CheckKind::theorem1) {
      if (h != B) unmet("deg(P_B)=B");
      auto smooth = leading_form_smooth(G.f(), cfg.regularity_ext);
      if (!smooth.ok) unmet("f is a Deligne polynomial (leading form smooth)");
      hypothesis_note = "Deligne verified up to extension " + std::to_string(smooth.checked_to);
    } else {
      auto reg = is_affine_dwork_regular(G.f(), cfg.regularity_ext);
      if (!reg.ok) unmet("f affine-Dwork-regular");
      hypothesis_note = "affine Dwork regularity verified up to extension " + std::to_string(reg.checked_to);
    }
    coefficient = Rat(Int(A + B) * ipow(Int(d - 1), static_cast<unsigned>(n)));
  } else {
    int he = h == kDegNegInf ? 0 : h;
    int ee = e == kDegNegInf ? 0 : e;
    if (!(d > ee)) unmet("d > e");
    if (Rat(ee) < Rat(he * d, A + he)) unmet("e >= h*d/(A+h)");
    auto reg = is_affine_dwork_regular(G.f(), cfg.regularity_ext);
    if (!reg.ok) unmet("f affine-Dwork-regular");
    hypothesis_note = "affine Dwork regularity verified up to extension " + std::to_string(reg.checked_to);
    if (ee == 0) {
      coefficient = Rat(Int(A) * ipow(Int(d + 1), static_cast<unsigned>(n)));
    } else {
      coefficient = degree_bound_theorem3(A, d, ee, he, n);
    }
  }

  double s1_abs;
  std::string s1_desc;
  if (cfg.chi_index && *cfg.chi_index % static_cast<int64_t>(G.field_ptr()->q() - 1) != 0) {
    auto tw = exp_sum_twisted(G, *cfg.chi_index, cfg.sum);
    s1_abs = std::abs(tw);
    s1_desc = "|S_1^chi| (chi index " + std::to_string(*cfg.chi_index) + ", float)";
  } else {
    if (cfg.sum.cache != nullptr && cfg.sum.cache_key.empty()) cfg.sum.cache_key = instance_hash(G);
    auto s = exp_sum(G, 1, SumDomain::affine(), cfg.sum);
    s1_abs = std::abs(complex_embed(s.value));
    s1_desc = "|S_1| (exact sum, embedded)";
  }
  double bound = rat_to_double(coefficient) *
                 std::pow(static_cast<double>(G.field_ptr()->q()), (n + 1) / 2.0);
  CheckVerdict v;
  v.kind = theorem;
  v.tolerance = 1e-9;
  v.pass = s1_abs <= bound * (1 + 1e-12) + 1e-9;
  v.lhs = s1_desc + " = " + std::to_string(s1_abs);
  v.rhs = rat_string(coefficient) + " * q^{(n+1)/2} = " + std::to_string(bound);
  v.notes = hypothesis_note;
  return v;
}

struct NpHpComparison {
  CheckVerdict verdict;
  SlopePolygon np;
  SlopePolygon hp;
  bool above = false;
  bool equal = false;
};

inline NpHpComparison np_vs_hp(const LPolynomial& L, const SlopePolygon& hp) {
  auto np = newton_polygon(L.coeffs, L.s);
  require(np.polygon.degree() == hp.degree(), errc::degree_mismatch,
          "Newton polygon degree " + std::to_string(np.polygon.degree()) +
              " != Hodge polygon degree " + std::to_string(hp.degree()));
  NpHpComparison out;
  out.np = np.polygon;
  out.hp = hp;
  out.above = np.polygon.lies_above(hp);
  out.equal = np.polygon == hp;
  out.verdict.kind = CheckKind::np_vs_hp;
  out.verdict.pass = out.above;
  out.verdict.lhs = "NP " + out.np.to_string();
  out.verdict.rhs = "HP " + out.hp.to_string();
  out.verdict.notes = out.equal ? "equal" : (out.above ? "strictly above somewhere" : "VIOLATION: NP below HP");
  return out;
}

}  // namespace absum
