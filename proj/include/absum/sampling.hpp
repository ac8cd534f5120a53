#pragma once

// Seeded, reproducible sampling of the family M(d, A, B, p): uniform
// coefficients with the degree constraints enforced, interiority of g
// decided geometrically (weight < 1 on every exponent), and rejection until
// the affine-Dwork-regularity check passes up to the configured bound.

#include <random>
#include <vector>

#include "absum/ab_polynomial.hpp"
#include "absum/delta_complex.hpp"
#include "absum/errors.hpp"
#include "absum/laurent.hpp"
#include "absum/regularity.hpp"

namespace absum {

struct SampleParams {
  int64_t p = 3;
  int s = 1;
  int d = 2;
  int A = 1;
  int B = 1;
  int n = 1;
  int e_max = 0;        // max degree of g; negative means g = 0
  uint64_t seed = 0;
  bool diagonal_f = false;  // force f = 1 + t1^d + ... + tn^d
  int regularity_ext = 2;   // extension bound for the rejection test
  int max_redraws = 1000;
};

struct SampleResult {
  ABPolynomial poly;
  int redraws = 0;
  int regularity_checked_to = 0;
};

namespace detail {

inline std::vector<Exponent> monomials_up_to_degree(int n, int d) {
  std::vector<Exponent> out;
  Exponent e(static_cast<size_t>(n), 0);
  for (;;) {
    int sum = 0;
    for (int v : e) sum += v;
    if (sum <= d) out.push_back(e);
    int i = 0;
    while (i < n && e[static_cast<size_t>(i)] == d) {
      e[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
    ++e[static_cast<size_t>(i)];
  }
  return out;
}

}  // namespace detail

inline SampleResult sample_family(const SampleParams& P) {
  require(gcd64(P.d, P.p) == 1, errc::hypothesis_unmet, "gcd(d, p) = 1 required");
  require(gcd64(P.A, P.p) == 1, errc::hypothesis_unmet, "gcd(A, p) = 1 required");
  require(gcd64(P.B, P.p) == 1, errc::hypothesis_unmet, "gcd(B, p) = 1 required");
  require(P.n >= 1 && P.d >= 1 && P.A >= 1 && P.B >= 1, errc::internal, "bad family parameters");

  auto field = build_field(P.p, P.s);
  auto delta = ab_polytope(P.A, P.B, P.d, P.n);
  auto thresholds = interiority_thresholds(P.A, P.B, P.d);

  // Interiority of g, decided by the weight function: every admissible
  // exponent (0, u) with |u| <= e_max must satisfy w < 1.
  if (P.e_max >= 0) {
    std::vector<int> probe(static_cast<size_t>(P.n) + 1, 0);
    probe[1] = P.e_max;
    auto w = delta.weight(probe);
    require(w.has_value() && *w < Rat(1), errc::interiority_violation,
            "e_max = " + std::to_string(P.e_max) +
                " is not strictly interior (geometric rule w < 1; closed forms: Bd/(A+B) = " +
                rat_string(thresholds.b_form) + ", Ad/(A+B) = " + rat_string(thresholds.a_form) + ")");
  }

  std::mt19937_64 rng(P.seed);
  auto draw_coeff = [&]() { return field->from_code(rng() % field->q()); };
  auto draw_unit = [&]() { return field->from_code(1 + rng() % (field->q() - 1)); };

  auto f_monomials = detail::monomials_up_to_degree(P.n, P.d);
  auto g_monomials = P.e_max >= 0 ? detail::monomials_up_to_degree(P.n, P.e_max) : std::vector<Exponent>{};

  for (int attempt = 0; attempt < P.max_redraws; ++attempt) {
    LaurentPoly f(field, P.n);
    if (P.diagonal_f) {
      Exponent zero(static_cast<size_t>(P.n), 0);
      f.add_term(zero, field->one());
      for (int i = 0; i < P.n; ++i) {
        Exponent e(static_cast<size_t>(P.n), 0);
        e[static_cast<size_t>(i)] = P.d;
        f.add_term(e, field->one());
      }
    } else {
      for (const auto& e : f_monomials) f.add_term(e, draw_coeff());
      if (f.is_zero() || f.total_degree() != P.d) continue;
    }

    LaurentPoly g(field, P.n);
    for (const auto& e : g_monomials) g.add_term(e, draw_coeff());

    std::vector<FieldElement> pb;
    for (int j = 0; j < P.B; ++j) pb.push_back(draw_coeff());
    pb.push_back(draw_unit());  // degree exactly B

    auto verdict = is_affine_dwork_regular(f, P.regularity_ext);
    if (!verdict.ok) continue;

    auto G = ABPolynomial::assemble(std::move(f), std::move(g), std::move(pb), P.A, P.B);
    return SampleResult{std::move(G), attempt, verdict.checked_to};
  }
  fail(errc::sampling_exhausted,
       "no affine-Dwork-regular draw within " + std::to_string(P.max_redraws) + " attempts");
}

}  // namespace absum
