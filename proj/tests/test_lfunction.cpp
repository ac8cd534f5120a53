#include <catch2/catch_amalgamated.hpp>

#include "absum/gnp.hpp"
#include "absum/lfunction.hpp"
#include "absum/sampling.hpp"
#include "support/oracle.hpp"

using namespace absum;

namespace {

ABPolynomial oracle_instance() {
  auto f3 = build_field(3, 1);
  auto f = make_poly(f3, 1, {{1, {2}}});
  return ABPolynomial::assemble(f, LaurentPoly(f3, 1), {f3->from_int(0), f3->from_int(1)}, 1, 1);
}

std::vector<CycInt> int_sums(int64_t p, const std::vector<int64_t>& v) {
  std::vector<CycInt> out;
  for (int64_t x : v) out.push_back(CycInt::from_int(p, x));
  return out;
}

std::vector<CycInt> power_sums(int64_t p, const std::vector<int64_t>& roots, int M) {
  std::vector<CycInt> out;
  for (int m = 1; m <= M; ++m) {
    Int acc = 0;
    for (int64_t r : roots) acc += ipow(Int(r), static_cast<unsigned>(m));
    out.push_back(CycInt::from_int(p, acc));
  }
  return out;
}

}  // namespace

TEST_CASE("l_polynomial_extract on synthetic sums") {
  SECTION("reciprocal roots {2,3} give 1 - 5T + 6T^2") {
    // S_m = 2^m + 3^m with sign -1 (odd variable count).
    auto L = l_polynomial_extract(power_sums(3, {2, 3}, 5), 1, 2);
    CHECK(L.degree == 2);
    CHECK(L.coeffs[0] == CycInt::from_int(3, 1));
    CHECK(L.coeffs[1] == CycInt::from_int(3, -5));
    CHECK(L.coeffs[2] == CycInt::from_int(3, 6));
  }
  SECTION("designed failure: 1/(1-2T) is not a polynomial") {
    // S_m = -2^m, sign -1: series of exp(+sum 2^m T^m/m) = 1/(1-2T).
    std::vector<int64_t> s;
    for (int m = 1; m <= 4; ++m) s.push_back(-(int64_t{1} << m));
    bool threw = false;
    try {
      l_polynomial_extract(int_sums(3, s), 1, 1);
    } catch (const Error& e) {
      threw = e.code() == errc::not_polynomial;
    }
    CHECK(threw);
  }
  SECTION("designed failure: non-integral coefficient") {
    // S_1 = 1, S_2 = 2 force c_2 = -1/2 under sign -1.
    bool threw = false;
    try {
      l_polynomial_extract(int_sums(3, {1, 2, 1, 1, 1}), 1, 3);
    } catch (const Error& e) {
      threw = e.code() == errc::non_integral;
    }
    CHECK(threw);
  }
}

TEST_CASE("full pipeline on an affine-Dwork-regular F_3 instance") {
  // G = t0(1 + t1^2) + 1/t0: the diagonal f is affine Dwork regular, so the
  // pure case applies and the degree is exactly (A+B)(d-1)^n = 2.
  auto f3 = build_field(3, 1);
  auto f = make_poly(f3, 1, {{1, {0}}, {1, {2}}});
  auto G = ABPolynomial::assemble(f, LaurentPoly(f3, 1), {f3->from_int(0), f3->from_int(1)}, 1, 1);
  auto sums = compute_sums(G, SumDomain::affine(), 6);
  CHECK(sums[0] == test_oracle::oracle_sum(G, 1, SumDomain::affine()));
  CHECK(sums[1] == test_oracle::oracle_sum(G, 2, SumDomain::affine()));

  auto L = l_polynomial_extract(sums, 1, 2);
  CHECK(L.degree == 2);

  SECTION("purity of weight n+1 = 2") {
    auto v = purity_check(L, 3, 2);
    CHECK(v.pass);
  }
  SECTION("NP lies on or above the affine Hodge polygon") {
    auto hp = hodge_closed_form(2, 1, HodgeVariant::affine);
    auto cmp = np_vs_hp(L, hp.polygon);
    CHECK(cmp.above);
    CHECK(cmp.verdict.pass);
  }
  SECTION("NP slopes sum to (n+1) D / 2 (purity + functional equation)") {
    auto np = newton_polygon(L.coeffs, 1);
    CHECK(np.polygon.height(np.polygon.degree()) == Rat(2));
  }
}

TEST_CASE("the degenerate oracle instance lands in the mixed case") {
  // f = t1^2 has no constant term and is not affine Dwork regular; the
  // Betti bound 2 is only an upper bound, and the actual degree drops to 1.
  auto G = oracle_instance();
  auto sums = compute_sums(G, SumDomain::affine(), 6);
  for (int m = 1; m <= 6; ++m) {
    Int expect = ipow(Int(-3), static_cast<unsigned>(m));
    CHECK(sums[static_cast<size_t>(m - 1)] == CycInt::from_int(3, expect));
  }
  auto L = l_polynomial_extract(sums, 1, 2);
  CHECK(L.degree == 1);  // strictly below the bound; tails still vanish
  CHECK(L.coeffs[1] == CycInt::from_int(3, 3));
}

TEST_CASE("purity check on constructed polynomials") {
  SECTION("(1-3T)(1+3T): pure of weight 2 over q=3") {
    LPolynomial L;
    L.p = 3;
    L.s = 1;
    L.coeffs = {CycInt::from_int(3, 1), CycInt::from_int(3, 0), CycInt::from_int(3, -9)};
    L.degree = 2;
    CHECK(purity_check(L, 3, 2).pass);
  }
  SECTION("(1-2T)(1-3T): mixed, purity fails") {
    LPolynomial L;
    L.p = 3;
    L.s = 1;
    L.coeffs = {CycInt::from_int(3, 1), CycInt::from_int(3, -5), CycInt::from_int(3, 6)};
    L.degree = 2;
    CHECK_FALSE(purity_check(L, 3, 2).pass);
  }
}

TEST_CASE("toric decomposition checks") {
  SECTION("oracle instance: -3 = -1 + -2") {
    auto v = toric_decomposition_check(oracle_instance(), 1);
    CHECK(v.pass);
  }
  SECTION("n = 2 instance, m = 1 and 2") {
    auto k = build_field(3, 1);
    auto f = make_poly(k, 2, {{1, {2, 0}}, {1, {0, 2}}, {1, {0, 0}}});
    auto G = ABPolynomial::assemble(f, LaurentPoly(k, 2), {k->one(), k->from_int(2)}, 1, 1);
    CHECK(toric_decomposition_check(G, 1).pass);
    CHECK(toric_decomposition_check(G, 2).pass);
  }
}

TEST_CASE("lstar_rational") {
  SECTION("G_empty = 1/t0 over F_3: L* = 1 - T") {
    auto G = oracle_instance();
    auto sums = compute_sums(G, SumDomain::subset_of({}), 4);
    for (const auto& s : sums) CHECK(s == CycInt::from_int(3, -1));
    auto r = lstar_rational(sums, 1, 1);
    CHECK(r.deg_p == 1);
    CHECK(r.deg_q == 0);
    CHECK(r.P[1] == CycRat::from_int(3, -1));
  }
  SECTION("synthetic 1/(1-2T)") {
    std::vector<int64_t> s;
    for (int m = 1; m <= 5; ++m) s.push_back(int64_t{1} << m);
    auto r = lstar_rational(int_sums(3, s), 0, 1);
    CHECK(r.deg_p == 0);
    CHECK(r.deg_q == 1);
    CHECK(r.Q[1] == CycRat::from_int(3, -2));
  }
  SECTION("torus piece of the oracle instance respects the AS degree bound") {
    auto G = oracle_instance();
    auto sums = compute_sums(G, SumDomain::torus(), 6);
    // |deg| <= 2! vol(Delta) = 4: reconstruct with room on both sides
    auto r = lstar_rational(sums, 2, 2);
    CHECK(r.deg_p - r.deg_q <= 4);
    CHECK(r.deg_q - r.deg_p <= 4);
  }
}

TEST_CASE("bound_check") {
  SECTION("Theorem 1 on the oracle instance: |S_1| = 3 <= 6") {
    auto v = bound_check(oracle_instance(), CheckKind::theorem1);
    CHECK(v.pass);
  }
  SECTION("Theorem 1 hypothesis failure names the clause") {
    // e = 1 >= Bd/(A+B) = 1 for d=2, A=B=1
    auto k = build_field(3, 1);
    auto f = make_poly(k, 1, {{1, {2}}, {1, {0}}});
    auto g = make_poly(k, 1, {{1, {1}}});
    auto G = ABPolynomial::assemble(f, g, {k->zero(), k->one()}, 1, 1);
    bool threw = false;
    std::string msg;
    try {
      bound_check(G, CheckKind::theorem1);
    } catch (const Error& e) {
      threw = e.code() == errc::hypothesis_unmet;
      msg = e.what();
    }
    CHECK(threw);
    CHECK(msg.find("Bd/(A+B)") != std::string::npos);
  }
  SECTION("Theorem 2 on a sampled affine-Dwork-regular instance") {
    SampleParams P;
    P.p = 5;
    P.d = 2;
    P.n = 1;
    P.e_max = 0;
    P.seed = 4;
    auto G = sample_family(P).poly;
    auto v = bound_check(G, CheckKind::theorem2);
    CHECK(v.pass);
  }
  SECTION("chi-twisted bound check (float path)") {
    auto G = oracle_instance();
    BoundCheckConfig cfg;
    cfg.chi_index = 1;  // the quadratic character of F_3
    auto v = bound_check(G, CheckKind::theorem1, cfg);
    CHECK(v.pass);
  }
}

TEST_CASE("np_vs_hp verdicts") {
  SECTION("degree mismatch is rejected") {
    LPolynomial L;
    L.p = 3;
    L.s = 1;
    L.coeffs = {CycInt::from_int(3, 1), CycInt::from_int(3, 3)};
    L.degree = 1;
    bool threw = false;
    try {
      np_vs_hp(L, SlopePolygon({Rat(0), Rat(1)}));
    } catch (const Error& e) {
      threw = e.code() == errc::degree_mismatch;
    }
    CHECK(threw);
  }
  SECTION("violation is flagged") {
    LPolynomial L;
    L.p = 3;
    L.s = 1;
    // valuations 0,0,1,1,2: NP slopes {0, 1/2, 1/2, 1} -> below HP {0,1,1,1} pointwise
    L.coeffs = {CycInt::from_int(3, 1), CycInt::from_int(3, 1), CycInt::from_int(3, 3),
                CycInt::from_int(3, 3), CycInt::from_int(3, 9)};
    L.degree = 4;
    auto cmp = np_vs_hp(L, SlopePolygon({Rat(0), Rat(1), Rat(1), Rat(1)}));
    CHECK_FALSE(cmp.verdict.pass);
    CHECK_FALSE(cmp.above);
  }
}

TEST_CASE("pipeline over a non-prime base field (F_4, s = 2)") {
  // d = 3 prime to p = 2; the diagonal f = 1 + t1^3 is affine Dwork regular,
  // so the affine L-polynomial has degree (A+B)(d-1)^n = 4, pure of weight 2
  // over q = 4.
  auto k = build_field(2, 2);
  auto f = make_poly(k, 1, {{1, {0}}, {1, {3}}});
  auto G = ABPolynomial::assemble(f, LaurentPoly(k, 1), {k->zero(), k->one()}, 1, 1);
  REQUIRE(is_affine_dwork_regular(G.f(), 2).ok);
  auto sums = compute_sums(G, SumDomain::affine(), 6);
  CHECK(sums[0] == test_oracle::oracle_sum(G, 1, SumDomain::affine()));
  auto L = l_polynomial_extract(sums, 1, 4, 2);
  CHECK(L.degree == 4);
  CHECK(purity_check(L, 4, 2).pass);
  // ord_q uses q_log = s (p-1) = 2; weight-degree balance pins the total
  auto np = newton_polygon(L.coeffs, 2);
  CHECK(np.polygon.height(np.polygon.degree()) == Rat(4));  // (n+1) D / 2
  CHECK(toric_decomposition_check(G, 1).pass);
  CHECK(toric_decomposition_check(G, 2).pass);
}

TEST_CASE("gnp_search at p=3 (fast smoke test)") {
  GnpParams P;
  P.p = 3;
  P.d = 2;
  P.A = 1;
  P.B = 1;
  P.n = 1;
  P.samples = 6;
  P.seed = 7;
  auto rep = gnp_search(P);
  CHECK(rep.degree == 4);
  CHECK(rep.congruence_modulus == 2);
  CHECK(rep.congruence_holds);  // 3 = 1 mod 2
  CHECK(rep.all_above);
  CHECK(rep.ordinary);
  CHECK(rep.hp.polygon.slopes() == std::vector<Rat>{Rat(0), Rat(1), Rat(1), Rat(1)});
  SECTION("determinism") {
    auto rep2 = gnp_search(P);
    REQUIRE(rep2.samples.size() == rep.samples.size());
    for (size_t i = 0; i < rep.samples.size(); ++i) {
      CHECK(rep2.samples[i].hash == rep.samples[i].hash);
      CHECK(rep2.samples[i].np == rep.samples[i].np);
    }
  }
}
