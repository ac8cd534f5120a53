#include <catch2/catch_amalgamated.hpp>

#include "absum/ab_polynomial.hpp"
#include "absum/delta_complex.hpp"
#include "absum/exponent_matrix.hpp"
#include "absum/instance_io.hpp"
#include "absum/laurent.hpp"
#include "absum/sampling.hpp"

using namespace absum;

namespace {

// The running oracle instance: G = t0 t1^2 + 1/t0 over F_3.
ABPolynomial oracle_instance() {
  auto f3 = build_field(3, 1);
  auto f = make_poly(f3, 1, {{1, {2}}});
  auto g = LaurentPoly(f3, 1);
  return ABPolynomial::assemble(f, g, {f3->from_int(0), f3->from_int(1)}, 1, 1);
}

}  // namespace

TEST_CASE("assemble derives degrees and validates") {
  auto G = oracle_instance();
  CHECK(G.d() == 2);
  CHECK(G.e() == kDegNegInf);
  CHECK(G.h() == 1);
  auto L = G.to_laurent();
  CHECK(L.term_count() == 2);
  CHECK(L.terms().count(Exponent{1, 2}) == 1);
  CHECK(L.terms().count(Exponent{-1, 0}) == 1);

  auto f3 = build_field(3, 1);
  SECTION("P_B identically zero gives the degree sentinel") {
    auto f = make_poly(f3, 1, {{1, {3}}, {1, {0}}});
    auto g = make_poly(f3, 1, {{1, {2}}});
    auto G2 = ABPolynomial::assemble(f, g, {f3->zero()}, 1, 1);
    CHECK(G2.h() == kDegNegInf);
    CHECK(G2.e() == 2);
  }
  SECTION("deg g >= deg f rejected") {
    auto f = make_poly(f3, 1, {{1, {1}}});
    auto g = make_poly(f3, 1, {{1, {1}}});
    CHECK_THROWS_AS(ABPolynomial::assemble(f, g, {f3->one()}, 1, 1), Error);
  }
  SECTION("zero f rejected") {
    CHECK_THROWS_AS(ABPolynomial::assemble(LaurentPoly(f3, 1), LaurentPoly(f3, 1), {f3->one()}, 1, 1),
                    Error);
  }
}

TEST_CASE("evaluate") {
  auto G = oracle_instance();
  auto f3 = G.field_ptr();
  CHECK(G.evaluate({f3->from_int(1), f3->from_int(1)}) == f3->from_int(2));
  CHECK(G.evaluate({f3->from_int(2), f3->from_int(0)}) == f3->from_int(2));  // 1/2 = 2 in F_3
  CHECK_THROWS_AS(G.evaluate({f3->from_int(0), f3->from_int(1)}), Error);
}

TEST_CASE("evaluation commutes with field embeddings") {
  auto G = oracle_instance();
  auto f3 = G.field_ptr();
  auto [f9, emb] = extend_field(f3, 2);
  for (uint64_t a = 1; a < 3; ++a)
    for (uint64_t b = 0; b < 3; ++b) {
      auto base_val = G.evaluate({f3->from_code(a), f3->from_code(b)});
      auto ext_val = G.evaluate({emb(f3->from_code(a)), emb(f3->from_code(b))}, emb);
      CHECK(emb(base_val) == ext_val);
    }
}

TEST_CASE("restrict_subset") {
  auto G = oracle_instance();
  SECTION("empty subset keeps only the t0 part") {
    auto L = G.restrict_subset({});
    CHECK(L.n_vars() == 1);
    CHECK(L.term_count() == 1);
    CHECK(L.terms().count(Exponent{-1}) == 1);
  }
  SECTION("full subset is the whole polynomial") {
    auto L = G.restrict_subset({1});
    CHECK(L == G.to_laurent());
  }
  SECTION("two-variable instance") {
    auto f3 = build_field(3, 1);
    auto f = make_poly(f3, 2, {{1, {2, 0}}, {1, {0, 2}}});
    auto G2 = ABPolynomial::assemble(f, LaurentPoly(f3, 2), {f3->zero(), f3->one()}, 1, 1);
    auto L = G2.restrict_subset({2});
    CHECK(L.n_vars() == 2);
    CHECK(L.terms().count(Exponent{1, 2}) == 1);   // t0 t2^2 survives
    CHECK(L.terms().count(Exponent{-1, 0}) == 1);  // 1/t0
    CHECK(L.term_count() == 2);
  }
}

TEST_CASE("homogenize") {
  auto f3 = build_field(3, 1);
  auto f5 = build_field(5, 1);
  SECTION("1 + t^3") {
    auto F = make_poly(f5, 1, {{1, {0}}, {1, {3}}}).homogenize();
    CHECK(F.n_vars() == 2);
    CHECK(F.terms().count(Exponent{3, 0}) == 1);
    CHECK(F.terms().count(Exponent{0, 3}) == 1);
    CHECK(F.is_homogeneous());
  }
  SECTION("t^2 + t") {
    auto F = make_poly(f3, 1, {{1, {2}}, {1, {1}}}).homogenize();
    CHECK(F.terms().count(Exponent{0, 2}) == 1);
    CHECK(F.terms().count(Exponent{1, 1}) == 1);
  }
  SECTION("t1 t2 + 1") {
    auto F = make_poly(f3, 2, {{1, {1, 1}}, {1, {0, 0}}}).homogenize();
    CHECK(F.terms().count(Exponent{0, 1, 1}) == 1);
    CHECK(F.terms().count(Exponent{2, 0, 0}) == 1);
  }
  SECTION("F(1, t) = f(t)") {
    auto f = make_poly(f3, 1, {{2, {2}}, {1, {1}}, {1, {0}}});
    auto F = f.homogenize();
    for (uint64_t c = 0; c < 3; ++c) {
      auto t = f3->from_code(c);
      CHECK(F.evaluate({f3->one(), t}) == f.evaluate({t}));
    }
  }
}

TEST_CASE("face restrictions") {
  auto f3 = build_field(3, 1);
  SECTION("worked example: G = t0(1 + t1^2) + 1/t0") {
    auto f = make_poly(f3, 1, {{1, {0}}, {1, {2}}});
    auto G = ABPolynomial::assemble(f, LaurentPoly(f3, 1), {f3->zero(), f3->one()}, 1, 1);
    auto [G1, G2] = G.face_restrictions();
    CHECK(G1.terms().count(Exponent{1, 0}) == 1);
    CHECK(G1.terms().count(Exponent{1, 2}) == 1);
    CHECK(G1.term_count() == 2);
    CHECK(G2.terms().count(Exponent{1, 2}) == 1);
    CHECK(G2.terms().count(Exponent{-1, 0}) == 1);
    CHECK(G2.term_count() == 2);
  }
  SECTION("zero leading P_B coefficient is an error") {
    auto f = make_poly(f3, 1, {{1, {2}}});
    auto G = ABPolynomial::assemble(f, LaurentPoly(f3, 1), {f3->zero(), f3->zero()}, 1, 1);
    CHECK_THROWS_AS(G.face_restrictions(), Error);
  }
  SECTION("g is absent from both restrictions") {
    auto f = make_poly(f3, 1, {{1, {0}}, {1, {2}}});
    auto g = make_poly(f3, 1, {{2, {0}}});
    auto G = ABPolynomial::assemble(f, g, {f3->one(), f3->one()}, 1, 1);
    auto [G1, G2] = G.face_restrictions();
    CHECK(G1.terms().count(Exponent{0, 0}) == 0);
    CHECK(G2.terms().count(Exponent{0, 0}) == 0);
  }
  SECTION("face polytopes are exactly Delta_1 and Delta_2") {
    for (uint64_t seed : {1u, 2u, 3u}) {
      SampleParams P;
      P.p = 5;
      P.d = 2;
      P.n = 1;
      P.e_max = 0;
      P.seed = seed;
      auto sample = sample_family(P);
      auto [G1, G2] = sample.poly.face_restrictions();
      CHECK(newton_polytope_at_infinity(G1).same_polytope(delta1(1, 2, 1)));
      CHECK(newton_polytope_at_infinity(G2).same_polytope(delta2_facial(1, 1, 2, 1)));
    }
  }
}

TEST_CASE("newton polytope of the assembled family") {
  SECTION("single monomial: the segment [0, d e1]") {
    auto f3 = build_field(3, 1);
    auto P = newton_polytope_at_infinity(make_poly(f3, 1, {{1, {3}}}));
    CHECK(P.dim() == 1);
    REQUIRE(P.vertices().size() == 2);
    CHECK(P.vertices()[0] == qvec_from_ints({0}));
    CHECK(P.vertices()[1] == qvec_from_ints({3}));
  }
  SECTION("oracle instance: the triangle (f has no constant term)") {
    auto G = oracle_instance();
    auto P = newton_polytope_at_infinity(G.to_laurent());
    auto expected = Polytope::hull(
        2, {qvec_from_ints({0, 0}), qvec_from_ints({1, 2}), qvec_from_ints({-1, 0})});
    CHECK(P.same_polytope(expected));
  }
  SECTION("generic member: the full (A,B)-polytope") {
    auto f3 = build_field(3, 1);
    auto f = make_poly(f3, 1, {{1, {0}}, {1, {2}}});
    auto G = ABPolynomial::assemble(f, LaurentPoly(f3, 1), {f3->zero(), f3->one()}, 1, 1);
    CHECK(newton_polytope_at_infinity(G.to_laurent()).same_polytope(ab_polytope(1, 1, 2, 1)));
  }
}

TEST_CASE("Smith invariant factors") {
  SECTION("worked 2x2 examples") {
    CHECK(smith_largest_invariant_factor({{Int(1), Int(0)}, {Int(1), Int(2)}}) == 2);
    CHECK(smith_largest_invariant_factor({{Int(1), Int(2)}, {Int(-1), Int(0)}}) == 2);
    CHECK(smith_largest_invariant_factor({{Int(1), Int(0)}, {Int(0), Int(1)}}) == 1);
  }
  SECTION("singular matrix") {
    CHECK_THROWS_AS(smith_largest_invariant_factor({{Int(1), Int(1)}, {Int(2), Int(2)}}), Error);
  }
  SECTION("diagonal family matrices over the acceptance grid") {
    for (int A : {1, 2, 3})
      for (int B : {1, 2, 3})
        for (int d : {2, 3, 4, 5})
          for (int n : {1, 2}) {
            CHECK(smith_largest_invariant_factor(diagonal_g1_matrix(A, d, n)) == Int(lcm64(d, A)));
            Int lf2 = smith_largest_invariant_factor(diagonal_g2_matrix(A, B, d, n));
            CHECK(Int(d) * B % lf2 == 0);
          }
  }
  SECTION("invariance under row/column swaps and sign flips") {
    IntMatrix m{{Int(2), Int(4), Int(4)}, {Int(-6), Int(6), Int(12)}, {Int(10), Int(4), Int(16)}};
    Int base = smith_largest_invariant_factor(m);
    IntMatrix swapped{m[1], m[0], m[2]};
    CHECK(smith_largest_invariant_factor(swapped) == base);
    IntMatrix colswap = m;
    for (auto& row : colswap) std::swap(row[0], row[2]);
    CHECK(smith_largest_invariant_factor(colswap) == base);
    IntMatrix negated = m;
    for (auto& row : negated)
      for (auto& v : row) v = -v;
    CHECK(smith_largest_invariant_factor(negated) == base);
  }
}

TEST_CASE("sample_family determinism and constraints") {
  SampleParams P;
  P.p = 5;
  P.d = 2;
  P.n = 1;
  P.e_max = 0;
  P.seed = 42;
  auto a = sample_family(P);
  auto b = sample_family(P);
  CHECK(a.poly.to_laurent() == b.poly.to_laurent());
  CHECK(a.redraws == b.redraws);
  CHECK(a.poly.d() == 2);
  CHECK(!a.poly.PB()[1].is_zero());  // degree exactly B

  SECTION("diagonal override") {
    P.diagonal_f = true;
    auto c = sample_family(P);
    auto f = c.poly.f();
    CHECK(f.term_count() == 2);  // 1 + t1^2
    CHECK(f.terms().count(Exponent{0}) == 1);
    CHECK(f.terms().count(Exponent{2}) == 1);
  }
  SECTION("gcd preconditions") {
    SampleParams bad = P;
    bad.p = 2;
    CHECK_THROWS_AS(sample_family(bad), Error);
  }
  SECTION("interiority guard") {
    SampleParams bad = P;
    bad.e_max = 1;  // threshold Bd/(A+B) = 1, not strict
    bool threw = false;
    try {
      sample_family(bad);
    } catch (const Error& e) {
      threw = e.code() == errc::interiority_violation;
    }
    CHECK(threw);
  }
}

TEST_CASE("instance JSON round trip") {
  SECTION("prime base field") {
    auto G = oracle_instance();
    auto j = instance_to_json(G, 42);
    auto back = instance_from_json(j);
    CHECK(back.poly.to_laurent() == G.to_laurent());
    CHECK(back.seed == 42);
    CHECK(instance_hash(back.poly) == instance_hash(G));
  }
  SECTION("extension base field: coefficients carry full coordinate vectors") {
    auto k = build_field(2, 2);
    LaurentPoly f(k, 1);
    f.add_term({3}, k->gen());
    f.add_term({0}, k->one());
    auto G = ABPolynomial::assemble(f, LaurentPoly(k, 1), {k->zero(), k->gen()}, 1, 1);
    auto back = instance_from_json(instance_to_json(G));
    CHECK(back.poly.to_laurent() == G.to_laurent());
    CHECK(instance_hash(back.poly) == instance_hash(G));
  }
  SECTION("the hash ignores the seed") {
    auto G = oracle_instance();
    Json a = instance_to_json(G, 1), b = instance_to_json(G, 2);
    CHECK(instance_hash(instance_from_json(a).poly) == instance_hash(instance_from_json(b).poly));
  }
  SECTION("CycInt JSON uses decimal strings") {
    CycInt big = CycInt::from_int(5, ipow(Int(10), 30)) + CycInt::character(5, Int(2));
    CHECK(cyc_from_json(cyc_to_json(big)) == big);
  }
}

TEST_CASE("restriction is compatible with nesting") {
  auto f3 = build_field(3, 1);
  auto f = make_poly(f3, 2, {{1, {2, 0}}, {1, {0, 2}}, {1, {1, 1}}});
  auto G = ABPolynomial::assemble(f, LaurentPoly(f3, 2), {f3->zero(), f3->one()}, 1, 1);
  // restricting to {1} then dropping var 1 equals restricting to {} directly
  auto r1 = G.restrict_subset({1});  // vars (t0, t1)
  auto r0 = r1.restrict_to({0});     // drop t1
  CHECK(r0 == G.restrict_subset({}));
}
