#include <catch2/catch_amalgamated.hpp>

#include "absum/delta_complex.hpp"
#include "absum/polytope.hpp"

using namespace absum;

namespace {
QVec qv(std::initializer_list<int> v) { return qvec_from_ints(std::vector<int>(v)); }
}  // namespace

TEST_CASE("hull of the F_3 oracle triangle") {
  // exponents of t0 t1^2 + 1/t0 plus the origin
  auto P = Polytope::hull(2, {qv({0, 0}), qv({1, 2}), qv({-1, 0})});
  CHECK(P.is_full_dim());
  REQUIRE(P.vertices().size() == 3);
  CHECK(P.vertices()[0] == qv({-1, 0}));
  CHECK(P.vertices()[1] == qv({0, 0}));
  CHECK(P.vertices()[2] == qv({1, 2}));
  CHECK(P.normalized_volume() == Rat(2));
  CHECK(P.contains(qv({0, 1})));
  CHECK_FALSE(P.contains(qv({1, 3})));
}

TEST_CASE("hull drops interior and collinear points") {
  auto P = Polytope::hull(2, {qv({0, 0}), qv({2, 0}), qv({0, 2}), qv({1, 0}), qv({1, 1})});
  CHECK(P.vertices().size() == 3);
}

TEST_CASE("lower-dimensional hulls") {
  auto seg = Polytope::hull(2, {qv({0, 0}), qv({1, 1}), qv({2, 2})});
  CHECK(seg.dim() == 1);
  CHECK_FALSE(seg.is_full_dim());
  CHECK(seg.normalized_volume() == Rat(0));
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.contains(qv({1, 1})));
  CHECK_FALSE(seg.contains(qv({1, 0})));

  auto pt = Polytope::hull(3, {qv({0, 0, 0})});
  CHECK(pt.dim() == 0);
}

TEST_CASE("hull round-trip: vertices regenerate the same hull") {
  auto P = ab_polytope(2, 3, 4, 2);
  auto Q = Polytope::hull(P.ambient_dim(), P.vertices());
  CHECK(P.same_polytope(Q));
  CHECK(P.facets().size() == Q.facets().size());
}

TEST_CASE("simplex volume via determinant") {
  CHECK(simplex_normalized_volume({qv({0, 0}), qv({1, 0}), qv({1, 2})}) == Rat(2));
  CHECK(simplex_normalized_volume({qv({0, 0}), qv({1, 1}), qv({2, 2})}) == Rat(0));
  QVec spike{Rat(-2), Rat(0)};  // rational coordinates are fine
  CHECK(simplex_normalized_volume({qv({0, 0}), spike, qv({0, 3})}) == Rat(6));
}

TEST_CASE("faces of the oracle triangle") {
  auto P = Polytope::hull(2, {qv({0, 0}), qv({1, 2}), qv({-1, 0})});
  auto faces = P.proper_faces();
  // 3 vertices + 3 edges
  int v = 0, e = 0, not_origin = 0;
  for (const auto& f : faces) {
    if (f.dim == 0) ++v;
    if (f.dim == 1) ++e;
    if (!f.contains_origin) ++not_origin;
  }
  CHECK(v == 3);
  CHECK(e == 3);
  // faces avoiding 0: the two non-origin vertices and the outer edge
  CHECK(not_origin == 3);
  // the edge [(-1,0),(1,2)] does not contain the origin
  for (const auto& f : faces) {
    if (f.dim == 1 && !f.contains_origin) {
      CHECK(f.vertex_ids.size() == 2);
      CHECK(P.point_on_face(f, qv({0, 1})));  // midpoint
      CHECK_FALSE(P.point_on_face(f, qv({0, 0})));
    }
  }
}

TEST_CASE("Theorem 1 proof polytope volumes: (n+1)! vol(Delta_1) = A d^n etc.") {
  for (int A : {1, 2, 3})
    for (int d : {2, 3, 4, 5})
      for (int n : {1, 2}) {
        auto D1 = delta1(A, d, n);
        CHECK(D1.normalized_volume_int() == Int(A) * ipow(Int(d), static_cast<unsigned>(n)));
      }
}

TEST_CASE("ab_polytope volume is (A+B) d^n") {
  for (int A : {1, 2})
    for (int B : {1, 3})
      for (int d : {2, 3})
        for (int n : {1, 2}) {
          auto P = ab_polytope(A, B, d, n);
          CHECK(P.normalized_volume_int() == Int(A + B) * ipow(Int(d), static_cast<unsigned>(n)));
        }
}

TEST_CASE("delta complex volumes and the Delta_3 = Delta_4 - Delta_5 identity") {
  SECTION("worked instance A=1, d=3, e=2, h=1, n=1") {
    auto C = ab_delta_complex(1, 1, 3, 2, 1, 1);
    CHECK(C.vol1 == Rat(3));           // A d^n
    CHECK(C.vol2 == Rat(2));           // h e^n
    CHECK(C.vol4 - C.vol5 == Rat(2));  // (eA/(d-e)) (d^n - e^n)
    CHECK(C.vol3 == Rat(2));
    CHECK(C.total_bound == Rat(7));  // A d^n + h e^n + 2
  }
  SECTION("grid") {
    for (int A : {1, 2, 3})
      for (int d : {2, 3, 4, 5})
        for (int n : {1, 2})
          for (int e = 1; e < d; ++e)
            for (int h = 0; Rat(e) >= Rat(h * d, A + h) && h <= 3; ++h) {
              auto C = ab_delta_complex(A, 1, d, e, h, n);
              Rat ratio(e * A, d - e);
              CHECK(C.vol1 == Rat(Int(A) * ipow(Int(d), static_cast<unsigned>(n))));
              CHECK(C.vol2 == Rat(Int(h) * ipow(Int(e), static_cast<unsigned>(n))));
              CHECK(C.vol3 == ratio * Rat(ipow(Int(d), static_cast<unsigned>(n)) -
                                          ipow(Int(e), static_cast<unsigned>(n))));
            }
  }
}

TEST_CASE("regime check") {
  // e < hd/(A+h): Theorem 1 territory, complex refuses
  bool threw = false;
  try {
    ab_delta_complex(1, 1, 3, 1, 2, 1);  // hd/(A+h) = 2 > 1
  } catch (const Error& err) {
    threw = err.code() == errc::regime_violation;
  }
  CHECK(threw);
  // boundary case e == hd/(A+h) accepted: A=1, h=1, d=2 -> threshold 1
  CHECK_NOTHROW(ab_delta_complex(1, 1, 2, 1, 1, 1));
}

TEST_CASE("betti bound and inclusion-exclusion") {
  auto b1 = betti_bound_theorem1(1, 1, 2, 1);
  CHECK(b1.value == 2);
  CHECK(b1.agree);
  auto b2 = betti_bound_theorem1(1, 1, 2, 2);
  CHECK(b2.value == 2);
  CHECK(b2.alternating_sum == 2);
  auto b3 = betti_bound_theorem1(2, 3, 1, 2);
  CHECK(b3.value == 0);
  CHECK(b3.agree);
  for (int A : {1, 2, 3})
    for (int B : {1, 2, 3})
      for (int d : {2, 3, 4, 5})
        for (int n : {1, 2}) CHECK(betti_bound_theorem1(A, B, d, n).agree);
}

TEST_CASE("Theorem 3 degree bound") {
  CHECK(degree_bound_theorem3(1, 3, 2, 1, 1) == Rat(9));
  CHECK(degree_bound_theorem3(1, 3, 2, 0, 1) == Rat(6));  // P_B = 0 corollary
  // h = eA/(d-e) exactly: second term vanishes
  CHECK(degree_bound_theorem3(1, 2, 1, 1, 1) == Rat(6));
  bool threw = false;
  try {
    degree_bound_theorem3(1, 3, 1, 2, 1);
  } catch (const Error& err) {
    threw = err.code() == errc::regime_violation;
  }
  CHECK(threw);
}

TEST_CASE("facet denominators") {
  SECTION("D(Delta_1) = A") {
    for (int A : {1, 2, 3})
      for (int d : {2, 3})
        for (int n : {1, 2}) CHECK(delta1(A, d, n).denominator() == Int(A));
  }
  SECTION("D(Delta_2) matches the closed form [B, dB/(A+B,dB)]") {
    for (int A : {1, 2, 3})
      for (int B : {1, 2, 3})
        for (int d : {2, 3, 4, 5})
          for (int n : {1, 2})
            CHECK(delta2_facial(A, B, d, n).denominator() == delta2_denominator_closed_form(A, B, d));
  }
  SECTION("worked examples") {
    CHECK(delta2_facial(1, 1, 3, 1).denominator() == 3);
    CHECK(delta2_facial(1, 1, 2, 1).denominator() == 1);
  }
  SECTION("D(Delta) = lcm(D(Delta_1), D(Delta_2))") {
    for (int A : {1, 2, 3})
      for (int B : {1, 2, 3})
        for (int d : {2, 3, 4, 5})
          for (int n : {1, 2})
            CHECK(ab_polytope(A, B, d, n).denominator() ==
                  int_lcm(delta1(A, d, n).denominator(), delta2_facial(A, B, d, n).denominator()));
  }
}

TEST_CASE("weight function") {
  auto P = ab_polytope(1, 1, 2, 1);
  SECTION("examples") {
    CHECK(*P.weight(std::vector<int>{1, 2}) == Rat(1));  // vertex
    CHECK(*P.weight(std::vector<int>{0, 1}) == Rat(1));  // on the -t0 + t1 = 1 facet
    CHECK(*P.weight(std::vector<int>{0, 0}) == Rat(0));
    CHECK_FALSE(P.weight(std::vector<int>{0, -1}).has_value());  // below the cone
  }
  SECTION("vertices have weight 1") {
    for (int A : {1, 2})
      for (int B : {1, 2})
        for (int d : {2, 3}) {
          auto Q = ab_polytope(A, B, d, 2);
          for (const auto& v : Q.vertices()) {
            bool is_origin = true;
            for (const auto& c : v) is_origin = is_origin && c == 0;
            if (is_origin) continue;
            CHECK(*Q.weight(v) == Rat(1));
          }
        }
  }
  SECTION("positive homogeneity on lattice points") {
    for (int x = -3; x <= 3; ++x)
      for (int y = 0; y <= 3; ++y) {
        auto w = P.weight(std::vector<int>{x, y});
        if (!w) continue;
        for (int c = 2; c <= 3; ++c) {
          auto wc = P.weight(std::vector<int>{c * x, c * y});
          REQUIRE(wc.has_value());
          CHECK(*wc == Rat(c) * *w);
        }
      }
  }
  SECTION("g-exponent interiority matches the B-form threshold") {
    auto th = interiority_thresholds(1, 1, 2);
    CHECK(th.b_form == Rat(1));
    CHECK(th.a_form == Rat(1));
    // exponent (0, e) has weight e*(A+B)/(dB)
    CHECK(*P.weight(std::vector<int>{0, 1}) >= Rat(1));  // e=1 is not strictly interior
    auto P2 = ab_polytope(1, 2, 3, 1);                   // threshold Bd/(A+B) = 2
    CHECK(*P2.weight(std::vector<int>{0, 1}) < Rat(1));
    CHECK(*P2.weight(std::vector<int>{0, 2}) == Rat(1));
  }
}
