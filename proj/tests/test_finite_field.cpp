#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "absum/cyclotomic.hpp"
#include "absum/finite_field.hpp"

using namespace absum;

TEST_CASE("build_field picks the smallest monic irreducible modulus") {
  auto f3 = build_field(3, 1);
  CHECK(f3->modulus() == Coeffs{0, 1});  // x

  auto f9 = build_field(3, 2);
  CHECK(f9->modulus() == Coeffs{1, 0, 1});  // x^2 + 1

  auto f8 = build_field(2, 3);
  CHECK(f8->modulus() == Coeffs{1, 1, 0, 1});  // x^3 + x + 1

  CHECK_THROWS_AS(build_field(4, 1), Error);
  CHECK_THROWS_AS(build_field(1, 1), Error);
}

TEST_CASE("field arithmetic basics") {
  auto f9 = build_field(3, 2);
  auto u = f9->gen();
  CHECK((u * u) == f9->from_int(-1));  // u^2 = -1 mod (u^2+1)
  CHECK((u * u.inverse()) == f9->one());
  auto two = f9->from_int(2);
  CHECK((two * two) == f9->one());
  CHECK(f9->from_code(5).code() == 5);

  auto f25 = build_field(5, 2);
  for (uint64_t c = 1; c < f25->q(); ++c) {
    auto x = f25->from_code(c);
    CHECK((x * x.inverse()) == f25->one());
  }
}

TEST_CASE("cross-field arithmetic is a hard error") {
  auto f3 = build_field(3, 1);
  auto f5 = build_field(5, 1);
  CHECK_THROWS_AS(f3->one() + f5->one(), Error);
}

TEST_CASE("extend_field embeddings commute with arithmetic") {
  auto f3 = build_field(3, 1);
  auto [f3b, id] = extend_field(f3, 1);
  CHECK(f3b->same_field(*f3));
  CHECK(id(f3->from_int(2)) == f3b->from_int(2));

  auto [f9, emb] = extend_field(f3, 2);
  CHECK(f9->degree() == 2);
  CHECK(emb(f3->from_int(2)) == f9->from_int(2));

  // F_4 -> F_16: image of the generator satisfies the base modulus.
  auto f4 = build_field(2, 2);
  auto [f16, e2] = extend_field(f4, 2);
  CHECK(f16->degree() == 4);
  auto r = e2.gen_image;
  const auto& mod = f4->modulus();
  auto acc = f16->zero();
  for (size_t i = mod.size(); i-- > 0;) acc = acc * r + f16->from_int(mod[i]);
  CHECK(acc.is_zero());
  // ring map on a few pairs
  for (uint64_t a = 0; a < f4->q(); ++a)
    for (uint64_t b = 0; b < f4->q(); ++b) {
      auto x = f4->from_code(a), y = f4->from_code(b);
      CHECK(e2(x * y) == e2(x) * e2(y));
      CHECK(e2(x + y) == e2(x) + e2(y));
    }
}

TEST_CASE("trace examples and properties") {
  auto f3 = build_field(3, 1);
  CHECK(trace_to_prime(f3->from_int(2)) == 2);

  auto f9 = build_field(3, 2);
  CHECK(trace_to_prime(f9->gen()) == 0);     // u + u^3 = 0
  CHECK(trace_to_prime(f9->from_int(1)) == 2);

  // Frobenius invariance, additivity, F_p-linearity.
  for (uint64_t a = 0; a < f9->q(); ++a) {
    auto x = f9->from_code(a);
    CHECK(trace_to_prime(x.pow(3)) == trace_to_prime(x));
    for (uint64_t b = 0; b < f9->q(); ++b) {
      auto y = f9->from_code(b);
      CHECK(trace_to_prime(x + y) == (trace_to_prime(x) + trace_to_prime(y)) % 3);
    }
    CHECK(trace_to_prime(x + x) == (2 * trace_to_prime(x)) % 3);
  }
}

TEST_CASE("trace is surjective onto F_p for q up to 3^6") {
  for (auto [p, s] : std::vector<std::pair<int64_t, int>>{{2, 3}, {3, 2}, {3, 4}, {3, 6}, {5, 2}}) {
    auto f = build_field(p, s);
    std::set<int64_t> hit;
    for (uint64_t c = 0; c < f->q(); ++c) hit.insert(trace_to_prime(f->from_code(c)));
    CHECK(hit.size() == static_cast<size_t>(p));
  }
}

TEST_CASE("relative trace composes down to the absolute trace") {
  auto f16 = build_field(2, 4);
  for (uint64_t c = 0; c < f16->q(); ++c) {
    auto x = f16->from_code(c);
    auto rel = trace_relative(x, 2);  // lands in F_4 inside F_16
    CHECK(rel == rel.pow(4));         // fixed by Frobenius^2
  }
}

TEST_CASE("full additive character sum vanishes") {
  for (auto [p, s] : std::vector<std::pair<int64_t, int>>{{3, 1}, {3, 2}, {5, 1}, {2, 3}}) {
    auto f = build_field(p, s);
    CycInt total(p);
    for (uint64_t c = 0; c < f->q(); ++c)
      total += CycInt::character(p, Int(trace_to_prime(f->from_code(c))));
    CHECK(total.is_zero());
  }
}

TEST_CASE("enumeration order and chunking") {
  auto f3 = build_field(3, 1);
  auto all = enumerate_elements(f3, false);
  REQUIRE(all.size() == 3);
  CHECK(all[0] == f3->from_int(0));
  CHECK(all[1] == f3->from_int(1));
  CHECK(all[2] == f3->from_int(2));
  auto units = enumerate_elements(f3, true);
  REQUIRE(units.size() == 2);
  CHECK(units[0] == f3->from_int(1));

  auto f9 = build_field(3, 2);
  auto chunks = enumerate_chunks(f9, false, 2);
  REQUIRE(chunks.size() == 2);
  CHECK(chunks[0].size() == 5);
  CHECK(chunks[1].size() == 4);
  std::set<uint64_t> seen;
  for (const auto& r : chunks)
    for (uint64_t c = r.begin; c < r.end; ++c) CHECK(seen.insert(c).second);
  CHECK(seen.size() == 9);

  // Bijection: every element exactly once.
  std::set<uint64_t> codes;
  for (const auto& e : enumerate_elements(f9, false)) codes.insert(e.code());
  CHECK(codes.size() == f9->q());
}
