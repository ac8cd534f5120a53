#pragma once

// Generic Newton polygon search: sample the family, run the torus pipeline
// on every draw, take the pointwise-lowest polygon, and compare against the
// Adolphson-Sperber Hodge polygon.

#include <random>
#include <string>
#include <vector>

#include "absum/delta_complex.hpp"
#include "absum/errors.hpp"
#include "absum/hodge.hpp"
#include "absum/instance_io.hpp"
#include "absum/lfunction.hpp"
#include "absum/sampling.hpp"

namespace absum {

struct GnpParams {
  int64_t p = 5;
  int s = 1;
  int d = 2;
  int A = 1;
  int B = 1;
  int n = 1;
  int e_max = 0;
  int samples = 20;
  uint64_t seed = 7;
  int regularity_ext = 2;
  int horizon_extra = 2;  // horizon = degree + this
  SumOptions sum;
};

struct GnpSample {
  uint64_t seed = 0;
  std::string hash;
  SlopePolygon np;
  bool above_hp = false;
};

struct GnpReport {
  int degree = 0;
  int horizon = 0;
  Int congruence_modulus;  // [A, dB]: ordinarity is expected when p = 1 mod this
  bool congruence_holds = false;
  HodgePolygon hp;
  std::vector<GnpSample> samples;
  std::vector<Rat> min_np_heights;
  bool all_above = true;
  bool ordinary = false;
};

inline GnpReport gnp_search(const GnpParams& P) {
  GnpReport rep;
  rep.degree = static_cast<int>((Int(P.A + P.B) * ipow(Int(P.d), static_cast<unsigned>(P.n)))
                                    .convert_to<int64_t>());
  rep.horizon = rep.degree + P.horizon_extra;
  rep.congruence_modulus = int_lcm(Int(P.A), Int(P.d) * P.B);
  rep.congruence_holds = Int(P.p - 1) % rep.congruence_modulus == 0;
  rep.hp = hodge_numbers_AS(ab_polytope(P.A, P.B, P.d, P.n));
  require(rep.hp.polygon.degree() == static_cast<size_t>(rep.degree), errc::internal,
          "Hodge polygon degree mismatch");

  std::mt19937_64 seeder(P.seed);
  std::vector<SlopePolygon> polys;
  for (int i = 0; i < P.samples; ++i) {
    uint64_t sample_seed = seeder();
    SampleParams sp;
    sp.p = P.p;
    sp.s = P.s;
    sp.d = P.d;
    sp.A = P.A;
    sp.B = P.B;
    sp.n = P.n;
    sp.e_max = P.e_max;
    sp.seed = sample_seed;
    sp.regularity_ext = P.regularity_ext;
    auto drawn = sample_family(sp);

    SumOptions opts = P.sum;
    opts.cache_key.clear();  // per-instance key resolved by compute_sums
    auto sums = compute_sums(drawn.poly, SumDomain::torus(), rep.horizon, opts);
    auto L = l_polynomial_extract(sums, P.n, rep.degree, P.s);
    require(L.degree == rep.degree, errc::degree_mismatch,
            "torus L-polynomial has degree " + std::to_string(L.degree) + ", expected " +
                std::to_string(rep.degree));
    auto cmp = np_vs_hp(L, rep.hp.polygon);
    GnpSample out{sample_seed, instance_hash(drawn.poly), cmp.np, cmp.above};
    if (!cmp.above) rep.all_above = false;
    polys.push_back(cmp.np);
    rep.samples.push_back(std::move(out));
  }
  rep.min_np_heights = min_heights(polys);
  rep.ordinary = rep.min_np_heights == rep.hp.polygon.heights();
  return rep;
}

}  // namespace absum
