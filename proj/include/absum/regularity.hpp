#pragma once

// Bounded verdicts for the scheme-emptiness conditions: Dwork regularity,
// affine Dwork regularity, smoothness of the leading form, and
// nondegeneracy with respect to the Newton polytope.  Emptiness over the
// algebraic closure is only ever certified up to a stated extension degree;
// the verdict records that bound.

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "absum/ab_polynomial.hpp"
#include "absum/errors.hpp"
#include "absum/finite_field.hpp"
#include "absum/laurent.hpp"
#include "absum/polytope.hpp"

namespace absum {

struct SearchWitness {
  int m = 1;                         // extension degree where the point lives
  std::vector<uint64_t> point_codes;  // element codes in F_{q^m}
  std::string note;
};

struct RegularityVerdict {
  bool ok = false;
  int checked_to = 0;
  std::optional<SearchWitness> witness;
};

inline int default_regularity_extension(int n, int d) { return std::max(3, n * d); }

namespace detail {

inline LaurentPoly map_coefficients(const LaurentPoly& L, const FieldEmbedding& emb) {
  LaurentPoly out(emb.to, L.n_vars());
  for (const auto& [e, c] : L.terms()) out.add_term(e, emb(c));
  return out;
}

// Scan [0, total) in parallel over a fixed chunk grid and return the
// smallest index accepted by `hit`.  The chunk grid does not depend on the
// thread count, workers skip chunks that cannot beat the current best, and
// each chunk is scanned in order, so the result is exactly the sequential
// first hit.
template <class HitFn>
std::optional<uint64_t> parallel_first_index(uint64_t total, const HitFn& hit) {
  if (total == 0) return std::nullopt;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw < 1) hw = 1;
  if (total < 4096 || hw == 1) {  // not worth spawning threads
    for (uint64_t i = 0; i < total; ++i)
      if (hit(i)) return i;
    return std::nullopt;
  }
  const uint64_t kChunks = 64;  // fixed: witnesses do not depend on hw
  const uint64_t chunk = (total + kChunks - 1) / kChunks;
  std::atomic<uint64_t> next{0};
  std::atomic<uint64_t> best{UINT64_MAX};
  auto worker = [&] {
    for (;;) {
      uint64_t c = next.fetch_add(1);
      if (c >= kChunks) return;
      uint64_t lo = c * chunk;
      uint64_t hi = std::min(total, lo + chunk);
      if (lo >= best.load()) continue;  // a strictly earlier hit exists
      for (uint64_t i = lo; i < hi; ++i) {
        if (i >= best.load()) break;
        if (hit(i)) {
          uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < hw; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  uint64_t b = best.load();
  if (b == UINT64_MAX) return std::nullopt;
  return b;
}

// Common zero of `polys` among projective points of P^{V-1}(F_{q^m}),
// enumerated by leading-one representatives in code order.
inline std::optional<std::vector<uint64_t>> projective_common_zero(
    const std::vector<LaurentPoly>& polys, const FieldPtr& ext) {
  const int V = polys.front().n_vars();
  const uint64_t q = ext->q();
  // block sizes per leading position: q^{V-1-lead}
  std::vector<uint64_t> block(static_cast<size_t>(V));
  uint64_t total = 0;
  for (int lead = 0; lead < V; ++lead) {
    uint64_t fc = 1;
    for (int j = lead + 1; j < V; ++j) fc *= q;
    block[static_cast<size_t>(lead)] = fc;
    total += fc;
  }
  auto decode = [&](uint64_t idx, std::vector<FieldElement>& pt) {
    int lead = 0;
    while (idx >= block[static_cast<size_t>(lead)]) {
      idx -= block[static_cast<size_t>(lead)];
      ++lead;
    }
    for (int j = 0; j < V; ++j) {
      if (j < lead)
        pt[static_cast<size_t>(j)] = ext->zero();
      else if (j == lead)
        pt[static_cast<size_t>(j)] = ext->one();
      else {
        pt[static_cast<size_t>(j)] = ext->from_code(idx % q);
        idx /= q;
      }
    }
  };
  auto found = parallel_first_index(total, [&](uint64_t idx) {
    thread_local std::vector<FieldElement> pt;
    pt.assign(static_cast<size_t>(V), ext->zero());
    decode(idx, pt);
    for (const auto& f : polys)
      if (!f.evaluate(pt).is_zero()) return false;
    return true;
  });
  if (!found) return std::nullopt;
  std::vector<FieldElement> pt(static_cast<size_t>(V), ext->zero());
  decode(*found, pt);
  std::vector<uint64_t> codes;
  for (const auto& x : pt) codes.push_back(x.code());
  return codes;
}

inline std::optional<std::vector<uint64_t>> torus_common_zero(const std::vector<LaurentPoly>& polys,
                                                              const FieldPtr& ext) {
  const int V = polys.front().n_vars();
  const uint64_t qm1 = ext->q() - 1;
  uint64_t total = 1;
  for (int j = 0; j < V; ++j) total *= qm1;
  auto decode = [&](uint64_t idx, std::vector<uint64_t>& codes) {
    for (int j = 0; j < V; ++j) {
      codes[static_cast<size_t>(j)] = 1 + idx % qm1;
      idx /= qm1;
    }
  };
  auto found = parallel_first_index(total, [&](uint64_t idx) {
    thread_local std::vector<uint64_t> codes;
    thread_local std::vector<FieldElement> pt;
    codes.assign(static_cast<size_t>(V), 1);
    pt.assign(static_cast<size_t>(V), ext->one());
    decode(idx, codes);
    for (int j = 0; j < V; ++j) pt[static_cast<size_t>(j)] = ext->from_code(codes[static_cast<size_t>(j)]);
    for (const auto& f : polys)
      if (!f.evaluate(pt).is_zero()) return false;
    return true;
  });
  if (!found) return std::nullopt;
  std::vector<uint64_t> codes(static_cast<size_t>(V), 1);
  decode(*found, codes);
  return codes;
}

}  // namespace detail

// Dwork regularity of a homogeneous form F with respect to its coordinates:
// the projective scheme F = t_0 dF/dt_0 = ... = 0 is empty.  When deg F is
// prime to p the Euler relation makes the F = 0 condition redundant.
inline RegularityVerdict is_dwork_regular(const LaurentPoly& F, int max_ext) {
  require(!F.is_zero(), errc::empty_f, "Dwork regularity of the zero form");
  require(F.is_polynomial() && F.is_homogeneous(), errc::internal, "F must be a homogeneous polynomial");
  const FieldPtr& k = F.field_ptr();
  const int d = F.total_degree();
  const bool include_f = d % k->p() == 0;
  std::vector<LaurentPoly> polys;
  for (int i = 0; i < F.n_vars(); ++i) polys.push_back(F.euler_partial(i));
  if (include_f) polys.push_back(F);
  for (int m = 1; m <= max_ext; ++m) {
    auto [ext, emb] = extend_field(k, m);
    std::vector<LaurentPoly> mapped;
    for (const auto& f : polys) mapped.push_back(detail::map_coefficients(f, emb));
    auto hit = detail::projective_common_zero(mapped, ext);
    if (hit) return {false, m, SearchWitness{m, *hit, "projective common zero of the Euler partials"}};
  }
  return {true, max_ext, std::nullopt};
}

inline RegularityVerdict is_affine_dwork_regular(const LaurentPoly& f, int max_ext) {
  return is_dwork_regular(f.homogenize(), max_ext);
}

// Deligne condition on the leading form: f_d = df_d/dt_i = 0 has no point in
// P^{n-1}; with gcd(d, p) = 1 only the partials matter.
inline RegularityVerdict leading_form_smooth(const LaurentPoly& f, int max_ext) {
  require(!f.is_zero(), errc::empty_f, "leading form of zero");
  LaurentPoly fd = f.leading_form();
  const FieldPtr& k = f.field_ptr();
  const int d = f.total_degree();
  const bool include_f = d % k->p() == 0;
  std::vector<LaurentPoly> polys;
  for (int i = 0; i < fd.n_vars(); ++i) polys.push_back(fd.partial(i));
  if (include_f) polys.push_back(fd);
  for (int m = 1; m <= max_ext; ++m) {
    auto [ext, emb] = extend_field(k, m);
    std::vector<LaurentPoly> mapped;
    for (const auto& g : polys) mapped.push_back(detail::map_coefficients(g, emb));
    auto hit = detail::projective_common_zero(mapped, ext);
    if (hit) return {false, m, SearchWitness{m, *hit, "singular point of the leading-form hypersurface"}};
  }
  return {true, max_ext, std::nullopt};
}

// Nondegeneracy with respect to Delta_infinity(L): for every face not
// containing the origin, the partials of the face polynomial have no common
// zero on the torus.
inline RegularityVerdict is_nondegenerate(const LaurentPoly& L, const Polytope& delta, int max_ext) {
  require(!L.is_zero(), errc::empty_f, "nondegeneracy of zero");
  Polytope own = newton_polytope_at_infinity(L);
  require(own.same_polytope(delta), errc::polytope_mismatch,
          "supplied polytope is not the Newton polytope at infinity");
  const FieldPtr& k = L.field_ptr();
  const int V = L.n_vars();
  auto support = L.support();

  struct FaceJob {
    std::vector<LaurentPoly> partials;
    std::string label;
  };
  std::vector<FaceJob> jobs;
  std::vector<Face> faces;
  if (delta.dim() > 0) faces = delta.proper_faces();
  for (const auto& face : faces) {
    if (face.contains_origin) continue;
    LaurentPoly ftau(k, V);
    for (const auto& e : support)
      if (delta.point_on_face(face, qvec_from_ints(e))) {
        auto it = L.terms().find(e);
        ftau.add_term(e, it->second);
      }
    if (ftau.is_zero()) continue;  // face carries no exponent of L
    FaceJob job;
    for (int i = 0; i < V; ++i) job.partials.push_back(ftau.euler_partial(i));
    job.label = "face with " + std::to_string(face.vertex_ids.size()) + " vertices, dim " +
                std::to_string(face.dim);
    jobs.push_back(std::move(job));
  }

  for (int m = 1; m <= max_ext; ++m) {
    auto [ext, emb] = extend_field(k, m);
    for (const auto& job : jobs) {
      std::vector<LaurentPoly> mapped;
      for (const auto& f : job.partials) mapped.push_back(detail::map_coefficients(f, emb));
      auto hit = detail::torus_common_zero(mapped, ext);
      if (hit) return {false, m, SearchWitness{m, *hit, job.label}};
    }
  }
  return {true, max_ext, std::nullopt};
}

inline RegularityVerdict is_nondegenerate(const LaurentPoly& L, int max_ext) {
  return is_nondegenerate(L, newton_polytope_at_infinity(L), max_ext);
}

// Commodeness: for each subset S of the polynomial coordinates, the slice of
// the Newton polytope by {w_j = 0, j in S} has dimension n_vars - #S.
struct CommodeEntry {
  std::vector<int> subset;
  int dim = 0;
  int expected = 0;
};

struct CommodeReport {
  bool commode = true;
  std::vector<CommodeEntry> entries;
};

inline CommodeReport is_commode(const LaurentPoly& L, const std::vector<int>& poly_vars) {
  require(!L.is_zero(), errc::empty_f, "commodeness of zero");
  require(L.is_polynomial_in(poly_vars), errc::internal,
          "L must be a polynomial in the selected coordinates");
  CommodeReport report;
  const int V = L.n_vars();
  auto support = L.support();
  const size_t k = poly_vars.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    std::vector<int> S;
    for (size_t i = 0; i < k; ++i)
      if (mask & (uint64_t{1} << i)) S.push_back(poly_vars[i]);
    std::vector<QVec> pts{QVec(static_cast<size_t>(V), Rat(0))};
    for (const auto& e : support) {
      bool keep = true;
      for (int j : S)
        if (e[static_cast<size_t>(j)] != 0) {
          keep = false;
          break;
        }
      if (keep) pts.push_back(qvec_from_ints(e));
    }
    auto hull = Polytope::hull(V, std::move(pts));
    CommodeEntry entry{S, hull.dim(), V - static_cast<int>(S.size())};
    if (entry.dim != entry.expected) report.commode = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace absum
