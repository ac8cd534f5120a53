#pragma once

// Exact exponential sums S_m / S_m^* by exhaustive point counting.  The
// kernel histograms the absolute trace of G at every point: by linearity of
// the trace, each monomial contributes trace_of_log[log c + e . log t], so
// the inner loop over t0 = g^l is pure integer arithmetic on precomputed
// group offsets.  Histograms merge by addition, so the result is identical
// for every thread count and chunk layout.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "absum/ab_polynomial.hpp"
#include "absum/cache.hpp"
#include "absum/cyclotomic.hpp"
#include "absum/errors.hpp"
#include "absum/eval_tables.hpp"
#include "absum/laurent.hpp"

namespace absum {

enum class DomainKind { affine, torus, subset };

struct SumDomain {
  DomainKind kind = DomainKind::affine;
  std::vector<int> subset;  // for DomainKind::subset

  static SumDomain affine() { return {DomainKind::affine, {}}; }
  static SumDomain torus() { return {DomainKind::torus, {}}; }
  static SumDomain subset_of(std::vector<int> s) { return {DomainKind::subset, std::move(s)}; }

  std::string tag() const {
    switch (kind) {
      case DomainKind::affine: return "affine";
      case DomainKind::torus: return "torus";
      case DomainKind::subset: {
        std::string t = "subset";
        for (int v : subset) t += "_" + std::to_string(v);
        return t;
      }
    }
    return "?";
  }
};

struct SumValue {
  int m = 1;
  std::string domain_tag;
  CycInt value;
  uint64_t point_count = 0;
};

struct SumOptions {
  int threads = 0;                        // 0: hardware concurrency
  uint64_t budget = uint64_t{1} << 38;    // max point evaluations per sum
  uint64_t max_table_q = uint64_t{1} << 24;
  const SumCache* cache = nullptr;
  std::string cache_key;                  // instance-level prefix; empty disables caching
};

namespace detail {

struct KernelTerm {
  int64_t log_coeff = 0;
  std::vector<int64_t> outer_exp;      // exponents on the outer variables
  std::vector<uint64_t> outer_exp_red; // the same, reduced mod q-1
};

struct KernelGroup {
  int64_t t0_exp = 0;
  uint64_t step = 0;  // t0_exp mod q-1
  std::vector<KernelTerm> terms;
};

struct KernelPlan {
  const EvalField* F = nullptr;
  std::vector<KernelGroup> groups;
  std::vector<uint64_t> outer_lo;   // 1 for unit variables, 0 for affine ones
  uint64_t outer_total = 1;
  uint64_t inner_total = 0;  // q - 1
};

inline void run_kernel_chunk(const KernelPlan& plan, uint64_t outer_begin, uint64_t outer_end,
                             uint64_t inner_begin, uint64_t inner_end, std::vector<uint64_t>& counts) {
  const EvalField& F = *plan.F;
  const uint64_t q = F.q(), qm1 = F.qm1();
  const int64_t p = F.p();
  const size_t n_outer = plan.outer_lo.size();
  const uint8_t* trace_of_log = F.trace_of_log_table().data();

  // tr accumulates at most (groups+1)*(p-1); fold with a lookup table.
  size_t max_tr = (plan.groups.size() + 1) * static_cast<size_t>(p - 1) + 1;
  std::vector<uint8_t> modtab(max_tr + 1);
  for (size_t t = 0; t <= max_tr; ++t) modtab[t] = static_cast<uint8_t>(t % static_cast<size_t>(p));

  std::vector<uint64_t> outer_codes(n_outer);
  std::vector<int64_t> outer_logs(n_outer);
  // decode outer_begin into the mixed-radix odometer
  {
    uint64_t rest = outer_begin;
    for (size_t i = 0; i < n_outer; ++i) {
      uint64_t size = q - plan.outer_lo[i];
      outer_codes[i] = plan.outer_lo[i] + rest % size;
      rest /= size;
    }
  }

  std::vector<uint64_t> live_lq, live_step;
  live_lq.reserve(plan.groups.size());
  live_step.reserve(plan.groups.size());
  std::vector<uint64_t> off;
  off.reserve(plan.groups.size());

  for (uint64_t outer = outer_begin; outer < outer_end; ++outer) {
    for (size_t i = 0; i < n_outer; ++i)
      outer_logs[i] = F.log_of_code(outer_codes[i]);

    // Evaluate each t0-group at the outer point.
    live_lq.clear();
    live_step.clear();
    uint32_t tr_base = 0;
    for (const auto& grp : plan.groups) {
      uint64_t acc_code = 0;
      for (const auto& term : grp.terms) {
        bool dead = false;
        int64_t l = term.log_coeff;
        for (size_t i = 0; i < n_outer; ++i) {
          int64_t e = term.outer_exp[i];
          if (e == 0) continue;
          if (outer_logs[i] < 0) {  // variable is zero; negative exponents never see zeros
            dead = true;
            break;
          }
          l += static_cast<int64_t>(term.outer_exp_red[i]) * outer_logs[i];
        }
        if (dead) continue;
        acc_code = F.add_codes(acc_code, F.exp_code(static_cast<uint64_t>(l % static_cast<int64_t>(qm1))));
      }
      if (acc_code == 0) continue;  // the group vanishes identically at this point
      uint64_t lq = static_cast<uint64_t>(F.log_of_code(acc_code));
      if (grp.step == 0) {
        tr_base += trace_of_log[lq];  // t0-independent contribution
      } else {
        live_lq.push_back(lq);
        live_step.push_back(grp.step);
      }
    }

    const size_t glive = live_lq.size();
    off.assign(glive, 0);
    for (size_t k = 0; k < glive; ++k)
      off[k] = (live_step[k] * (inner_begin % qm1)) % qm1;

    for (uint64_t l0 = inner_begin; l0 < inner_end; ++l0) {
      uint32_t tr = tr_base;
      for (size_t k = 0; k < glive; ++k) {
        uint64_t idx = live_lq[k] + off[k];
        if (idx >= qm1) idx -= qm1;
        tr += trace_of_log[idx];
        off[k] += live_step[k];
        if (off[k] >= qm1) off[k] -= qm1;
      }
      ++counts[modtab[tr]];
    }

    // advance the odometer
    for (size_t i = 0; i < n_outer; ++i) {
      if (++outer_codes[i] < q) break;
      outer_codes[i] = plan.outer_lo[i];
    }
  }
}

}  // namespace detail

// Exact character sum of a Laurent polynomial over the degree-m extension;
// units[i] selects k_m^* versus k_m for each variable.  Variable 0 (the
// inner loop) must range over units.
inline SumValue exp_sum_laurent(const LaurentPoly& L, int m, const std::vector<bool>& units,
                                const SumOptions& opts = {}, const std::string& domain_tag = "custom") {
  const FieldPtr& k = L.field_ptr();
  const int V = L.n_vars();
  require(V >= 1, errc::internal, "sum needs at least one variable");
  require(static_cast<int>(units.size()) == V, errc::internal, "unit flag arity mismatch");
  require(units[0], errc::zero_t0, "variable 0 must range over units");
  require(m >= 1, errc::internal, "extension degree must be positive");

  const int64_t p = k->p();

  std::string full_key;
  if (opts.cache != nullptr && !opts.cache_key.empty()) {
    full_key = opts.cache_key + "-m" + std::to_string(m) + "-" + domain_tag;
    if (auto hit = opts.cache->load(full_key))
      return SumValue{m, domain_tag, hit->value, hit->point_count};
  }

  // Work budget.
  uint64_t points = 1;
  {
    uint64_t qm = upow_checked(k->q(), static_cast<unsigned>(m), opts.budget + 1);
    require(qm <= opts.budget, errc::budget_exceeded, "extension field exceeds the work budget");
    for (int i = 0; i < V; ++i) {
      uint64_t size = units[static_cast<size_t>(i)] ? qm - 1 : qm;
      require(points <= opts.budget / std::max<uint64_t>(size, 1), errc::budget_exceeded,
              "point count exceeds the work budget (" + std::to_string(opts.budget) + ")");
      points *= size;
    }
  }

  auto [ext, emb] = extend_field(k, m);
  EvalField F(ext, opts.max_table_q);
  const uint64_t qm1 = F.qm1();

  // Group the embedded terms by their t0 exponent.
  detail::KernelPlan plan;
  plan.F = &F;
  plan.inner_total = qm1;
  std::map<int64_t, detail::KernelGroup> groups;
  for (const auto& [e, c] : L.terms()) {
    for (int i = 0; i < V; ++i)
      require(e[static_cast<size_t>(i)] >= 0 || units[static_cast<size_t>(i)], errc::zero_t0,
              "negative exponent on an affine variable");
    FieldElement ce = emb(c);
    detail::KernelTerm term;
    term.log_coeff = F.log_of_code(ce.code());
    for (int i = 1; i < V; ++i) {
      int64_t ei = e[static_cast<size_t>(i)];
      term.outer_exp.push_back(ei);
      int64_t red = ei % static_cast<int64_t>(qm1);
      if (red < 0) red += static_cast<int64_t>(qm1);
      term.outer_exp_red.push_back(static_cast<uint64_t>(red));
    }
    int64_t b = e[0];
    auto& grp = groups[b];
    grp.t0_exp = b;
    int64_t step = b % static_cast<int64_t>(qm1);
    if (step < 0) step += static_cast<int64_t>(qm1);
    grp.step = static_cast<uint64_t>(step);
    grp.terms.push_back(std::move(term));
  }
  for (auto& [b, grp] : groups) plan.groups.push_back(std::move(grp));

  plan.outer_total = 1;
  for (int i = 1; i < V; ++i) {
    plan.outer_lo.push_back(units[static_cast<size_t>(i)] ? 1 : 0);
    plan.outer_total *= F.q() - plan.outer_lo.back();
  }

  // Chunk layout: split the outer space when it is large enough, otherwise
  // split the inner t0 range.  Either way the histograms merge by addition.
  int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  struct Work {
    uint64_t ob, oe, ib, ie;
  };
  std::vector<Work> work;
  if (plan.outer_total >= static_cast<uint64_t>(threads) * 4) {
    uint64_t chunk = plan.outer_total / static_cast<uint64_t>(threads);
    uint64_t extra = plan.outer_total % static_cast<uint64_t>(threads);
    uint64_t start = 0;
    for (int t = 0; t < threads; ++t) {
      uint64_t len = chunk + (static_cast<uint64_t>(t) < extra ? 1 : 0);
      work.push_back({start, start + len, 0, qm1});
      start += len;
    }
  } else {
    uint64_t chunk = qm1 / static_cast<uint64_t>(threads);
    uint64_t extra = qm1 % static_cast<uint64_t>(threads);
    uint64_t start = 0;
    for (int t = 0; t < threads; ++t) {
      uint64_t len = chunk + (static_cast<uint64_t>(t) < extra ? 1 : 0);
      if (len == 0) continue;
      work.push_back({0, plan.outer_total, start, start + len});
      start += len;
    }
  }

  std::vector<std::vector<uint64_t>> partial(work.size(), std::vector<uint64_t>(static_cast<size_t>(p), 0));
  std::vector<std::thread> pool;
  for (size_t w = 0; w < work.size(); ++w)
    pool.emplace_back([&, w] {
      detail::run_kernel_chunk(plan, work[w].ob, work[w].oe, work[w].ib, work[w].ie, partial[w]);
    });
  for (auto& th : pool) th.join();

  std::vector<Int> counts(static_cast<size_t>(p), 0);
  for (const auto& pc : partial)
    for (size_t t = 0; t < pc.size(); ++t) counts[t] += pc[t];

  CycInt value = CycInt::from_trace_counts(p, counts);
  SumValue out{m, domain_tag, std::move(value), points};
  if (opts.cache != nullptr && !full_key.empty()) opts.cache->store(full_key, {out.value, out.point_count});
  return out;
}

// S_m over the chosen domain: affine is G_m x A^n, torus is G_m^{n+1},
// subset S sums the restricted family G_S over its torus.
inline SumValue exp_sum(const ABPolynomial& G, int m, const SumDomain& domain, const SumOptions& opts = {}) {
  switch (domain.kind) {
    case DomainKind::affine: {
      std::vector<bool> units(static_cast<size_t>(G.n()) + 1, false);
      units[0] = true;
      auto r = exp_sum_laurent(G.to_laurent(), m, units, opts, domain.tag());
      return r;
    }
    case DomainKind::torus: {
      std::vector<bool> units(static_cast<size_t>(G.n()) + 1, true);
      return exp_sum_laurent(G.to_laurent(), m, units, opts, domain.tag());
    }
    case DomainKind::subset: {
      LaurentPoly GS = G.restrict_subset(domain.subset);
      std::vector<bool> units(static_cast<size_t>(GS.n_vars()), true);
      return exp_sum_laurent(GS, m, units, opts, domain.tag());
    }
  }
  fail(errc::internal, "unknown domain");
}

// Chi-twisted sum over G_m x A^n at m = 1, in complex doubles: the twist
// multiplies each point by chi(t0) = e^{2 pi i * chi_index * log(t0)/(q-1)}.
inline std::complex<double> exp_sum_twisted(const ABPolynomial& G, int chi_index, const SumOptions& opts = {}) {
  const FieldPtr& k = G.field_ptr();
  EvalField F(k, opts.max_table_q);
  const uint64_t q = F.q(), qm1 = F.qm1();
  const int64_t p = k->p();
  LaurentPoly L = G.to_laurent();
  const int V = L.n_vars();

  // histogram over (log t0 mod q-1, trace) pairs, exact counts
  std::vector<uint64_t> hist(qm1 * static_cast<uint64_t>(p), 0);
  std::vector<FieldElement> pt(static_cast<size_t>(V), k->zero());
  std::vector<uint64_t> codes(static_cast<size_t>(V), 0);
  uint64_t outer_total = 1;
  for (int i = 1; i < V; ++i) outer_total *= q;
  require(outer_total <= opts.budget / qm1, errc::budget_exceeded, "twisted sum exceeds the work budget");
  for (uint64_t outer = 0; outer < outer_total; ++outer) {
    uint64_t rest = outer;
    for (int i = 1; i < V; ++i) {
      codes[static_cast<size_t>(i)] = rest % q;
      rest /= q;
      pt[static_cast<size_t>(i)] = k->from_code(codes[static_cast<size_t>(i)]);
    }
    for (uint64_t l0 = 0; l0 < qm1; ++l0) {
      pt[0] = k->from_code(F.exp_code(l0));
      int64_t tr = trace_to_prime(L.evaluate(pt));
      ++hist[l0 * static_cast<uint64_t>(p) + static_cast<uint64_t>(tr)];
    }
  }
  const double two_pi = 6.283185307179586476925286766559;
  std::complex<double> total(0.0, 0.0);
  for (uint64_t l0 = 0; l0 < qm1; ++l0)
    for (int64_t t = 0; t < p; ++t) {
      uint64_t c = hist[l0 * static_cast<uint64_t>(p) + static_cast<uint64_t>(t)];
      if (c == 0) continue;
      double ang = two_pi * (static_cast<double>(chi_index) * static_cast<double>(l0) / static_cast<double>(qm1) +
                             static_cast<double>(t) / static_cast<double>(p));
      total += static_cast<double>(c) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
  return total;
}

}  // namespace absum
