// absum: a workbench CLI for (A,B)-exponential sums, their L-functions,
// Newton/Hodge polygons, and the attached polytope geometry.
//
// Exit codes: 0 success, 2 unmet hypotheses / exceeded budgets, 1 anything
// else (parse errors, internal failures).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "absum/absum.hpp"

using namespace absum;

namespace {

struct CommonOpts {
  int threads = 0;
  uint64_t budget = uint64_t{1} << 38;
  std::string cache_dir;
  bool no_cache = false;
  std::string output;
  std::string csv;
  double tolerance = 1e-6;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--threads", o.threads, "worker threads (default: hardware)");
  cmd->add_option("--budget", o.budget, "max point evaluations per sum");
  cmd->add_option("--cache-dir", o.cache_dir, "sum cache directory (env ABSUM_CACHE_DIR)");
  cmd->add_flag("--no-cache", o.no_cache, "disable the sum cache");
  cmd->add_option("--output,-o", o.output, "write the report JSON here (default: stdout)");
  cmd->add_option("--csv", o.csv, "write polygon CSV data here");
  cmd->add_option("--tolerance", o.tolerance, "relative tolerance for purity checks");
}

struct CacheHolder {
  std::optional<SumCache> cache;
  SumOptions sum_options(const CommonOpts& o) {
    SumOptions s;
    s.threads = o.threads;
    s.budget = o.budget;
    if (!o.no_cache) {
      std::string dir = o.cache_dir;
      if (dir.empty()) {
        const char* env = std::getenv("ABSUM_CACHE_DIR");
        if (env != nullptr) dir = env;
      }
      if (!dir.empty()) {
        if (!cache) cache.emplace(dir);
        s.cache = &*cache;
      }
    }
    return s;
  }
};

Json verdict_to_json(const CheckVerdict& v) {
  Json j;
  j["check"] = check_kind_name(v.kind);
  j["pass"] = v.pass;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  j["tolerance"] = v.tolerance;
  j["notes"] = v.notes;
  return j;
}

Json regularity_to_json(const RegularityVerdict& v) {
  Json j;
  j["ok"] = v.ok;
  j["checked_up_to_extension"] = v.checked_to;
  if (v.witness) {
    Json w;
    w["m"] = v.witness->m;
    w["point_codes"] = v.witness->point_codes;
    w["note"] = v.witness->note;
    j["witness"] = w;
  }
  return j;
}

Json lpoly_to_json(const LPolynomial& L) {
  Json j;
  j["degree"] = L.degree;
  j["n_eff"] = L.n_eff;
  j["horizon"] = L.horizon;
  j["vanishing_checked_to"] = L.vanishing_checked_to;
  Json coeffs = Json::array();
  for (const auto& c : L.coeffs) coeffs.push_back(cyc_to_json(c));
  j["coefficients"] = coeffs;
  return j;
}

int emit_report(const CommonOpts& o, Json& report, std::chrono::steady_clock::time_point start,
                bool pass_exit = true) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  report["timing_ms"] = ms.count();
  std::string text = report.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    out << text;
  }
  return pass_exit ? 0 : 2;
}

Json report_header(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["library_version"] = ABSUM_VERSION;
  j["command"] = command;
  return j;
}

SumDomain parse_domain(const std::string& name, const std::string& subset_arg) {
  if (name == "affine") return SumDomain::affine();
  if (name == "torus") return SumDomain::torus();
  if (name == "subset") {
    std::vector<int> subset;
    std::string cur;
    for (char c : subset_arg + ",") {
      if (c == ',') {
        if (!cur.empty()) subset.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    return SumDomain::subset_of(std::move(subset));
  }
  fail(errc::parse_error, "unknown domain '" + name + "' (want affine|torus|subset)");
}

void maybe_write_csv(const CommonOpts& o, const SlopePolygon& poly) {
  if (o.csv.empty()) return;
  std::ofstream out(o.csv);
  out << polygon_to_csv(poly);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for (A,B)-exponential sums over finite fields"};
  app.require_subcommand(1);

  // ---------------------------------------------------------------- sum
  auto* sum_cmd = app.add_subcommand("sum", "one exponential sum S_m over a chosen domain");
  CommonOpts sum_o;
  std::string sum_instance, sum_domain = "affine", sum_subset;
  int sum_m = 1;
  sum_cmd->add_option("--instance", sum_instance, "instance JSON path")->required();
  sum_cmd->add_option("--m", sum_m, "extension degree");
  sum_cmd->add_option("--domain", sum_domain, "affine | torus | subset");
  sum_cmd->add_option("--subset", sum_subset, "comma list of kept variables for --domain subset");
  add_common(sum_cmd, sum_o);

  // ---------------------------------------------------------------- lfun
  auto* lfun_cmd = app.add_subcommand("lfun", "L-polynomial extraction and Newton polygon");
  CommonOpts lfun_o;
  std::string lfun_instance, lfun_domain = "affine";
  int lfun_degree = -1, lfun_horizon = -1, lfun_weight = -1;
  lfun_cmd->add_option("--instance", lfun_instance, "instance JSON path")->required();
  lfun_cmd->add_option("--domain", lfun_domain, "affine | torus");
  lfun_cmd->add_option("--degree", lfun_degree, "claimed degree (default: theorem bound)");
  lfun_cmd->add_option("--horizon", lfun_horizon, "number of sums (default: degree+2)");
  lfun_cmd->add_option("--weight", lfun_weight, "purity weight (default: n+1)");
  add_common(lfun_cmd, lfun_o);

  // ---------------------------------------------------------------- check
  auto* check_cmd = app.add_subcommand("check", "theorem suite: hypotheses, bound, degree, purity");
  CommonOpts check_o;
  std::string check_instance, check_theorem;
  int check_degree = -1, check_ext = 2;
  std::optional<int> check_chi;
  int check_chi_raw = -1;
  check_cmd->add_option("--instance", check_instance, "instance JSON path")->required();
  check_cmd->add_option("--theorem", check_theorem, "T1 | T2 | T3")->required();
  check_cmd->add_option("--degree", check_degree, "claimed L-degree (default: theorem bound)");
  check_cmd->add_option("--chi", check_chi_raw, "multiplicative character index (float path)");
  check_cmd->add_option("--regularity-ext", check_ext, "extension bound for regularity checks");
  add_common(check_cmd, check_o);

  // ---------------------------------------------------------------- gnp
  auto* gnp_cmd = app.add_subcommand("gnp", "generic Newton polygon search over seeded samples");
  CommonOpts gnp_o;
  GnpParams gnp_p;
  std::string gnp_dump;
  gnp_cmd->add_option("--dump-dir", gnp_dump, "write every sampled instance JSON here");
  gnp_cmd->add_option("--p", gnp_p.p, "characteristic")->required();
  gnp_cmd->add_option("--s", gnp_p.s, "base field degree");
  gnp_cmd->add_option("--d", gnp_p.d, "degree of f")->required();
  gnp_cmd->add_option("--A", gnp_p.A, "A")->required();
  gnp_cmd->add_option("--B", gnp_p.B, "B")->required();
  gnp_cmd->add_option("--n", gnp_p.n, "number of affine variables")->required();
  gnp_cmd->add_option("--e-max", gnp_p.e_max, "max degree of g");
  gnp_cmd->add_option("--samples", gnp_p.samples, "number of draws");
  gnp_cmd->add_option("--seed", gnp_p.seed, "master seed");
  gnp_cmd->add_option("--regularity-ext", gnp_p.regularity_ext, "extension bound for the sampler");
  add_common(gnp_cmd, gnp_o);

  // ---------------------------------------------------------------- hp
  auto* hp_cmd = app.add_subcommand("hp", "Hodge polygons: lattice count and closed form");
  CommonOpts hp_o;
  int hp_A = 1, hp_B = 1, hp_d = 2, hp_n = 1;
  hp_cmd->add_option("--A", hp_A)->required();
  hp_cmd->add_option("--B", hp_B)->required();
  hp_cmd->add_option("--d", hp_d)->required();
  hp_cmd->add_option("--n", hp_n)->required();
  add_common(hp_cmd, hp_o);

  // ---------------------------------------------------------------- polytope
  auto* poly_cmd = app.add_subcommand("polytope", "Delta complex volumes, bounds, denominators");
  poly_cmd->set_help_flag("--help", "print help");  // frees -h / --h for deg(P_B)
  CommonOpts poly_o;
  int pk_A = 1, pk_B = 1, pk_d = 2, pk_e = 0, pk_h = 0, pk_n = 1;
  poly_cmd->add_option("--A", pk_A)->required();
  poly_cmd->add_option("--B", pk_B)->required();
  poly_cmd->add_option("--d", pk_d)->required();
  poly_cmd->add_option("--e", pk_e, "degree of g");
  poly_cmd->add_option("--h", pk_h, "degree of P_B");
  poly_cmd->add_option("--n", pk_n)->required();
  add_common(poly_cmd, poly_o);

  // ---------------------------------------------------------------- regularity
  auto* reg_cmd = app.add_subcommand("regularity", "Dwork regularity, nondegeneracy, commodeness");
  CommonOpts reg_o;
  std::string reg_instance;
  int reg_ext = -1;
  reg_cmd->add_option("--instance", reg_instance, "instance JSON path")->required();
  reg_cmd->add_option("--max-ext", reg_ext, "extension bound (default: max(3, n*d), budget-clamped)");
  add_common(reg_cmd, reg_o);

  // ---------------------------------------------------------------- sample
  auto* sample_cmd = app.add_subcommand("sample", "draw a seeded member of M(d,A,B,p)");
  CommonOpts sample_o;
  SampleParams sp;
  std::string sample_out;
  bool sample_diag = false;
  sample_cmd->add_option("--p", sp.p)->required();
  sample_cmd->add_option("--s", sp.s);
  sample_cmd->add_option("--d", sp.d)->required();
  sample_cmd->add_option("--A", sp.A)->required();
  sample_cmd->add_option("--B", sp.B)->required();
  sample_cmd->add_option("--n", sp.n)->required();
  sample_cmd->add_option("--e-max", sp.e_max);
  sample_cmd->add_option("--seed", sp.seed)->required();
  sample_cmd->add_flag("--diagonal", sample_diag, "force f = 1 + t1^d + ... + tn^d");
  sample_cmd->add_option("--regularity-ext", sp.regularity_ext);
  sample_cmd->add_option("--out", sample_out, "write the instance JSON here")->required();
  add_common(sample_cmd, sample_o);

  CLI11_PARSE(app, argc, argv);
  auto start = std::chrono::steady_clock::now();
  CacheHolder cache;

  try {
    if (*sum_cmd) {
      auto inst = load_instance(sum_instance);
      auto domain = parse_domain(sum_domain, sum_subset);
      auto opts = cache.sum_options(sum_o);
      opts.cache_key = instance_hash(inst.poly);
      auto s = exp_sum(inst.poly, sum_m, domain, opts);
      Json rep = report_header("sum");
      rep["config"] = {{"instance", sum_instance}, {"m", sum_m}, {"domain", domain.tag()},
                       {"threads", sum_o.threads}, {"budget", sum_o.budget}};
      rep["instance_hash"] = instance_hash(inst.poly);
      rep["value"] = cyc_to_json(s.value);
      auto z = complex_embed(s.value);
      rep["value_complex"] = {z.real(), z.imag()};
      rep["value_abs"] = std::abs(z);
      rep["point_count"] = s.point_count;
      return emit_report(sum_o, rep, start);
    }

    if (*lfun_cmd) {
      auto inst = load_instance(lfun_instance);
      const auto& G = inst.poly;
      bool torus = lfun_domain == "torus";
      int D = lfun_degree;
      if (D < 0) {
        Int bound = torus ? Int(G.A() + G.B()) * ipow(Int(G.d()), static_cast<unsigned>(G.n()))
                          : Int(G.A() + G.B()) * ipow(Int(G.d() - 1), static_cast<unsigned>(G.n()));
        D = static_cast<int>(bound.convert_to<int64_t>());
      }
      int M = lfun_horizon > 0 ? lfun_horizon : D + 2;
      int w = lfun_weight > 0 ? lfun_weight : G.n() + 1;
      auto opts = cache.sum_options(lfun_o);
      auto domain = torus ? SumDomain::torus() : SumDomain::affine();
      if (opts.cache != nullptr) opts.cache_key = instance_hash(G);
      Json sums_json = Json::array();
      std::vector<CycInt> sums;
      for (int m = 1; m <= M; ++m) {
        auto s = exp_sum(G, m, domain, opts);
        Json js;
        js["m"] = m;
        js["value"] = cyc_to_json(s.value);
        js["point_count"] = s.point_count;
        sums_json.push_back(js);
        sums.push_back(s.value);
      }
      auto L = l_polynomial_extract(sums, G.n(), D, G.field_ptr()->degree());
      auto np = newton_polygon(L.coeffs, L.s);
      Json rep = report_header("lfun");
      rep["config"] = {{"instance", lfun_instance}, {"domain", domain.tag()}, {"claimed_degree", D},
                       {"horizon", M}, {"weight", w}};
      rep["instance_hash"] = instance_hash(G);
      rep["sums"] = sums_json;
      rep["l_polynomial"] = lpoly_to_json(L);
      rep["newton_polygon"] = polygon_to_json(np.polygon);
      Json verdicts = Json::array();
      bool pass = true;
      // Purity is an affine-domain statement; the torus polynomial is mixed
      // of weights <= n+1.  An explicit --weight forces the check anyway.
      if (L.degree >= 1 && (!torus || lfun_weight > 0)) {
        auto purity = purity_check(L, G.field_ptr()->q(), w, lfun_o.tolerance);
        verdicts.push_back(verdict_to_json(purity));
        pass = purity.pass;
      }
      // Hodge side, when a comparable polygon exists for this domain.
      std::optional<SlopePolygon> hp;
      if (torus) {
        auto delta = newton_polytope_at_infinity(G.to_laurent());
        if (delta.is_full_dim() && delta.has_integral_vertices()) {
          auto as_hp = hodge_numbers_AS(delta);
          rep["hodge_polygon"] = polygon_to_json(as_hp.polygon);
          hp = as_hp.polygon;
        }
      } else if (G.A() == 1 && G.B() == 1) {
        auto closed = hodge_closed_form(G.d(), G.n(), HodgeVariant::affine);
        rep["hodge_polygon"] = polygon_to_json(closed.polygon);
        hp = closed.polygon;
      }
      if (hp && hp->degree() == np.polygon.degree()) {
        auto cmp = np_vs_hp(L, *hp);
        verdicts.push_back(verdict_to_json(cmp.verdict));
        pass = pass && cmp.verdict.pass;
      }
      rep["verdicts"] = verdicts;
      maybe_write_csv(lfun_o, np.polygon);
      return emit_report(lfun_o, rep, start, pass);
    }

    if (*check_cmd) {
      auto inst = load_instance(check_instance);
      const auto& G = inst.poly;
      CheckKind kind;
      if (check_theorem == "T1")
        kind = CheckKind::theorem1;
      else if (check_theorem == "T2")
        kind = CheckKind::theorem2;
      else if (check_theorem == "T3")
        kind = CheckKind::theorem3;
      else
        fail(errc::parse_error, "unknown theorem '" + check_theorem + "' (want T1|T2|T3)");

      BoundCheckConfig cfg;
      cfg.regularity_ext = check_ext;
      if (check_chi_raw >= 0) cfg.chi_index = check_chi_raw;
      cfg.sum = cache.sum_options(check_o);
      auto bound = bound_check(G, kind, cfg);

      int D = check_degree;
      if (D < 0) {
        if (kind == CheckKind::theorem3) {
          int he = G.h() == kDegNegInf ? 0 : G.h();
          int ee = G.e() == kDegNegInf ? 0 : G.e();
          Rat b = ee == 0 ? Rat(Int(G.A()) * ipow(Int(G.d() + 1), static_cast<unsigned>(G.n())))
                          : degree_bound_theorem3(G.A(), G.d(), ee, he, G.n());
          D = static_cast<int>(rat_floor(b).convert_to<int64_t>());
        } else {
          Int b = Int(G.A() + G.B()) * ipow(Int(G.d() - 1), static_cast<unsigned>(G.n()));
          D = static_cast<int>(b.convert_to<int64_t>());
        }
      }
      auto opts = cache.sum_options(check_o);
      auto sums = compute_sums(G, SumDomain::affine(), D + 2, opts);
      auto L = l_polynomial_extract(sums, G.n(), D, G.field_ptr()->degree());
      Json verdicts = Json::array({verdict_to_json(bound)});
      bool pass = bound.pass;
      if (L.degree >= 1) {
        auto purity = purity_check(L, G.field_ptr()->q(), G.n() + 1, check_o.tolerance);
        verdicts.push_back(verdict_to_json(purity));
        pass = pass && purity.pass;
      }
      Json rep = report_header("check");
      rep["config"] = {{"instance", check_instance}, {"theorem", check_theorem},
                       {"claimed_degree", D}, {"regularity_ext", check_ext}};
      rep["instance_hash"] = instance_hash(G);
      rep["l_polynomial"] = lpoly_to_json(L);
      rep["verdicts"] = verdicts;
      return emit_report(check_o, rep, start, pass);
    }

    if (*gnp_cmd) {
      gnp_p.sum = cache.sum_options(gnp_o);
      auto rep_data = gnp_search(gnp_p);
      Json rep = report_header("gnp");
      rep["config"] = {{"p", gnp_p.p}, {"s", gnp_p.s}, {"d", gnp_p.d}, {"A", gnp_p.A}, {"B", gnp_p.B},
                       {"n", gnp_p.n}, {"e_max", gnp_p.e_max}, {"samples", gnp_p.samples},
                       {"seed", gnp_p.seed}};
      rep["degree"] = rep_data.degree;
      rep["horizon"] = rep_data.horizon;
      rep["congruence_modulus"] = rep_data.congruence_modulus.str();
      rep["congruence_holds"] = rep_data.congruence_holds;
      rep["hodge_polygon"] = polygon_to_json(rep_data.hp.polygon);
      Json samples = Json::array();
      for (const auto& s : rep_data.samples) {
        Json js;
        js["seed"] = s.seed;
        js["instance_hash"] = s.hash;
        js["np_slopes"] = polygon_to_json(s.np)["slopes"];
        js["above_hp"] = s.above_hp;
        samples.push_back(js);
      }
      rep["samples"] = samples;
      Json minh = Json::array();
      for (const auto& h : rep_data.min_np_heights) minh.push_back(rat_to_json(h));
      rep["min_np_heights"] = minh;
      rep["all_above_hp"] = rep_data.all_above;
      rep["ordinary"] = rep_data.ordinary;
      if (!gnp_dump.empty()) {
        std::filesystem::create_directories(gnp_dump);
        for (const auto& s : rep_data.samples) {
          SampleParams sp2;
          sp2.p = gnp_p.p;
          sp2.s = gnp_p.s;
          sp2.d = gnp_p.d;
          sp2.A = gnp_p.A;
          sp2.B = gnp_p.B;
          sp2.n = gnp_p.n;
          sp2.e_max = gnp_p.e_max;
          sp2.seed = s.seed;
          sp2.regularity_ext = gnp_p.regularity_ext;
          auto drawn = sample_family(sp2);
          std::ofstream out(std::filesystem::path(gnp_dump) / ("instance_" + s.hash + ".json"));
          out << instance_to_json(drawn.poly, s.seed).dump(2) << "\n";
        }
        rep["dump_dir"] = gnp_dump;
      }
      maybe_write_csv(gnp_o, rep_data.hp.polygon);
      return emit_report(gnp_o, rep, start, rep_data.all_above);
    }

    if (*hp_cmd) {
      Json rep = report_header("hp");
      rep["config"] = {{"A", hp_A}, {"B", hp_B}, {"d", hp_d}, {"n", hp_n}};
      auto P = ab_polytope(hp_A, hp_B, hp_d, hp_n);
      auto lattice = hodge_numbers_AS(P);
      rep["as_lattice"] = polygon_to_json(lattice.polygon);
      rep["denominator"] = lattice.denominator.str();
      bool pass = true;
      if (hp_A == 1 && hp_B == 1) {
        auto torus = hodge_closed_form(hp_d, hp_n, HodgeVariant::torus);
        auto affine = hodge_closed_form(hp_d, hp_n, HodgeVariant::affine);
        rep["closed_form_torus"] = polygon_to_json(torus.polygon);
        rep["closed_form_affine"] = polygon_to_json(affine.polygon);
        bool agree = lattice.polygon == torus.polygon;
        rep["agreement"] = agree;
        pass = agree;
      } else {
        rep["closed_form"] = std::string(errc_name(errc::unsupported_ab)) +
                             ": closed forms require A = B = 1; lattice count only";
      }
      maybe_write_csv(hp_o, lattice.polygon);
      return emit_report(hp_o, rep, start, pass);
    }

    if (*poly_cmd) {
      Json rep = report_header("polytope");
      rep["config"] = {{"A", pk_A}, {"B", pk_B}, {"d", pk_d}, {"e", pk_e}, {"h", pk_h}, {"n", pk_n}};
      auto C = ab_delta_complex(pk_A, pk_B, pk_d, pk_e, pk_h, pk_n);
      rep["volumes"] = {{"delta", rat_string(C.delta.normalized_volume())},
                        {"delta1", rat_string(C.vol1)},
                        {"delta2", rat_string(C.vol2)},
                        {"delta3", rat_string(C.vol3)},
                        {"delta4", rat_string(C.vol4)},
                        {"delta5", rat_string(C.vol5)},
                        {"as_degree_bound_torus", rat_string(C.total_bound)}};
      auto betti = betti_bound_theorem1(pk_A, pk_B, pk_d, pk_n);
      rep["betti_bound"] = {{"value", betti.value.str()},
                            {"inclusion_exclusion", betti.alternating_sum.str()},
                            {"agree", betti.agree}};
      if (pk_e >= 1)
        rep["theorem3_degree_bound"] = rat_string(degree_bound_theorem3(pk_A, pk_d, pk_e, pk_h, pk_n));
      auto D1 = delta1(pk_A, pk_d, pk_n);
      auto D2 = delta2_facial(pk_A, pk_B, pk_d, pk_n);
      auto DD = ab_polytope(pk_A, pk_B, pk_d, pk_n);
      rep["denominators"] = {{"delta1", D1.denominator().str()},
                             {"delta2", D2.denominator().str()},
                             {"delta2_closed_form", delta2_denominator_closed_form(pk_A, pk_B, pk_d).str()},
                             {"delta", DD.denominator().str()}};
      auto th = interiority_thresholds(pk_A, pk_B, pk_d);
      rep["interiority_thresholds"] = {{"Bd_over_A_plus_B", rat_string(th.b_form)},
                                       {"Ad_over_A_plus_B", rat_string(th.a_form)}};
      return emit_report(poly_o, rep, start);
    }

    if (*reg_cmd) {
      auto inst = load_instance(reg_instance);
      const auto& G = inst.poly;
      int M = reg_ext;
      if (M <= 0) {
        M = default_regularity_extension(G.n(), G.d());
        // clamp so the largest projective search stays within the budget
        while (M > 1) {
          uint64_t pts = upow_checked(G.field_ptr()->q(),
                                      static_cast<unsigned>(M * G.n()), reg_o.budget + 1);
          if (pts <= reg_o.budget) break;
          --M;
        }
      }
      Json rep = report_header("regularity");
      rep["config"] = {{"instance", reg_instance}, {"max_ext", M}};
      rep["instance_hash"] = instance_hash(G);
      auto adr = is_affine_dwork_regular(G.f(), M);
      rep["affine_dwork_regular"] = regularity_to_json(adr);
      auto smooth = leading_form_smooth(G.f(), M);
      rep["leading_form_smooth"] = regularity_to_json(smooth);
      auto L = G.to_laurent();
      auto nondeg = is_nondegenerate(L, M);
      rep["nondegenerate"] = regularity_to_json(nondeg);
      std::vector<int> poly_vars;
      for (int i = 1; i <= G.n(); ++i) poly_vars.push_back(i);
      auto commode = is_commode(L, poly_vars);
      Json cj;
      cj["commode"] = commode.commode;
      Json entries = Json::array();
      for (const auto& e : commode.entries)
        entries.push_back({{"subset", e.subset}, {"dim", e.dim}, {"expected", e.expected}});
      cj["entries"] = entries;
      rep["commode"] = cj;
      return emit_report(reg_o, rep, start);
    }

    if (*sample_cmd) {
      sp.diagonal_f = sample_diag;
      auto result = sample_family(sp);
      Json inst = instance_to_json(result.poly, sp.seed);
      {
        std::ofstream out(sample_out);
        require(out.good(), errc::parse_error, "cannot write " + sample_out);
        out << inst.dump(2) << "\n";
      }
      Json rep = report_header("sample");
      rep["config"] = {{"p", sp.p}, {"s", sp.s}, {"d", sp.d}, {"A", sp.A}, {"B", sp.B},
                       {"n", sp.n}, {"e_max", sp.e_max}, {"seed", sp.seed},
                       {"diagonal", sp.diagonal_f}};
      rep["out"] = sample_out;
      rep["instance_hash"] = instance_hash(result.poly);
      rep["redraws"] = result.redraws;
      rep["regularity_checked_to"] = result.regularity_checked_to;
      return emit_report(sample_o, rep, start);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::hypothesis_unmet:
      case errc::budget_exceeded:
      case errc::regime_violation:
      case errc::interiority_violation:
      case errc::unsupported_ab:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
