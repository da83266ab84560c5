#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bwb.hpp"
#include "flopkernel.hpp"
#include "glrep.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "report.hpp"
#include "sod.hpp"
#include "windows.hpp"

namespace grassflop::cli {

inline constexpr int kDefaultCutoff = 6;
inline constexpr int kMaxMatrixSize = 6;
inline constexpr const char* kCutoffEnv = "GRASSFLOP_CUTOFF";

struct RunConfig {
  int d = 1, m = 1, mprime = 1;
  int cutoff = kDefaultCutoff;
  std::string format = "json";
  std::uint64_t seed = 0;
  int parallelism = 1;
  int trials = 100;

  void validate() const {
    if (d < 1) throw std::invalid_argument("--d must be >= 1");
    if (m < d) throw std::invalid_argument("--m must be >= --d");
    if (mprime < d) throw std::invalid_argument("--mprime must be >= --d");
    if (cutoff < 0) throw std::invalid_argument("--cutoff must be >= 0");
    if (trials < 0) throw std::invalid_argument("--trials must be >= 0");
  }
};

// "2,1", "[2,1]", "" and "[]" are accepted; whitespace is ignored.
inline std::vector<int> parse_int_list(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '[' && c != ']' && c != '(' && c != ')') s += c;
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse integer list '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("cannot parse integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

inline Partition parse_partition(const std::string& text) { return Partition(parse_int_list(text)); }

namespace detail {

inline void emit_checks(const std::vector<CheckResult>& checks, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    out << nlohmann::json{{"checks", checks}}.dump(2) << "\n";
    return;
  }
  for (auto& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  " << c.params.dump() << "\n";
    if (!c.pass) out << "      first failure: " << c.first_failure.dump() << "\n";
  }
  out << (all_pass(checks) ? "all checks passed" : "some checks failed") << "\n";
}

inline void require_sod_orientation(const RunConfig& cfg) {
  if (cfg.m < cfg.mprime) throw std::invalid_argument("--m must be >= --mprime (flip orientation)");
}

inline std::vector<CheckResult> window_checks(const RunConfig& cfg) {
  std::vector<CheckResult> checks;
  auto spec = kapranov_collection(cfg.d, cfg.m);
  auto table = ext_table(spec);
  CheckResult strong{"strong-exceptional", {{"d", cfg.d}, {"m", cfg.m}}};
  if (auto bad = table.first_positive_degree()) strong.fail({{"alpha", bad->first}, {"beta", bad->second}});
  if (auto bad = table.first_bad_diagonal()) strong.fail({{"diagonal", *bad}});
  auto order = hom_unitriangular_order(table);
  strong.metadata = {{"members", spec.members.size()}, {"hom_order", order.found ? order.name : "none"}};
  if (!order.found) strong.fail({{"hom_order", "no unitriangular order among canonical and reverse"}});
  checks.push_back(strong);
  CheckResult dual{"dual-window", {{"d", cfg.d}, {"mprime", cfg.mprime}}};
  try {
    dual.metadata = {{"weights", dual_window_weights(cfg.d, cfg.mprime)}};
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::logic_error& e) {
    dual.fail({{"reason", e.what()}});
  }
  checks.push_back(dual);
  for (auto& alpha : spec.members) checks.push_back(verify_window_fixed_point(alpha, cfg.d, cfg.m, cfg.mprime, cfg.cutoff));
  return checks;
}

inline CheckResult generation_check(const Partition& lambda, const RunConfig& cfg) {
  auto e = generation_witness(lambda, cfg.d, cfg.m, cfg.mprime, cfg.cutoff);
  CheckResult c{"generation", {{"lambda", lambda}, {"d", cfg.d}, {"m", cfg.m}, {"mprime", cfg.mprime}, {"cutoff", cfg.cutoff}}};
  c.metadata = {{"terms", e.combination.size()}, {"degree_offset", e.degree_offset}};
  if (!e.verified) c.fail(e.failure);
  return c;
}

inline std::vector<CheckResult> sod_checks(const RunConfig& cfg) {
  require_sod_orientation(cfg);
  std::vector<CheckResult> checks{rank_accounting(cfg.d, cfg.m, cfg.mprime)};
  for (auto& delta : enumerate_box(std::max(cfg.m - cfg.d, 1), cfg.d - 1))
    checks.push_back(verify_ds_euler(delta, cfg.d, cfg.m, cfg.mprime, cfg.cutoff));
  if (cfg.m > cfg.mprime) checks.push_back(verify_orthogonality(cfg.d, cfg.m, cfg.mprime, cfg.cutoff));
  for (auto& lambda : enumerate_box(cfg.m - cfg.d, cfg.d))
    if (!lambda.fits_box(cfg.mprime - cfg.d, cfg.d)) checks.push_back(generation_check(lambda, cfg));
  return checks;
}

inline void require_matrix_sizes(const RunConfig& cfg) {
  if (cfg.m > kMaxMatrixSize || cfg.mprime > kMaxMatrixSize)
    throw std::invalid_argument("matrix dimensions are capped at " + std::to_string(kMaxMatrixSize));
}

inline std::vector<CheckResult> kernel_checks(const RunConfig& cfg) {
  require_matrix_sizes(cfg);
  return {verify_ideal_identity(cfg.d, cfg.m, cfg.mprime, cfg.trials, cfg.seed),
          verify_bimodule_maps(cfg.d, cfg.m, cfg.mprime, cfg.trials, cfg.seed)};
}

inline std::vector<CheckResult> all_checks(const RunConfig& cfg) {
  std::vector<CheckResult> checks = window_checks(cfg);
  auto append = [&](std::vector<CheckResult> more) { checks.insert(checks.end(), more.begin(), more.end()); };
  if (cfg.m > cfg.d) checks.push_back(verify_koszul_resolution(cfg.d, cfg.m, cfg.mprime, cfg.cutoff));
  if (cfg.m >= cfg.mprime) append(sod_checks(cfg));
  if (cfg.m <= kMaxMatrixSize && cfg.mprime <= kMaxMatrixSize) append(kernel_checks(cfg));
  checks.push_back(verify_pinch_character(cfg.d, cfg.cutoff));
  return checks;
}

inline int exit_for(bool ok) { return ok ? 0 : 1; }

}  // namespace detail

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 a check failed, 2 usage or configuration error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv(kCutoffEnv)) {
    try {
      std::size_t used = 0;
      cfg.cutoff = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "invalid " << kCutoffEnv << " value '" << env << "'\n";
      return 2;
    }
  }

  CLI::App app{"Character-level verification of Grassmann flop kernels and windows", "grassflop"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", cfg.seed, "Seed for random specializations");
  app.add_option("-j,--parallelism", cfg.parallelism, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);

  auto ranks = [&](CLI::App* sub, bool with_m, bool with_mprime, bool with_cutoff) {
    sub->add_option("--d", cfg.d, "dim V")->required();
    if (with_m) sub->add_option("--m", cfg.m, "dim W")->required();
    if (with_mprime) sub->add_option("--mprime", cfg.mprime, "dim W'")->required();
    if (with_cutoff) sub->add_option("--cutoff", cfg.cutoff, "Degree cutoff");
  };

  auto* kap = app.add_subcommand("kapranov", "List the Kapranov window");
  ranks(kap, true, false, false);

  auto* ext = app.add_subcommand("ext-table", "Ext groups between window members");
  ranks(ext, true, false, false);

  std::string ws, wq;
  int bwb_n = 1;
  auto* bwb = app.add_subcommand("bwb", "Cohomology of Sigma^a S (x) Sigma^b Q on Gr(d, n)");
  bwb->add_option("--d", cfg.d, "rank of S")->required();
  bwb->add_option("--n", bwb_n, "dim of the ambient space")->required();
  bwb->add_option("--ws", ws, "weight on S, comma separated");
  bwb->add_option("--wq", wq, "weight on Q, comma separated");

  std::string lr_lambda, lr_mu;
  std::optional<int> lr_rows;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  lr->add_option("--lambda", lr_lambda)->required();
  lr->add_option("--mu", lr_mu)->required();
  lr->add_option("--n", lr_rows, "discard diagrams with more than n rows");

  std::string delta_text;
  auto* ds = app.add_subcommand("ds-complex", "Staircase complex of a diagram");
  ds->add_option("--delta", delta_text)->required();
  ranks(ds, false, true, false);

  std::string lambda_text;
  auto* gen = app.add_subcommand("generate", "Express a diagram through the window and O-generators");
  gen->add_option("--lambda", lambda_text)->required();
  ranks(gen, true, true, true);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->require_subcommand(1);
  auto* v_window = verify->add_subcommand("window", "Window strongness and fixed points");
  ranks(v_window, true, true, true);
  auto* v_sod = verify->add_subcommand("sod", "Staircases, orthogonality, generation, rank accounting");
  ranks(v_sod, true, true, true);
  auto* v_orth = verify->add_subcommand("orth", "Orthogonality of the window and O-generators");
  ranks(v_orth, true, true, true);
  auto* v_koszul = verify->add_subcommand("koszul", "Koszul resolution character identity");
  ranks(v_koszul, true, true, true);
  auto* v_kernel = verify->add_subcommand("kernel-idents", "Ring identities of the kernel");
  ranks(v_kernel, true, true, true);
  v_kernel->add_option("--trials", cfg.trials, "Random integer specializations");
  auto* v_pinch = verify->add_subcommand("pinch", "Invariants of the pinched product");
  ranks(v_pinch, false, false, true);
  auto* v_all = verify->add_subcommand("all", "Every suite");
  ranks(v_all, true, true, true);
  v_all->add_option("--trials", cfg.trials, "Random integer specializations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  // Subcommands that do not take every rank fill the rest in with d.
  if (v_pinch->parsed()) cfg.m = cfg.mprime = cfg.d;
  if (ds->parsed()) cfg.m = cfg.d;
  if (kap->parsed() || ext->parsed()) cfg.mprime = cfg.d;

  try {
    if (!bwb->parsed() && !lr->parsed()) cfg.validate();
    parallelism() = cfg.parallelism;
    const bool json = cfg.format == "json";

    if (kap->parsed()) {
      auto spec = kapranov_collection(cfg.d, cfg.m);
      if (json)
        out << nlohmann::json(spec.members).dump() << "\n";
      else
        for (auto& p : spec.members) out << p.to_string() << "\n";
      return 0;
    }
    if (ext->parsed()) {
      auto spec = kapranov_collection(cfg.d, cfg.m);
      auto table = ext_table(spec);
      auto order = hom_unitriangular_order(table);
      const bool ok = !table.first_positive_degree() && !table.first_bad_diagonal() && order.found;
      if (json) {
        nlohmann::json entries = nlohmann::json::array();
        for (auto& [key, g] : table.pairs())
          entries.push_back({{"alpha", key.first}, {"beta", key.second}, {"ext", graded_rep_json(g)}});
        out << nlohmann::json{{"d", cfg.d}, {"m", cfg.m}, {"members", spec.members}, {"entries", entries},
                              {"strong", ok}, {"hom_order", order.found ? order.name : "none"}}
                   .dump(2)
            << "\n";
      } else {
        for (auto& [key, g] : table.pairs()) {
          out << key.first.to_string() << " " << key.second.to_string() << " :";
          if (g.empty()) out << " 0";
          for (auto& [deg, rep] : g) out << "  H^" << deg << " dim " << rep.dimension();
          out << "\n";
        }
        out << "hom order: " << (order.found ? order.name : "none") << "\n";
      }
      return detail::exit_for(ok);
    }
    if (bwb->parsed()) {
      if (cfg.d < 0 || bwb_n < cfg.d) throw std::invalid_argument("bwb needs 0 <= d <= n");
      auto a = parse_int_list(ws), b = parse_int_list(wq);
      if (a.empty()) a.assign(cfg.d, 0);
      if (b.empty()) b.assign(bwb_n - cfg.d, 0);
      auto o = grassmann_cohomology(cfg.d, bwb_n, DominantWeight(a), DominantWeight(b));
      if (json)
        out << nlohmann::json{{"outcome", o}}.dump() << "\n";
      else
        out << o.to_string() << "\n";
      return 0;
    }
    if (lr->parsed()) {
      auto coeffs = lr_rows ? lr_coefficients(parse_partition(lr_lambda), parse_partition(lr_mu), *lr_rows)
                            : lr_coefficients(parse_partition(lr_lambda), parse_partition(lr_mu));
      if (json) {
        nlohmann::json terms = nlohmann::json::array();
        for (auto& [nu, c] : coeffs) terms.push_back({{"nu", nu}, {"c", c}});
        out << nlohmann::json{{"coefficients", terms}}.dump() << "\n";
      } else {
        for (auto& [nu, c] : coeffs) out << nu.to_string() << " " << c << "\n";
      }
      return 0;
    }
    if (ds->parsed()) {
      auto spec = ds_staircase(parse_partition(delta_text), cfg.d, cfg.mprime);
      if (json)
        out << ds_json(spec).dump(2) << "\n";
      else
        for (std::size_t k = 0; k < spec.terms.size(); ++k)
          out << k << " " << spec.terms[k].diagram.to_string() << " s=" << spec.terms[k].s << "\n";
      return 0;
    }
    if (gen->parsed()) {
      detail::require_sod_orientation(cfg);
      auto e = generation_witness(parse_partition(lambda_text), cfg.d, cfg.m, cfg.mprime, cfg.cutoff);
      if (json) {
        out << nlohmann::json(e).dump(2) << "\n";
      } else {
        out << "target " << e.target.to_string() << " (degree offset " << e.degree_offset << ")\n";
        for (auto& t : e.combination) {
          out << (t.shift ? "  - " : "  + ") << t.coefficient << " * "
              << (t.generator.kind == GeneratorRef::Kind::Window ? "window " + t.generator.diagram.to_string()
                                                                 : "O " + t.generator.diagram.to_string() + " twist " +
                                                                       std::to_string(t.generator.det_twist))
              << " (x) L" << t.wprime.to_string() << " W'\n";
        }
        out << (e.verified ? "verified" : "NOT verified: " + e.failure.dump()) << "\n";
      }
      return detail::exit_for(e.verified);
    }

    std::vector<CheckResult> checks;
    if (v_window->parsed()) checks = detail::window_checks(cfg);
    if (v_sod->parsed()) checks = detail::sod_checks(cfg);
    if (v_orth->parsed()) {
      if (cfg.m <= cfg.mprime) throw std::invalid_argument("verify orth needs --m > --mprime");
      checks = {verify_orthogonality(cfg.d, cfg.m, cfg.mprime, cfg.cutoff)};
    }
    if (v_koszul->parsed()) checks = {verify_koszul_resolution(cfg.d, cfg.m, cfg.mprime, cfg.cutoff)};
    if (v_kernel->parsed()) checks = detail::kernel_checks(cfg);
    if (v_pinch->parsed()) checks = {verify_pinch_character(cfg.d, cfg.cutoff)};
    if (v_all->parsed()) checks = detail::all_checks(cfg);
    detail::emit_checks(checks, cfg, out);
    return detail::exit_for(all_pass(checks));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "fatal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace grassflop::cli
