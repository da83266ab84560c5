#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "bwb.hpp"
#include "charring.hpp"
#include "glrep.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "report.hpp"

namespace grassflop {

struct DSTerm {
  Partition diagram;
  int s = 0;
};

struct DSComplexSpec {
  Partition delta;
  int d = 1, mprime = 1;
  std::vector<DSTerm> terms;
  int K = 0;
};

inline DSComplexSpec ds_staircase(const Partition& delta, int d, int mprime) {
  if (d < 1) throw std::invalid_argument("ds_staircase: d must be >= 1");
  if (mprime < d) throw std::invalid_argument("ds_staircase: mprime must be >= d");
  if (delta.width() >= d) throw std::invalid_argument("ds_staircase: delta must have width < d");
  DSComplexSpec spec{delta, d, mprime, {{delta, 0}}, 0};
  std::vector<int> cur = delta.parts();
  for (int k = 1;; ++k) {
    std::vector<int> next = cur;
    next.resize(std::max<std::size_t>(next.size(), k), 0);
    next[k - 1] = k == 1 ? d : delta.row(k - 2) + 1;
    Partition p(next);
    int s = p.size() - delta.size();
    if (s > mprime) break;
    spec.terms.push_back({p, s});
    cur = p.parts();
    spec.K = k;
  }
  return spec;
}

inline Profile standard_profile(int d, int m, int mprime) { return Profile::standard({d, m, mprime}); }

// Character of k[Z] = Sym(Hom(V,W)^vee) Sym(Hom(W',V)^vee).
inline GradedCharacter coordinate_ring_character(const Profile& p, int cutoff) {
  return multiply(sym_hom_character({kV, false}, {kW, true}, p, cutoff), sym_hom_character({kWp, false}, {kV, true}, p, cutoff));
}

// Euler characteristic of the pushforward of L_delta H^vee, where H is the
// tautological rank d-1 subbundle on Gr(d-1, V).
inline GradedCharacter hstar_euler_character(const Partition& delta, int d, int m, int mprime, int cutoff) {
  if (delta.width() > d - 1) throw std::invalid_argument("hstar_euler_character: delta must have width <= d-1");
  Profile p = standard_profile(d, m, mprime);
  GradedCharacter fibre(p, cutoff);
  const auto wd = dual_weight(column_weight(delta, d - 1));
  const auto one = DominantWeight::trivial(1);
  for (int n = 0; n <= cutoff; ++n)
    for (auto& mu : partitions_of(n, std::min(mprime, d - 1), n)) {
      for (auto& [k, c] : tensor_decompose(wd, dual_weight(row_weight(mu, d - 1))).terms()) {
        auto o = grassmann_cohomology(d - 1, d, k, one);
        if (o.is_zero()) continue;
        fibre.add(n, {o.weight(), DominantWeight::trivial(m), row_weight(mu, mprime)}, o.degree() % 2 ? -c : c);
      }
    }
  return multiply(fibre, sym_hom_character({kV, false}, {kW, true}, p, cutoff));
}

// L_mu V^vee (x) Sym(Z^vee), generated in degree 0.
inline GradedCharacter free_module_character(const Partition& mu, int d, int m, int mprime, int cutoff) {
  Profile p = standard_profile(d, m, mprime);
  auto gen = GradedCharacter::monomial(
      p, cutoff, 0, {dual_weight(column_weight(mu, d)), DominantWeight::trivial(m), DominantWeight::trivial(mprime)});
  return multiply(gen, coordinate_ring_character(p, cutoff));
}

// sum_k (-1)^k L_{delta^k} V^vee (x) Lambda^{s_k} W' (x) Sym(Z^vee), term k placed in degree s_k.
inline GradedCharacter ds_free_character(const DSComplexSpec& spec, int m, int cutoff) {
  Profile p = standard_profile(spec.d, m, spec.mprime);
  GradedCharacter gens(p, cutoff);
  for (std::size_t k = 0; k < spec.terms.size(); ++k) {
    auto& t = spec.terms[k];
    if (t.s < 0 || t.s > spec.mprime) continue;
    gens.add(t.s,
             {dual_weight(column_weight(t.diagram, spec.d)), DominantWeight::trivial(m),
              row_weight(Partition::rectangle(t.s, 1), spec.mprime)},
             k % 2 ? -1 : 1);
  }
  return multiply(gens, coordinate_ring_character(p, cutoff));
}

inline nlohmann::json ds_json(const DSComplexSpec& spec) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& t : spec.terms) terms.push_back({{"diagram", t.diagram}, {"s", t.s}});
  return {{"delta", spec.delta}, {"d", spec.d}, {"mprime", spec.mprime}, {"terms", terms}, {"K", spec.K}};
}

inline CheckResult verify_ds_euler(const DSComplexSpec& spec, int m, int cutoff) {
  if (m < spec.d) throw std::invalid_argument("verify_ds_euler: m must be >= d");
  CheckResult r{"ds-euler",
                {{"delta", spec.delta}, {"d", spec.d}, {"m", m}, {"mprime", spec.mprime}, {"cutoff", cutoff}}};
  r.metadata = {{"degree_convention",
                 "term k generated in degree s_k; every generator of Sym(Z^vee) has degree 1; the fibre "
                 "summand L_mu W' of the pushforward sits in degree |mu|"},
                {"staircase", ds_json(spec)}};
  auto lhs = ds_free_character(spec, m, cutoff);
  auto rhs = hstar_euler_character(spec.delta, spec.d, m, spec.mprime, cutoff);
  if (auto mm = first_difference(lhs, rhs)) r.fail(mismatch_json(lhs.profile(), *mm));
  return r;
}

inline CheckResult verify_ds_euler(const Partition& delta, int d, int m, int mprime, int cutoff) {
  return verify_ds_euler(ds_staircase(delta, d, mprime), m, cutoff);
}

struct OGenerator {
  Partition lambda;
  int det_twist = 0;
  int level = 0;
  auto operator<=>(const OGenerator&) const = default;
};

inline std::vector<OGenerator> o_generators(int d, int s, int mprime) {
  if (d < 1 || mprime < d || s < mprime) throw std::invalid_argument("o_generators: need 1 <= d <= mprime <= s");
  std::vector<OGenerator> out;
  std::set<std::pair<Partition, int>> seen;
  for (int i = mprime; i <= s; ++i)
    for (auto& lam : enumerate_box(i + 1 - d, d - 1))
      if (seen.insert({lam, s - i}).second) out.push_back({lam, s - i, i});
  return out;
}

inline void to_json(nlohmann::json& j, const OGenerator& g) {
  j = {{"lambda", g.lambda}, {"det_twist", g.det_twist}, {"level", g.level}};
}

// Number of partitions with exactly h rows and largest part exactly w.
inline mult_t exact_shape_count(int h, int w) {
  if (h == 0 || w == 0) return h == 0 && w == 0 ? 1 : 0;
  return binomial(h + w - 2, h - 1);
}

inline CheckResult rank_accounting(int d, int m, int mprime) {
  if (d < 1 || mprime < d || m < mprime) throw std::invalid_argument("rank_accounting: need 1 <= d <= mprime <= m");
  CheckResult r{"rank-accounting", {{"d", d}, {"m", m}, {"mprime", mprime}}};
  mult_t bounded = 0, exact = 0, enumerated = 0;
  for (int i = mprime; i <= m - 1; ++i) {
    bounded += binomial(i, d - 1);
    exact += exact_shape_count(i + 1 - d, d - 1);
  }
  if (m > mprime) enumerated = static_cast<mult_t>(o_generators(d, m - 1, mprime).size());
  const mult_t lhs = binomial(m, d), window = binomial(mprime, d);
  r.metadata = {{"total", lhs}, {"window", window}, {"o_generators_bounded", bounded},
                {"o_generators_exact_reading", exact}, {"o_generators_enumerated", enumerated}};
  if (lhs != window + bounded || enumerated != bounded)
    r.fail({{"total", lhs}, {"window", window}, {"o_generators", bounded}, {"enumerated", enumerated}});
  return r;
}

struct OrthogonalityOptions {
  // Replaces each generator's det twist, for negative controls.
  std::function<int(const OGenerator&)> twist_override;
};

// For lambda in the smaller window and an O-generator (delta, t), the Hom space
// is the GL(V)-invariant part of
//   L_lambda V^vee (x) det V^{t + m' + 1 - d} (x) RGamma(Gr(d-1, V), L_{delta - (m'-d)} H (x) L_mu H^vee) (x) Sym(V (x) W^vee),
// summed over the Cauchy summands L_mu W' (x) L_mu H^vee. Every cohomological
// degree is tracked separately, so no cancellation can hide a nonzero group.
inline CheckResult verify_orthogonality(int d, int m, int mprime, int cutoff, const OrthogonalityOptions& opt = {}) {
  if (d < 1 || mprime < d || m <= mprime) throw std::invalid_argument("verify_orthogonality: need 1 <= d <= mprime < m");
  if (cutoff < 0) throw std::invalid_argument("verify_orthogonality: cutoff must be nonnegative");
  CheckResult r{"orthogonality", {{"d", d}, {"m", m}, {"mprime", mprime}, {"cutoff", cutoff}}};
  const auto window = enumerate_box(mprime - d, d);
  const auto gens = o_generators(d, m - 1, mprime);
  struct Cell {
    bool brute_zero = true;
    bool fast_zero = true;
    nlohmann::json witness = nullptr;
  };
  std::vector<std::vector<Partition>> sym_layers(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) sym_layers[n] = partitions_of(n, std::min(d, m), n);
  const auto one = DominantWeight::trivial(1);
  auto cells = parallel_map(window.size() * gens.size(), [&](std::size_t idx) {
    Cell cell;
    const Partition& lam = window[idx / gens.size()];
    const OGenerator& g = gens[idx % gens.size()];
    const int t = opt.twist_override ? opt.twist_override(g) : g.det_twist;
    const int e = t + mprime + 1 - d;
    const auto y = det_twist(dual_weight(column_weight(lam, d)), e);
    const auto hd = det_twist(column_weight(g.lambda, d - 1), -(mprime - d));
    for (int n1 = 0; n1 <= cutoff; ++n1)
      for (auto& mu : partitions_of(n1, std::min(mprime, d - 1), n1))
        for (auto& [k, c] : tensor_decompose(hd, dual_weight(row_weight(mu, d - 1))).terms()) {
          auto o = grassmann_cohomology(d - 1, d, k, one);
          if (o.is_zero()) continue;
          const auto& gw = o.weight();
          if (gw.first() + y.last() <= 0) cell.fast_zero = false;
          const auto target = dual_weight(gw);
          for (int n2 = 0; n2 + n1 <= cutoff; ++n2)
            for (auto& kap : sym_layers[n2]) {
              mult_t inv = tensor_decompose(y, row_weight(kap, d)).multiplicity(target);
              if (inv == 0) continue;
              if (cell.brute_zero)
                cell.witness = {{"lambda", lam},         {"generator", g},       {"det_twist", t},
                                {"degree", n1 + n2},     {"cohomological_degree", o.degree()},
                                {"multiplicity", inv * c}};
              cell.brute_zero = false;
            }
        }
    return cell;
  });
  std::size_t agree = 0, nonzero = 0;
  for (auto& c : cells) {
    agree += c.brute_zero == c.fast_zero;
    if (!c.brute_zero) {
      ++nonzero;
      r.fail(c.witness);
    }
  }
  for (std::size_t i = 0; i < cells.size() && r.pass; ++i)
    if (cells[i].brute_zero != cells[i].fast_zero)
      r.fail({{"lambda", window[i / gens.size()]}, {"generator", gens[i % gens.size()]}, {"fast_criterion", "disagrees"}});
  r.metadata = {{"cells", cells.size()}, {"nonzero_cells", nonzero}, {"fast_criterion_agreement", agree}};
  return r;
}

// Basis element of a generation expression.
struct GeneratorRef {
  enum class Kind { Window, O };
  Kind kind = Kind::Window;
  Partition diagram;
  int det_twist = 0;
  auto operator<=>(const GeneratorRef&) const = default;
};

struct ExpressionTerm {
  GeneratorRef generator;
  DominantWeight wprime;  // multiplicity space L_w W', degree shift |w|
  mult_t coefficient = 0;
  int shift = 0;  // homological shift; the class enters with sign (-1)^shift
};

struct KTheoryExpression {
  Partition target;
  int d = 1, m = 1, mprime = 1, cutoff = 0;
  std::vector<ExpressionTerm> combination;
  int degree_offset = 0;
  bool verified = false;
  nlohmann::json failure = nullptr;
};

namespace detail {

using Expression = std::map<GeneratorRef, VirtualRep>;

inline void add_scaled(Expression& into, const Expression& x, const VirtualRep& coef) {
  for (auto& [g, c] : x) {
    auto it = into.try_emplace(g, VirtualRep(coef.rank())).first;
    it->second += tensor(c, coef);
    if (it->second.empty()) into.erase(it);
  }
}

inline VirtualRep exterior_rep(int s, int mprime) {
  return VirtualRep::irreducible(row_weight(Partition::rectangle(s, 1), mprime));
}

// Solves the square system of staircase relations, one per O-generator at
// level m-1, for the classes of the diagrams in K_{d,m} \ K_{d,m'}.
inline std::map<Partition, Expression> solve_generation(int d, int m, int mprime) {
  const auto big = enumerate_box(m - d, d);
  const auto small = enumerate_box(mprime - d, d);
  const std::set<Partition> small_set(small.begin(), small.end()), big_set(big.begin(), big.end());
  std::map<Partition, Expression> solved;
  for (auto& w : small) solved[w] = {{GeneratorRef{GeneratorRef::Kind::Window, w, 0}, VirtualRep::irreducible(DominantWeight::trivial(mprime))}};
  if (m == mprime) return solved;

  struct Relation {
    OGenerator gen;
    std::vector<std::tuple<Partition, int, int>> terms;  // diagram, s, sign
  };
  std::vector<Relation> relations;
  for (auto& g : o_generators(d, m - 1, mprime)) {
    Relation rel{g, {}};
    auto spec = ds_staircase(g.lambda, d, mprime);
    for (std::size_t k = 0; k < spec.terms.size(); ++k) {
      std::vector<int> rows(g.det_twist, d);
      rows.insert(rows.end(), spec.terms[k].diagram.parts().begin(), spec.terms[k].diagram.parts().end());
      Partition p(rows);
      if (!big_set.count(p)) throw std::logic_error("staircase term " + p.to_string() + " leaves the window");
      rel.terms.emplace_back(p, spec.terms[k].s, k % 2 ? -1 : 1);
    }
    relations.push_back(std::move(rel));
  }
  std::vector<bool> used(relations.size(), false);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t ri = 0; ri < relations.size(); ++ri) {
      if (used[ri]) continue;
      const auto& rel = relations[ri];
      int open = 0;
      std::size_t pivot = 0;
      for (std::size_t j = 0; j < rel.terms.size(); ++j)
        if (!solved.count(std::get<0>(rel.terms[j]))) {
          ++open;
          pivot = j;
        }
      if (open != 1) continue;
      auto& [pd, ps, psign] = rel.terms[pivot];
      if (ps != 0 && ps != mprime) continue;
      // pivot coefficient psign * Lambda^ps W' is a unit; its inverse:
      VirtualRep inv = VirtualRep::irreducible(DominantWeight::det_power(mprime, ps == 0 ? 0 : -1)).scaled(psign);
      Expression x;
      x[GeneratorRef{GeneratorRef::Kind::O, rel.gen.lambda, rel.gen.det_twist}] = inv;
      for (std::size_t j = 0; j < rel.terms.size(); ++j) {
        if (j == pivot) continue;
        auto& [dj, sj, sgn] = rel.terms[j];
        add_scaled(x, solved.at(dj), tensor(exterior_rep(sj, mprime), inv).scaled(-sgn));
      }
      solved[pd] = std::move(x);
      used[ri] = true;
      progress = true;
    }
  }
  for (auto& p : big)
    if (!solved.count(p)) throw std::runtime_error("generation solve stalled before " + p.to_string());
  return solved;
}

}  // namespace detail

inline nlohmann::json generator_json(const GeneratorRef& g) {
  if (g.kind == GeneratorRef::Kind::Window) return {{"kind", "window"}, {"diagram", g.diagram}};
  return {{"kind", "O"}, {"lambda", g.diagram}, {"det_twist", g.det_twist}};
}

inline void to_json(nlohmann::json& j, const KTheoryExpression& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& t : e.combination)
    terms.push_back({{"generator", generator_json(t.generator)},
                     {"wprime", t.wprime},
                     {"coefficient", t.coefficient},
                     {"shift", t.shift}});
  j = {{"target", e.target}, {"d", e.d},          {"m", e.m},
       {"mprime", e.mprime}, {"cutoff", e.cutoff}, {"degree_offset", e.degree_offset},
       {"combination", terms}, {"verified", e.verified}, {"failure", e.failure}};
}

// Expresses the free module of L_lambda V^vee as an integer combination of the
// window K_{d,m'} and the O-generators, and verifies the identity on graded
// characters to cutoff layers above the lowest generator degree.
inline KTheoryExpression generation_witness(const Partition& lambda, int d, int m, int mprime, int cutoff) {
  if (d < 1 || mprime < d || m < mprime) throw std::invalid_argument("generation_witness: need 1 <= d <= mprime <= m");
  if (!lambda.fits_box(m - d, d)) throw std::invalid_argument("generation_witness: lambda outside K_{d,m}");
  if (cutoff < 0) throw std::invalid_argument("generation_witness: cutoff must be nonnegative");
  KTheoryExpression out;
  out.target = lambda;
  out.d = d;
  out.m = m;
  out.mprime = mprime;
  out.cutoff = cutoff;
  auto solved = detail::solve_generation(d, m, mprime);
  int lowest = 0;
  for (auto& [g, coef] : solved.at(lambda))
    for (auto& [w, c] : coef.terms()) {
      out.combination.push_back({g, w, c < 0 ? -c : c, c < 0 ? 1 : 0});
      lowest = std::min(lowest, w.size());
    }
  out.degree_offset = -lowest;
  const int top = cutoff + out.degree_offset;
  Profile p = standard_profile(d, m, mprime);
  auto ring = coordinate_ring_character(p, top);
  GradedCharacter sum(p, top);
  std::map<GeneratorRef, GradedCharacter> base;
  for (auto& t : out.combination) {
    auto it = base.find(t.generator);
    if (it == base.end()) {
      GradedCharacter ch(p, top);
      if (t.generator.kind == GeneratorRef::Kind::Window) {
        ch = multiply(GradedCharacter::monomial(p, top, 0, {dual_weight(column_weight(t.generator.diagram, d)),
                                                             DominantWeight::trivial(m), DominantWeight::trivial(mprime)}),
                      ring);
      } else {
        ch = hstar_euler_character(t.generator.diagram, d, m, mprime, top)
                 .twisted(kV, DominantWeight::det_power(d, -t.generator.det_twist));
      }
      it = base.emplace(t.generator, std::move(ch)).first;
    }
    sum += it->second.twisted(kWp, t.wprime)
               .shifted(out.degree_offset + t.wprime.size())
               .scaled(t.shift ? -t.coefficient : t.coefficient);
  }
  auto target = multiply(GradedCharacter::monomial(p, top, 0, {dual_weight(column_weight(lambda, d)),
                                                                DominantWeight::trivial(m), DominantWeight::trivial(mprime)}),
                         ring)
                    .shifted(out.degree_offset);
  if (auto mm = first_difference(target, sum)) {
    out.failure = mismatch_json(p, *mm);
  } else {
    out.verified = true;
  }
  return out;
}

}  // namespace grassflop
