#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bwb.hpp"
#include "glrep.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "report.hpp"

namespace grassflop {

struct WindowSpec {
  int d = 1, m = 1;
  std::vector<Partition> members;
};

inline WindowSpec kapranov_collection(int d, int m) {
  if (d < 1) throw std::invalid_argument("kapranov_collection: d must be >= 1");
  if (m < d) throw std::invalid_argument("kapranov_collection: m must be >= d");
  return {d, m, enumerate_box(m - d, d)};
}

// Entry (alpha, beta) holds RGamma(L_alpha S (x) L_beta S^vee) = Ext(L_beta S, L_alpha S).
class ExtTable {
 public:
  ExtTable(WindowSpec spec, std::map<std::pair<Partition, Partition>, GradedRep> pairs)
      : spec_(std::move(spec)), pairs_(std::move(pairs)) {}

  const WindowSpec& spec() const { return spec_; }
  const std::map<std::pair<Partition, Partition>, GradedRep>& pairs() const { return pairs_; }
  const GradedRep& at(const Partition& alpha, const Partition& beta) const { return pairs_.at({alpha, beta}); }

  mult_t dimension(const Partition& alpha, const Partition& beta, int degree) const {
    auto& g = at(alpha, beta);
    auto it = g.find(degree);
    return it == g.end() ? 0 : it->second.dimension();
  }

  // dim Hom(L_from S, L_to S).
  mult_t hom_dimension(const Partition& from, const Partition& to) const { return dimension(to, from, 0); }

  std::optional<std::pair<Partition, Partition>> first_positive_degree() const {
    for (auto& [key, g] : pairs_)
      for (auto& [deg, rep] : g)
        if (deg > 0 && !rep.empty()) return key;
    return std::nullopt;
  }

  std::optional<Partition> first_bad_diagonal() const {
    for (auto& a : spec_.members) {
      auto& g = at(a, a);
      auto it = g.find(0);
      if (it == g.end() || it->second.multiplicity(DominantWeight::trivial(spec_.m)) != 1) return a;
    }
    return std::nullopt;
  }

 private:
  WindowSpec spec_;
  std::map<std::pair<Partition, Partition>, GradedRep> pairs_;
};

inline ExtTable ext_table(const WindowSpec& spec) {
  const auto& k = spec.members;
  const std::size_t n = k.size();
  auto entries = parallel_map(n * n, [&](std::size_t i) { return window_ext(k[i / n], k[i % n], spec.d, spec.m); });
  std::map<std::pair<Partition, Partition>, GradedRep> pairs;
  for (std::size_t i = 0; i < n * n; ++i) pairs.emplace(std::make_pair(k[i / n], k[i % n]), std::move(entries[i]));
  return ExtTable(spec, std::move(pairs));
}

struct TriangularOrder {
  bool found = false;
  std::string name;  // "canonical" or "reverse"
  std::vector<Partition> order;
};

// Looks for an order E_1..E_N with dim Hom(E_i, E_i) = 1 and Hom(E_i, E_j) = 0
// for i > j, among the canonical order and its reverse.
inline TriangularOrder hom_unitriangular_order(const ExtTable& t) {
  auto test = [&](const std::vector<Partition>& order) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (t.hom_dimension(order[i], order[i]) != 1) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (t.hom_dimension(order[i], order[j]) != 0) return false;
    }
    return true;
  };
  auto order = t.spec().members;
  if (test(order)) return {true, "canonical", order};
  std::reverse(order.begin(), order.end());
  if (test(order)) return {true, "reverse", order};
  return {false, "", {}};
}

// Duals of the Kapranov weights for (d, mprime), checked against the det-twisted box.
inline std::vector<DominantWeight> dual_window_weights(int d, int mprime) {
  if (d < 1 || mprime < d) throw std::invalid_argument("dual_window_weights: need 1 <= d <= mprime");
  std::vector<DominantWeight> duals;
  std::set<DominantWeight> lhs, rhs;
  for (auto& lam : enumerate_box(mprime - d, d)) {
    auto w = column_weight(lam, d);
    duals.push_back(dual_weight(w));
    lhs.insert(dual_weight(w));
    rhs.insert(det_twist(w, -(mprime - d)));
  }
  if (lhs != rhs) throw std::logic_error("dual window weights differ from the det-twisted window");
  return duals;
}

// Compares, per GL(V) weight gamma with |gamma| <= cutoff, the GL(W)-content of
//   LEFT  = sum_beta H^0(L_alpha S (x) L_beta S^vee) (x) L_beta V
//   RIGHT = Sym(W^vee (x) V) (x) L_alpha V.
// Any higher cohomology on the left is a failure.
inline CheckResult verify_window_fixed_point(const Partition& alpha, int d, int m, int mprime, int cutoff) {
  if (d < 1 || m < d || mprime < d) throw std::invalid_argument("verify_window_fixed_point: need 1 <= d <= m, mprime");
  if (cutoff < 0) throw std::invalid_argument("verify_window_fixed_point: cutoff must be nonnegative");
  if (alpha.width() > d) throw std::invalid_argument("verify_window_fixed_point: alpha wider than d");
  CheckResult report{"window-fixed-point",
                     {{"alpha", alpha}, {"d", d}, {"m", m}, {"mprime", mprime}, {"cutoff", cutoff}}};
  std::map<DominantWeight, VirtualRep> left, right;
  for (int n = 0; n <= cutoff; ++n)
    for (auto& beta : partitions_of(n, n, d)) {
      for (auto& [deg, rep] : window_ext(alpha, beta, d, m)) {
        if (deg > 0) report.fail({{"beta", beta}, {"degree", deg}, {"content", rep}});
        if (deg != 0) continue;
        left.try_emplace(column_weight(beta, d), VirtualRep(m)).first->second += rep;
      }
    }
  const auto a = column_weight(alpha, d);
  for (int n = 0; n <= cutoff - alpha.size(); ++n)
    for (auto& mu : partitions_of(n, std::min(d, m), n)) {
      auto ww = dual_weight(row_weight(mu, m));
      for (auto& [g, c] : tensor_decompose(row_weight(mu, d), a).terms())
        right.try_emplace(g, VirtualRep(m)).first->second.add(ww, c);
    }
  std::set<DominantWeight> gammas;
  for (auto& [g, r] : left) gammas.insert(g);
  for (auto& [g, r] : right) gammas.insert(g);
  for (auto& g : gammas) {
    VirtualRep l = left.count(g) ? left.at(g) : VirtualRep(m);
    VirtualRep r = right.count(g) ? right.at(g) : VirtualRep(m);
    VirtualRep diff = l + r.scaled(-1);
    if (diff.empty()) continue;
    auto& w = diff.terms().begin()->first;
    report.fail({{"gl_v", g}, {"gl_w", w}, {"left", l.multiplicity(w)}, {"right", r.multiplicity(w)}});
    break;
  }
  return report;
}

}  // namespace grassflop
