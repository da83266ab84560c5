#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glrep.hpp"
#include "partition.hpp"

namespace grassflop {

class BwbOutcome {
 public:
  static BwbOutcome zero() { return BwbOutcome(); }
  BwbOutcome(int degree, DominantWeight weight) : degree_(degree), weight_(std::move(weight)) {}

  bool is_zero() const { return !weight_.has_value(); }
  int degree() const { return degree_; }
  const DominantWeight& weight() const {
    if (!weight_) throw std::logic_error("BwbOutcome::weight on a Zero outcome");
    return *weight_;
  }

  std::string to_string() const {
    return is_zero() ? std::string("ZERO") : "H^" + std::to_string(degree_) + " : " + weight_->to_string();
  }

  bool operator==(const BwbOutcome&) const = default;

 private:
  BwbOutcome() = default;
  int degree_ = 0;
  std::optional<DominantWeight> weight_;
};

inline BwbOutcome bott_dot(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> x(w);
  for (int i = 0; i < n; ++i) x[i] += n - 1 - i;
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (x[i] == x[j]) return BwbOutcome::zero();
      if (x[i] < x[j]) ++inversions;
    }
  std::sort(x.begin(), x.end(), std::greater<>());
  for (int i = 0; i < n; ++i) x[i] -= n - 1 - i;
  return BwbOutcome(inversions, DominantWeight(std::move(x)));
}

// Cohomology of Sigma^a S (x) Sigma^b Q on Gr(d, n), where S is the tautological
// rank-d subbundle and Q the quotient. The outcome weight is the GL(n) highest
// weight of the unique nonzero cohomology group.
inline BwbOutcome grassmann_cohomology(int d, int n, const DominantWeight& a, const DominantWeight& b) {
  if (d < 0 || n < d) throw std::invalid_argument("grassmann_cohomology: need 0 <= d <= n");
  if (a.rank() != d || b.rank() != n - d)
    throw std::invalid_argument("grassmann_cohomology: weight lengths must be d and n-d");
  std::vector<int> w = b.entries();
  w.insert(w.end(), a.entries().begin(), a.entries().end());
  return bott_dot(w);
}

// The bundle E^vee (x) omega whose cohomology is Serre dual to that of E = (a, b).
inline std::pair<DominantWeight, DominantWeight> serre_partner(int d, int n, const DominantWeight& a,
                                                               const DominantWeight& b) {
  return {det_twist(dual_weight(a), n - d), det_twist(dual_weight(b), -d)};
}

// Cohomological degree -> GL(n)-content.
using GradedRep = std::map<int, VirtualRep>;

inline void accumulate(GradedRep& into, int degree, const DominantWeight& w, mult_t c) {
  auto it = into.try_emplace(degree, VirtualRep(w.rank())).first;
  it->second.add(w, c);
  if (it->second.empty()) into.erase(it);
}

// Cohomology of the virtual S-bundle described by a GL(d) representation.
inline GradedRep pushforward_sub(int d, int n, const VirtualRep& s_side) {
  GradedRep out;
  const auto q = DominantWeight::trivial(n - d);
  for (auto& [k, c] : s_side.terms()) {
    auto o = grassmann_cohomology(d, n, k, q);
    if (!o.is_zero()) accumulate(out, o.degree(), o.weight(), c);
  }
  return out;
}

inline mult_t euler_dimension(const GradedRep& g) {
  mult_t chi = 0;
  for (auto& [deg, rep] : g) chi = checked_add(chi, (deg % 2 ? -1 : 1) * rep.dimension());
  return chi;
}

// RGamma(Gr(d, n), L_alpha S (x) L_beta S^vee).
inline GradedRep window_ext(const Partition& alpha, const Partition& beta, int d, int n) {
  if (d < 1 || n < d) throw std::invalid_argument("window_ext: need 1 <= d <= n");
  if (alpha.width() > d || beta.width() > d)
    throw std::invalid_argument("window_ext: diagrams must have width <= d");
  return pushforward_sub(d, n, tensor_decompose(column_weight(alpha, d), dual_weight(column_weight(beta, d))));
}

inline void to_json(nlohmann::json& j, const BwbOutcome& o) {
  if (o.is_zero())
    j = nullptr;
  else
    j = {{"degree", o.degree()}, {"weight", o.weight()}};
}

inline nlohmann::json graded_rep_json(const GradedRep& g) {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [deg, rep] : g) j[std::to_string(deg)] = rep;
  return j;
}

}  // namespace grassflop
