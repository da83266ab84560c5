#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "checked.hpp"
#include "glrep.hpp"
#include "parallel.hpp"
#include "partition.hpp"

namespace grassflop {

struct GroupProfile {
  int d = 1, m = 1, mprime = 1;

  void validate() const {
    if (d < 1) throw std::invalid_argument("profile: d must be >= 1");
    if (m < d) throw std::invalid_argument("profile: m must be >= d");
    if (mprime < d) throw std::invalid_argument("profile: mprime must be >= d");
  }
  bool operator==(const GroupProfile&) const = default;
};

struct Slot {
  std::string name;
  int rank = 0;
  bool operator==(const Slot&) const = default;
};

// Ordered list of general linear groups a character is equivariant for.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<Slot> slots) : slots_(std::move(slots)) {
    for (auto& s : slots_)
      if (s.rank < 0) throw std::invalid_argument("slot rank must be nonnegative");
  }

  static Profile standard(const GroupProfile& g) {
    g.validate();
    Profile p({{"wV", g.d}, {"wW", g.m}, {"wWp", g.mprime}});
    p.group_ = g;
    return p;
  }

  int size() const { return static_cast<int>(slots_.size()); }
  const Slot& slot(int i) const { return slots_.at(i); }
  int rank(int i) const { return slots_.at(i).rank; }
  const std::optional<GroupProfile>& group() const { return group_; }

  int index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (slots_[i].name == name) return i;
    throw std::invalid_argument("no slot named " + name);
  }

  Profile without(int i) const {
    check(i);
    auto s = slots_;
    s.erase(s.begin() + i);
    return Profile(std::move(s));
  }

  void check(int i) const {
    if (i < 0 || i >= size()) throw std::invalid_argument("slot index out of range");
  }

  bool operator==(const Profile& o) const { return slots_ == o.slots_; }

 private:
  std::vector<Slot> slots_;
  std::optional<GroupProfile> group_;
};

inline constexpr int kV = 0;
inline constexpr int kW = 1;
inline constexpr int kWp = 2;

// A tensor factor: the defining representation of a slot or its dual.
struct SlotRef {
  int slot = 0;
  bool dual = false;
};

using WeightTuple = std::vector<DominantWeight>;
using Layer = std::map<WeightTuple, mult_t>;

class GradedCharacter {
 public:
  GradedCharacter(Profile profile, int cutoff) : profile_(std::move(profile)), cutoff_(cutoff) {
    if (cutoff_ < 0) throw std::invalid_argument("cutoff must be nonnegative");
  }

  static GradedCharacter unit(const Profile& p, int cutoff) {
    GradedCharacter c(p, cutoff);
    c.add(0, c.trivial_tuple(), 1);
    return c;
  }

  static GradedCharacter monomial(const Profile& p, int cutoff, int degree, const WeightTuple& w, mult_t mult = 1) {
    GradedCharacter c(p, cutoff);
    c.add(degree, w, mult);
    return c;
  }

  const Profile& profile() const { return profile_; }
  int cutoff() const { return cutoff_; }
  const std::map<int, Layer>& layers() const { return layers_; }
  bool empty() const { return layers_.empty(); }

  WeightTuple trivial_tuple() const {
    WeightTuple w;
    for (int i = 0; i < profile_.size(); ++i) w.push_back(DominantWeight::trivial(profile_.rank(i)));
    return w;
  }

  // Terms in degrees above the cutoff are dropped.
  void add(int degree, const WeightTuple& w, mult_t mult) {
    if (degree < 0) throw std::invalid_argument("character degrees are nonnegative");
    if (degree > cutoff_ || mult == 0) return;
    if (static_cast<int>(w.size()) != profile_.size()) throw std::invalid_argument("weight tuple has wrong length");
    for (int i = 0; i < profile_.size(); ++i)
      if (w[i].rank() != profile_.rank(i))
        throw std::invalid_argument("weight " + w[i].to_string() + " has wrong rank for slot " + profile_.slot(i).name);
    auto& layer = layers_[degree];
    auto it = layer.find(w);
    if (it == layer.end()) {
      layer.emplace(w, mult);
      return;
    }
    it->second = checked_add(it->second, mult);
    if (it->second == 0) {
      layer.erase(it);
      if (layer.empty()) layers_.erase(degree);
    }
  }

  mult_t multiplicity(int degree, const WeightTuple& w) const {
    auto l = layers_.find(degree);
    if (l == layers_.end()) return 0;
    auto it = l->second.find(w);
    return it == l->second.end() ? 0 : it->second;
  }

  const Layer& layer(int degree) const {
    static const Layer empty_layer;
    auto l = layers_.find(degree);
    return l == layers_.end() ? empty_layer : l->second;
  }

  mult_t layer_dimension(int degree) const {
    mult_t total = 0;
    for (auto& [w, c] : layer(degree)) {
      mult_t dim = c;
      for (auto& x : w) dim = checked_mul(dim, weyl_dim(x));
      total = checked_add(total, dim);
    }
    return total;
  }

  GradedCharacter& operator+=(const GradedCharacter& o) {
    if (!(o.profile_ == profile_)) throw std::invalid_argument("character profile mismatch");
    cutoff_ = std::min(cutoff_, o.cutoff_);
    for (auto it = layers_.begin(); it != layers_.end();) it = it->first > cutoff_ ? layers_.erase(it) : std::next(it);
    for (auto& [deg, layer] : o.layers_)
      for (auto& [w, c] : layer) add(deg, w, c);
    return *this;
  }

  GradedCharacter scaled(mult_t k) const {
    GradedCharacter out(profile_, cutoff_);
    for (auto& [deg, layer] : layers_)
      for (auto& [w, c] : layer) out.add(deg, w, checked_mul(c, k));
    return out;
  }

  GradedCharacter shifted(int k) const {
    GradedCharacter out(profile_, cutoff_);
    for (auto& [deg, layer] : layers_)
      for (auto& [w, c] : layer) out.add(deg + k, w, c);
    return out;
  }

  GradedCharacter truncated(int cutoff) const {
    GradedCharacter out(profile_, std::min(cutoff, cutoff_));
    for (auto& [deg, layer] : layers_)
      for (auto& [w, c] : layer) out.add(deg, w, c);
    return out;
  }

  // Tensor every term with the irreducible of weight t in one slot.
  GradedCharacter twisted(int slot, const DominantWeight& t) const {
    profile_.check(slot);
    GradedCharacter out(profile_, cutoff_);
    for (auto& [deg, layer] : layers_)
      for (auto& [w, c] : layer)
        for (auto& [x, k] : tensor_decompose(w[slot], t).terms()) {
          WeightTuple v = w;
          v[slot] = x;
          out.add(deg, v, checked_mul(c, k));
        }
    return out;
  }

  bool operator==(const GradedCharacter& o) const {
    return profile_ == o.profile_ && cutoff_ == o.cutoff_ && layers_ == o.layers_;
  }

 private:
  Profile profile_;
  int cutoff_;
  std::map<int, Layer> layers_;
};

// Sym(A (x) B) by the Cauchy formula, layer n = sum over |mu| = n of L_mu A (x) L_mu B.
inline GradedCharacter sym_hom_character(SlotRef a, SlotRef b, const Profile& p, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("sym_hom_character: cutoff must be nonnegative");
  p.check(a.slot);
  p.check(b.slot);
  if (a.slot == b.slot) throw std::invalid_argument("sym_hom_character: factors must be distinct slots");
  GradedCharacter out(p, cutoff);
  const int ra = p.rank(a.slot), rb = p.rank(b.slot);
  for (int n = 0; n <= cutoff; ++n)
    for (auto& mu : partitions_of(n, std::min(ra, rb), n)) {
      WeightTuple w = out.trivial_tuple();
      auto wa = row_weight(mu, ra), wb = row_weight(mu, rb);
      w[a.slot] = a.dual ? dual_weight(wa) : wa;
      w[b.slot] = b.dual ? dual_weight(wb) : wb;
      out.add(n, w, 1);
    }
  return out;
}

// Summands (lambda, lambda') of the i-th exterior power of A (x) B, rank A = a, rank B = b.
inline std::vector<std::pair<Partition, Partition>> exterior_cauchy(int i, int a, int b) {
  if (a < 0 || b < 0 || i < 0 || i > a * b) throw std::invalid_argument("exterior_cauchy: degree out of range");
  std::vector<std::pair<Partition, Partition>> out;
  for (auto& lam : partitions_of(i, a, b)) out.emplace_back(lam, conjugate(lam));
  return out;
}

// sum_i (+-1)^i Lambda^i(A (x) B), with Lambda^i placed in degree i.
inline GradedCharacter exterior_hom_character(SlotRef a, SlotRef b, const Profile& p, int cutoff, bool alternating) {
  p.check(a.slot);
  p.check(b.slot);
  GradedCharacter out(p, cutoff);
  const int ra = p.rank(a.slot), rb = p.rank(b.slot);
  for (int i = 0; i <= std::min(cutoff, ra * rb); ++i)
    for (auto& [lam, lamt] : exterior_cauchy(i, ra, rb)) {
      WeightTuple w = out.trivial_tuple();
      auto wa = row_weight(lam, ra), wb = row_weight(lamt, rb);
      w[a.slot] = a.dual ? dual_weight(wa) : wa;
      w[b.slot] = b.dual ? dual_weight(wb) : wb;
      out.add(i, w, alternating && i % 2 ? -1 : 1);
    }
  return out;
}

namespace detail {
inline void product_terms(const WeightTuple& x, const WeightTuple& y, std::size_t slot, WeightTuple& cur, mult_t c,
                          Layer& out) {
  if (slot == x.size()) {
    auto& v = out[cur];
    v = checked_add(v, c);
    return;
  }
  for (auto& [w, k] : tensor_decompose(x[slot], y[slot]).terms()) {
    cur[slot] = w;
    product_terms(x, y, slot + 1, cur, checked_mul(c, k), out);
  }
}
}  // namespace detail

inline GradedCharacter multiply(const GradedCharacter& x, const GradedCharacter& y) {
  if (!(x.profile() == y.profile())) throw std::invalid_argument("multiply: profile mismatch");
  const int cutoff = std::min(x.cutoff(), y.cutoff());
  auto layers = parallel_map(static_cast<std::size_t>(cutoff) + 1, [&](std::size_t n) {
    Layer acc;
    for (auto& [p, lx] : x.layers()) {
      int q = static_cast<int>(n) - p;
      if (q < 0) break;
      auto ly = y.layers().find(q);
      if (ly == y.layers().end()) continue;
      for (auto& [wa, ca] : lx)
        for (auto& [wb, cb] : ly->second) {
          WeightTuple cur(wa.size());
          detail::product_terms(wa, wb, 0, cur, checked_mul(ca, cb), acc);
        }
    }
    return acc;
  });
  GradedCharacter out(x.profile(), cutoff);
  for (int n = 0; n <= cutoff; ++n)
    for (auto& [w, c] : layers[n]) out.add(n, w, c);
  return out;
}

// Terms whose weight in the chosen slot is trivial, with that slot removed.
inline GradedCharacter invariant_multiplicity(const GradedCharacter& x, int slot) {
  x.profile().check(slot);
  GradedCharacter out(x.profile().without(slot), x.cutoff());
  for (auto& [deg, layer] : x.layers())
    for (auto& [w, c] : layer) {
      if (!w[slot].is_trivial()) continue;
      WeightTuple rest = w;
      rest.erase(rest.begin() + slot);
      out.add(deg, rest, c);
    }
  return out;
}

// Keeps the terms whose weight in the slot is polynomial.
inline GradedCharacter truncate_polynomial(const GradedCharacter& x, int slot) {
  x.profile().check(slot);
  GradedCharacter out(x.profile(), x.cutoff());
  for (auto& [deg, layer] : x.layers())
    for (auto& [w, c] : layer)
      if (w[slot].is_polynomial()) out.add(deg, w, c);
  return out;
}

// Restriction along GL(r1) x GL(r - r1) -> GL(r) in one slot, which is
// replaced by two adjacent slots.
inline GradedCharacter branch_slot(const GradedCharacter& x, int slot, const Slot& first, const Slot& second) {
  x.profile().check(slot);
  const int r = x.profile().rank(slot);
  if (first.rank < 0 || second.rank < 0 || first.rank + second.rank != r)
    throw std::invalid_argument("branch_slot: ranks must add up to the slot rank");
  std::vector<Slot> slots;
  for (int i = 0; i < x.profile().size(); ++i) {
    if (i == slot) {
      slots.push_back(first);
      slots.push_back(second);
    } else {
      slots.push_back(x.profile().slot(i));
    }
  }
  std::map<DominantWeight, std::vector<std::pair<std::pair<DominantWeight, DominantWeight>, mult_t>>> rules;
  auto rule = [&](const DominantWeight& w) -> const auto& {
    auto it = rules.find(w);
    if (it != rules.end()) return it->second;
    auto& out = rules[w];
    const int shift = w.last();
    const Partition p(det_twist(w, -shift).entries());
    for (int k = 0; k <= p.size(); ++k)
      for (auto& mu : partitions_of(k, first.rank, p.width())) {
        if (!p.contains(mu)) continue;
        for (auto& nu : partitions_of(p.size() - k, second.rank, p.width())) {
          if (!p.contains(nu)) continue;
          auto lr = lr_coefficients(mu, nu, r);
          auto hit = lr.find(p);
          if (hit == lr.end()) continue;
          out.push_back({{det_twist(row_weight(mu, first.rank), shift), det_twist(row_weight(nu, second.rank), shift)},
                         hit->second});
        }
      }
    return out;
  };
  GradedCharacter out(Profile(std::move(slots)), x.cutoff());
  for (auto& [deg, layer] : x.layers())
    for (auto& [w, c] : layer)
      for (auto& [pair, k] : rule(w[slot])) {
        WeightTuple v;
        for (int i = 0; i < x.profile().size(); ++i) {
          if (i == slot) {
            v.push_back(pair.first);
            v.push_back(pair.second);
          } else {
            v.push_back(w[i]);
          }
        }
        out.add(deg, v, checked_mul(c, k));
      }
  return out;
}

struct CharacterMismatch {
  int degree = 0;
  WeightTuple weights;
  mult_t left = 0, right = 0;
};

// First term (in degree, then weight order) where the multiplicities differ, up
// to the smaller cutoff.
inline std::optional<CharacterMismatch> first_difference(const GradedCharacter& x, const GradedCharacter& y) {
  const int cutoff = std::min(x.cutoff(), y.cutoff());
  for (int n = 0; n <= cutoff; ++n) {
    const Layer& a = x.layer(n);
    const Layer& b = y.layer(n);
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) return CharacterMismatch{n, ia->first, ia->second, 0};
      if (ia == a.end() || ib->first < ia->first) return CharacterMismatch{n, ib->first, 0, ib->second};
      if (ia->second != ib->second) return CharacterMismatch{n, ia->first, ia->second, ib->second};
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

inline nlohmann::json weight_tuple_json(const Profile& p, const WeightTuple& w) {
  nlohmann::json j = nlohmann::json::object();
  for (int i = 0; i < p.size(); ++i) j[p.slot(i).name] = w[i];
  return j;
}

inline nlohmann::json profile_json(const Profile& p) {
  if (p.group()) return {{"d", p.group()->d}, {"m", p.group()->m}, {"mprime", p.group()->mprime}};
  nlohmann::json slots = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i) slots.push_back({{"name", p.slot(i).name}, {"rank", p.rank(i)}});
  return {{"slots", slots}};
}

inline nlohmann::json mismatch_json(const Profile& p, const CharacterMismatch& m) {
  return {{"degree", m.degree}, {"weights", weight_tuple_json(p, m.weights)}, {"left", m.left}, {"right", m.right}};
}

inline void to_json(nlohmann::json& j, const GradedCharacter& c) {
  nlohmann::json layers = nlohmann::json::object();
  for (auto& [deg, layer] : c.layers()) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [w, k] : layer) {
      auto t = weight_tuple_json(c.profile(), w);
      t["mult"] = k;
      terms.push_back(t);
    }
    layers[std::to_string(deg)] = terms;
  }
  j = {{"profile", profile_json(c.profile())}, {"cutoff", c.cutoff()}, {"layers", layers}};
}

}  // namespace grassflop
