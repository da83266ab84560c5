#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "checked.hpp"
#include "partition.hpp"

namespace grassflop {

// Highest weight of a rational GL(n) irreducible.
class DominantWeight {
 public:
  DominantWeight() = default;
  DominantWeight(std::initializer_list<int> e) : DominantWeight(std::vector<int>(e)) {}
  explicit DominantWeight(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
      if (entries_[i] < entries_[i + 1])
        throw std::invalid_argument("weight " + to_string() + " is not dominant");
  }
  static DominantWeight trivial(int n) { return DominantWeight(std::vector<int>(n, 0)); }
  static DominantWeight det_power(int n, int k) { return DominantWeight(std::vector<int>(n, k)); }

  int rank() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_[i]; }
  int size() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
  bool is_trivial() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
  }
  bool is_polynomial() const { return entries_.empty() || entries_.back() >= 0; }
  int first() const { return entries_.empty() ? 0 : entries_.front(); }
  int last() const { return entries_.empty() ? 0 : entries_.back(); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    return s + "]";
  }

  auto operator<=>(const DominantWeight&) const = default;

 private:
  std::vector<int> entries_;
};

inline DominantWeight dual_weight(const DominantWeight& a) {
  std::vector<int> e(a.entries().rbegin(), a.entries().rend());
  for (int& x : e) x = -x;
  return DominantWeight(std::move(e));
}

inline DominantWeight det_twist(const DominantWeight& a, int k) {
  std::vector<int> e = a.entries();
  for (int& x : e) x += k;
  return DominantWeight(std::move(e));
}

// Weight with the rows of p as entries (the Cauchy-formula convention).
inline DominantWeight row_weight(const Partition& p, int n) { return DominantWeight(p.padded(n)); }

// Weight of the Schur functor L_p: entries are the column lengths of p.
inline DominantWeight column_weight(const Partition& p, int n) { return DominantWeight(conjugate(p).padded(n)); }

// Inverse of row_weight for polynomial weights.
inline Partition weight_partition(const DominantWeight& w) {
  if (!w.is_polynomial()) throw std::invalid_argument("weight " + w.to_string() + " is not polynomial");
  return Partition(w.entries());
}

namespace detail {
inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

inline mult_t weyl_dim(const DominantWeight& a) {
  const int n = a.rank();
  __int128 num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= a[i] - a[j] + j - i;
      den *= j - i;
      __int128 g = detail::gcd128(num, den);
      num /= g;
      den /= g;
    }
  if (num > INT64_MAX) throw std::overflow_error("weyl_dim overflow");
  return static_cast<mult_t>(num / den);
}

namespace detail {

struct LrSearch {
  const std::vector<int>& mu;
  int max_rows;
  std::map<Partition, mult_t>& out;

  void label(std::vector<int>& shape, std::size_t i, const std::vector<int>& prev) {
    if (i == mu.size()) {
      auto& slot = out[Partition(shape)];
      slot = checked_add(slot, 1);
      return;
    }
    std::vector<int> old = shape;
    old.push_back(0);
    std::vector<int> cur(old.size(), 0);
    distribute(old, cur, i, prev, 0, mu[i], 0, 0);
  }

  void distribute(const std::vector<int>& old, std::vector<int>& cur, std::size_t i,
                  const std::vector<int>& prev, std::size_t r, int left, int cum_cur, int cum_prev) {
    if (r == old.size()) {
      if (left != 0) return;
      std::vector<int> next(old.size());
      for (std::size_t k = 0; k < old.size(); ++k) next[k] = old[k] + cur[k];
      while (!next.empty() && next.back() == 0) next.pop_back();
      if (static_cast<int>(next.size()) > max_rows) return;
      label(next, i + 1, cur);
      return;
    }
    int lim = r == 0 ? left : std::min(left, old[r - 1] - old[r]);
    int prev_r = r < prev.size() ? prev[r] : 0;
    for (int x = lim; x >= 0; --x) {
      if (i > 0 && cum_cur + x > cum_prev) continue;
      cur[r] = x;
      distribute(old, cur, i, prev, r + 1, left - x, cum_cur + x, cum_prev + prev_r);
    }
    cur[r] = 0;
  }
};

}  // namespace detail

// c^nu_{lambda mu} by enumeration of LR tableaux of shape nu/lambda and content mu.
// Diagrams with more than max_rows rows are pruned during the search.
inline std::map<Partition, mult_t> lr_coefficients(const Partition& lambda, const Partition& mu,
                                                   int max_rows = 1 << 30) {
  std::map<Partition, mult_t> out;
  if (lambda.height() > max_rows) return out;
  std::vector<int> shape = lambda.parts();
  detail::LrSearch search{mu.parts(), max_rows, out};
  search.label(shape, 0, {});
  return out;
}

class VirtualRep {
 public:
  explicit VirtualRep(int rank = 0) : rank_(rank) {}
  VirtualRep(int rank, std::map<DominantWeight, mult_t> terms) : rank_(rank) {
    for (auto& [w, c] : terms) add(w, c);
  }
  static VirtualRep irreducible(const DominantWeight& w) {
    VirtualRep r(w.rank());
    r.add(w, 1);
    return r;
  }

  int rank() const { return rank_; }
  const std::map<DominantWeight, mult_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const DominantWeight& w, mult_t c) {
    if (w.rank() != rank_) throw std::invalid_argument("weight rank mismatch in VirtualRep");
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
      return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  VirtualRep& operator+=(const VirtualRep& o) {
    if (o.rank_ != rank_) throw std::invalid_argument("rank mismatch in VirtualRep sum");
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }

  VirtualRep scaled(mult_t k) const {
    VirtualRep r(rank_);
    if (k == 0) return r;
    for (auto& [w, c] : terms_) r.terms_.emplace(w, checked_mul(c, k));
    return r;
  }

  mult_t multiplicity(const DominantWeight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  mult_t dimension() const {
    mult_t total = 0;
    for (auto& [w, c] : terms_) total = checked_add(total, checked_mul(c, weyl_dim(w)));
    return total;
  }

  bool operator==(const VirtualRep&) const = default;

 private:
  int rank_;
  std::map<DominantWeight, mult_t> terms_;
};

namespace detail {

class TensorCache {
 public:
  const VirtualRep* find(const DominantWeight& a, const DominantWeight& b) const {
    std::shared_lock lock(mu_);
    auto it = table_.find({a, b});
    return it == table_.end() ? nullptr : &it->second;
  }
  const VirtualRep& insert(const DominantWeight& a, const DominantWeight& b, VirtualRep v) {
    std::unique_lock lock(mu_);
    return table_.try_emplace({a, b}, std::move(v)).first->second;
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<std::pair<DominantWeight, DominantWeight>, VirtualRep> table_;
};

inline TensorCache& tensor_cache() {
  static TensorCache cache;
  return cache;
}

inline VirtualRep tensor_uncached(const DominantWeight& a, const DominantWeight& b) {
  const int n = a.rank();
  VirtualRep out(n);
  if (n == 0) {
    out.add(a, 1);
    return out;
  }
  const int sa = a.last(), sb = b.last();
  auto pa = Partition(det_twist(a, -sa).entries());
  auto pb = Partition(det_twist(b, -sb).entries());
  for (auto& [nu, c] : lr_coefficients(pa, pb, n)) out.add(det_twist(row_weight(nu, n), sa + sb), c);
  return out;
}

}  // namespace detail

// Irreducible decomposition of V_a (x) V_b over GL(n). Results are memoized.
inline const VirtualRep& tensor_decompose(const DominantWeight& a, const DominantWeight& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("tensor_decompose: rank mismatch " + a.to_string() + " vs " + b.to_string());
  const DominantWeight& x = a < b ? a : b;
  const DominantWeight& y = a < b ? b : a;
  auto& cache = detail::tensor_cache();
  if (auto* hit = cache.find(x, y)) return *hit;
  return cache.insert(x, y, detail::tensor_uncached(x, y));
}

inline VirtualRep tensor(const VirtualRep& x, const VirtualRep& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("tensor: rank mismatch");
  VirtualRep out(x.rank());
  for (auto& [a, ca] : x.terms())
    for (auto& [b, cb] : y.terms()) {
      mult_t c = checked_mul(ca, cb);
      for (auto& [w, m] : tensor_decompose(a, b).terms()) out.add(w, checked_mul(c, m));
    }
  return out;
}

inline VirtualRep dual(const VirtualRep& x) {
  VirtualRep out(x.rank());
  for (auto& [w, c] : x.terms()) out.add(dual_weight(w), c);
  return out;
}

inline void to_json(nlohmann::json& j, const DominantWeight& w) { j = w.entries(); }
inline void from_json(const nlohmann::json& j, DominantWeight& w) { w = DominantWeight(j.get<std::vector<int>>()); }

inline void to_json(nlohmann::json& j, const VirtualRep& r) {
  j = nlohmann::json::array();
  for (auto& [w, c] : r.terms()) j.push_back({{"weight", w}, {"mult", c}});
}

}  // namespace grassflop
