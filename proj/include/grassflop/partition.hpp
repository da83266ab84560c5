#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace grassflop {

// Young diagram stored row-wise, trailing zeros removed.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  // height rows of length width.
  static Partition rectangle(int height, int width) {
    if (height < 0 || width < 0) throw std::invalid_argument("negative rectangle");
    return Partition(std::vector<int>(width == 0 ? 0 : height, width));
  }

  const std::vector<int>& parts() const { return parts_; }
  int height() const { return static_cast<int>(parts_.size()); }
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  int row(int i) const { return i < height() ? parts_[i] : 0; }

  bool contains(const Partition& other) const {
    if (other.height() > height()) return false;
    for (int i = 0; i < other.height(); ++i)
      if (other.parts_[i] > parts_[i]) return false;
    return true;
  }

  bool fits_box(int height_bound, int width_bound) const {
    return height() <= height_bound && width() <= width_bound;
  }

  // Row lengths padded with zeros to exactly n entries.
  std::vector<int> padded(int n) const {
    if (height() > n) throw std::invalid_argument("partition " + to_string() + " has more than " + std::to_string(n) + " rows");
    std::vector<int> v(parts_);
    v.resize(n, 0);
    return v;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(p.width(), 0);
  for (int r : p.parts())
    for (int c = 0; c < r; ++c) ++out[c];
  return Partition(std::move(out));
}

// Canonical enumeration order: size ascending, then lexicographically descending
// within a size, so (2) precedes (1,1).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

namespace detail {
inline void partitions_rec(int remaining, int max_part, int max_height, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_height) return;
  for (int x = std::min(remaining, max_part); x >= 1; --x) {
    cur.push_back(x);
    partitions_rec(remaining - x, x, max_height, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// Partitions of n with at most max_height rows and parts at most max_width,
// lexicographically descending.
inline std::vector<Partition> partitions_of(int n, int max_height, int max_width) {
  std::vector<Partition> out;
  if (n < 0 || max_height < 0 || max_width < 0) return out;
  std::vector<int> cur;
  detail::partitions_rec(n, max_width, max_height, cur, out);
  return out;
}

inline std::vector<Partition> enumerate_box(int height_bound, int width_bound) {
  if (height_bound < 0 || width_bound < 0) throw std::invalid_argument("box bounds must be nonnegative");
  std::vector<Partition> out;
  for (int n = 0; n <= height_bound * width_bound; ++n) {
    auto layer = partitions_of(n, height_bound, width_bound);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

struct SigmaBulletResult {
  Partition diagram;
  int length = 0;
  bool singular = false;
};

// Column-wise dotted action: column d of nu is set to column_height, rho is
// added column by column, columns are sorted, then rho is removed.
inline SigmaBulletResult sigma_bullet(const Partition& nu, int d, int column_height) {
  if (d < 1) throw std::invalid_argument("sigma_bullet needs d >= 1");
  if (nu.width() >= d) throw std::invalid_argument("sigma_bullet: nu must have width < d");
  if (column_height < 0 || column_height > d)
    throw std::invalid_argument("sigma_bullet: column_height must lie in [0, d]");
  std::vector<int> cols = conjugate(nu).padded(d - 1);
  cols.push_back(column_height);
  for (int j = 0; j < d; ++j) cols[j] += d - j;
  SigmaBulletResult res;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      if (cols[i] == cols[j]) {
        res.singular = true;
        return res;
      }
      if (cols[i] < cols[j]) ++res.length;
    }
  std::sort(cols.begin(), cols.end(), std::greater<>());
  for (int j = 0; j < d; ++j) cols[j] -= d - j;
  res.diagram = conjugate(Partition(cols));
  return res;
}

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const nlohmann::json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

}  // namespace grassflop
