#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "checked.hpp"

namespace grassflop {

class SymbolTable {
 public:
  int intern(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, static_cast<int>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }
  int find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown symbol " + name);
    return it->second;
  }
  const std::string& name(int v) const { return names_.at(v); }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// Sorted (variable, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<int, int>>;

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first))
      out.push_back(*i++);
    else if (i == a.end() || j->first < i->first)
      out.push_back(*j++);
    else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(mult_t c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
  }
  static Polynomial variable(int v) {
    Polynomial p;
    p.terms_.emplace(Monomial{{v, 1}}, 1);
    return p;
  }

  const std::map<Monomial, mult_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, mult_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, checked_neg(c));
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), checked_mul(ca, cb));
    return out;
  }
  bool operator==(const Polynomial&) const = default;

  mult_t evaluate(const std::vector<mult_t>& values) const {
    mult_t total = 0;
    for (auto& [m, c] : terms_) {
      mult_t t = c;
      for (auto [v, e] : m)
        for (int k = 0; k < e; ++k) t = checked_mul(t, values.at(v));
      total = checked_add(total, t);
    }
    return total;
  }

  // Ring homomorphism sending each mapped variable to a polynomial; other
  // variables are fixed.
  Polynomial substitute(const std::map<int, Polynomial>& images) const {
    Polynomial out;
    for (auto& [m, c] : terms_) {
      Polynomial t = constant(c);
      Monomial fixed;
      for (auto [v, e] : m) {
        auto it = images.find(v);
        if (it == images.end()) {
          fixed.emplace_back(v, e);
          continue;
        }
        for (int k = 0; k < e; ++k) t = t * it->second;
      }
      Polynomial f;
      f.add_term(fixed, 1);
      out += t * f;
    }
    return out;
  }

  std::string to_string(const SymbolTable& s) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      mult_t a = c < 0 ? -c : c;
      if (a != 1 || m.empty()) out += std::to_string(a) + (m.empty() ? "" : "*");
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += "*";
        out += s.name(m[i].first);
        if (m[i].second > 1) out += "^" + std::to_string(m[i].second);
      }
    }
    return out;
  }

 private:
  std::map<Monomial, mult_t> terms_;
};

template <class T>
class Matrix {
 public:
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        T acc{};
        for (int k = 0; k < a.cols_; ++k) acc = add(acc, mul(a(i, k), b(k, j)));
        out(i, j) = acc;
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, 1); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, -1); }
  bool operator==(const Matrix&) const = default;

  template <class F>
  auto map(F&& f) const {
    Matrix<std::invoke_result_t<F&, const T&>> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  static T add(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, mult_t>) return checked_add(a, b);
    else return a + b;
  }
  static T mul(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, mult_t>) return checked_mul(a, b);
    else return a * b;
  }
  static Matrix combine(const Matrix& a, const Matrix& b, int sign) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      if constexpr (std::is_same_v<T, mult_t>)
        out.entries_[k] = sign > 0 ? checked_add(a.entries_[k], b.entries_[k]) : checked_add(a.entries_[k], checked_neg(b.entries_[k]));
      else
        out.entries_[k] = sign > 0 ? a.entries_[k] + b.entries_[k] : a.entries_[k] - b.entries_[k];
    }
    return out;
  }

  int rows_, cols_;
  std::vector<T> entries_;
};

using PolyMatrix = Matrix<Polynomial>;
using IntMatrix = Matrix<mult_t>;

// Matrix of fresh indeterminates name[i,j].
inline PolyMatrix symbolic_matrix(SymbolTable& table, const std::string& name, int rows, int cols) {
  PolyMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      out(i, j) = Polynomial::variable(table.intern(name + "[" + std::to_string(i) + "," + std::to_string(j) + "]"));
  return out;
}

// Substitution map sending the entries of a symbolic matrix to those of another matrix.
inline void bind_matrix(std::map<int, Polynomial>& images, const SymbolTable& table, const std::string& name,
                 const PolyMatrix& image) {
  for (int i = 0; i < image.rows(); ++i)
    for (int j = 0; j < image.cols(); ++j)
      images[table.find(name + "[" + std::to_string(i) + "," + std::to_string(j) + "]")] = image(i, j);
}

}  // namespace grassflop
