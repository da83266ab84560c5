#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "charring.hpp"
#include "polynomial.hpp"
#include "report.hpp"

namespace grassflop {

// Coordinates of the kernel: B is m x d (maps V -> W), A is d x mprime
// (maps W' -> V), C is d x d. B and A are the coordinates on Z itself.
struct KernelSymbols {
  SymbolTable table;
  PolyMatrix BL, BR, C, AL, AR, B, A;

  KernelSymbols(int d, int m, int mprime)
      : BL(symbolic_matrix(table, "BL", m, d)),
        BR(symbolic_matrix(table, "BR", m, d)),
        C(symbolic_matrix(table, "C", d, d)),
        AL(symbolic_matrix(table, "AL", d, mprime)),
        AR(symbolic_matrix(table, "AR", d, mprime)),
        B(symbolic_matrix(table, "B", m, d)),
        A(symbolic_matrix(table, "A", d, mprime)) {}
};

namespace detail {

inline void check_kernel_dims(int d, int m, int mprime) {
  if (d < 1 || m < 1 || mprime < 1) throw std::invalid_argument("kernel identities need d, m, mprime >= 1");
}

inline std::optional<std::pair<int, int>> first_differing_entry(const PolyMatrix& x, const PolyMatrix& y) {
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (!(x(i, j) == y(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

inline nlohmann::json entry_failure(const std::string& what, const KernelSymbols& k, const PolyMatrix& x,
                                    const PolyMatrix& y, std::pair<int, int> e) {
  return {{"identity", what},
          {"entry", {e.first, e.second}},
          {"lhs", x(e.first, e.second).to_string(k.table)},
          {"rhs", y(e.first, e.second).to_string(k.table)}};
}

// Random integer point for every symbol together with the numeric matrices.
struct Specialization {
  std::vector<mult_t> values;
  IntMatrix BL, BR, C, AL, AR;
};

inline IntMatrix numeric(const PolyMatrix& sym, const std::vector<mult_t>& values) {
  return sym.map([&](const Polynomial& p) { return p.evaluate(values); });
}

inline Specialization specialize(const KernelSymbols& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<mult_t> values(k.table.size());
  for (auto& v : values) v = dist(rng);
  return {values, numeric(k.BL, values), numeric(k.BR, values), numeric(k.C, values),
          numeric(k.AL, values), numeric(k.AR, values)};
}

inline std::optional<std::pair<int, int>> first_numeric_difference(const IntMatrix& x, const IntMatrix& y) {
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

inline void check_numeric(CheckResult& r, const std::string& what, int trial, const IntMatrix& x, const IntMatrix& y) {
  if (auto e = first_numeric_difference(x, y))
    r.fail({{"identity", what},
            {"trial", trial},
            {"entry", {e->first, e->second}},
            {"lhs", x(e->first, e->second)},
            {"rhs", y(e->first, e->second)}});
}

}  // namespace detail

// (BL - BR C) AL + BR (C AL - AR) = BL AL - BR AR, symbolically and at random
// integer points evaluated with plain integer matrices.
inline CheckResult verify_ideal_identity(int d, int m, int mprime, int trials = 0, std::uint64_t seed = 0) {
  detail::check_kernel_dims(d, m, mprime);
  CheckResult r{"ideal-identity", {{"d", d}, {"m", m}, {"mprime", mprime}, {"trials", trials}, {"seed", seed}}};
  KernelSymbols k(d, m, mprime);
  PolyMatrix lhs = (k.BL - k.BR * k.C) * k.AL + k.BR * (k.C * k.AL - k.AR);
  PolyMatrix rhs = k.BL * k.AL - k.BR * k.AR;
  if (auto e = detail::first_differing_entry(lhs, rhs)) r.fail(detail::entry_failure("containment", k, lhs, rhs, *e));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials && r.pass; ++t) {
    auto s = detail::specialize(k, rng);
    IntMatrix nl = (s.BL - s.BR * s.C) * s.AL + s.BR * (s.C * s.AL - s.AR);
    IntMatrix nr = s.BL * s.AL - s.BR * s.AR;
    detail::check_numeric(r, "containment", t, nl, nr);
    detail::check_numeric(r, "symbolic-evaluation", t, detail::numeric(lhs, s.values), nr);
  }
  return r;
}

// The two k[Z]-module structures p(B, A) = (BR C, AL) and s(B, A) = (BR, C AL)
// agree on BA, and both factor through the quotient kappa identifying
// BL = BR C, AR = C AL.
inline CheckResult verify_bimodule_maps(int d, int m, int mprime, int trials = 0, std::uint64_t seed = 0) {
  detail::check_kernel_dims(d, m, mprime);
  CheckResult r{"bimodule-maps", {{"d", d}, {"m", m}, {"mprime", mprime}, {"trials", trials}, {"seed", seed}}};
  KernelSymbols k(d, m, mprime);
  auto hom = [&](const PolyMatrix& b, const PolyMatrix& a) {
    std::map<int, Polynomial> images;
    bind_matrix(images, k.table, "B", b);
    bind_matrix(images, k.table, "A", a);
    return images;
  };
  auto apply = [](const PolyMatrix& x, const std::map<int, Polynomial>& images) {
    return x.map([&](const Polynomial& p) { return p.substitute(images); });
  };
  const PolyMatrix ba = k.B * k.A;
  const PolyMatrix target = k.BR * k.C * k.AL;
  const auto p_sharp = hom(k.BR * k.C, k.AL);
  const auto s_sharp = hom(k.BR, k.C * k.AL);
  auto check = [&](const std::string& what, const PolyMatrix& x, const PolyMatrix& y) {
    if (auto e = detail::first_differing_entry(x, y)) r.fail(detail::entry_failure(what, k, x, y, *e));
  };
  const PolyMatrix p_ba = apply(ba, p_sharp), s_ba = apply(ba, s_sharp);
  check("p(BA) = BR C AL", p_ba, target);
  check("s(BA) = BR C AL", s_ba, target);

  std::map<int, Polynomial> kappa;
  bind_matrix(kappa, k.table, "BL", k.BR * k.C);
  bind_matrix(kappa, k.table, "AR", k.C * k.AL);
  const PolyMatrix zero_db(m, d), zero_da(d, mprime), zero_dd(m, mprime);
  check("kappa(BL - BR C) = 0", apply(k.BL - k.BR * k.C, kappa), zero_db);
  check("kappa(AR - C AL) = 0", apply(k.AR - k.C * k.AL, kappa), zero_da);
  check("kappa(BL AL - BR AR) = 0", apply(k.BL * k.AL - k.BR * k.AR, kappa), zero_dd);
  check("p = kappa(left)", apply(apply(ba, hom(k.BL, k.AL)), kappa), p_ba);
  check("s = kappa(right)", apply(apply(ba, hom(k.BR, k.AR)), kappa), s_ba);

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials && r.pass; ++t) {
    auto s = detail::specialize(k, rng);
    IntMatrix expect = s.BR * s.C * s.AL;
    detail::check_numeric(r, "p(BA)", t, detail::numeric(p_ba, s.values), expect);
    detail::check_numeric(r, "s(BA)", t, detail::numeric(s_ba, s.values), (s.BR) * (s.C * s.AL));
  }
  return r;
}

// Invariants of the middle GL(d) acting on Sym(V_L (x) H^vee) Sym(H (x) V_R^vee).
// Both factors have generators of degree 1, so total degree 2n is compared with
// the Cauchy layer n of Sym(V_L (x) V_R^vee); odd total degrees carry no invariants.
inline CheckResult verify_pinch_character(int d, int cutoff) {
  if (d < 1) throw std::invalid_argument("verify_pinch_character: d must be >= 1");
  if (cutoff < 0) throw std::invalid_argument("verify_pinch_character: cutoff must be nonnegative");
  CheckResult r{"pinch", {{"d", d}, {"cutoff", cutoff}}};
  r.metadata = {{"degree_correspondence", "invariant total degree 2n <-> Cauchy layer n"}};
  Profile p({{"wH", d}, {"wVL", d}, {"wVR", d}});
  const int top = 2 * cutoff;
  auto total = multiply(sym_hom_character({1, false}, {0, true}, p, top), sym_hom_character({0, false}, {2, true}, p, top));
  auto inv = invariant_multiplicity(total, 0);
  GradedCharacter expected(inv.profile(), top);
  for (int n = 0; n <= cutoff; ++n)
    for (auto& lam : partitions_of(n, d, n)) expected.add(2 * n, {row_weight(lam, d), dual_weight(row_weight(lam, d))}, 1);
  if (auto mm = first_difference(inv, expected)) r.fail(mismatch_json(inv.profile(), *mm));
  return r;
}

// Koszul resolution of the zero locus of Hom(V, Q), fibrewise over Gr(d, W):
//   sum_i (-1)^i Lambda^i(Hom(V,Q)^vee) Sym(Hom(V,W)^vee + Hom(W',V)^vee)
//     = Sym(Hom(V,S)^vee + Hom(W',V)^vee)
// in the characters of GL(V) x GL(S) x GL(Q) x GL(W'). The GL(W) character is
// restricted to GL(S) x GL(Q) by the branching rule.
inline CheckResult verify_koszul_resolution(int d, int m, int mprime, int cutoff) {
  if (d < 1 || mprime < 1 || m <= d) throw std::invalid_argument("verify_koszul_resolution: need m > d >= 1, mprime >= 1");
  if (cutoff < 0) throw std::invalid_argument("verify_koszul_resolution: cutoff must be nonnegative");
  CheckResult r{"koszul", {{"d", d}, {"m", m}, {"mprime", mprime}, {"cutoff", cutoff}}};
  Profile base({{"wV", d}, {"wW", m}, {"wWp", mprime}});
  auto ring = multiply(sym_hom_character({kV, false}, {kW, true}, base, cutoff),
                       sym_hom_character({kWp, false}, {kV, true}, base, cutoff));
  auto branched = branch_slot(ring, kW, {"wS", d}, {"wQ", m - d});
  const Profile& p = branched.profile();
  const int v = 0, s = 1, q = 2, wp = 3;
  auto koszul = exterior_hom_character({v, false}, {q, true}, p, cutoff, true);
  auto lhs = multiply(koszul, branched);
  auto rhs = multiply(sym_hom_character({v, false}, {s, true}, p, cutoff), sym_hom_character({wp, false}, {v, true}, p, cutoff));
  if (auto mm = first_difference(lhs, rhs)) {
    auto f = mismatch_json(p, *mm);
    f["identity"] = "resolution";
    r.fail(f);
  }
  auto unit_check = multiply(koszul, sym_hom_character({v, false}, {q, true}, p, cutoff));
  if (auto mm = first_difference(unit_check, GradedCharacter::unit(p, cutoff))) {
    auto f = mismatch_json(p, *mm);
    f["identity"] = "generic-koszul";
    r.fail(f);
  }
  return r;
}

}  // namespace grassflop
