#include <functional>

#include <gtest/gtest.h>

#include <grassflop/bwb.hpp>

#include "oracles.hpp"

using grassflop::DominantWeight;
using grassflop::Partition;

namespace {

std::vector<DominantWeight> weights(int n, int lo, int hi) {
  std::vector<DominantWeight> out;
  if (n == 0) return {DominantWeight{}};
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (int x = top; x >= lo; --x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(hi);
  return out;
}

}  // namespace

TEST(BottDot, Examples) {
  EXPECT_EQ(grassflop::bott_dot({2, 1, -1}), grassflop::BwbOutcome(0, DominantWeight{2, 1, -1}));
  EXPECT_TRUE(grassflop::bott_dot({-1, 0}).is_zero());
  EXPECT_EQ(grassflop::bott_dot({-2, 0}), grassflop::BwbOutcome(1, DominantWeight{-1, -1}));
}

TEST(BottDot, AgreesWithPermutationSearch) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> w(n, -3);
    while (true) {
      auto o = grassflop::bott_dot(w);
      auto ref = oracle::bott(w);
      ASSERT_EQ(o.is_zero(), !ref.has_value());
      if (ref) {
        EXPECT_EQ(o.degree(), ref->first);
        EXPECT_EQ(o.weight().entries(), ref->second);
        EXPECT_LE(o.degree(), n * (n - 1) / 2);
      }
      int i = 0;
      while (i < n && ++w[i] > 3) w[i++] = -3;
      if (i == n) break;
    }
  }
}

TEST(GrassmannCohomology, StructureSheaf) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d) {
      auto o = grassflop::grassmann_cohomology(d, n, DominantWeight::trivial(d), DominantWeight::trivial(n - d));
      EXPECT_EQ(o, grassflop::BwbOutcome(0, DominantWeight::trivial(n)));
    }
}

TEST(GrassmannCohomology, DualTautologicalSections) {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d < n; ++d) {
      std::vector<int> a(d, 0);
      a[d - 1] = -1;
      auto o = grassflop::grassmann_cohomology(d, n, DominantWeight(a), DominantWeight::trivial(n - d));
      ASSERT_FALSE(o.is_zero());
      EXPECT_EQ(o.degree(), 0);
      std::vector<int> dual_defining(n, 0);
      dual_defining[n - 1] = -1;
      EXPECT_EQ(o.weight(), DominantWeight(dual_defining));
      EXPECT_EQ(grassflop::weyl_dim(o.weight()), n);
    }
}

TEST(GrassmannCohomology, ProjectiveLine) {
  // On P^1, S = O(-1).
  EXPECT_TRUE(grassflop::grassmann_cohomology(1, 2, DominantWeight{1}, DominantWeight{0}).is_zero());
  auto o = grassflop::grassmann_cohomology(1, 2, DominantWeight{2}, DominantWeight{0});
  ASSERT_FALSE(o.is_zero());
  EXPECT_EQ(o.degree(), 1);
  EXPECT_EQ(grassflop::weyl_dim(o.weight()), 1);
  auto h0 = grassflop::grassmann_cohomology(1, 2, DominantWeight{-1}, DominantWeight{0});
  EXPECT_EQ(h0, grassflop::BwbOutcome(0, DominantWeight{0, -1}));
}

TEST(GrassmannCohomology, RejectsBadLengths) {
  EXPECT_THROW(grassflop::grassmann_cohomology(2, 4, DominantWeight{0}, DominantWeight{0, 0}), std::invalid_argument);
}

TEST(GrassmannCohomology, SerreDualityGrid) {
  for (auto [d, n] : {std::pair{1, 3}, std::pair{2, 4}}) {
    const int dim = d * (n - d);
    for (auto& a : weights(d, -4, 4))
      for (auto& b : weights(n - d, -3, 3)) {
        auto o = grassflop::grassmann_cohomology(d, n, a, b);
        auto [a2, b2] = grassflop::serre_partner(d, n, a, b);
        auto p = grassflop::grassmann_cohomology(d, n, a2, b2);
        ASSERT_EQ(o.is_zero(), p.is_zero()) << a.to_string() << b.to_string();
        if (o.is_zero()) continue;
        EXPECT_EQ(p.degree(), dim - o.degree());
        EXPECT_EQ(p.weight(), grassflop::dual_weight(o.weight()));
        EXPECT_EQ(grassflop::weyl_dim(p.weight()), grassflop::weyl_dim(o.weight()));
      }
  }
}

TEST(GrassmannCohomology, EulerCharacteristicIsWeylPolynomial) {
  for (auto [d, n] : {std::pair{1, 3}, std::pair{2, 4}, std::pair{2, 5}})
    for (auto& a : weights(d, -3, 3))
      for (auto& b : weights(n - d, -2, 2)) {
        auto o = grassflop::grassmann_cohomology(d, n, a, b);
        std::vector<int> w = b.entries();
        w.insert(w.end(), a.entries().begin(), a.entries().end());
        long long chi = o.is_zero() ? 0 : (o.degree() % 2 ? -1 : 1) * grassflop::weyl_dim(o.weight());
        EXPECT_EQ(chi, oracle::weyl_polynomial(w));
      }
}

TEST(WindowExt, ProjectivePlane) {
  // L_(1) S^vee = O(1): its sections are the dual defining representation.
  auto e = grassflop::window_ext(Partition{}, Partition{1}, 1, 3);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.at(0).dimension(), 3);
  EXPECT_EQ(e.at(0).multiplicity(DominantWeight{0, 0, -1}), 1);
  EXPECT_TRUE(grassflop::window_ext(Partition{1}, Partition{}, 1, 3).empty());
}

TEST(WindowExt, DiagonalHasTrivialSummand) {
  for (auto& a : grassflop::enumerate_box(2, 2)) {
    auto e = grassflop::window_ext(a, a, 2, 4);
    EXPECT_EQ(e.at(0).multiplicity(DominantWeight::trivial(4)), 1);
  }
}

TEST(WindowExt, FullBoxAgainstEmpty) {
  auto e = grassflop::window_ext(Partition{}, Partition{2, 2}, 2, 4);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.at(0), grassflop::VirtualRep::irreducible(DominantWeight{0, 0, -2, -2}));
  EXPECT_TRUE(grassflop::window_ext(Partition{2, 2}, Partition{}, 2, 4).empty());
}

TEST(WindowExt, OutsideBoxHasHigherCohomology) {
  // L_(1,1,1) S on P^2 is O(-3), with H^2 one-dimensional.
  auto e = grassflop::window_ext(Partition{1, 1, 1}, Partition{}, 1, 3);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.begin()->first, 2);
  EXPECT_EQ(e.at(2).dimension(), 1);
}

TEST(WindowExt, EulerAdditivity) {
  for (auto& a : grassflop::enumerate_box(3, 2))
    for (auto& b : grassflop::enumerate_box(3, 2)) {
      auto e = grassflop::window_ext(a, b, 2, 4);
      long long expect = 0;
      for (auto& [k, c] : grassflop::tensor_decompose(grassflop::column_weight(a, 2),
                                                      grassflop::dual_weight(grassflop::column_weight(b, 2)))
                              .terms()) {
        std::vector<int> w{0, 0};
        w.insert(w.end(), k.entries().begin(), k.entries().end());
        expect += c * oracle::weyl_polynomial(w);
      }
      EXPECT_EQ(grassflop::euler_dimension(e), expect);
    }
}

TEST(WindowExt, Precondition) {
  EXPECT_THROW(grassflop::window_ext(Partition{3}, Partition{}, 2, 4), std::invalid_argument);
}
