#include <gtest/gtest.h>

#include <grassflop/sod.hpp>

using namespace grassflop;

namespace {

std::vector<std::pair<Partition, int>> as_pairs(const DSComplexSpec& s) {
  std::vector<std::pair<Partition, int>> out;
  for (auto& t : s.terms) out.emplace_back(t.diagram, t.s);
  return out;
}

}  // namespace

TEST(Staircase, Examples) {
  auto a = ds_staircase(Partition{}, 2, 2);
  EXPECT_EQ(as_pairs(a), (std::vector<std::pair<Partition, int>>{{{}, 0}, {{2}, 2}}));
  EXPECT_EQ(a.K, 1);
  auto b = ds_staircase(Partition{1}, 2, 3);
  EXPECT_EQ(as_pairs(b), (std::vector<std::pair<Partition, int>>{{{1}, 0}, {{2}, 1}, {{2, 2}, 3}}));
  EXPECT_EQ(b.K, 2);
  auto c = ds_staircase(Partition{}, 1, 3);
  EXPECT_EQ(as_pairs(c), (std::vector<std::pair<Partition, int>>{{{}, 0}, {{1}, 1}, {{1, 1}, 2}, {{1, 1, 1}, 3}}));
  EXPECT_THROW(ds_staircase(Partition{2}, 2, 2), std::invalid_argument);
}

TEST(Staircase, Termination) {
  for (int d = 1; d <= 3; ++d)
    for (int mp = d; mp <= 5; ++mp)
      for (auto& delta : enumerate_box(4, d - 1)) {
        auto s = ds_staircase(delta, d, mp);
        ASSERT_EQ(s.K + 1, static_cast<int>(s.terms.size()));
        EXPECT_EQ(s.terms[0].s, 0);
        EXPECT_EQ(s.terms[0].diagram, delta);
        for (int k = 0; k <= s.K; ++k) {
          EXPECT_EQ(s.terms[k].diagram.size(), delta.size() + s.terms[k].s);
          if (k) {
            EXPECT_LT(s.terms[k - 1].s, s.terms[k].s);
            EXPECT_TRUE(s.terms[k].diagram.contains(s.terms[k - 1].diagram));
          }
        }
        EXPECT_LE(s.terms[s.K].s, mp);
        // The next step, taken by hand, would overshoot.
        std::vector<int> next = s.terms[s.K].diagram.parts();
        const int k = s.K + 1;
        next.resize(std::max<std::size_t>(next.size(), k), 0);
        next[k - 1] = k == 1 ? d : delta.row(k - 2) + 1;
        EXPECT_GT(Partition(next).size() - delta.size(), mp);
      }
}

TEST(HStar, RankOneIsTheSymmetricAlgebra) {
  auto h = hstar_euler_character(Partition{}, 1, 3, 2, 4);
  auto p = Profile::standard({1, 3, 2});
  EXPECT_EQ(h, sym_hom_character({kV, false}, {kW, true}, p, 4));
}

TEST(HStar, DegreeZero) {
  auto h = hstar_euler_character(Partition{}, 2, 2, 2, 3);
  EXPECT_EQ(h.layer(0).size(), 1u);
  EXPECT_EQ(h.multiplicity(0, h.trivial_tuple()), 1);
}

TEST(DsEuler, Examples) {
  EXPECT_TRUE(verify_ds_euler(Partition{}, 1, 2, 1, 5).pass);
  EXPECT_TRUE(verify_ds_euler(Partition{}, 2, 3, 2, 4).pass);
  EXPECT_TRUE(verify_ds_euler(Partition{1}, 2, 3, 2, 4).pass);
}

TEST(DsEuler, ExhaustiveSmallRanks) {
  for (int d = 1; d <= 3; ++d)
    for (int mp = d; mp <= 5; ++mp)
      for (auto& delta : enumerate_box(4, d - 1)) {
        auto r = verify_ds_euler(delta, d, d, mp, 4);
        EXPECT_TRUE(r.pass) << delta.to_string() << " d=" << d << " mp=" << mp << " " << r.first_failure.dump();
      }
}

TEST(DsEuler, MutationsAreDetected) {
  for (auto [d, m, mp] : {std::tuple{1, 3, 2}, std::tuple{2, 4, 3}, std::tuple{2, 4, 2}})
    for (auto& delta : {Partition{}, Partition{1}, Partition{1, 1}}) {
      if (delta.width() >= d) continue;
      auto spec = ds_staircase(delta, d, mp);
      for (int k = 1; k <= spec.K; ++k) {
        auto bad = spec;
        bad.terms[k].s = spec.terms[k].s + 1 <= mp ? spec.terms[k].s + 1 : spec.terms[k].s - 1;
        EXPECT_FALSE(verify_ds_euler(bad, m, 4).pass) << delta.to_string() << " k=" << k;
      }
    }
}

TEST(OGenerators, Examples) {
  auto a = o_generators(2, 2, 2);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].lambda, Partition{});
  EXPECT_EQ(a[1].lambda, Partition{1});
  EXPECT_EQ(a[0].det_twist, 0);
  for (auto& g : o_generators(1, 4, 2)) EXPECT_EQ(g.lambda, Partition{});
  EXPECT_EQ(o_generators(1, 4, 2).size(), 3u);
  auto c = o_generators(2, 3, 2);
  ASSERT_EQ(c.size(), 5u);
  int twist_one = 0;
  for (auto& g : c) twist_one += g.det_twist == 1;
  EXPECT_EQ(twist_one, 2);
  EXPECT_THROW(o_generators(2, 1, 2), std::invalid_argument);
}

TEST(RankAccounting, Exhaustive) {
  for (int d = 1; d <= 4; ++d)
    for (int mp = d; mp <= 8; ++mp)
      for (int m = mp; m <= 8; ++m) EXPECT_TRUE(rank_accounting(d, m, mp).pass) << d << m << mp;
  auto r = rank_accounting(2, 4, 3);
  EXPECT_EQ(r.metadata["total"], 6);
  EXPECT_EQ(r.metadata["o_generators_bounded"], 3);
}

TEST(Orthogonality, Vanishes) {
  for (auto [d, m, mp, cut] : {std::tuple{1, 3, 2, 5}, std::tuple{2, 4, 3, 4}, std::tuple{2, 5, 3, 3}, std::tuple{1, 4, 2, 4}}) {
    auto r = verify_orthogonality(d, m, mp, cut);
    EXPECT_TRUE(r.pass) << r.first_failure.dump();
    EXPECT_EQ(r.metadata["fast_criterion_agreement"], r.metadata["cells"]);
  }
}

TEST(Orthogonality, TwistBelowRangeIsDetected) {
  OrthogonalityOptions opt;
  opt.twist_override = [](const OGenerator&) { return -1; };
  for (auto [d, m, mp, cut] : {std::tuple{1, 3, 2, 5}, std::tuple{2, 4, 3, 4}}) {
    auto r = verify_orthogonality(d, m, mp, cut, opt);
    EXPECT_FALSE(r.pass);
    EXPECT_GT(r.metadata["nonzero_cells"].get<int>(), 0);
  }
}

// Recomputes one orthogonality cell through the character ring: the graded
// character of the Hom complex, cohomological degree by degree, followed by
// invariant extraction in the GL(V) slot.
TEST(Orthogonality, AgreesWithCharacterRing) {
  for (auto [d, m, mp, cut] : {std::tuple{1, 3, 2, 4}, std::tuple{2, 4, 3, 3}})
    for (int twist_shift : {0, -1}) {
      auto p = Profile::standard({d, m, mp});
      auto sym = sym_hom_character({kV, false}, {kW, true}, p, cut);
      const auto window = enumerate_box(mp - d, d);
      OrthogonalityOptions opt;
      if (twist_shift) opt.twist_override = [](const OGenerator&) { return -1; };
      bool any_nonzero = false;
      for (auto& lam : window)
        for (auto& g : o_generators(d, m - 1, mp)) {
          const int t = twist_shift ? -1 : g.det_twist;
          std::map<int, GradedCharacter> by_degree;
          for (int n = 0; n <= cut; ++n)
            for (auto& mu : partitions_of(n, std::min(mp, d - 1), n))
              for (auto& [k, c] : tensor_decompose(det_twist(column_weight(g.lambda, d - 1), -(mp - d)),
                                                   dual_weight(row_weight(mu, d - 1)))
                                      .terms()) {
                auto o = grassmann_cohomology(d - 1, d, k, DominantWeight::trivial(1));
                if (o.is_zero()) continue;
                auto it = by_degree.try_emplace(o.degree(), p, cut).first;
                it->second.add(n, {o.weight(), DominantWeight::trivial(m), row_weight(mu, mp)}, c);
              }
          auto y = det_twist(dual_weight(column_weight(lam, d)), t + mp + 1 - d);
          for (auto& [deg, ch] : by_degree) {
            auto full = multiply(ch.twisted(kV, y), sym);
            if (!invariant_multiplicity(full, kV).empty()) any_nonzero = true;
          }
        }
      auto r = verify_orthogonality(d, m, mp, cut, opt);
      EXPECT_EQ(r.pass, !any_nonzero) << d << m << mp << " shift " << twist_shift;
    }
}

TEST(Generation, RankOne) {
  auto e = generation_witness(Partition{1, 1}, 1, 3, 2, 4);
  ASSERT_TRUE(e.verified) << e.failure.dump();
  int windows = 0, os = 0;
  for (auto& t : e.combination) {
    if (t.generator.kind == GeneratorRef::Kind::Window) {
      ++windows;
      EXPECT_TRUE(t.generator.diagram.fits_box(1, 1));
    } else {
      ++os;
    }
  }
  EXPECT_EQ(windows, 2);
  EXPECT_EQ(os, 1);
}

TEST(Generation, IdentityInsideTheWindow) {
  auto e = generation_witness(Partition{1}, 2, 4, 3, 3);
  ASSERT_TRUE(e.verified);
  ASSERT_EQ(e.combination.size(), 1u);
  EXPECT_EQ(e.combination[0].generator.kind, GeneratorRef::Kind::Window);
  EXPECT_EQ(e.combination[0].generator.diagram, Partition{1});
  EXPECT_EQ(e.combination[0].coefficient, 1);
  EXPECT_EQ(e.combination[0].shift, 0);
}

TEST(Generation, EveryNewDiagram) {
  for (auto [d, m, mp, cut] : {std::tuple{1, 3, 2, 4}, std::tuple{2, 4, 3, 4}, std::tuple{2, 4, 2, 3}, std::tuple{2, 5, 3, 2},
                               std::tuple{3, 5, 4, 2}, std::tuple{1, 5, 2, 3}})
    for (auto& lam : enumerate_box(m - d, d)) {
      if (lam.fits_box(mp - d, d)) continue;
      auto e = generation_witness(lam, d, m, mp, cut);
      EXPECT_TRUE(e.verified) << lam.to_string() << " " << d << m << mp << " " << e.failure.dump();
      for (auto& t : e.combination) EXPECT_GT(t.coefficient, 0);
    }
}

TEST(Generation, Preconditions) {
  EXPECT_THROW(generation_witness(Partition{3}, 2, 4, 3, 2), std::invalid_argument);
  EXPECT_THROW(generation_witness(Partition{}, 2, 3, 4, 2), std::invalid_argument);
}
