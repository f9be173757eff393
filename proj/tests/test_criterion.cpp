#include <algorithm>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "syz/constructions.hpp"
#include "syz/criterion.hpp"
#include "syz/errors.hpp"

using namespace syz;

namespace {

MonomialFamily p1_full(int d) { return hypertetrahedron(1, d); }

// An m-primary family: every pure power plus a random selection of the rest.
MonomialFamily random_primary(std::mt19937& rng, int N, int d, std::size_t max_size) {
  std::vector<Monomial> pure, rest;
  for (auto& m : enumerate_monomials(N, d)) (m.missing_variables() == static_cast<std::size_t>(N) ? pure : rest).push_back(m);
  std::shuffle(rest.begin(), rest.end(), rng);
  const auto room = std::min(rest.size(), max_size - pure.size());
  std::uniform_int_distribution<std::size_t> extra(0, room);
  rest.resize(extra(rng));
  pure.insert(pure.end(), rest.begin(), rest.end());
  return MonomialFamily(N, d, pure);
}

}  // namespace

TEST(Slope, DataAndMonotonicity) {
  for (std::int64_t d = 1; d <= 20; ++d) {
    for (std::int64_t j = 2; j <= 40; ++j) {
      const SlopeData s{j, d};
      EXPECT_LT(s.a(j), s.a(j + 1)) << "d=" << d << " j=" << j;
      EXPECT_EQ(s.slope(), s.a(j));
      EXPECT_EQ(s.c1(), -d * j);
    }
  }
  EXPECT_THROW(SlopeData({3, 2}).a(1), PreconditionError);
}

TEST(Primary, Examples) {
  EXPECT_TRUE(is_m_primary(gen_case326()));
  EXPECT_TRUE(is_m_primary(hypertetrahedron(3, 3)));
  EXPECT_FALSE(is_m_primary(MonomialFamily(2, 2, {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{0, 2, 0}})));
}

TEST(Check, Case326) {
  const auto cert = check_family(gen_case326());
  EXPECT_EQ(cert.verdict, Verdict::StableCertified);
  ASSERT_TRUE(cert.worst);
  EXPECT_EQ(cert.worst->margin, 3);
  EXPECT_EQ(cert.worst->g, (Monomial{1, 0, 0, 0}));
  EXPECT_EQ(cert.worst->k, 2);
  ASSERT_EQ(cert.witnesses.size(), 4u);
  for (const auto& w : cert.witnesses) {
    EXPECT_EQ(w.margin, 3);
    EXPECT_EQ(w.gcd_degree, 1);
  }
}

TEST(Check, FullHypertetrahedronN2D2) {
  const auto cert = check_family(hypertetrahedron(2, 2));
  EXPECT_EQ(cert.verdict, Verdict::StableCertified);
  ASSERT_TRUE(cert.worst);
  EXPECT_EQ(cert.worst->g, (Monomial{1, 0, 0}));
  EXPECT_EQ(cert.worst->k, 3);
  EXPECT_EQ(cert.worst->margin, 1);
}

TEST(Check, P1FullFamilyIsOnlySemistable) {
  for (int d = 2; d <= 8; ++d) {
    const auto cert = check_family(p1_full(d));
    EXPECT_EQ(cert.verdict, Verdict::SemistableCertified);
    // J = {X0^d, ..., X0^{d-e} X1^e} for g = X0^{d-e}: every such witness hits zero.
    for (const auto& w : cert.witnesses) {
      EXPECT_EQ(w.margin, 0);
      EXPECT_EQ(w.k, d - w.gcd_degree + 1);
    }
  }
}

TEST(Check, PreconditionErrors) {
  EXPECT_THROW(check_family(MonomialFamily(1, 3, {Monomial{3, 0}})), PreconditionError);
  EXPECT_THROW(check_family(MonomialFamily(2, 2, {Monomial{2, 0, 0}, Monomial{0, 2, 0}, Monomial{1, 1, 0}})),
               PreconditionError);
}

TEST(Check, RankOneIsStable) {
  const MonomialFamily pair(1, 5, {Monomial{5, 0}, Monomial{0, 5}});
  for (const auto& cert : {check_family(pair), brute_force_check(pair)}) {
    EXPECT_EQ(cert.verdict, Verdict::StableCertified);
    EXPECT_TRUE(cert.rank_one);
    EXPECT_TRUE(cert.witnesses.empty());
  }
}

TEST(Check, CriterionViolation) {
  // X0^3, X0^2 X1, X0^2 X2, X0 X1^2 ... heavily X0-weighted family in P^2.
  const MonomialFamily fam(2, 3,
                           {Monomial{3, 0, 0}, Monomial{0, 3, 0}, Monomial{0, 0, 3}, Monomial{2, 1, 0},
                            Monomial{2, 0, 1}, Monomial{1, 1, 1}, Monomial{1, 2, 0}, Monomial{1, 0, 2}});
  const auto cert = check_family(fam);
  EXPECT_EQ(cert.verdict, Verdict::CriterionViolated);
  ASSERT_TRUE(cert.worst);
  EXPECT_LT(cert.worst->margin, 0);
  EXPECT_EQ(brute_force_check(fam).min_margin(), cert.min_margin());
}

TEST(BruteForce, SizeBound) {
  const auto fam = hypertetrahedron(2, 4);  // 15 members
  EXPECT_THROW(brute_force_check(fam, 12), SizeError);
  EXPECT_NO_THROW(brute_force_check(fam, 16));
}

TEST(BruteForce, AgreesOnCase326) {
  const auto cert = brute_force_check(gen_case326());
  EXPECT_EQ(cert.verdict, Verdict::StableCertified);
  EXPECT_EQ(cert.min_margin(), 3);
}

TEST(BruteForce, OracleEquivalenceRandom) {
  std::mt19937 rng(2024);
  for (int N = 1; N <= 3; ++N) {
    for (int d = 2; d <= 4; ++d) {
      for (int iter = 0; iter < 60; ++iter) {
        const auto fam = random_primary(rng, N, d, 12);
        if (fam.size() < 2) continue;
        const auto fast = check_family(fam);
        const auto slow = brute_force_check(fam);
        ASSERT_EQ(fast.verdict, slow.verdict);
        ASSERT_EQ(fast.min_margin(), slow.min_margin());
        // Same gcd set: every maximal multiple-set is some subset's gcd and vice versa.
        ASSERT_EQ(fast.witnesses.size(), slow.witnesses.size());
        for (std::size_t i = 0; i < fast.witnesses.size(); ++i) {
          EXPECT_EQ(fast.witnesses[i].g, slow.witnesses[i].g);
          EXPECT_EQ(fast.witnesses[i].k, slow.witnesses[i].k);
        }
      }
    }
  }
}

TEST(BruteForce, MaximalSubsetDominates) {
  // Every subset J with gcd g of positive degree has margin >= the margin of all multiples of g.
  std::mt19937 rng(99);
  for (int iter = 0; iter < 40; ++iter) {
    const int N = 2 + iter % 2;
    const int d = 2 + iter % 3;
    const auto fam = random_primary(rng, N, d, 10);
    const auto members = fam.members();
    const auto n = static_cast<std::int64_t>(members.size());
    for (std::uint32_t mask = 1; mask < (1u << members.size()); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<Monomial> J;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (mask & (1u << i)) J.push_back(members[i]);
      }
      const auto g = gcd_of(J);
      if (g.degree() == 0) continue;
      const auto full = static_cast<std::int64_t>(count_multiples(g, members));
      EXPECT_GE(criterion_margin(d, n, g.degree(), static_cast<std::int64_t>(J.size())),
                criterion_margin(d, n, g.degree(), full));
    }
  }
}

TEST(Splitting, Examples) {
  const auto balanced = splitting_type_p1(gen_p1(4, 3));
  EXPECT_EQ(balanced.twists, (std::vector<std::int64_t>{-6, -6}));
  EXPECT_EQ(is_semistable_p1(gen_p1(4, 3)), Verdict::SemistableCertified);

  const MonomialFamily skewed(1, 3, {Monomial{3, 0}, Monomial{2, 1}, Monomial{0, 3}});
  EXPECT_EQ(splitting_type_p1(skewed).twists, (std::vector<std::int64_t>{-4, -5}));
  EXPECT_EQ(is_semistable_p1(skewed), Verdict::NotSemistable);

  for (int d = 1; d <= 6; ++d) {
    const MonomialFamily pair(1, d, {Monomial{d, 0}, Monomial{0, d}});
    EXPECT_EQ(splitting_type_p1(pair).twists, (std::vector<std::int64_t>{-2 * d}));
    EXPECT_EQ(is_semistable_p1(pair), Verdict::StableCertified);
  }
}

TEST(Splitting, Errors) {
  EXPECT_THROW(splitting_type_p1(gen_case326()), DimensionError);
  EXPECT_THROW(splitting_type_p1(MonomialFamily(1, 2, {Monomial{2, 0}, Monomial{1, 1}})), PreconditionError);
}

TEST(Splitting, SumIsFirstChernClass) {
  for (int d = 1; d <= 10; ++d) {
    const auto interior = [&] {
      std::vector<Monomial> v;
      for (int a = d - 1; a >= 1; --a) v.push_back(Monomial{a, d - a});
      return v;
    }();
    for (std::uint32_t mask = 0; mask < (1u << interior.size()); ++mask) {
      std::vector<Monomial> members{Monomial{d, 0}, Monomial{0, d}};
      for (std::size_t i = 0; i < interior.size(); ++i) {
        if (mask & (1u << i)) members.push_back(interior[i]);
      }
      const MonomialFamily fam(1, d, members);
      const auto st = splitting_type_p1(fam);
      EXPECT_EQ(st.sum(), -static_cast<std::int64_t>(d) * static_cast<std::int64_t>(fam.size()));
      EXPECT_EQ(st.twists.size(), fam.size() - 1);
    }
  }
}

TEST(StrategyX0, Examples) {
  EXPECT_TRUE(strategy_x0_holds(hypertetrahedron(3, 4)));
  EXPECT_TRUE(strategy_x0_holds(gen_prop_faces(3, 4, 20)));
  const MonomialFamily favors_x1(2, 2, {Monomial{0, 2, 0}, Monomial{0, 1, 1}, Monomial{0, 0, 2}, Monomial{2, 0, 0}});
  EXPECT_FALSE(strategy_x0_holds(favors_x1));
}

TEST(Verdict, StringRoundTrip) {
  for (auto v : {Verdict::StableCertified, Verdict::SemistableCertified, Verdict::CriterionViolated,
                 Verdict::NotSemistable}) {
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  }
  EXPECT_THROW(verdict_from_string("Stable"), ParseError);
}
