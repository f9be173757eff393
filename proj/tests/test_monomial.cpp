#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "syz/errors.hpp"
#include "syz/monomial.hpp"

using namespace syz;

namespace {

Monomial random_monomial(std::mt19937& rng, std::size_t vars, int max_exp) {
  std::uniform_int_distribution<int> dist(0, max_exp);
  std::vector<int> e(vars);
  for (auto& x : e) x = dist(rng);
  return Monomial(e);
}

// Independent of the library's recursive enumeration: scan the whole box [0, e]^{N+1}.
std::vector<std::vector<int>> box_scan(int N, int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(N) + 1, 0);
  while (true) {
    int s = 0;
    for (int x : v) s += x;
    if (s == e) out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == e) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

// Pascal's triangle with big-integer additions only.
BigInt pascal(int a, int b) {
  std::vector<BigInt> row{1};
  for (int i = 1; i <= a; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

}  // namespace

TEST(Monomial, Degree) {
  EXPECT_EQ(degree(Monomial{2, 1, 0}), 3);
  EXPECT_EQ(degree(Monomial{0, 0, 0}), 0);
  EXPECT_EQ(degree(Monomial{1, 1, 1, 1}), 4);
}

TEST(Monomial, RejectsNegativeExponents) { EXPECT_THROW(Monomial({1, -1}), PreconditionError); }

TEST(Monomial, GcdLcmDivides) {
  EXPECT_EQ(gcd(Monomial{2, 1, 0}, Monomial{1, 2, 0}), (Monomial{1, 1, 0}));
  const Monomial m{3, 1, 4};
  EXPECT_EQ(gcd(m, m), m);
  EXPECT_EQ(gcd(Monomial{3, 0}, Monomial{0, 3}), Monomial::one(2));

  const auto l = lcm(Monomial{4, 0}, Monomial{2, 2});
  EXPECT_EQ(l, (Monomial{4, 2}));
  EXPECT_EQ(l.degree(), 6);
  EXPECT_EQ(lcm(m, Monomial::one(3)), m);
  EXPECT_EQ(lcm(Monomial{1, 1, 0}, Monomial{0, 1, 1}), (Monomial{1, 1, 1}));

  EXPECT_TRUE(divides(Monomial{1, 0, 0}, Monomial{2, 1, 0}));
  EXPECT_FALSE(divides(Monomial{0, 0, 1}, Monomial{2, 1, 0}));
  EXPECT_TRUE(divides(m, m));
}

TEST(Monomial, MismatchedVariableCounts) {
  const Monomial a{1, 1};
  const Monomial b{1, 1, 1};
  EXPECT_THROW(gcd(a, b), DimensionError);
  EXPECT_THROW(lcm(a, b), DimensionError);
  EXPECT_THROW(divides(a, b), DimensionError);
  auto fam = hypertetrahedron(2, 2);
  EXPECT_THROW(multiples_in_family(a, fam), DimensionError);
}

TEST(MonomialProperties, GcdLcmLattice) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t vars = 2 + iter % 5;
    const auto a = random_monomial(rng, vars, 5);
    const auto b = random_monomial(rng, vars, 5);
    const auto c = random_monomial(rng, vars, 5);
    EXPECT_EQ(gcd(a, b), gcd(b, a));
    EXPECT_EQ(lcm(a, b), lcm(b, a));
    EXPECT_EQ(gcd(gcd(a, b), c), gcd(a, gcd(b, c)));
    EXPECT_EQ(lcm(lcm(a, b), c), lcm(a, lcm(b, c)));
    EXPECT_EQ(gcd(a, a), a);
    EXPECT_EQ(lcm(a, a), a);
    EXPECT_TRUE(divides(gcd(a, b), a));
    EXPECT_TRUE(divides(a, lcm(a, b)));
    EXPECT_EQ(lcm(a, b).degree() + gcd(a, b).degree(), a.degree() + b.degree());
  }
}

TEST(Enumerate, SmallCases) {
  const auto p1 = enumerate_monomials(1, 2);
  ASSERT_EQ(p1.size(), 3u);
  EXPECT_EQ(p1[0], (Monomial{2, 0}));
  EXPECT_EQ(p1[1], (Monomial{1, 1}));
  EXPECT_EQ(p1[2], (Monomial{0, 2}));
  EXPECT_EQ(enumerate_monomials(2, 2).size(), 6u);
  const auto one = enumerate_monomials(3, 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Monomial::one(4));
}

TEST(Enumerate, MatchesBoxScanAndBinomial) {
  for (int N = 1; N <= 6; ++N) {
    for (int e = 0; e <= 12; ++e) {
      const auto listed = enumerate_monomials(N, e);
      EXPECT_EQ(BigInt(listed.size()), binomial(e + N, N)) << "N=" << N << " e=" << e;
      if (N <= 4 && e <= 8) {
        std::set<std::vector<int>> expected;
        for (auto& v : box_scan(N, e)) expected.insert(v);
        std::set<std::vector<int>> got;
        for (auto& m : listed) got.emplace(m.exponents().begin(), m.exponents().end());
        EXPECT_EQ(got, expected);
      }
      EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end(), CanonicalOrder{}));
    }
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(3, 3), 1);
  EXPECT_EQ(binomial(2, 3), 0);  // C(d-1, N) with d-1 < N
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
}

TEST(Binomial, PolynomialExtensionBelowZero) {
  EXPECT_EQ(binomial(-1, 0), 1);
  EXPECT_EQ(binomial(-1, 1), -1);
  EXPECT_EQ(binomial(-1, 2), 1);
  EXPECT_EQ(binomial(-2, 2), 3);
  EXPECT_EQ(binomial(-3, -1), 0);
}

TEST(Binomial, MatchesPascalTriangle) {
  for (int a = 0; a <= 70; ++a) {
    for (int b = 0; b <= a; ++b) EXPECT_EQ(binomial(a, b), pascal(a, b)) << a << " " << b;
  }
}

TEST(Faces, FamilySizes) {
  EXPECT_EQ(faces_family(3, 4).size(), 34u);
  EXPECT_EQ(faces_family(2, 1).size(), 3u);
  EXPECT_EQ(faces_family(3, 2).size(), 10u);
}

TEST(Faces, CardinalityFormula) {
  for (int N = 1; N <= 6; ++N) {
    for (int d = 1; d <= 12; ++d) {
      std::size_t direct = 0;
      for (auto& m : enumerate_monomials(N, d)) {
        bool on_face = false;
        for (std::size_t i = 0; i < m.num_vars(); ++i) on_face = on_face || Face{i}.contains(m);
        direct += on_face;
      }
      const auto fam = faces_family(N, d);
      EXPECT_EQ(fam.size(), direct);
      EXPECT_EQ(BigInt(fam.size()), binomial(d + N, N) - binomial(d - 1, N)) << N << " " << d;
    }
  }
}

TEST(Multiples, Examples) {
  const auto full = hypertetrahedron(2, 2);
  const auto x0 = multiples_in_family(Monomial{1, 0, 0}, full);
  ASSERT_EQ(x0.size(), 3u);
  EXPECT_EQ(x0[0], (Monomial{2, 0, 0}));
  EXPECT_EQ(x0[1], (Monomial{1, 1, 0}));
  EXPECT_EQ(x0[2], (Monomial{1, 0, 1}));
  EXPECT_EQ(multiples_in_family(Monomial::one(3), full), full);
  const auto top = multiples_in_family(Monomial{2, 0, 0}, full);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0], (Monomial{2, 0, 0}));
}

TEST(Family, CanonicalOrderIsStrictTotal) {
  std::mt19937 rng(11);
  for (int N = 1; N <= 4; ++N) {
    for (int d = 1; d <= 5; ++d) {
      auto members = enumerate_monomials(N, d);
      const MonomialFamily reference(N, d, members);
      for (int shuffle = 0; shuffle < 5; ++shuffle) {
        std::shuffle(members.begin(), members.end(), rng);
        EXPECT_EQ(MonomialFamily(N, d, members), reference);
      }
      for (std::size_t i = 0; i + 1 < reference.size(); ++i) {
        EXPECT_TRUE(canonical_before(reference[i], reference[i + 1]));
        EXPECT_FALSE(canonical_before(reference[i + 1], reference[i]));
        EXPECT_FALSE(canonical_before(reference[i], reference[i]));
      }
    }
  }
}

TEST(Family, Validation) {
  EXPECT_THROW(MonomialFamily(1, 2, {Monomial{2, 0}, Monomial{2, 0}}), PreconditionError);
  EXPECT_THROW(MonomialFamily(1, 2, {Monomial{2, 0}, Monomial{1, 0}}), PreconditionError);
  EXPECT_THROW(MonomialFamily(2, 2, {Monomial{2, 0}}), DimensionError);
  EXPECT_THROW(MonomialFamily(0, 2, {}), PreconditionError);
  const MonomialFamily fam(1, 2, {Monomial{0, 2}, Monomial{2, 0}});
  EXPECT_EQ(fam[0], (Monomial{2, 0}));
  EXPECT_TRUE(fam.contains(Monomial{0, 2}));
  EXPECT_FALSE(fam.contains(Monomial{1, 1}));
}
