#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hsplab/oracles.hpp"
#include "hsplab/symmetric.hpp"
#include "hsplab/young.hpp"

using namespace hsplab;

namespace {

int fixed_points(const Permutation& p) {
  int f = 0;
  for (int i = 1; i <= static_cast<int>(p.degree()); ++i) f += p(i) == i;
  return f;
}

int fixed_pairs(const Permutation& p) {
  int f = 0;
  const int n = static_cast<int>(p.degree());
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) f += (p(a) == a && p(b) == b) || (p(a) == b && p(b) == a);
  return f;
}

int sign(const Permutation& p) {
  int s = 1;
  for (const auto& c : p.cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

// characters from permutation modules, independent of any tableau code
BigInt standard_char(const Permutation& p) { return fixed_points(p) - 1; }
BigInt two_row_char(const Permutation& p) { return fixed_pairs(p) - fixed_points(p); }
BigInt wedge_char(const Permutation& p) {
  BigInt s = standard_char(p), s2 = standard_char(p * p);
  return (s * s - s2) / 2;
}

}  // namespace

TEST(MnCharacter, Examples) {
  for (const auto& mu : partitions_of(5)) EXPECT_EQ(mn_character(Partition({5}), mu), 1);
  EXPECT_EQ(mn_character(Partition({1, 1, 1}), Partition({2, 1})), -1);
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({3})), -1);
}

TEST(MnCharacter, AgreesWithPermutationModules) {
  for (int n = 4; n <= 8; ++n) {
    MnMemo memo;
    for (const auto& p : all_permutations(static_cast<std::size_t>(n))) {
      if (p(1) % 3 == 2) continue;  // subsample, keeps every class
      auto mu = cycle_type(p);
      ASSERT_EQ(mn_character(Partition({n - 1, 1}), mu, memo), standard_char(p));
      ASSERT_EQ(mn_character(Partition({n - 2, 2}), mu, memo), two_row_char(p));
      ASSERT_EQ(mn_character(Partition({n - 2, 1, 1}), mu, memo), wedge_char(p));
      ASSERT_EQ(mn_character(Partition::column(n), mu, memo), sign(p));
    }
  }
}

TEST(MnCharacter, ConjugateShapeTwistsBySign) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        int s = (n - static_cast<int>(mu.length())) % 2 ? -1 : 1;
        ASSERT_EQ(mn_character(lambda.conjugate(), mu), s * mn_character(lambda, mu));
      }
}

TEST(MnCharacter, SignedBorderStripCount) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        BigInt total = 0;
        for (const auto& f : border_strip_fillings(lambda, mu)) total += f.sign();
        ASSERT_EQ(total, mn_character(lambda, mu)) << lambda << " " << mu;
      }
}

TEST(MnCharacter, RejectsSizeMismatch) {
  EXPECT_THROW(mn_character(Partition({2, 1}), Partition({2, 2})), std::invalid_argument);
}

TEST(HookDimension, Examples) {
  EXPECT_EQ(hook_dimension(Partition({6})), 1);
  EXPECT_EQ(hook_dimension(Partition::column(6)), 1);
  EXPECT_EQ(hook_dimension(Partition({2, 1})), 2);
  EXPECT_EQ(hook_dimension(Partition({5, 3, 2})), BigInt(450));
}

TEST(HookDimension, CountsStandardTableaux) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& lambda : partitions_of(n)) {
      ASSERT_EQ(hook_dimension(lambda), oracle::syt_count(lambda.parts()));
      if (n <= 8) {
        ASSERT_EQ(BigInt(standard_tableaux(lambda).size()), hook_dimension(lambda));
      }
    }
}

TEST(CharacterTable, SmallTables) {
  auto t2 = character_table(2);
  EXPECT_EQ(t2.rows, (std::vector<Partition>{{2}, {1, 1}}));
  EXPECT_EQ(t2.entries, (std::vector<std::vector<BigInt>>{{1, 1}, {1, -1}}));

  auto t3 = character_table(3);
  EXPECT_EQ(t3.at(Partition({2, 1}), Partition({1, 1, 1})), 2);
  EXPECT_EQ(t3.at(Partition({2, 1}), Partition({2, 1})), 0);
  EXPECT_EQ(t3.at(Partition({2, 1}), Partition({3})), -1);

  auto t4 = character_table(4);
  std::vector<BigInt> col;
  for (const auto& r : partitions_of(4)) col.push_back(t4.at(r, Partition({2, 2})));
  EXPECT_EQ(col, (std::vector<BigInt>{1, -1, 2, -1, 1}));
}

TEST(CharacterTable, Orthogonality) {
  for (int n = 1; n <= 9; ++n) {
    auto t = character_table(n);
    const auto k = t.rows.size();
    BigInt order = factorial(static_cast<unsigned>(n));
    BigInt dims = 0;
    for (std::size_t a = 0; a < k; ++a) {
      dims += t.entries[a][0] * t.entries[a][0];
      for (std::size_t b = 0; b < k; ++b) {
        BigInt row = 0, col = 0;
        for (std::size_t c = 0; c < k; ++c) {
          row += t.class_sizes[c] * t.entries[a][c] * t.entries[b][c];
          col += t.entries[c][a] * t.entries[c][b];
        }
        ASSERT_EQ(row, a == b ? order : BigInt(0));
        ASSERT_EQ(col * t.class_sizes[a], a == b ? order : BigInt(0));
      }
    }
    EXPECT_EQ(dims, order);
  }
}

TEST(CharacterTable, Caps) {
  EXPECT_NO_THROW(character_table(12));
  EXPECT_THROW(character_table(13), CapacityError);
  EXPECT_THROW(character_table(0), std::invalid_argument);
}

TEST(YoungOrthogonal, GeneratorImages) {
  YoungOrthogonalRep triv(Partition({4}), 4), sgn(Partition::column(4), 4);
  for (int i = 1; i < 4; ++i) {
    EXPECT_DOUBLE_EQ(triv.generator(i)(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(sgn.generator(i)(0, 0), -1.0);
  }
  YoungOrthogonalRep std21(Partition({2, 1}), 3);
  EXPECT_NEAR(std21.character(Permutation::parse_cycles(3, "(1 2 3)")), -1.0, 1e-12);
}

TEST(YoungOrthogonal, CoxeterRelationsAndOrthogonality) {
  for (const auto& lambda : partitions_of(6)) {
    YoungOrthogonalRep rep(lambda, 6);
    auto id = RealMatrix::identity(rep.dimension());
    for (int i = 1; i < 6; ++i) {
      const auto& s = rep.generator(i);
      EXPECT_LT((s * s).max_abs_diff(id), 1e-12);
      if (i + 1 < 6) {
        const auto& t = rep.generator(i + 1);
        EXPECT_LT((s * t * s).max_abs_diff(t * s * t), 1e-12);
      }
    }
  }
}

TEST(YoungOrthogonal, TracesEqualMn) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 6; ++n) {
    auto all = all_permutations(static_cast<std::size_t>(n));
    for (const auto& lambda : partitions_of(n)) {
      YoungOrthogonalRep rep(lambda, n);
      for (int t = 0; t < 200; ++t) {
        const auto& g = all[rng() % all.size()];
        ASSERT_NEAR(rep.character(g), mn_character(lambda, cycle_type(g)).convert_to<double>(), 1e-9);
      }
    }
  }
  EXPECT_THROW(YoungOrthogonalRep(Partition({5, 4}), 9), CapacityError);
}

TEST(FixedPointFreeInvolution, Values) {
  auto v1 = char_at_fixed_point_free_involution(1);
  ASSERT_EQ(v1.size(), 2u);
  EXPECT_EQ(v1[0].second, 1);   // trivial
  EXPECT_EQ(v1[1].second, -1);  // sign at (1 2)
  for (const auto& [lambda, chi] : char_at_fixed_point_free_involution(2)) {
    if (lambda == Partition({2, 2})) {
      EXPECT_EQ(chi, 2);
    }
    if (lambda == Partition({3, 1})) {
      EXPECT_EQ(chi, -1);
    }
  }
  EXPECT_EQ(fixed_point_free_involution_type(3), Partition({2, 2, 2}));
}
