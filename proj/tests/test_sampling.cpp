#include <gtest/gtest.h>

#include <cmath>

#include "hsplab/sampling.hpp"
#include "hsplab/young.hpp"

using namespace hsplab;

namespace {

Rational q(long long a, long long b) { return make_rational(a, b); }

}  // namespace

TEST(LabelProbability, TrivialHiddenSubgroup) {
  // p_ρ = d²/|G| for H = {e}
  auto s4 = share(symmetric_group(4));
  auto triv = share(permutation_group({}, 4));
  Rational total = 0;
  for (const auto& lambda : partitions_of(4)) {
    auto chi = ClassFunction<Permutation>::from(triv, [&](const Permutation& p) {
      return CyclotomicInteger(mn_character(lambda, cycle_type(p)).convert_to<std::int64_t>());
    });
    auto d = hook_dimension(lambda);
    auto p = label_probability(BigInt(24), chi, d);
    EXPECT_EQ(p, make_rational(d * d, BigInt(24)));
    total += p;
  }
  EXPECT_EQ(total, 1);
}

TEST(CycleAuto, SmallCases) {
  auto d4 = cycle_auto_distribution(4);
  EXPECT_EQ(d4.distribution.at("trivial"), q(1, 3));
  for (std::size_t i = 1; i < d4.distribution.size(); ++i) EXPECT_EQ(d4.distribution.probabilities[i], 0);

  auto d6 = cycle_auto_distribution(6);
  EXPECT_EQ(d6.distribution.at("trivial"), q(1, 60));
  EXPECT_EQ(d6.distribution.at("two-dim(1)"), 0);
  EXPECT_EQ(d6.distribution.at("two-dim(2)"), 0);

  auto d5 = cycle_auto_distribution(5);
  for (std::size_t i = 0; i < d5.distribution.size(); ++i)
    EXPECT_EQ(d5.distribution.probabilities[i] != 0, d5.distribution.labels[i] == "trivial");
}

TEST(CycleAuto, OnlyTrivialSurvivesAndTotalIsNotOne) {
  for (int n = 3; n <= 16; ++n) {
    auto d = cycle_auto_distribution(n);
    Rational expect = make_rational(BigInt(2 * n), factorial(static_cast<unsigned>(n)));
    EXPECT_EQ(d.distribution.at("trivial"), expect);
    EXPECT_EQ(d.distribution.total(), expect);
    EXPECT_EQ(d.expected_total, expect);
    EXPECT_EQ(d.distribution.normalized(), n == 3);  // 2n/n! = 1 only at n = 3
    EXPECT_FALSE(d.distribution.complete_dual);
    for (std::size_t i = 1; i < d.character_sums.size(); ++i) EXPECT_TRUE(d.character_sums[i].is_zero());
  }
  EXPECT_THROW(cycle_auto_distribution(65), CapacityError);
}

TEST(CycleAuto, AmbientViewAgreesWithFloatProjector) {
  for (int n = 3; n <= 7; ++n) {
    auto d = cycle_auto_distribution(n, CycleAutoMode::Ambient);
    EXPECT_TRUE(d.distribution.normalized());
    EXPECT_TRUE(d.distribution.complete_dual);
    auto emb = dihedral_in_symmetric(n);
    const double nf = factorial(static_cast<unsigned>(n)).convert_to<double>();
    std::size_t i = 0;
    for (const auto& lambda : partitions_of(n)) {
      // rank of the averaging projector = multiplicity of the trivial character
      YoungOrthogonalRep rep(lambda, n);
      RealMatrix sum(rep.dimension());
      for (const auto& h : emb.image->elements()) {
        auto m = rep(h);
        for (std::size_t k = 0; k < sum.a.size(); ++k) sum.a[k] += m.a[k];
      }
      double rank = sum.trace() / static_cast<double>(emb.image->order());
      double expect = (2.0 * n / nf) * static_cast<double>(rep.dimension()) * rank;
      EXPECT_NEAR(d.distribution.probabilities[i].convert_to<double>(), expect, 1e-12);
      EXPECT_EQ(d.distribution.labels[i], lambda.to_string());
      ++i;
    }
  }
  EXPECT_THROW(cycle_auto_distribution(13, CycleAutoMode::Ambient), CapacityError);
}

TEST(GiGap, SmallValues) {
  EXPECT_EQ(gi_gap(1).tv, 1);
  EXPECT_EQ(gi_gap(2).tv, q(1, 2));
  EXPECT_EQ(gi_gap(1).sigma, Permutation::parse_cycles(2, "(1 2)"));
}

TEST(GiGap, AgreesWithOrthogonalFormTraces) {
  for (int h = 1; h <= 4; ++h) {
    const int n = 2 * h;
    auto sigma = canonical_involution(h);
    double tv = 0, nf = factorial(static_cast<unsigned>(n)).convert_to<double>();
    for (const auto& lambda : partitions_of(n)) {
      YoungOrthogonalRep rep(lambda, n);
      tv += static_cast<double>(rep.dimension()) * std::abs(rep.character(sigma)) / nf;
    }
    EXPECT_NEAR(gi_gap(h).tv.convert_to<double>(), tv, 1e-12) << n;
  }
}

TEST(GiGap, NormalizedAndNonIncreasing) {
  Rational prev = 2;
  for (int h = 1; h <= 6; ++h) {
    auto g = gi_gap(h);
    EXPECT_EQ(g.p.total(), 1);
    EXPECT_EQ(g.q.total(), 1);
    EXPECT_LE(g.tv, prev);
    prev = g.tv;
  }
  EXPECT_THROW(gi_gap(7), CapacityError);
}

TEST(GiGapBound, Report) {
  auto r2 = gi_gap_bound_report(2);
  EXPECT_EQ(r2.max_abs_character, 2);
  EXPECT_TRUE(r2.within_bound);
  auto r1 = gi_gap_bound_report(1);
  EXPECT_EQ(r1.max_abs_character, 1);
  EXPECT_TRUE(r1.within_bound);
  double prev = 0;
  for (int h = 1; h <= 6; ++h) {
    auto r = gi_gap_bound_report(h);
    EXPECT_GT(r.bound, prev);
    EXPECT_TRUE(r.within_bound);
    prev = r.bound;
  }
}

TEST(Statevector, FullGroupCoset) {
  for (int n = 3; n <= 8; ++n) {
    auto sv = dihedral_statevector(n, parse_dihedral_subgroup(n, "full"), DihedralElement::identity(n));
    EXPECT_EQ(sv.distribution.at("trivial"), 1);
    EXPECT_EQ(sv.distribution.total(), 1);
  }
}

TEST(Statevector, MatchesLabelProbability) {
  auto rot = cyclic_subgroup(8, 1);
  auto sv = dihedral_statevector(8, rot, DihedralElement::identity(8));
  EXPECT_EQ(sv.distribution.probabilities, dihedral_label_distribution(8, rot).probabilities);
  EXPECT_LT(sv.max_float_deviation, kFloatTolerance);
  for (int n = 3; n <= 12; ++n)
    for (const auto& s : subgroup_catalog(n)) {
      auto a = dihedral_statevector(n, s, DihedralElement::identity(n));
      auto b = dihedral_label_distribution(n, s);
      ASSERT_EQ(a.distribution.probabilities, b.probabilities) << s.name();
      ASSERT_LT(a.max_float_deviation, kFloatTolerance);
      ASSERT_TRUE(b.normalized());
    }
}

TEST(Statevector, CosetIndependence) {
  auto s = dihedral_subgroup(6, 6, 0);  // ⟨y⟩
  ASSERT_EQ(s.order(), 2u);
  auto base = dihedral_statevector(6, s, DihedralElement::identity(6)).distribution.probabilities;
  for (const auto& c : dihedral_elements(6))
    EXPECT_EQ(dihedral_statevector(6, s, c).distribution.probabilities, base) << c.to_string();
}

TEST(Statevector, RejectsBadInput) {
  auto g = share(dihedral_group(4));
  auto dual = dihedral_dual(4);
  auto h = subgroup_view(g, cyclic_subgroup(4, 2));
  auto partial = dual;
  partial.pop_back();
  EXPECT_THROW(statevector_weak_sampling(g, partial, h, DihedralElement::identity(4)), std::invalid_argument);
  EXPECT_THROW(statevector_weak_sampling(g, dual, h, DihedralElement::identity(5)), std::invalid_argument);
  auto other = subgroup_view(share(dihedral_group(8)), cyclic_subgroup(8, 2));
  EXPECT_THROW(statevector_weak_sampling(g, dual, other, DihedralElement::identity(4)), std::invalid_argument);
}

TEST(StrongSampling, ZeroLabelsHaveZeroEntries) {
  for (int n : {4, 5}) {
    for (const auto& e : strong_sampling_note(n)) {
      if (e.label == "trivial") {
        EXPECT_EQ(e.probability, 1);
        EXPECT_EQ(e.zero_entries, 0u);
      } else {
        EXPECT_EQ(e.probability, 0);
        EXPECT_EQ(e.zero_entries, e.entry_count);
      }
      if (e.label.rfind("two-dim", 0) == 0) {
        EXPECT_EQ(e.entry_count, 4u);
      }
    }
  }
}

TEST(HiddenSubgroup, PromiseHolds) {
  for (int n = 3; n <= 10; ++n)
    for (const auto& s : subgroup_catalog(n)) {
      auto pc = dihedral_hsp_instance(n, s).verify_promise();
      EXPECT_TRUE(pc.holds);
      EXPECT_EQ(pc.distinct_labels, s.index());
    }
}

TEST(Distribution, RejectsNegative) {
  SamplingDistribution d;
  EXPECT_THROW(d.add("x", q(-1, 2)), IntegrityError);
}
