#include <gtest/gtest.h>

#include "hsplab/dihedral.hpp"
#include "hsplab/rep_ops.hpp"
#include "hsplab/symmetric.hpp"

using namespace hsplab;

namespace {

ClassFunction<Permutation> sn_character(const GroupPtr<Permutation>& g, const Partition& lambda) {
  return ClassFunction<Permutation>::from(g, [&](const Permutation& p) {
    return CyclotomicInteger(mn_character(lambda, cycle_type(p)).convert_to<std::int64_t>());
  });
}

// (1/|H|) Σ_{g∈G} ψ°(g x g⁻¹), straight from the definition
template <class E>
std::vector<CyclotomicInteger> induce_by_definition(const ClassFunction<E>& psi, const FiniteGroupView<E>& g) {
  const auto& h = *psi.group();
  std::vector<CyclotomicInteger> out;
  for (const auto& x : g.elements()) {
    CyclotomicInteger s = 0;
    for (const auto& y : g.elements()) {
      auto c = g.multiply(g.multiply(y, x), g.inverse(y));
      if (h.contains(c)) s += psi(c);
    }
    auto q = s.integer_value();
    EXPECT_EQ(q % static_cast<std::int64_t>(h.order()), 0);
    out.push_back(CyclotomicInteger(q / static_cast<std::int64_t>(h.order())));
  }
  return out;
}

}  // namespace

TEST(InnerProduct, IrreducibleAndRegular) {
  auto g = share(dihedral_group(6));
  auto reg = regular_character(g);
  for (const auto& rho : dihedral_irreps(6)) {
    auto chi = irrep_character(rho, g);
    EXPECT_EQ(inner_product(chi, chi), 1);
    EXPECT_EQ(inner_product(reg, chi), rho.dimension());
  }
  EXPECT_EQ(inner_product(reg, reg), 12);
}

TEST(InnerProduct, TwoDimensionalHasNoTrivialPart) {
  for (int n = 3; n <= 16; ++n) {
    auto g = share(dihedral_group(n));
    for (int k = 1; 2 * k < n; ++k)
      EXPECT_EQ(inner_product(irrep_character(dihedral_two_dim_family(n, k), g), trivial_character(g)), 0);
  }
}

TEST(InnerProduct, RejectsMismatchedGroups) {
  auto a = share(dihedral_group(4));
  auto b = subgroup_view(a, cyclic_subgroup(4, 1));
  EXPECT_THROW(inner_product(trivial_character(a), trivial_character(b)), std::invalid_argument);
}

TEST(Restriction, Examples) {
  auto g = share(dihedral_group(6));
  auto h = subgroup_view(g, cyclic_subgroup(6, 2));
  EXPECT_EQ(restrict(trivial_character(g), h), trivial_character(h));

  auto s3 = share(symmetric_group(3));
  auto c3 = share(permutation_group({Permutation::parse_cycles(3, "(1 2 3)")}, 3));
  auto res = restrict(sn_character(s3, Partition({2, 1})), c3);
  for (const auto& p : c3->elements()) EXPECT_EQ(res(p), CyclotomicInteger(p.is_identity() ? 2 : -1));
}

TEST(Restriction, RejectsNonSubgroup) {
  auto s3 = share(symmetric_group(3));
  auto other = share(symmetric_group(4));
  EXPECT_THROW(restrict(trivial_character(s3), other), std::invalid_argument);
}

TEST(Induction, IndexOneAndDimension) {
  auto s3 = share(symmetric_group(3));
  auto d3 = dihedral_in_symmetric(3).image;
  EXPECT_EQ(induce_character(trivial_character(d3), s3), trivial_character(s3));
  auto s4 = share(symmetric_group(4));
  auto ind = induce_character(trivial_character(dihedral_in_symmetric(4).image), s4);
  EXPECT_EQ(ind.at_identity(), CyclotomicInteger(3));
}

TEST(Induction, MatchesDefinition) {
  for (int n = 3; n <= 8; ++n) {
    auto g = share(dihedral_group(n));
    for (const auto& s : subgroup_catalog(n)) {
      auto h = subgroup_view(g, s);
      for (const auto& rho : dihedral_irreps(n)) {
        auto psi = irrep_character(rho, h);
        if (!psi.values().front().is_rational()) continue;
        bool all_rational = true;
        for (const auto& v : psi.values()) all_rational = all_rational && v.is_rational();
        if (!all_rational) continue;
        ASSERT_EQ(induce_character(psi, g).values(), induce_by_definition(psi, *g)) << s.name();
      }
    }
  }
}

TEST(Induction, TrivialAppearsOnce) {
  for (int n = 3; n <= 10; ++n) {
    auto g = share(dihedral_group(n));
    for (const auto& s : subgroup_catalog(n)) {
      auto ind = induce_character(trivial_character(subgroup_view(g, s)), g);
      EXPECT_EQ(inner_product(ind, trivial_character(g)), 1);
      EXPECT_EQ(ind.at_identity(), CyclotomicInteger(static_cast<std::int64_t>(s.index())));
      Rational total = 0;
      for (const auto& rho : dihedral_irreps(n))
        total += Rational(rho.dimension()) * inner_product(ind, irrep_character(rho, g));
      EXPECT_EQ(total, Rational(static_cast<long long>(s.index())));
    }
  }
}

TEST(Frobenius, Examples) {
  auto g = share(dihedral_group(6));
  auto r = frobenius_check(trivial_character(g), trivial_character(g));
  EXPECT_EQ(r.left, 1);
  EXPECT_EQ(r.right, 1);
  EXPECT_TRUE(r.equal);

  auto rot = subgroup_view(g, cyclic_subgroup(6, 1));
  auto two = irrep_character(dihedral_two_dim_family(6, 1), g);
  for (const auto& rho : dihedral_irreps(6)) {
    auto fr = frobenius_check(irrep_character(rho, rot), two);
    EXPECT_TRUE(fr.equal);
  }

  auto s4 = share(symmetric_group(4));
  auto d4 = dihedral_in_symmetric(4);
  auto sgn = sn_character(s4, Partition::column(4));
  for (const auto& rho : dihedral_irreps(4)) {
    auto fr = frobenius_check(d4.character(rho), sgn);
    EXPECT_TRUE(fr.equal) << rho.label();
  }
}

TEST(Frobenius, AllPairsInSymmetricGroups) {
  for (int n = 3; n <= 6; ++n) {
    auto sn = share(symmetric_group(n));
    auto emb = dihedral_in_symmetric(n);
    for (const auto& lambda : partitions_of(n)) {
      auto chi = sn_character(sn, lambda);
      for (const auto& rho : dihedral_irreps(n)) {
        auto fr = frobenius_check(emb.character(rho), chi);
        ASSERT_TRUE(fr.equal);
        ASSERT_TRUE(is_integer(fr.left));
      }
    }
  }
}

TEST(Tensor, ProductCharacters) {
  auto g3 = share(dihedral_group(3)), g4 = share(dihedral_group(4));
  auto prod = share(direct_product(*g3, *g4));
  auto tt = tensor_character(trivial_character(g3), trivial_character(g4), prod);
  for (const auto& v : tt.values()) EXPECT_EQ(v, CyclotomicInteger(1));

  auto a = irrep_character(dihedral_two_dim_family(3, 1), g3);
  auto b = irrep_character(dihedral_two_dim_family(4, 1), g4);
  auto ab = tensor_character(a, b, prod);
  EXPECT_EQ(inner_product(ab, ab), 1);
  for (const auto& [p, q] : prod->elements()) {
    auto v = ab({p, q});
    if (p.reflection || q.reflection) EXPECT_TRUE(v.is_zero());
    else EXPECT_EQ(v, a(p) * b(q));
  }
}

TEST(InducedRepresentation, CharacterAndHomomorphism) {
  auto g = share(dihedral_group(5));
  auto h = subgroup_view(g, cyclic_subgroup(5, 1));
  auto rho = dihedral_irreps(5)[1];  // rotation-sign
  MatrixRep<DihedralElement> y = [rho](const DihedralElement& e) { return rho.matrix(e); };
  auto ind = induce_representation(h, y, g);
  auto chi = induce_character(irrep_character(rho, h), g);
  for (const auto& a : g->elements()) {
    EXPECT_EQ(ind(a).trace(), chi(a));
    for (const auto& b : g->elements()) ASSERT_EQ(ind(a * b), ind(a) * ind(b));
  }
  auto big = share(symmetric_group(6));
  auto sub = share(permutation_group({Permutation::parse_cycles(6, "(1 2)")}, 6));
  MatrixRep<Permutation> one = [](const Permutation&) { return CycMatrix::identity(1); };
  EXPECT_THROW(induce_representation(sub, one, big), CapacityError);
}
