#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hsplab/cyclotomic.hpp"
#include "hsplab/group.hpp"
#include "hsplab/matrix.hpp"
#include "hsplab/numeric.hpp"

namespace hsplab {

inline constexpr std::size_t kBlockInductionCap = 120;

template <class Element>
using GroupPtr = std::shared_ptr<const FiniteGroupView<Element>>;

template <class Element>
GroupPtr<Element> share(FiniteGroupView<Element> g) {
  return std::make_shared<const FiniteGroupView<Element>>(std::move(g));
}

/// Cyclotomic-valued function on a group, stored in the group's element order.
template <class Element>
class ClassFunction {
 public:
  ClassFunction(GroupPtr<Element> group, std::vector<CyclotomicInteger> values)
      : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw std::invalid_argument("ClassFunction: null group");
    if (values_.size() != group_->order()) throw std::invalid_argument("ClassFunction: value count != |G|");
  }

  template <class Fn>
  static ClassFunction from(GroupPtr<Element> group, Fn&& fn) {
    std::vector<CyclotomicInteger> v;
    v.reserve(group->order());
    for (const auto& e : group->elements()) v.push_back(fn(e));
    return ClassFunction(std::move(group), std::move(v));
  }

  const GroupPtr<Element>& group() const noexcept { return group_; }
  const std::vector<CyclotomicInteger>& values() const noexcept { return values_; }
  const CyclotomicInteger& operator()(const Element& e) const { return values_[group_->index_of(e)]; }
  const CyclotomicInteger& at_index(std::size_t i) const { return values_.at(i); }
  const CyclotomicInteger& at_identity() const { return values_[group_->identity_index()]; }

  /// Constant on every conjugacy class of the group.
  bool is_class_function() const {
    for (const auto& cls : group_->conjugacy_classes())
      for (std::size_t i : cls)
        if (!(values_[i] == values_[cls.front()])) return false;
    return true;
  }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_->elements() == b.group_->elements() && a.values_ == b.values_;
  }

 private:
  GroupPtr<Element> group_;
  std::vector<CyclotomicInteger> values_;
};

template <class Element>
ClassFunction<Element> trivial_character(const GroupPtr<Element>& g) {
  return ClassFunction<Element>(g, std::vector<CyclotomicInteger>(g->order(), CyclotomicInteger(1)));
}

/// |G| at the identity, zero elsewhere.
template <class Element>
ClassFunction<Element> regular_character(const GroupPtr<Element>& g) {
  std::vector<CyclotomicInteger> v(g->order(), CyclotomicInteger(0));
  v[g->identity_index()] = static_cast<std::int64_t>(g->order());
  return ClassFunction<Element>(g, std::move(v));
}

namespace detail {

template <class Element>
void require_same_group(const ClassFunction<Element>& a, const ClassFunction<Element>& b) {
  if (a.group() != b.group() && a.group()->elements() != b.group()->elements())
    throw std::invalid_argument("class functions live on different groups");
}

inline Rational rational_from_sum(const CyclotomicInteger& sum, std::size_t order) {
  if (!sum.is_rational()) throw IntegrityError("inner product is not rational: " + sum.to_string());
  return make_rational(BigInt(sum.integer_value()), BigInt(order));
}

}  // namespace detail

/// ⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g)·conj(ψ(g)), exact. Non-rational results signal
/// that an input was not a character and raise IntegrityError.
template <class Element>
Rational inner_product(const ClassFunction<Element>& chi, const ClassFunction<Element>& psi) {
  detail::require_same_group(chi, psi);
  CyclotomicInteger sum = 0;
  for (std::size_t i = 0; i < chi.values().size(); ++i) {
    const auto& a = chi.values()[i];
    const auto& b = psi.values()[i];
    if (a.is_zero() || b.is_zero()) continue;
    sum += a * b.conj();
  }
  return detail::rational_from_sum(sum, chi.group()->order());
}

/// χ↓H: pointwise restriction.
template <class Element>
ClassFunction<Element> restrict(const ClassFunction<Element>& chi, const GroupPtr<Element>& h) {
  const auto& g = *chi.group();
  if (!h->is_subgroup_of(g)) throw std::invalid_argument("restrict: H is not a subgroup of G");
  return ClassFunction<Element>::from(h, [&](const Element& e) { return chi(e); });
}

/// ψ↑G(g) = (1/|H|) Σ_{x∈G} ψ(x⁻¹gx), with ψ taken as zero off H. The sum is
/// evaluated once per conjugacy class of G and copied to the class.
template <class Element>
ClassFunction<Element> induce_character(const ClassFunction<Element>& psi, const GroupPtr<Element>& g) {
  const auto& h = *psi.group();
  require_cap("induction |G|", static_cast<long long>(g->order()), static_cast<long long>(kExplicitGroupCap));
  if (!h.is_subgroup_of(*g)) throw std::invalid_argument("induce_character: H is not a subgroup of G");
  std::vector<CyclotomicInteger> values(g->order());
  for (const auto& cls : g->conjugacy_classes()) {
    const Element& rep = g->element(cls.front());
    CyclotomicInteger sum = 0;
    for (const auto& x : g->elements()) {
      Element conj = g->multiply(g->multiply(g->inverse(x), rep), x);
      if (auto idx = h.find(conj)) sum += psi.at_index(*idx);
    }
    // exact division by |H|: every coefficient must be divisible
    Poly coeffs = sum.coeffs();
    const auto order_h = static_cast<std::int64_t>(h.order());
    for (auto& c : coeffs) {
      if (c % order_h != 0) throw IntegrityError("induced character value not integral");
      c /= order_h;
    }
    CyclotomicInteger value = CyclotomicInteger::from_powers(sum.order(), coeffs);
    for (std::size_t i : cls) values[i] = value;
  }
  return ClassFunction<Element>(g, std::move(values));
}

struct FrobeniusResult {
  Rational left;   // ⟨ψ↑G, χ⟩_G
  Rational right;  // ⟨ψ, χ↓H⟩_H
  bool equal = false;
};

/// Evaluates both sides of Frobenius reciprocity independently.
template <class Element>
FrobeniusResult frobenius_check(const ClassFunction<Element>& psi, const ClassFunction<Element>& chi) {
  FrobeniusResult r;
  r.left = inner_product(induce_character(psi, chi.group()), chi);
  r.right = inner_product(psi, restrict(chi, psi.group()));
  r.equal = (r.left == r.right);
  return r;
}

/// (χ_a ⊗ χ_b)(g, h) = χ_a(g)·χ_b(h) on A × B.
template <class A, class B>
ClassFunction<std::pair<A, B>> tensor_character(const ClassFunction<A>& chi_a, const ClassFunction<B>& chi_b,
                                                const GroupPtr<std::pair<A, B>>& product) {
  return ClassFunction<std::pair<A, B>>::from(
      product, [&](const std::pair<A, B>& e) { return chi_a(e.first) * chi_b(e.second); });
}

template <class A, class B>
ClassFunction<std::pair<A, B>> tensor_character(const ClassFunction<A>& chi_a, const ClassFunction<B>& chi_b) {
  return tensor_character(chi_a, chi_b, share(direct_product(*chi_a.group(), *chi_b.group())));
}

/// Matrix representation of a group, element ↦ square cyclotomic matrix.
template <class Element>
using MatrixRep = std::function<CycMatrix(const Element&)>;

/// Block-matrix induced representation Y↑G(g)_{ij} = Y(t_i⁻¹ g t_j) (zero off H)
/// over a greedy left transversal. Small-scale oracle for the character formula.
template <class Element>
MatrixRep<Element> induce_representation(const GroupPtr<Element>& h, const MatrixRep<Element>& y,
                                         const GroupPtr<Element>& g) {
  require_cap("block induction |G|", static_cast<long long>(g->order()), static_cast<long long>(kBlockInductionCap));
  if (!h->is_subgroup_of(*g)) throw std::invalid_argument("induce_representation: H is not a subgroup of G");
  auto transversal = left_transversal(*g, *h);
  const std::size_t d = y(h->identity()).rows();
  return [h, y, g, transversal, d](const Element& x) {
    const std::size_t l = transversal.size();
    CycMatrix out(l * d, l * d);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        Element e = g->multiply(g->multiply(g->inverse(transversal[i]), x), transversal[j]);
        if (!h->contains(e)) continue;
        CycMatrix block = y(e);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) out(i * d + r, j * d + c) = block(r, c);
      }
    return out;
  };
}

}  // namespace hsplab
