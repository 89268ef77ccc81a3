#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hsplab/numeric.hpp"
#include "hsplab/permutation.hpp"

namespace hsplab {

inline constexpr std::size_t kExplicitGroupCap = 40320;

/// A finite group given by an explicit element list and its operations.
/// Element must be totally ordered (used for index lookup).
template <class Element>
class FiniteGroupView {
 public:
  using value_type = Element;
  using Multiply = std::function<Element(const Element&, const Element&)>;
  using Invert = std::function<Element(const Element&)>;

  FiniteGroupView(std::vector<Element> elements, Multiply mul, Invert inv, Element identity)
      : elements_(std::move(elements)), mul_(std::move(mul)), inv_(std::move(inv)), identity_(std::move(identity)) {
    if (elements_.empty()) throw std::invalid_argument("FiniteGroupView: empty element list");
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (!index_.emplace(elements_[i], i).second) throw std::invalid_argument("FiniteGroupView: duplicate element");
    if (!index_.count(identity_)) throw std::invalid_argument("FiniteGroupView: identity not listed");
  }

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  const Element& identity() const noexcept { return identity_; }
  std::size_t identity_index() const { return index_.at(identity_); }

  Element multiply(const Element& a, const Element& b) const { return mul_(a, b); }
  Element inverse(const Element& a) const { return inv_(a); }
  const Multiply& multiplication() const noexcept { return mul_; }
  const Invert& inversion() const noexcept { return inv_; }

  bool contains(const Element& e) const { return index_.count(e) != 0; }
  std::optional<std::size_t> find(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::out_of_range("element not in group");
    return it->second;
  }

  /// Exhaustive closure, identity and inverse checks; associativity is
  /// sampled on up to `assoc_samples` triples.
  bool verify_axioms(std::size_t assoc_samples = 64) const {
    for (const auto& a : elements_) {
      if (!contains(inverse(a))) return false;
      if (!(multiply(a, inverse(a)) == identity_)) return false;
      if (!(multiply(identity_, a) == a) || !(multiply(a, identity_) == a)) return false;
    }
    if (order() <= 512) {
      for (const auto& a : elements_)
        for (const auto& b : elements_)
          if (!contains(multiply(a, b))) return false;
    }
    const std::size_t n = order();
    for (std::size_t s = 0; s < assoc_samples; ++s) {
      const auto& a = elements_[(s * 7919) % n];
      const auto& b = elements_[(s * 104729 + 1) % n];
      const auto& c = elements_[(s * 1299709 + 2) % n];
      if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)))) return false;
    }
    return true;
  }

  /// Conjugacy classes as lists of element indices, computed once.
  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const {
    std::call_once(class_cache_->flag, [this] {
      auto& classes = class_cache_->classes;
      std::vector<char> seen(order(), 0);
      for (std::size_t i = 0; i < order(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cls;
        for (const auto& x : elements_) {
          std::size_t j = index_of(multiply(multiply(inverse(x), elements_[i]), x));
          if (!seen[j]) {
            seen[j] = 1;
            cls.push_back(j);
          }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
      }
    });
    return class_cache_->classes;
  }

  /// Subgroup view over the listed elements, which must be closed under the
  /// parent's operations.
  FiniteGroupView subgroup(std::vector<Element> members) const {
    for (const auto& m : members)
      if (!contains(m)) throw std::invalid_argument("subgroup: element not in parent group");
    FiniteGroupView h(std::move(members), mul_, inv_, identity_);
    for (const auto& a : h.elements())
      for (const auto& b : h.elements())
        if (!h.contains(h.multiply(a, b))) throw std::invalid_argument("subgroup: not closed under multiplication");
    return h;
  }

  bool is_subgroup_of(const FiniteGroupView& g) const {
    for (const auto& e : elements_)
      if (!g.contains(e)) return false;
    return true;
  }

 private:
  // Shared between copies of the same view.
  struct ClassCache {
    std::once_flag flag;
    std::vector<std::vector<std::size_t>> classes;
  };

  std::vector<Element> elements_;
  Multiply mul_;
  Invert inv_;
  Element identity_;
  std::map<Element, std::size_t> index_;
  std::shared_ptr<ClassCache> class_cache_ = std::make_shared<ClassCache>();
};

/// Closure of a generator set under the given multiplication.
template <class Element>
std::vector<Element> generate_closure(const std::vector<Element>& generators, const Element& identity,
                                      const std::function<Element(const Element&, const Element&)>& mul) {
  std::map<Element, bool> seen{{identity, true}};
  std::vector<Element> out{identity};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      Element e = mul(out[i], g);
      if (seen.emplace(e, true).second) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// S_n with all n! elements; n ≤ 8.
inline FiniteGroupView<Permutation> symmetric_group(int n) {
  require_cap("symmetric group explicit order", static_cast<long long>(factorial(static_cast<unsigned>(n))),
              static_cast<long long>(kExplicitGroupCap));
  return FiniteGroupView<Permutation>(
      all_permutations(static_cast<std::size_t>(n)), [](const Permutation& a, const Permutation& b) { return a * b; },
      [](const Permutation& a) { return a.inverse(); }, Permutation::identity(static_cast<std::size_t>(n)));
}

/// Permutation subgroup generated by the given permutations.
inline FiniteGroupView<Permutation> permutation_group(const std::vector<Permutation>& generators, std::size_t degree) {
  std::function<Permutation(const Permutation&, const Permutation&)> mul = [](const Permutation& a,
                                                                               const Permutation& b) { return a * b; };
  auto elems = generate_closure(generators, Permutation::identity(degree), mul);
  return FiniteGroupView<Permutation>(std::move(elems), mul, [](const Permutation& a) { return a.inverse(); },
                                      Permutation::identity(degree));
}

/// Direct product A × B with componentwise operations.
template <class A, class B>
FiniteGroupView<std::pair<A, B>> direct_product(const FiniteGroupView<A>& ga, const FiniteGroupView<B>& gb) {
  std::vector<std::pair<A, B>> elems;
  elems.reserve(ga.order() * gb.order());
  for (const auto& b : gb.elements())
    for (const auto& a : ga.elements()) elems.emplace_back(a, b);
  auto ma = ga.multiplication();
  auto mb = gb.multiplication();
  auto ia = ga.inversion();
  auto ib = gb.inversion();
  return FiniteGroupView<std::pair<A, B>>(
      std::move(elems),
      [ma, mb](const std::pair<A, B>& x, const std::pair<A, B>& y) {
        return std::pair<A, B>(ma(x.first, y.first), mb(x.second, y.second));
      },
      [ia, ib](const std::pair<A, B>& x) { return std::pair<A, B>(ia(x.first), ib(x.second)); },
      std::pair<A, B>(ga.identity(), gb.identity()));
}

/// Left-coset transversal found by a greedy sweep over G's element list.
template <class Element>
std::vector<Element> left_transversal(const FiniteGroupView<Element>& g, const FiniteGroupView<Element>& h) {
  std::vector<char> covered(g.order(), 0);
  std::vector<Element> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    reps.push_back(g.element(i));
    for (const auto& x : h.elements()) covered[g.index_of(g.multiply(g.element(i), x))] = 1;
  }
  return reps;
}

}  // namespace hsplab
