#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hsplab/cyclotomic.hpp"
#include "hsplab/dihedral.hpp"
#include "hsplab/group.hpp"
#include "hsplab/numeric.hpp"
#include "hsplab/rep_ops.hpp"
#include "hsplab/sampling.hpp"

namespace hsplab {

// The D_m × D_n catalog takes each factor from a list of "slots": the
// one-dimensional irreps, then the two-dimensional irrep two-dim(k) once per
// element type x, x^l, y, x^l y it is written out for. Even n has 4 + 4 slots,
// odd n has 2 + 4.

enum class ElementType { Any, X, XPower, Y, XPowerY };

inline std::string to_string(ElementType t) {
  switch (t) {
    case ElementType::Any: return "any";
    case ElementType::X: return "x";
    case ElementType::XPower: return "x^l";
    case ElementType::Y: return "y";
    case ElementType::XPowerY: return "x^l y";
  }
  return "?";
}

inline bool element_has_type(const DihedralElement& e, ElementType t) {
  switch (t) {
    case ElementType::Any: return true;
    case ElementType::X: return !e.reflection && e.rotation == 1;
    case ElementType::XPower: return !e.reflection;
    case ElementType::Y: return e.reflection && e.rotation == 0;
    case ElementType::XPowerY: return e.reflection;
  }
  return false;
}

inline std::vector<DihedralElement> elements_of_type(int n, ElementType t) {
  std::vector<DihedralElement> out;
  for (const auto& e : dihedral_elements(n))
    if (element_has_type(e, t)) out.push_back(e);
  return out;
}

struct CatalogSlot {
  int number = 1;  // 1-based position within the factor's slot list
  DihedralIrrep irrep;
  ElementType type = ElementType::Any;

  int dimension() const { return irrep.dimension(); }
  std::string label() const {
    return type == ElementType::Any ? irrep.label() : irrep.label() + " @ " + to_string(type);
  }
};

inline std::vector<CatalogSlot> catalog_slots(int n, int k = 1) {
  std::vector<CatalogSlot> out;
  int number = 1;
  for (const auto& rho : dihedral_irreps(n))
    if (rho.dimension() == 1) out.push_back({number++, rho, ElementType::Any});
  const int k_max = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
  if (k < 1 || k > k_max) throw std::invalid_argument("catalog_slots: k out of range for n = " + std::to_string(n));
  DihedralIrrep two{n, DihedralIrrepKind::TwoDim, k, true};
  for (auto t : {ElementType::X, ElementType::XPower, ElementType::Y, ElementType::XPowerY})
    out.push_back({number++, two, t});
  return out;
}

struct ProductIrrep {
  int index = 1;
  int m = 0;
  int n = 0;
  CatalogSlot factor_m;
  CatalogSlot factor_n;

  int dimension() const { return factor_m.dimension() * factor_n.dimension(); }
  std::string label() const { return factor_m.label() + " (x) " + factor_n.label(); }
};

/// ρ_i = slot_a(D_m) ⊗ slot_b(D_n) with i = (b - 1)·|slots(m)| + a: the
/// D_m slot runs fastest, so ρ_2 pairs rotation-sign with trivial and ρ_9
/// pairs trivial with rotation-sign.
inline std::vector<ProductIrrep> product_catalog(int m, int n, int k_m = 1, int k_n = 1) {
  if (m < 3 || n < 3) throw std::invalid_argument("product_catalog: m and n must be at least 3");
  auto sm = catalog_slots(m, k_m);
  auto sn = catalog_slots(n, k_n);
  std::vector<ProductIrrep> out;
  for (const auto& b : sn)
    for (const auto& a : sm) {
      ProductIrrep p;
      p.index = (b.number - 1) * static_cast<int>(sm.size()) + a.number;
      p.m = m;
      p.n = n;
      p.factor_m = a;
      p.factor_n = b;
      out.push_back(std::move(p));
    }
  return out;
}

inline std::map<int, int> dimension_histogram(const std::vector<ProductIrrep>& catalog) {
  std::map<int, int> h;
  for (const auto& p : catalog) ++h[p.dimension()];
  return h;
}

using ProductElement = std::pair<DihedralElement, DihedralElement>;

/// χ_a(g)·χ_b(h), the character of the underlying tensor product.
inline CyclotomicInteger catalog_character(const ProductIrrep& rho, const ProductElement& g) {
  if (g.first.n != rho.m || g.second.n != rho.n)
    throw std::invalid_argument("catalog_character: element degrees do not match the catalog");
  return rho.factor_m.irrep.character(g.first) * rho.factor_n.irrep.character(g.second);
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Character of a catalog entry on its element type, written as
/// [±] c · ∏ cos(...) in the style of the summary table.
struct ClosedForm {
  bool zero = false;
  bool sign_varies = false;  // some factor is a non-trivial one-dimensional irrep
  int coefficient = 1;       // 2^(number of cosine factors)
  std::vector<std::string> cosines;

  std::string tag() const {
    if (zero) return "0";
    std::string s = sign_varies ? "±" : "";
    if (cosines.empty()) return s + "1";
    s += std::to_string(coefficient);
    for (const auto& c : cosines) s += c;
    return s;
  }
};

namespace detail {

inline std::string cosine_term(const CatalogSlot& slot, const char* side) {
  const std::string k = std::string("k_") + side;
  const std::string l = std::string(" l_") + side;
  const std::string var = std::string("/") + side + ")";
  return slot.type == ElementType::X ? "cos(2π" + k + var : "cos(2π" + k + l + var;
}

// Value of one factor on its element type, up to the sign of a one-dimensional irrep.
inline CyclotomicInteger slot_form_value(const CatalogSlot& slot, const DihedralElement& e) {
  switch (slot.type) {
    case ElementType::Any: return 1;
    case ElementType::Y:
    case ElementType::XPowerY: return 0;
    case ElementType::X:
    case ElementType::XPower: {
      const long long kl = static_cast<long long>(slot.irrep.k) * e.rotation;
      return cyclotomic_root(e.n, kl) + cyclotomic_root(e.n, -kl);
    }
  }
  return 0;
}

}  // namespace detail

inline ClosedForm closed_form(const ProductIrrep& rho) {
  ClosedForm f;
  for (const auto* slot : {&rho.factor_m, &rho.factor_n}) {
    if (slot->type == ElementType::Y || slot->type == ElementType::XPowerY) f.zero = true;
    if (slot->type == ElementType::Any && slot->irrep.kind != DihedralIrrepKind::Trivial) f.sign_varies = true;
  }
  if (f.zero) return f;
  if (rho.factor_m.type != ElementType::Any) f.cosines.push_back(detail::cosine_term(rho.factor_m, "m"));
  if (rho.factor_n.type != ElementType::Any) f.cosines.push_back(detail::cosine_term(rho.factor_n, "n"));
  f.coefficient = 1 << f.cosines.size();
  return f;
}

/// Does catalog_character at g agree with the closed form? Requires g to be of
/// the entry's element type in both coordinates; with a "±" form either sign
/// is accepted, otherwise the sign must be +.
inline bool closed_form_matches(const ProductIrrep& rho, const ProductElement& g) {
  if (!element_has_type(g.first, rho.factor_m.type) || !element_has_type(g.second, rho.factor_n.type))
    throw std::invalid_argument("closed_form_matches: element is not of the entry's type");
  const auto f = closed_form(rho);
  const auto value = catalog_character(rho, g);
  const auto form = detail::slot_form_value(rho.factor_m, g.first) * detail::slot_form_value(rho.factor_n, g.second);
  if (value == form) return true;
  return f.sign_varies && value == -form;
}

/// Uniform random element pair of the entry's element types.
inline ProductElement sample_typed_pair(const ProductIrrep& rho, std::mt19937_64& rng) {
  auto pick = [&](int n, ElementType t) {
    auto pool = elements_of_type(n, t);
    std::uniform_int_distribution<std::size_t> u(0, pool.size() - 1);
    return pool[u(rng)];
  };
  return {pick(rho.m, rho.factor_m.type), pick(rho.n, rho.factor_n.type)};
}

/// Indices whose character vanishes at every element pair of the entry's type.
inline std::set<int> zero_character_set(int m, int n, int k_m = 1, int k_n = 1) {
  std::set<int> out;
  for (const auto& rho : product_catalog(m, n, k_m, k_n)) {
    bool all_zero = true;
    for (const auto& a : elements_of_type(m, rho.factor_m.type)) {
      for (const auto& b : elements_of_type(n, rho.factor_n.type))
        if (!catalog_character(rho, {a, b}).is_zero()) {
          all_zero = false;
          break;
        }
      if (!all_zero) break;
    }
    if (all_zero) out.insert(rho.index);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The printed summary table for even m, n
// ---------------------------------------------------------------------------

struct SummaryRow {
  std::vector<int> indices;
  std::string tag;  // cosine factors ordered m-side first
};

inline std::vector<SummaryRow> printed_summary_table() {
  auto range = [](int a, int b) {
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
  };
  auto join = [](std::initializer_list<std::vector<int>> parts) {
    std::vector<int> v;
    for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    return v;
  };
  return {
      {join({{7, 8, 15, 16, 23, 24, 31, 32, 39, 40}, range(47, 64)}), "0"},
      {{1}, "1"},
      {join({range(2, 4), range(9, 12), range(17, 20), range(25, 28)}), "±1"},
      {{5}, "2cos(2πk_m/m)"},
      {{6, 22}, "2cos(2πk_m l_m/m)"},
      {{13, 21, 29}, "±2cos(2πk_m/m)"},
      {{14, 30}, "±2cos(2πk_m l_m/m)"},
      {{33}, "2cos(2πk_n/n)"},
      {range(34, 36), "±2cos(2πk_n/n)"},
      {{37}, "4cos(2πk_m/m)cos(2πk_n/n)"},
      {{38}, "4cos(2πk_m l_m/m)cos(2πk_n/n)"},
      {{41}, "2cos(2πk_n l_n/n)"},
      {range(42, 44), "±2cos(2πk_n l_n/n)"},
      {{45}, "4cos(2πk_m/m)cos(2πk_n l_n/n)"},
      {{46}, "4cos(2πk_m l_m/m)cos(2πk_n l_n/n)"},
  };
}

struct TagMismatch {
  int index = 0;
  std::string printed;
  std::string computed;
};

/// Entries whose computed closed form differs from the printed table.
inline std::vector<TagMismatch> compare_with_printed_table(int m, int n, int k_m = 1, int k_n = 1) {
  if (m % 2 || n % 2) throw std::invalid_argument("printed table covers even m and n only");
  std::map<int, std::string> printed;
  for (const auto& row : printed_summary_table())
    for (int i : row.indices) printed[i] = row.tag;
  std::vector<TagMismatch> out;
  for (const auto& rho : product_catalog(m, n, k_m, k_n)) {
    auto computed = closed_form(rho).tag();
    auto it = printed.find(rho.index);
    std::string p = it == printed.end() ? "(missing)" : it->second;
    if (p != computed) out.push_back({rho.index, p, computed});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Genuine irreps of D_m × D_n and the sampling failure
// ---------------------------------------------------------------------------

inline GroupPtr<ProductElement> dihedral_product_group(int m, int n) {
  return share(direct_product(dihedral_group(m), dihedral_group(n)));
}

struct ProductIrrepPair {
  DihedralIrrep a;
  DihedralIrrep b;
  std::string label() const { return a.label() + " (x) " + b.label(); }
  int dimension() const { return a.dimension() * b.dimension(); }
};

/// Every irrep of D_m × D_n as a pair of factor irreps, D_m factor fastest.
inline std::vector<ProductIrrepPair> product_irreps(int m, int n) {
  std::vector<ProductIrrepPair> out;
  for (const auto& b : dihedral_irreps(n))
    for (const auto& a : dihedral_irreps(m)) out.push_back({a, b});
  return out;
}

inline ClassFunction<ProductElement> product_character(const DihedralIrrep& a, const DihedralIrrep& b,
                                                       const GroupPtr<ProductElement>& g) {
  return ClassFunction<ProductElement>::from(
      g, [&](const ProductElement& e) { return a.character(e.first) * b.character(e.second); });
}

struct ProductFailureEntry {
  int index = 0;
  std::string label;
  int dimension = 1;
  Rational multiplicity;  // ⟨χ, 1⟩ over D_m × D_n
  Rational probability;   // (4mn/(m+n)!)·d·⟨χ, 1⟩
};

struct ProductFailureReport {
  int m = 0;
  int n = 0;
  Rational trivial_probability;  // 4mn/(m+n)!
  Rational total;
  bool normalized = false;
  std::vector<ProductFailureEntry> entries;
};

inline constexpr int kProductAmbientCap = 12;

/// Subgroup-label probabilities for Aut(C_m ⊔ C_n) = D_m × D_n hidden in
/// S_{m+n}, one row per catalog entry.
inline ProductFailureReport product_sampling_failure_report(int m, int n) {
  require_cap("product failure report m + n", static_cast<long long>(m) + n, kProductAmbientCap);
  ProductFailureReport r;
  r.m = m;
  r.n = n;
  auto g = dihedral_product_group(m, n);
  const BigInt ambient = factorial(static_cast<unsigned>(m + n));
  r.trivial_probability = make_rational(BigInt(4 * m * n), ambient);
  std::map<std::pair<std::string, std::string>, Rational> cache;
  r.total = 0;
  for (const auto& rho : product_catalog(m, n)) {
    ProductFailureEntry e;
    e.index = rho.index;
    e.label = rho.label();
    e.dimension = rho.dimension();
    auto key = std::pair{rho.factor_m.irrep.label(), rho.factor_n.irrep.label()};
    auto it = cache.find(key);
    if (it == cache.end()) {
      auto chi = product_character(rho.factor_m.irrep, rho.factor_n.irrep, g);
      it = cache.emplace(key, inner_product(chi, trivial_character(g))).first;
    }
    e.multiplicity = it->second;
    e.probability = make_rational(BigInt(g->order()), ambient) * Rational(e.dimension) * e.multiplicity;
    r.total += e.probability;
    r.entries.push_back(std::move(e));
  }
  r.normalized = r.total == 1;
  return r;
}

}  // namespace hsplab
