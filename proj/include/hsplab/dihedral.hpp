#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsplab/cyclotomic.hpp"
#include "hsplab/group.hpp"
#include "hsplab/matrix.hpp"
#include "hsplab/numeric.hpp"
#include "hsplab/permutation.hpp"
#include "hsplab/rep_ops.hpp"

namespace hsplab {

inline constexpr int kSubgroupCatalogCap = 24;

/// y^ε x^l in D_n = ⟨x, y | xⁿ = y² = (xy)² = 1⟩, normal form 0 <= l < n.
struct DihedralElement {
  int n = 3;
  bool reflection = false;  // ε
  int rotation = 0;         // l

  static DihedralElement make(int n, bool reflection, long long rotation) {
    if (n < 1) throw std::invalid_argument("DihedralElement: n must be positive");
    return {n, reflection, static_cast<int>(detail::mod(rotation, n))};
  }
  static DihedralElement identity(int n) { return make(n, false, 0); }
  static DihedralElement x(int n, long long l = 1) { return make(n, false, l); }
  /// y·x^l
  static DihedralElement y(int n, long long l = 0) { return make(n, true, l); }
  /// x^l·y, which equals y·x^{-l}.
  static DihedralElement x_then_y(int n, long long l) { return make(n, true, -l); }

  bool is_identity() const noexcept { return !reflection && rotation == 0; }

  std::string to_string() const {
    std::string s;
    if (reflection) s += "y";
    if (rotation != 0 || !reflection) {
      if (!s.empty()) s += " ";
      s += rotation == 0 ? std::string("e") : (rotation == 1 ? std::string("x") : "x^" + std::to_string(rotation));
    }
    return s;
  }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

/// (y^a x^l)(y^b x^m) = y^{a+b} x^{(-1)^b l + m}, using x y = y x^{-1}.
inline DihedralElement operator*(const DihedralElement& p, const DihedralElement& q) {
  if (p.n != q.n) throw std::invalid_argument("DihedralElement: mismatched n");
  long long l = q.reflection ? -p.rotation : p.rotation;
  return DihedralElement::make(p.n, p.reflection != q.reflection, l + q.rotation);
}

inline DihedralElement inverse(const DihedralElement& e) {
  return e.reflection ? e : DihedralElement::make(e.n, false, -e.rotation);
}

/// All 2n elements: rotations x^0..x^{n-1}, then reflections y x^0..y x^{n-1}.
inline std::vector<DihedralElement> dihedral_elements(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_elements: n must be at least 3");
  std::vector<DihedralElement> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int l = 0; l < n; ++l) out.push_back(DihedralElement::x(n, l));
  for (int l = 0; l < n; ++l) out.push_back(DihedralElement::y(n, l));
  return out;
}

inline FiniteGroupView<DihedralElement> dihedral_group(int n) {
  return FiniteGroupView<DihedralElement>(
      dihedral_elements(n), [](const DihedralElement& a, const DihedralElement& b) { return a * b; },
      [](const DihedralElement& a) { return inverse(a); }, DihedralElement::identity(n));
}

/// Rotation x = (1 2 ... n) as a permutation of the n-gon's vertices.
inline Permutation dihedral_rotation_permutation(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i - 1)] = i % n + 1;
  return Permutation(std::move(im));
}

/// Reflection y = (2 n)(3 n-1)... fixing vertex 1.
inline Permutation dihedral_reflection_permutation(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  im[0] = 1;
  for (int i = 2; i <= n; ++i) im[static_cast<std::size_t>(i - 1)] = n + 2 - i;
  return Permutation(std::move(im));
}

/// Injective homomorphism D_n → S_n: y^ε x^l ↦ Y^ε ∘ X^l.
inline Permutation as_permutation(const DihedralElement& e) {
  const int n = e.n;
  if (n < 3) throw std::invalid_argument("as_permutation: n must be at least 3");
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int v = (i - 1 + e.rotation) % n + 1;  // X^l
    if (e.reflection && v != 1) v = n + 2 - v;  // Y
    im[static_cast<std::size_t>(i - 1)] = v;
  }
  return Permutation(std::move(im));
}

// ---------------------------------------------------------------------------
// Subgroups and classes
// ---------------------------------------------------------------------------

struct DihedralSubgroup {
  enum class Kind { Cyclic, Dihedral };
  Kind kind = Kind::Cyclic;
  int n = 0;
  int d = 1;  // x^d generates the rotation part
  int i = 0;  // reflection generator x^i y (dihedral kind only)
  std::vector<DihedralElement> generators;
  std::vector<DihedralElement> elements;  // sorted

  std::size_t order() const noexcept { return elements.size(); }
  std::size_t index() const noexcept { return static_cast<std::size_t>(2 * n) / elements.size(); }

  std::string spec() const {
    return kind == Kind::Cyclic ? "cyclic:" + std::to_string(d)
                                : "dihedral:" + std::to_string(d) + ":" + std::to_string(i);
  }
  std::string name() const {
    std::string xd = d == n ? "e" : (d == 1 ? "x" : "x^" + std::to_string(d));
    if (kind == Kind::Cyclic) return "<" + xd + ">";
    std::string refl = i == 0 ? "y" : (i == 1 ? "x y" : "x^" + std::to_string(i) + " y");
    return "<" + xd + ", " + refl + ">";
  }
};

namespace detail {

inline std::vector<DihedralElement> dihedral_closure(int n, const std::vector<DihedralElement>& gens) {
  std::function<DihedralElement(const DihedralElement&, const DihedralElement&)> mul =
      [](const DihedralElement& a, const DihedralElement& b) { return a * b; };
  return generate_closure(gens, DihedralElement::identity(n), mul);
}

}  // namespace detail

inline DihedralSubgroup cyclic_subgroup(int n, int d) {
  if (d < 1 || n % d != 0) throw std::invalid_argument("cyclic_subgroup: d must divide n");
  DihedralSubgroup s;
  s.kind = DihedralSubgroup::Kind::Cyclic;
  s.n = n;
  s.d = d;
  s.generators = {DihedralElement::x(n, d)};
  s.elements = detail::dihedral_closure(n, s.generators);
  return s;
}

inline DihedralSubgroup dihedral_subgroup(int n, int d, int i) {
  if (d < 1 || n % d != 0) throw std::invalid_argument("dihedral_subgroup: d must divide n");
  if (i < 0 || i >= d) throw std::invalid_argument("dihedral_subgroup: need 0 <= i < d");
  DihedralSubgroup s;
  s.kind = DihedralSubgroup::Kind::Dihedral;
  s.n = n;
  s.d = d;
  s.i = i;
  s.generators = {DihedralElement::x(n, d), DihedralElement::x_then_y(n, i)};
  s.elements = detail::dihedral_closure(n, s.generators);
  return s;
}

/// Parses "cyclic:d", "dihedral:d:i", "trivial" or "full".
inline DihedralSubgroup parse_dihedral_subgroup(int n, const std::string& spec) {
  if (spec == "trivial") return cyclic_subgroup(n, n);
  if (spec == "full") return dihedral_subgroup(n, 1, 0);
  if (spec == "rotations") return cyclic_subgroup(n, 1);
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad subgroup spec: " + spec);
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "cyclic") return cyclic_subgroup(n, std::stoi(rest));
  if (kind == "dihedral") {
    auto c2 = rest.find(':');
    if (c2 == std::string::npos) throw std::invalid_argument("bad dihedral subgroup spec: " + spec);
    return dihedral_subgroup(n, std::stoi(rest.substr(0, c2)), std::stoi(rest.substr(c2 + 1)));
  }
  throw std::invalid_argument("bad subgroup spec: " + spec);
}

/// ⟨x^d⟩ for d | n, then ⟨x^d, x^i y⟩ for d | n, 0 <= i < d; orders n/d and 2n/d.
inline std::vector<DihedralSubgroup> subgroup_catalog(int n) {
  if (n < 3) throw std::invalid_argument("subgroup_catalog: n must be at least 3");
  require_cap("subgroup catalog n", n, kSubgroupCatalogCap);
  std::vector<DihedralSubgroup> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(cyclic_subgroup(n, d));
  for (int d = 1; d <= n; ++d)
    if (n % d == 0)
      for (int i = 0; i < d; ++i) out.push_back(dihedral_subgroup(n, d, i));
  return out;
}

/// n/2 + 3 for even n, (n+3)/2 for odd n.
inline int conjugacy_class_count(int n) {
  if (n < 3) throw std::invalid_argument("conjugacy_class_count: n must be at least 3");
  return n % 2 == 0 ? n / 2 + 3 : (n + 3) / 2;
}

// ---------------------------------------------------------------------------
// Irreducible representations
// ---------------------------------------------------------------------------

enum class DihedralIrrepKind { Trivial, RotationSign, HalfSignA, HalfSignB, TwoDim };

/// One irreducible representation of D_n (or, with `irreducible == false`, a
/// reducible member of the two-dimensional family at k = 0 or k = n/2).
struct DihedralIrrep {
  int n = 3;
  DihedralIrrepKind kind = DihedralIrrepKind::Trivial;
  int k = 0;
  bool irreducible = true;

  int dimension() const noexcept { return kind == DihedralIrrepKind::TwoDim ? 2 : 1; }

  std::string label() const {
    switch (kind) {
      case DihedralIrrepKind::Trivial: return "trivial";
      case DihedralIrrepKind::RotationSign: return "rotation-sign";
      case DihedralIrrepKind::HalfSignA: return "half-sign-A";
      case DihedralIrrepKind::HalfSignB: return "half-sign-B";
      case DihedralIrrepKind::TwoDim: return "two-dim(" + std::to_string(k) + ")";
    }
    return "?";
  }

  CycMatrix matrix(const DihedralElement& e) const {
    check(e);
    const int eps = e.reflection ? 1 : 0;
    const int l = e.rotation;
    switch (kind) {
      case DihedralIrrepKind::Trivial: return CycMatrix(1, 1, {1});
      case DihedralIrrepKind::RotationSign: return CycMatrix(1, 1, {eps ? -1 : 1});
      case DihedralIrrepKind::HalfSignA: return CycMatrix(1, 1, {l % 2 ? -1 : 1});
      case DihedralIrrepKind::HalfSignB: return CycMatrix(1, 1, {(l + eps) % 2 ? -1 : 1});
      case DihedralIrrepKind::TwoDim: {
        const auto w = cyclotomic_root(n, static_cast<long long>(k) * l);
        const auto w_inv = cyclotomic_root(n, -static_cast<long long>(k) * l);
        if (!e.reflection) return CycMatrix(2, 2, {w, 0, 0, w_inv});
        // y·x^l = [[0,1],[1,0]]·diag(w, w⁻¹)
        return CycMatrix(2, 2, {0, w_inv, w, 0});
      }
    }
    throw std::logic_error("unreachable");
  }

  /// Trace of matrix(e): ζ^{kl} + ζ^{-kl} on rotations, 0 on reflections for two-dim(k).
  CyclotomicInteger character(const DihedralElement& e) const {
    check(e);
    if (kind != DihedralIrrepKind::TwoDim) return matrix(e)(0, 0);
    if (e.reflection) return 0;
    return cyclotomic_root(n, static_cast<long long>(k) * e.rotation) +
           cyclotomic_root(n, -static_cast<long long>(k) * e.rotation);
  }

  friend bool operator==(const DihedralIrrep&, const DihedralIrrep&) = default;

 private:
  void check(const DihedralElement& e) const {
    if (e.n != n) throw std::invalid_argument("dihedral irrep and element have different n");
  }
};

/// Member k of the two-dimensional family induced from ⟨x⟩; reducible when
/// k ≡ 0 or 2k ≡ 0 (mod n).
inline DihedralIrrep dihedral_two_dim_family(int n, int k) {
  DihedralIrrep r{n, DihedralIrrepKind::TwoDim, static_cast<int>(detail::mod(k, n)), true};
  r.irreducible = !(r.k == 0 || 2 * r.k == n);
  return r;
}

/// Trivial, rotation-sign, [half-sign-A, half-sign-B when n is even], then
/// two-dim(k) for k = 1..(n-2)/2 (even) or 1..(n-1)/2 (odd).
inline std::vector<DihedralIrrep> dihedral_irreps(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_irreps: n must be at least 3");
  std::vector<DihedralIrrep> out;
  out.push_back({n, DihedralIrrepKind::Trivial, 0, true});
  out.push_back({n, DihedralIrrepKind::RotationSign, 0, true});
  if (n % 2 == 0) {
    out.push_back({n, DihedralIrrepKind::HalfSignA, 0, true});
    out.push_back({n, DihedralIrrepKind::HalfSignB, 0, true});
    for (int k = 1; k <= (n - 2) / 2; ++k) out.push_back({n, DihedralIrrepKind::TwoDim, k, true});
  } else {
    for (int k = 1; k <= (n - 1) / 2; ++k) out.push_back({n, DihedralIrrepKind::TwoDim, k, true});
  }
  return out;
}

inline CyclotomicInteger dihedral_character(const DihedralIrrep& rho, const DihedralElement& e) {
  return rho.character(e);
}

/// χ_ρ as a class function on an explicit view of D_n (or a subgroup of it).
inline ClassFunction<DihedralElement> irrep_character(const DihedralIrrep& rho,
                                                      const GroupPtr<DihedralElement>& group) {
  return ClassFunction<DihedralElement>::from(group, [&](const DihedralElement& e) { return rho.character(e); });
}

inline GroupPtr<DihedralElement> subgroup_view(const GroupPtr<DihedralElement>& g, const DihedralSubgroup& s) {
  return share(g->subgroup(s.elements));
}

/// D_n realised inside S_n through as_permutation, with the element map back.
struct DihedralInSymmetric {
  int n = 0;
  GroupPtr<Permutation> image;
  std::map<Permutation, DihedralElement> preimage;

  /// χ_ρ transported to the permutation image.
  ClassFunction<Permutation> character(const DihedralIrrep& rho) const {
    return ClassFunction<Permutation>::from(image, [&](const Permutation& p) { return rho.character(preimage.at(p)); });
  }
};

inline DihedralInSymmetric dihedral_in_symmetric(int n) {
  DihedralInSymmetric d;
  d.n = n;
  std::vector<Permutation> perms;
  for (const auto& e : dihedral_elements(n)) {
    auto p = as_permutation(e);
    d.preimage.emplace(p, e);
    perms.push_back(p);
  }
  std::sort(perms.begin(), perms.end());
  d.image = share(FiniteGroupView<Permutation>(
      std::move(perms), [](const Permutation& a, const Permutation& b) { return a * b; },
      [](const Permutation& a) { return a.inverse(); }, Permutation::identity(static_cast<std::size_t>(n))));
  return d;
}

}  // namespace hsplab
