#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsplab/cyclotomic.hpp"
#include "hsplab/dihedral.hpp"
#include "hsplab/group.hpp"
#include "hsplab/matrix.hpp"
#include "hsplab/numeric.hpp"
#include "hsplab/partition.hpp"
#include "hsplab/rep_ops.hpp"
#include "hsplab/symmetric.hpp"

namespace hsplab {

inline constexpr std::size_t kStatevectorCap = 4096;
inline constexpr double kFloatTolerance = 1e-10;

/// Irrep label ↦ exact probability.
struct SamplingDistribution {
  std::vector<std::string> labels;
  std::vector<Rational> probabilities;
  bool complete_dual = false;  // labels range over every irrep of the ambient group

  void add(std::string label, Rational p) {
    if (p < 0) throw IntegrityError("negative probability for " + label);
    labels.push_back(std::move(label));
    probabilities.push_back(std::move(p));
  }

  Rational total() const {
    Rational t = 0;
    for (const auto& p : probabilities) t += p;
    return t;
  }
  bool normalized() const { return total() == 1; }

  const Rational& at(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::out_of_range("no such label: " + label);
    return probabilities[static_cast<std::size_t>(it - labels.begin())];
  }

  std::size_t size() const noexcept { return labels.size(); }
};

/// (|H|/|G|)·d·⟨χ, 1⟩_H, with χ the restriction of a degree-d character to H.
template <class Element>
Rational label_probability(const BigInt& ambient_order, const ClassFunction<Element>& chi_on_h, const BigInt& d) {
  const auto& h = chi_on_h.group();
  const auto& at_e = chi_on_h.at_identity();
  if (!at_e.is_rational() || BigInt(at_e.integer_value()) != d)
    throw std::invalid_argument("label_probability: character at identity does not equal the dimension");
  Rational mult = inner_product(chi_on_h, trivial_character(h));
  if (!is_integer(mult)) throw IntegrityError("non-integer multiplicity " + to_string(mult));
  return make_rational(BigInt(h->order()), ambient_order) * Rational(d) * mult;
}

// ---------------------------------------------------------------------------
// Hidden subgroup instances
// ---------------------------------------------------------------------------

struct PromiseCheck {
  bool holds = false;
  std::size_t distinct_labels = 0;
  std::size_t index = 0;
};

/// Ambient group, hidden subgroup and an oracle g ↦ opaque coset label.
template <class Element>
struct HiddenSubgroupInstance {
  GroupPtr<Element> ambient;
  GroupPtr<Element> hidden;
  std::function<std::string(const Element&)> oracle;

  /// Exhaustive check that the oracle is constant on left cosets gH and
  /// distinct across them.
  PromiseCheck verify_promise() const {
    PromiseCheck r;
    r.index = ambient->order() / hidden->order();
    std::map<std::string, Element> first;
    bool ok = ambient->order() % hidden->order() == 0;
    for (const auto& g : ambient->elements()) {
      auto label = oracle(g);
      auto [it, fresh] = first.emplace(label, g);
      if (!fresh && !hidden->contains(ambient->multiply(ambient->inverse(it->second), g))) ok = false;
    }
    r.distinct_labels = first.size();
    r.holds = ok && r.distinct_labels * hidden->order() == ambient->order();
    return r;
  }
};

/// D_n with hidden subgroup s; the oracle names each left coset by its least element.
inline HiddenSubgroupInstance<DihedralElement> dihedral_hsp_instance(int n, const DihedralSubgroup& s) {
  HiddenSubgroupInstance<DihedralElement> inst;
  inst.ambient = share(dihedral_group(n));
  inst.hidden = subgroup_view(inst.ambient, s);
  auto hidden = inst.hidden;
  inst.oracle = [hidden](const DihedralElement& g) {
    DihedralElement best = g;
    for (const auto& h : hidden->elements()) best = std::min(best, g * h);
    return best.to_string();
  };
  return inst;
}

// ---------------------------------------------------------------------------
// Cycle-graph automorphism: weak sampling over the hidden D_n
// ---------------------------------------------------------------------------

enum class CycleAutoMode { Paper, Ambient };

struct CycleAutoDistribution {
  int n = 0;
  CycleAutoMode mode = CycleAutoMode::Paper;
  SamplingDistribution distribution;
  /// Paper mode: Σ_{g∈D_n} χ_ρ(g) per label, exact; zero certifies ⟨χ_ρ, 1⟩ = 0.
  std::vector<CyclotomicInteger> character_sums;
  Rational expected_total;  // 2n/n! (paper) or 1 (ambient)
};

inline constexpr int kCycleAutoPaperCap = 64;

/// Paper mode: labels are the irreps of the hidden D_n itself and the
/// probabilities are (2n/n!)·d·⟨χ_ρ, 1⟩_{D_n}; the total is 2n/n!, not 1.
/// Ambient mode: labels are the S_n irreps λ with (2n/n!)·d_λ·⟨χ_λ↓D_n, 1⟩, summing to 1.
inline CycleAutoDistribution cycle_auto_distribution(int n, CycleAutoMode mode = CycleAutoMode::Paper) {
  if (n < 3) throw std::invalid_argument("cycle_auto_distribution: n must be at least 3");
  CycleAutoDistribution out;
  out.n = n;
  out.mode = mode;
  const BigInt ambient = factorial(static_cast<unsigned>(n));
  if (mode == CycleAutoMode::Paper) {
    require_cap("cycle_auto_distribution n", n, kCycleAutoPaperCap);
    auto g = share(dihedral_group(n));
    for (const auto& rho : dihedral_irreps(n)) {
      auto chi = irrep_character(rho, g);
      CyclotomicInteger sum = 0;
      for (const auto& v : chi.values()) sum += v;
      out.character_sums.push_back(sum);
      out.distribution.add(rho.label(), label_probability(ambient, chi, BigInt(rho.dimension())));
    }
    out.distribution.complete_dual = false;
    out.expected_total = make_rational(BigInt(2 * n), ambient);
  } else {
    require_cap("ambient cycle_auto_distribution n", n, kCharacterTableCap);
    auto emb = dihedral_in_symmetric(n);
    MnMemo memo;
    for (const auto& lambda : partitions_of(n)) {
      auto chi = ClassFunction<Permutation>::from(emb.image, [&](const Permutation& p) {
        return CyclotomicInteger(static_cast<std::int64_t>(mn_character(lambda, cycle_type(p), memo)));
      });
      out.distribution.add(lambda.to_string(), label_probability(ambient, chi, hook_dimension(lambda)));
    }
    out.distribution.complete_dual = true;
    out.expected_total = 1;
  }
  return out;
}

/// Label distribution for hidden subgroup s ≤ D_n with ambient D_n, via
/// restricted characters; a complete dual, so it sums to 1.
inline SamplingDistribution dihedral_label_distribution(int n, const DihedralSubgroup& s) {
  auto g = share(dihedral_group(n));
  auto h = subgroup_view(g, s);
  SamplingDistribution d;
  for (const auto& rho : dihedral_irreps(n))
    d.add(rho.label(), label_probability(BigInt(g->order()), irrep_character(rho, h), BigInt(rho.dimension())));
  d.complete_dual = true;
  return d;
}

// ---------------------------------------------------------------------------
// GI distinguishability gap
// ---------------------------------------------------------------------------

/// (1 2)(3 4)...(2n-1 2n).
inline Permutation canonical_involution(int half_n) {
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < half_n; ++i) cycles.push_back({2 * i + 1, 2 * i + 2});
  return Permutation::from_cycles(static_cast<std::size_t>(2 * half_n), cycles);
}

struct GiGap {
  int half_n = 0;
  Permutation sigma = Permutation::identity(0);
  SamplingDistribution p;  // d²/(2n)!
  SamplingDistribution q;  // d(d + χ(σ))/(2n)!
  Rational tv;             // Σ |p - q|
};

inline GiGap gi_gap(int half_n) {
  if (half_n < 1) throw std::invalid_argument("gi_gap: half-degree must be positive");
  require_cap("gi_gap 2n", 2LL * half_n, kCharacterTableCap);
  GiGap out;
  out.half_n = half_n;
  out.sigma = canonical_involution(half_n);
  const Partition type = cycle_type(out.sigma);
  const BigInt order = factorial(static_cast<unsigned>(2 * half_n));
  MnMemo memo;
  for (const auto& lambda : partitions_of(2 * half_n)) {
    const BigInt d = hook_dimension(lambda);
    const BigInt chi = mn_character(lambda, type, memo);
    out.p.add(lambda.to_string(), make_rational(d * d, order));
    out.q.add(lambda.to_string(), make_rational(d * (d + chi), order));
  }
  out.p.complete_dual = out.q.complete_dual = true;
  out.tv = 0;
  for (std::size_t i = 0; i < out.p.size(); ++i) out.tv += abs(out.p.probabilities[i] - out.q.probabilities[i]);
  return out;
}

struct GiGapBound {
  int half_n = 0;
  Rational tv;
  BigInt max_abs_character;  // max_λ |χ_λ(σ)|
  BigInt bound_squared;      // (16^n (2√(2n))^n)² = 256^n (8n)^n
  double bound = 0;          // 16^n (2√(2n))^n
  bool within_bound = false;
};

inline GiGapBound gi_gap_bound_report(int half_n) {
  GiGapBound r;
  r.half_n = half_n;
  r.tv = gi_gap(half_n).tv;
  r.max_abs_character = 0;
  for (const auto& [lambda, chi] : char_at_fixed_point_free_involution(half_n))
    r.max_abs_character = std::max(r.max_abs_character, BigInt(abs(chi)));
  r.bound_squared = pow(BigInt(256), static_cast<unsigned>(half_n)) * pow(BigInt(8 * half_n), static_cast<unsigned>(half_n));
  r.bound = std::pow(16.0, half_n) * std::pow(2.0 * std::sqrt(2.0 * half_n), half_n);
  r.within_bound = r.max_abs_character * r.max_abs_character <= r.bound_squared;
  return r;
}

// ---------------------------------------------------------------------------
// Statevector oracle
// ---------------------------------------------------------------------------

template <class Element>
struct LabeledRep {
  std::string label;
  std::size_t dimension = 1;
  MatrixRep<Element> matrix;
};

inline std::vector<LabeledRep<DihedralElement>> dihedral_dual(int n) {
  std::vector<LabeledRep<DihedralElement>> out;
  for (const auto& rho : dihedral_irreps(n))
    out.push_back({rho.label(), static_cast<std::size_t>(rho.dimension()),
                   [rho](const DihedralElement& e) { return rho.matrix(e); }});
  return out;
}

struct StatevectorResult {
  SamplingDistribution distribution;     // exact ‖f̂(ρ)‖²
  std::vector<double> float_probabilities;  // same, from the amplitude vector in floating point
  double max_float_deviation = 0;
  std::vector<CycMatrix> blocks;         // Σ_{g∈cH} ρ(g), unnormalised
};

/// Fourier-samples the coset state |cH⟩ = |H|^{-1/2} Σ_{h∈H} |ch⟩ over G:
/// f̂(ρ) = √(d_ρ/|G|) Σ_g f(g) ρ(g), probability ‖f̂(ρ)‖²_F. The exact path
/// uses ‖f̂(ρ)‖² = d_ρ ‖M‖²_F / (|G||H|) with M = Σ_{g∈cH} ρ(g).
template <class Element>
StatevectorResult statevector_weak_sampling(const GroupPtr<Element>& g, const std::vector<LabeledRep<Element>>& dual,
                                            const GroupPtr<Element>& h, const Element& c) {
  require_cap("statevector |G|", static_cast<long long>(g->order()), static_cast<long long>(kStatevectorCap));
  std::size_t sum_d2 = 0;
  for (const auto& rho : dual) sum_d2 += rho.dimension * rho.dimension;
  if (sum_d2 != g->order()) throw std::invalid_argument("statevector_weak_sampling: dual is incomplete");
  if (!h->is_subgroup_of(*g)) throw std::invalid_argument("statevector_weak_sampling: H is not a subgroup of G");
  if (!g->contains(c)) throw std::invalid_argument("statevector_weak_sampling: coset representative not in G");

  std::vector<double> amplitude(g->order(), 0.0);
  const double a = 1.0 / std::sqrt(static_cast<double>(h->order()));
  for (const auto& x : h->elements()) amplitude[g->index_of(g->multiply(c, x))] = a;

  StatevectorResult out;
  out.distribution.complete_dual = true;
  const BigInt denom = BigInt(g->order()) * BigInt(h->order());
  for (const auto& rho : dual) {
    const std::size_t d = rho.dimension;
    CycMatrix m(d, d);
    std::vector<std::complex<double>> fhat(d * d, 0.0);
    for (std::size_t i = 0; i < g->order(); ++i) {
      if (amplitude[i] == 0.0) continue;
      CycMatrix r = rho.matrix(g->element(i));
      m += r;
      for (std::size_t k = 0; k < d * d; ++k) fhat[k] += amplitude[i] * r.entries()[k].to_complex();
    }
    const auto norm = m.frobenius_norm_squared();
    if (!norm.is_rational()) throw IntegrityError("Fourier block norm is not rational for " + rho.label);
    Rational p = make_rational(BigInt(static_cast<long long>(d)) * BigInt(norm.integer_value()), denom);
    double pf = 0;
    for (const auto& z : fhat) pf += std::norm(z);
    pf *= static_cast<double>(d) / static_cast<double>(g->order());
    out.max_float_deviation = std::max(out.max_float_deviation, std::abs(pf - p.convert_to<double>()));
    out.float_probabilities.push_back(pf);
    out.distribution.add(rho.label, std::move(p));
    out.blocks.push_back(std::move(m));
  }
  return out;
}

/// Statevector sampling of the hidden subgroup s ≤ D_n from coset c·s.
inline StatevectorResult dihedral_statevector(int n, const DihedralSubgroup& s, const DihedralElement& c) {
  auto g = share(dihedral_group(n));
  return statevector_weak_sampling(g, dihedral_dual(n), subgroup_view(g, s), c);
}

struct StrongSamplingEntry {
  std::string label;
  Rational probability;
  std::size_t entry_count = 0;
  std::size_t zero_entries = 0;
  std::string statement;
};

/// Coset state of the whole D_n, read label by label: where the label
/// probability is zero every matrix entry of f̂(ρ) is exactly zero too, so no
/// row/column measurement can see that label either.
inline std::vector<StrongSamplingEntry> strong_sampling_note(int n) {
  auto res = dihedral_statevector(n, dihedral_subgroup(n, 1, 0), DihedralElement::identity(n));
  std::vector<StrongSamplingEntry> out;
  for (std::size_t i = 0; i < res.blocks.size(); ++i) {
    StrongSamplingEntry e;
    e.label = res.distribution.labels[i];
    e.probability = res.distribution.probabilities[i];
    e.entry_count = res.blocks[i].entries().size();
    for (const auto& z : res.blocks[i].entries()) e.zero_entries += z.is_zero() ? 1 : 0;
    if (e.probability == 0) {
      e.statement = e.zero_entries == e.entry_count
                        ? "label probability 0; all " + std::to_string(e.entry_count) +
                              " entry probabilities are exactly 0"
                        : "label probability 0 but some entries are nonzero";
    } else {
      e.statement = "label probability " + to_string(e.probability) + "; " +
                    std::to_string(e.entry_count - e.zero_entries) + " nonzero entries";
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace hsplab
