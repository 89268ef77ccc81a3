#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hsplab/cyclotomic.hpp"
#include "hsplab/dihedral.hpp"
#include "hsplab/graph.hpp"
#include "hsplab/group.hpp"
#include "hsplab/oracles.hpp"
#include "hsplab/partition.hpp"
#include "hsplab/permutation.hpp"
#include "hsplab/product_reps.hpp"
#include "hsplab/rep_ops.hpp"
#include "hsplab/sampling.hpp"
#include "hsplab/symmetric.hpp"
#include "hsplab/young.hpp"

namespace hsplab {

struct InvariantResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// `max_n` bounds the families whose cost grows quickly with n; cheap
/// families always run at their full range.
struct VerifyOptions {
  int max_n = 8;
  std::uint64_t seed = 0x5eed;
};

struct CheckOutcome {
  bool passed = true;
  std::string detail;
};

namespace detail {

inline InvariantResult run_check(const std::string& module, const std::string& name,
                                 const std::function<CheckOutcome()>& fn) {
  InvariantResult r{module, name, false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto o = fn();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<int>(i + 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

inline std::string range_text(const char* var, int lo, int hi) {
  return std::string(var) + " in " + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// core-algebra
// ---------------------------------------------------------------------------

inline std::vector<InvariantResult> verify_core(const VerifyOptions& opt) {
  std::vector<InvariantResult> out;
  std::mt19937_64 rng(opt.seed);
  out.push_back(detail::run_check("core-algebra", "composition is associative", [&] {
    for (int t = 0; t < 500; ++t) {
      std::size_t n = 1 + rng() % 10;
      auto p = detail::random_permutation(n, rng), q = detail::random_permutation(n, rng),
           r = detail::random_permutation(n, rng);
      if (!((p * q) * r == p * (q * r))) return CheckOutcome{false, "failed for " + p.to_cycle_string()};
    }
    return CheckOutcome{true, "500 random triples, degree <= 10"};
  }));
  out.push_back(detail::run_check("core-algebra", "cycle type is conjugation invariant", [&] {
    for (int t = 0; t < 500; ++t) {
      std::size_t n = 1 + rng() % 10;
      auto p = detail::random_permutation(n, rng), q = detail::random_permutation(n, rng);
      if (cycle_type(q * p * q.inverse()) != cycle_type(p)) return CheckOutcome{false, p.to_cycle_string()};
      if (cycle_type(p).parts() != oracle::orbit_lengths(p)) return CheckOutcome{false, "orbit walk disagrees"};
    }
    return CheckOutcome{true, "500 random pairs, degree <= 10"};
  }));
  out.push_back(detail::run_check("core-algebra", "root-of-unity sums vanish exactly", [&] {
    for (int n = 1; n <= 64; ++n)
      for (int k = 0; k < n; ++k) {
        CyclotomicInteger s = 0;
        for (int l = 0; l < n; ++l) s += cyclotomic_root(n, static_cast<std::int64_t>(k) * l);
        bool ok = k == 0 ? s == CyclotomicInteger(n) : s.is_zero();
        if (!ok) return CheckOutcome{false, "N=" + std::to_string(n) + " k=" + std::to_string(k)};
      }
    return CheckOutcome{true, "N <= 64, all k"};
  }));
  out.push_back(detail::run_check("core-algebra", "cyclotomic arithmetic matches complex floats", [&] {
    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
      int order = 1 + static_cast<int>(rng() % 30);
      auto term = [&] {
        CyclotomicInteger z = 0;
        std::complex<double> f = 0;
        for (int j = 0; j < 3; ++j) {
          std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
          std::int64_t e = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(order));
          z += CyclotomicInteger(c) * cyclotomic_root(order, e);
          f += static_cast<double>(c) * std::polar(1.0, 2 * M_PI * static_cast<double>(e) / order);
        }
        return std::pair{z, f};
      };
      auto [a, fa] = term();
      auto [b, fb] = term();
      auto [c, fc] = term();
      auto z = a * b - c.conj();
      auto f = fa * fb - std::conj(fc);
      worst = std::max(worst, std::abs(z.to_complex() - f));
    }
    return CheckOutcome{worst < 1e-9, "1000 expressions, max error " + detail::sci(worst)};
  }));
  out.push_back(detail::run_check("core-algebra", "partition counts match the pentagonal recurrence", [&] {
    auto counts = partition_counts(40);
    for (int n = 1; n <= 40; ++n)
      if (BigInt(partitions_of(n).size()) != counts[static_cast<std::size_t>(n)])
        return CheckOutcome{false, "n=" + std::to_string(n)};
    return CheckOutcome{true, "n <= 40"};
  }));
  return out;
}

// ---------------------------------------------------------------------------
// symmetric-characters
// ---------------------------------------------------------------------------

inline std::vector<InvariantResult> verify_symmetric(const VerifyOptions& opt) {
  std::vector<InvariantResult> out;
  std::mt19937_64 rng(opt.seed + 1);
  const int n10 = std::min(10, opt.max_n);
  const int n9 = std::min(9, opt.max_n);
  const int n6 = std::min(6, opt.max_n);
  out.push_back(detail::run_check("symmetric-characters", "sum of squared dimensions is n!", [&] {
    for (int n = 1; n <= n10; ++n) {
      BigInt s = 0;
      for (const auto& l : partitions_of(n)) {
        auto d = hook_dimension(l);
        if (d != oracle::syt_count(l.parts())) return CheckOutcome{false, "hook formula vs tableau count " + l.to_string()};
        s += d * d;
      }
      if (s != factorial(static_cast<unsigned>(n))) return CheckOutcome{false, "n=" + std::to_string(n)};
    }
    return CheckOutcome{true, detail::range_text("n", 1, n10)};
  }));
  out.push_back(detail::run_check("symmetric-characters", "character at the identity is the dimension", [&] {
    for (int n = 1; n <= n10; ++n) {
      MnMemo memo;
      for (const auto& l : partitions_of(n))
        if (mn_character(l, Partition::column(n), memo) != hook_dimension(l)) return CheckOutcome{false, l.to_string()};
    }
    return CheckOutcome{true, detail::range_text("n", 1, n10)};
  }));
  out.push_back(detail::run_check("symmetric-characters", "row and column orthogonality", [&] {
    for (int n = 1; n <= n9; ++n) {
      auto t = character_table(n);
      const auto k = t.rows.size();
      const BigInt nf = factorial(static_cast<unsigned>(n));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          BigInt row = 0, col = 0;
          for (std::size_t c = 0; c < k; ++c) {
            row += t.class_sizes[c] * t.entries[a][c] * t.entries[b][c];
            col += t.entries[c][a] * t.entries[c][b];
          }
          if (row != (a == b ? nf : BigInt(0))) return CheckOutcome{false, "row n=" + std::to_string(n)};
          if (col != (a == b ? nf / t.class_sizes[a] : BigInt(0))) return CheckOutcome{false, "col n=" + std::to_string(n)};
        }
    }
    return CheckOutcome{true, detail::range_text("n", 1, n9)};
  }));
  out.push_back(detail::run_check("symmetric-characters", "orthogonal-form traces equal MN characters", [&] {
    double worst = 0;
    for (int n = 1; n <= n6; ++n) {
      MnMemo memo;
      for (const auto& l : partitions_of(n)) {
        YoungOrthogonalRep rep(l, n);
        for (int t = 0; t < 200; ++t) {
          auto g = detail::random_permutation(static_cast<std::size_t>(n), rng);
          double tr = rep.character(g);
          worst = std::max(worst, std::abs(tr - mn_character(l, cycle_type(g), memo).convert_to<double>()));
        }
      }
    }
    return CheckOutcome{worst < 1e-9, detail::range_text("n", 1, n6) + ", 200 elements per irrep, max error " +
                                          detail::sci(worst)};
  }));
  out.push_back(detail::run_check("symmetric-characters", "characters are constant under conjugation", [&] {
    double worst = 0;
    for (int n = 2; n <= n6; ++n)
      for (const auto& l : partitions_of(n)) {
        YoungOrthogonalRep rep(l, n);
        for (int t = 0; t < 50; ++t) {
          auto g = detail::random_permutation(static_cast<std::size_t>(n), rng);
          auto q = detail::random_permutation(static_cast<std::size_t>(n), rng);
          worst = std::max(worst, std::abs(rep.character(g) - rep.character(q * g * q.inverse())));
        }
      }
    return CheckOutcome{worst < 1e-9, detail::range_text("n", 2, n6) + ", 50 conjugate pairs per irrep"};
  }));
  return out;
}

// ---------------------------------------------------------------------------
// dihedral
// ---------------------------------------------------------------------------

inline std::vector<InvariantResult> verify_dihedral(const VerifyOptions& opt) {
  std::vector<InvariantResult> out;
  const int n12 = std::min(12, std::max(opt.max_n, 3));
  out.push_back(detail::run_check("dihedral", "as_permutation is an injective homomorphism", [&] {
    for (int n = 3; n <= 10; ++n) {
      auto el = dihedral_elements(n);
      std::set<Permutation> images;
      for (const auto& a : el) {
        images.insert(as_permutation(a));
        for (const auto& b : el)
          if (!(as_permutation(a * b) == as_permutation(a) * as_permutation(b)))
            return CheckOutcome{false, "n=" + std::to_string(n)};
      }
      if (images.size() != el.size()) return CheckOutcome{false, "not injective at n=" + std::to_string(n)};
    }
    return CheckOutcome{true, "n in 3..10, all pairs"};
  }));
  out.push_back(detail::run_check("dihedral", "irreps satisfy the defining relations", [&] {
    for (int n = 3; n <= 24; ++n)
      for (const auto& rho : dihedral_irreps(n)) {
        auto x = rho.matrix(DihedralElement::x(n));
        auto y = rho.matrix(DihedralElement::y(n));
        auto id = CycMatrix::identity(static_cast<std::size_t>(rho.dimension()));
        if (!(matrix_power(x, static_cast<unsigned>(n)) == id) || !(y * y == id) || !((x * y) * (x * y) == id))
          return CheckOutcome{false, rho.label() + " n=" + std::to_string(n)};
        for (const auto& a : dihedral_elements(n))
          if (!(rho.matrix(a) * rho.matrix(a).adjoint() == id)) return CheckOutcome{false, "not unitary"};
      }
    return CheckOutcome{true, "n in 3..24"};
  }));
  out.push_back(detail::run_check("dihedral", "irrep count equals class count", [&] {
    for (int n = 3; n <= 24; ++n) {
      auto count = static_cast<int>(dihedral_irreps(n).size());
      if (count != conjugacy_class_count(n)) return CheckOutcome{false, "n=" + std::to_string(n)};
      if (n <= 12 && static_cast<int>(dihedral_group(n).conjugacy_classes().size()) != count)
        return CheckOutcome{false, "brute-force classes n=" + std::to_string(n)};
    }
    return CheckOutcome{true, "n in 3..24; brute-force classes for n <= 12"};
  }));
  out.push_back(detail::run_check("dihedral", "squared dimensions sum to 2n", [&] {
    for (int n = 3; n <= 24; ++n) {
      int s = 0;
      for (const auto& rho : dihedral_irreps(n)) s += rho.dimension() * rho.dimension();
      if (s != 2 * n) return CheckOutcome{false, "n=" + std::to_string(n)};
    }
    return CheckOutcome{true, "n in 3..24"};
  }));
  out.push_back(detail::run_check("dihedral", "characters are class functions", [&] {
    for (int n = 3; n <= 12; ++n) {
      auto g = share(dihedral_group(n));
      for (const auto& rho : dihedral_irreps(n))
        if (!irrep_character(rho, g).is_class_function()) return CheckOutcome{false, rho.label()};
    }
    return CheckOutcome{true, "n in 3..12"};
  }));
  out.push_back(detail::run_check("dihedral", "subgroup catalog is complete and duplicate-free", [&] {
    for (int n = 3; n <= n12; ++n) {
      std::set<std::vector<DihedralElement>> listed;
      for (const auto& s : subgroup_catalog(n)) {
        if (!listed.insert(s.elements).second) return CheckOutcome{false, "duplicate " + s.name()};
        std::size_t expect = s.kind == DihedralSubgroup::Kind::Cyclic ? static_cast<std::size_t>(n / s.d)
                                                                      : static_cast<std::size_t>(2 * n / s.d);
        if (s.order() != expect) return CheckOutcome{false, "order of " + s.name()};
      }
      auto all = oracle::all_subgroups(dihedral_group(n));
      if (std::set<std::vector<DihedralElement>>(all.begin(), all.end()) != listed)
        return CheckOutcome{false, "mismatch with exhaustive search at n=" + std::to_string(n)};
    }
    return CheckOutcome{true, detail::range_text("n", 3, n12)};
  }));
  return out;
}

// ---------------------------------------------------------------------------
// rep-ops
// ---------------------------------------------------------------------------

inline std::vector<InvariantResult> verify_rep_ops(const VerifyOptions& opt) {
  std::vector<InvariantResult> out;
  const int n6 = std::min(6, opt.max_n);
  const int n10 = std::min(10, std::max(opt.max_n, 3));
  out.push_back(detail::run_check("rep-ops", "Frobenius reciprocity for D_n inside S_n", [&] {
    int pairs = 0;
    for (int n = 3; n <= n6; ++n) {
      auto sn = share(symmetric_group(n));
      auto emb = dihedral_in_symmetric(n);
      MnMemo memo;
      for (const auto& lambda : partitions_of(n)) {
        auto chi = ClassFunction<Permutation>::from(sn, [&](const Permutation& p) {
          return CyclotomicInteger(mn_character(lambda, cycle_type(p), memo).convert_to<std::int64_t>());
        });
        for (const auto& rho : dihedral_irreps(n)) {
          auto r = frobenius_check(emb.character(rho), chi);
          if (!r.equal) return CheckOutcome{false, rho.label() + " vs " + lambda.to_string()};
          ++pairs;
        }
      }
    }
    return CheckOutcome{true, detail::range_text("n", 3, n6) + ", " + std::to_string(pairs) + " pairs"};
  }));
  out.push_back(detail::run_check("rep-ops", "Frobenius reciprocity over subgroups of D_n", [&] {
    int pairs = 0;
    for (int n = 3; n <= n10; ++n) {
      auto g = share(dihedral_group(n));
      auto irreps = dihedral_irreps(n);
      for (const auto& s : subgroup_catalog(n)) {
        auto h = subgroup_view(g, s);
        std::vector<ClassFunction<DihedralElement>> psis{trivial_character(h)};
        for (const auto& rho : irreps) psis.push_back(irrep_character(rho, h));
        for (const auto& psi : psis)
          for (const auto& rho : irreps) {
            if (!frobenius_check(psi, irrep_character(rho, g)).equal) return CheckOutcome{false, s.name()};
            ++pairs;
          }
      }
    }
    return CheckOutcome{true, detail::range_text("n", 3, n10) + ", " + std::to_string(pairs) + " pairs"};
  }));
  out.push_back(detail::run_check("rep-ops", "induced trivial character has the index at e", [&] {
    for (int n = 3; n <= n10; ++n) {
      auto g = share(dihedral_group(n));
      for (const auto& s : subgroup_catalog(n)) {
        auto ind = induce_character(trivial_character(subgroup_view(g, s)), g);
        if (!(ind.at_identity() == CyclotomicInteger(static_cast<std::int64_t>(s.index()))))
          return CheckOutcome{false, s.name()};
      }
    }
    for (int n = 3; n <= n6; ++n) {
      auto sn = share(symmetric_group(n));
      auto ind = induce_character(trivial_character(dihedral_in_symmetric(n).image), sn);
      auto index = factorial(static_cast<unsigned>(n)) / (2 * n);
      if (!(ind.at_identity() == CyclotomicInteger(index.convert_to<std::int64_t>())))
        return CheckOutcome{false, "D_n in S_n, n=" + std::to_string(n)};
    }
    return CheckOutcome{true, "subgroups of D_n for " + detail::range_text("n", 3, n10) + "; D_n in S_n for " +
                                  detail::range_text("n", 3, n6)};
  }));
  out.push_back(detail::run_check("rep-ops", "trivial multiplicities weighted by dimension give the index", [&] {
    for (int n = 3; n <= n10; ++n) {
      auto g = share(dihedral_group(n));
      for (const auto& s : subgroup_catalog(n)) {
        auto h = subgroup_view(g, s);
        Rational total = 0;
        for (const auto& rho : dihedral_irreps(n))
          total += Rational(rho.dimension()) * inner_product(irrep_character(rho, h), trivial_character(h));
        if (total != Rational(static_cast<long long>(s.index()))) return CheckOutcome{false, s.name()};
      }
    }
    return CheckOutcome{true, detail::range_text("n", 3, n10)};
  }));
  out.push_back(detail::run_check("rep-ops", "tensor norms multiply", [&] {
    int pairs = 0;
    for (int m = 3; m <= 6; ++m)
      for (int n = 3; n <= 6; ++n) {
        auto gm = share(dihedral_group(m));
        auto gn = share(dihedral_group(n));
        auto prod = share(direct_product(*gm, *gn));
        std::vector<ClassFunction<DihedralElement>> am, an;
        for (const auto& r : dihedral_irreps(m)) am.push_back(irrep_character(r, gm));
        for (const auto& r : dihedral_irreps(n)) an.push_back(irrep_character(r, gn));
        am.push_back(regular_character(gm));
        for (const auto& a : am)
          for (const auto& b : an) {
            auto t = tensor_character(a, b, prod);
            if (inner_product(t, t) != inner_product(a, a) * inner_product(b, b)) return CheckOutcome{false, "m,n"};
            ++pairs;
          }
      }
    return CheckOutcome{true, "m, n in 3..6, " + std::to_string(pairs) + " pairs"};
  }));
  return out;
}

// ---------------------------------------------------------------------------
// sampling
// ---------------------------------------------------------------------------

inline std::vector<InvariantResult> verify_sampling(const VerifyOptions& opt) {
  std::vector<InvariantResult> out;
  const int n16 = std::min(16, std::max(opt.max_n * 2, 3));
  const int n24 = std::min(24, std::max(opt.max_n * 2, 3));
  out.push_back(detail::run_check("sampling", "statevector equals label probability", [&] {
    double worst = 0;
    int cases = 0;
    for (int n = 3; n <= n16; ++n)
      for (const auto& s : subgroup_catalog(n)) {
        auto sv = dihedral_statevector(n, s, DihedralElement::identity(n));
        auto lp = dihedral_label_distribution(n, s);
        if (sv.distribution.probabilities != lp.probabilities) return CheckOutcome{false, s.name()};
        worst = std::max(worst, sv.max_float_deviation);
        ++cases;
      }
    return CheckOutcome{worst < kFloatTolerance, detail::range_text("n", 3, n16) + ", " + std::to_string(cases) +
                                                     " subgroups, float deviation " + detail::sci(worst)};
  }));
  out.push_back(detail::run_check("sampling", "complete-dual distributions sum to 1", [&] {
    for (int n = 3; n <= n16; ++n)
      for (const auto& s : subgroup_catalog(n))
        if (!dihedral_label_distribution(n, s).normalized()) return CheckOutcome{false, s.name()};
    for (int n = 3; n <= std::min(8, opt.max_n); ++n)
      if (!cycle_auto_distribution(n, CycleAutoMode::Ambient).distribution.normalized())
        return CheckOutcome{false, "ambient n=" + std::to_string(n)};
    for (int h = 1; h <= 6; ++h) {
      auto gap = gi_gap(h);
      if (!gap.p.normalized() || !gap.q.normalized()) return CheckOutcome{false, "gi_gap 2n=" + std::to_string(2 * h)};
    }
    return CheckOutcome{true, "dihedral subgroups n <= " + std::to_string(n16) + ", ambient view, GI distributions"};
  }));
  out.push_back(detail::run_check("sampling", "cycle automorphism: exact zero off the trivial irrep", [&] {
    for (int n = 3; n <= 64; ++n) {
      auto d = cycle_auto_distribution(n);
      for (std::size_t i = 0; i < d.distribution.size(); ++i) {
        bool trivial = d.distribution.labels[i] == "trivial";
        if (trivial != !d.character_sums[i].is_zero()) return CheckOutcome{false, "n=" + std::to_string(n)};
        if (!trivial && d.distribution.probabilities[i] != 0) return CheckOutcome{false, "n=" + std::to_string(n)};
      }
      if (d.distribution.at("trivial") != d.expected_total) return CheckOutcome{false, "trivial n=" + std::to_string(n)};
    }
    return CheckOutcome{true, "n in 3..64"};
  }));
  out.push_back(detail::run_check("sampling", "GI gap is non-increasing", [&] {
    Rational prev = 2;
    std::string trail;
    for (int h = 1; h <= 6; ++h) {
      auto tv = gi_gap(h).tv;
      trail += (h > 1 ? ", " : "") + to_string(tv);
      if (tv > prev) return CheckOutcome{false, trail};
      prev = tv;
    }
    return CheckOutcome{true, "tv for 2n = 2..12: " + trail};
  }));
  out.push_back(detail::run_check("sampling", "statevector is independent of the coset representative", [&] {
    int cases = 0;
    for (int n = 3; n <= n24; ++n) {
      auto g = share(dihedral_group(n));
      auto dual = dihedral_dual(n);
      for (const auto& s : subgroup_catalog(n)) {
        auto h = subgroup_view(g, s);
        auto base = statevector_weak_sampling(g, dual, h, DihedralElement::identity(n)).distribution.probabilities;
        for (const auto& c : g->elements()) {
          if (statevector_weak_sampling(g, dual, h, c).distribution.probabilities != base)
            return CheckOutcome{false, s.name() + " at " + c.to_string()};
          ++cases;
        }
      }
    }
    return CheckOutcome{true, detail::range_text("n", 3, n24) + ", " + std::to_string(cases) + " cosets"};
  }));
  return out;
}

// ---------------------------------------------------------------------------
// graphs
// ---------------------------------------------------------------------------

/// Graphs used for the reduction and promise checks: every labeled graph on
/// up to `max_vertices` vertices.
inline std::vector<Graph> small_graph_corpus(int max_vertices) {
  std::vector<Graph> out;
  for (int v = 1; v <= max_vertices; ++v)
    for (auto& g : all_labeled_graphs(v)) out.push_back(std::move(g));
  return out;
}

inline std::vector<InvariantResult> verify_graphs(const VerifyOptions& opt) {
  std::vector<InvariantResult> out;
  std::mt19937_64 rng(opt.seed + 2);
  const int v6 = std::min(6, opt.max_n);
  out.push_back(detail::run_check("graphs", "Aut(C_n) is D_n", [&] {
    for (int n = 3; n <= 8; ++n) {
      auto aut = brute_force_aut(cycle_graph(n));
      std::set<Permutation> el(aut.elements.begin(), aut.elements.end());
      if (aut.order() != static_cast<std::size_t>(2 * n)) return CheckOutcome{false, "order n=" + std::to_string(n)};
      if (!el.count(as_permutation(DihedralElement::x(n))) || !el.count(as_permutation(DihedralElement::y(n))))
        return CheckOutcome{false, "x or y missing n=" + std::to_string(n)};
    }
    return CheckOutcome{true, "n in 3..8"};
  }));
  out.push_back(detail::run_check("graphs", "Aut(C_m + C_n) is D_m x D_n", [&] {
    for (int m = 3; m <= 6; ++m)
      for (int n = m + 1; n <= 6; ++n) {
        auto aut = brute_force_aut(cycles_union({m, n}));
        if (aut.order() != static_cast<std::size_t>(4 * m * n)) return CheckOutcome{false, "order"};
        std::set<Permutation> el(aut.elements.begin(), aut.elements.end()), image;
        auto dm = dihedral_elements(m), dn = dihedral_elements(n);
        for (const auto& a : dm)
          for (const auto& b : dn) {
            auto p = oracle::product_embedding(a, b);
            image.insert(p);
            const auto& a2 = dm[(static_cast<std::size_t>(a.rotation) * 7 + 1) % dm.size()];
            const auto& b2 = dn[(static_cast<std::size_t>(b.rotation) * 5 + 3) % dn.size()];
            if (!(oracle::product_embedding(a * a2, b * b2) == p * oracle::product_embedding(a2, b2)))
              return CheckOutcome{false, "embedding is not a homomorphism"};
          }
        if (image != el) return CheckOutcome{false, "image differs from Aut"};
      }
    return CheckOutcome{true, "3 <= m < n <= 6"};
  }));
  out.push_back(detail::run_check("graphs", "GA-to-GI reduction agrees with |Aut| > 1", [&] {
    std::size_t count = 0;
    for (const auto& g : small_graph_corpus(v6)) {
      bool nontrivial = brute_force_aut(g).order() > 1;
      if (ga_gi_turing_reduction(g).accepted != nontrivial) return CheckOutcome{false, g.canonical_edge_string()};
      ++count;
    }
    return CheckOutcome{true, std::to_string(count) + " labeled graphs on <= " + std::to_string(v6) + " vertices"};
  }));
  out.push_back(detail::run_check("graphs", "graph oracle satisfies the hidden subgroup promise", [&] {
    std::size_t count = 0;
    for (int v = 1; v <= v6; ++v)
      for (const auto& g : graph_isomorphism_classes(v)) {
        auto inst = hsp_instance_from_graph(g);
        auto pc = inst.verify_promise();
        if (!pc.holds || pc.distinct_labels != pc.index) return CheckOutcome{false, g.canonical_edge_string()};
        ++count;
      }
    return CheckOutcome{true, std::to_string(count) + " isomorphism classes on <= " + std::to_string(v6) + " vertices"};
  }));
  out.push_back(detail::run_check("graphs", "brute-force GI is an equivalence relation", [&] {
    std::vector<Graph> corpus;
    for (int t = 0; t < 24; ++t) {
      int v = 3 + static_cast<int>(rng() % 4);
      Graph g(v);
      for (int a = 1; a <= v; ++a)
        for (int b = a + 1; b <= v; ++b)
          if (rng() % 2) g.add_edge(a, b);
      corpus.push_back(g);
      corpus.push_back(g.permuted(detail::random_permutation(static_cast<std::size_t>(v), rng)));
    }
    const std::size_t k = corpus.size();
    std::vector<std::vector<char>> iso(k, std::vector<char>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        iso[i][j] = brute_force_gi(corpus[i], corpus[j]);
        if (iso[i][j] != oracle::isomorphic_by_all_bijections(corpus[i], corpus[j]))
          return CheckOutcome{false, "disagrees with naive bijection search"};
      }
    for (std::size_t i = 0; i < k; ++i) {
      if (!iso[i][i]) return CheckOutcome{false, "not reflexive"};
      if (i % 2 == 0 && !iso[i][i + 1]) return CheckOutcome{false, "relabeling not detected"};
      for (std::size_t j = 0; j < k; ++j) {
        if (iso[i][j] != iso[j][i]) return CheckOutcome{false, "not symmetric"};
        for (std::size_t l = 0; l < k; ++l)
          if (iso[i][j] && iso[j][l] && !iso[i][l]) return CheckOutcome{false, "not transitive"};
      }
    }
    return CheckOutcome{true, std::to_string(k) + " graphs, all pairs and triples"};
  }));
  return out;
}

// ---------------------------------------------------------------------------
// product-reps
// ---------------------------------------------------------------------------

inline std::vector<InvariantResult> verify_product_reps(const VerifyOptions& opt) {
  std::vector<InvariantResult> out;
  std::mt19937_64 rng(opt.seed + 3);
  const int m10 = std::min(10, std::max(opt.max_n, 4));
  out.push_back(detail::run_check("product-reps", "catalog characters are traces of Kronecker products", [&] {
    long long evaluations = 0;
    for (int m = 4; m <= m10; m += 2)
      for (int n = 4; n <= m10; n += 2)
        for (int km = 1; km <= (m - 2) / 2; ++km)
          for (int kn = 1; kn <= (n - 2) / 2; ++kn) {
            auto cat = product_catalog(m, n, km, kn);
            auto dm = dihedral_elements(m), dn = dihedral_elements(n);
            for (int t = 0; t < 500; ++t) {
              const auto& a = dm[rng() % dm.size()];
              const auto& b = dn[rng() % dn.size()];
              // slots sharing an underlying irrep share this trace
              std::map<std::pair<std::string, std::string>, CyclotomicInteger> traces;
              for (const auto& rho : cat) {
                auto key = std::pair{rho.factor_m.irrep.label(), rho.factor_n.irrep.label()};
                auto it = traces.find(key);
                if (it == traces.end())
                  it = traces.emplace(key, oracle::kron(rho.factor_m.irrep.matrix(a), rho.factor_n.irrep.matrix(b)).trace())
                           .first;
                if (!(catalog_character(rho, {a, b}) == it->second)) return CheckOutcome{false, rho.label()};
                ++evaluations;
              }
            }
          }
    return CheckOutcome{true, "even m, n <= " + std::to_string(m10) + ", all k, 500 pairs each, " +
                                  std::to_string(evaluations) + " evaluations"};
  }));
  out.push_back(detail::run_check("product-reps", "zero-character set matches the printed list", [&] {
    std::set<int> expect{7, 8, 15, 16, 23, 24, 31, 32, 39, 40};
    for (int i = 47; i <= 64; ++i) expect.insert(i);
    auto got = zero_character_set(6, 6);
    return CheckOutcome{got == expect, "m = n = 6, " + std::to_string(got.size()) + " indices"};
  }));
  out.push_back(detail::run_check("product-reps", "catalog entries have unit norm", [&] {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 4}, {6, 6}, {4, 6}, {3, 4}}) {
      auto g = dihedral_product_group(m, n);
      for (const auto& rho : product_catalog(m, n)) {
        auto chi = product_character(rho.factor_m.irrep, rho.factor_n.irrep, g);
        if (inner_product(chi, chi) != 1) return CheckOutcome{false, rho.label()};
      }
    }
    return CheckOutcome{true, "(m, n) in {(4,4), (6,6), (4,6), (3,4)}"};
  }));
  out.push_back(detail::run_check("product-reps", "product character table is row-orthogonal", [&] {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 6}, {3, 5}, {6, 6}}) {
      auto g = dihedral_product_group(m, n);
      const auto& classes = g->conjugacy_classes();
      auto irreps = product_irreps(m, n);
      if (irreps.size() != classes.size()) return CheckOutcome{false, "irrep count != class count"};
      std::vector<std::vector<CyclotomicInteger>> table;
      for (const auto& p : irreps) {
        std::vector<CyclotomicInteger> row;
        for (const auto& cls : classes) {
          const auto& e = g->element(cls.front());
          row.push_back(p.a.character(e.first) * p.b.character(e.second));
        }
        table.push_back(std::move(row));
      }
      for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table.size(); ++j) {
          CyclotomicInteger s = 0;
          for (std::size_t c = 0; c < classes.size(); ++c)
            s += CyclotomicInteger(static_cast<std::int64_t>(classes[c].size())) * table[i][c] * table[j][c].conj();
          auto expect = CyclotomicInteger(i == j ? static_cast<std::int64_t>(g->order()) : 0);
          if (!(s == expect)) return CheckOutcome{false, irreps[i].label() + " vs " + irreps[j].label()};
        }
    }
    return CheckOutcome{true, "(m, n) in {(4,6), (3,5), (6,6)}"};
  }));
  return out;
}

inline std::vector<InvariantResult> verify_all(const VerifyOptions& opt = {}) {
  std::vector<InvariantResult> all;
  for (auto* fn : {&verify_core, &verify_symmetric, &verify_dihedral, &verify_rep_ops, &verify_sampling,
                   &verify_graphs, &verify_product_reps}) {
    auto part = fn(opt);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace hsplab
