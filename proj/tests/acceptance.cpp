// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hsplab/hsplab.hpp"
#include "hsplab/oracles.hpp"

using namespace hsplab;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Verdict()> body;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

// ---------------------------------------------------------------------------

Verdict cycle_automorphism_failure() {
  for (int n = 3; n <= 16; ++n) {
    auto d = cycle_auto_distribution(n);
    const Rational expect = make_rational(BigInt(2 * n), factorial(static_cast<unsigned>(n)));
    for (std::size_t i = 0; i < d.distribution.size(); ++i) {
      const auto& label = d.distribution.labels[i];
      const auto& p = d.distribution.probabilities[i];
      if (label == "trivial") {
        if (p != expect) return fail("trivial at n=" + std::to_string(n) + " is " + to_string(p));
        continue;
      }
      if (p != 0) return fail(label + " nonzero at n=" + std::to_string(n));
      // direct character sum over D_n, independent of the distribution code
      CyclotomicInteger s = 0;
      for (const auto& e : dihedral_elements(n)) s += dihedral_character(dihedral_irreps(n)[i], e);
      if (!s.is_zero()) return fail("character sum of " + label + " is not canonical zero");
    }
  }
  return {true, "n = 3..16, every non-trivial irrep exactly 0, trivial exactly 2n/n!"};
}

Verdict statevector_equivalence() {
  double worst = 0;
  std::size_t cases = 0;
  for (int n = 3; n <= 12; ++n)
    for (const auto& s : subgroup_catalog(n)) {
      auto sv = dihedral_statevector(n, s, DihedralElement::identity(n));
      auto lp = dihedral_label_distribution(n, s);
      if (sv.distribution.labels != lp.labels) return fail("label order differs");
      for (std::size_t i = 0; i < lp.size(); ++i) {
        if (sv.distribution.probabilities[i] != lp.probabilities[i])
          return fail(s.name() + " " + lp.labels[i] + " exact mismatch");
        double dev = std::abs(sv.float_probabilities[i] - lp.probabilities[i].convert_to<double>());
        worst = std::max(worst, dev);
      }
      ++cases;
    }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu subgroups over n = 3..12, exact equality, max float deviation %.2e", cases, worst);
  return {worst <= 1e-10, buf};
}

Verdict gi_gap_exactness() {
  // tv from signed border-strip counts, a separate route to the same characters
  auto tv_by_strips = [](int half) {
    const int n = 2 * half;
    const auto sigma_type = fixed_point_free_involution_type(half);
    Rational tv = 0;
    for (const auto& lambda : partitions_of(n)) {
      BigInt chi = 0;
      for (const auto& f : border_strip_fillings(lambda, sigma_type)) chi += f.sign();
      tv += make_rational(oracle::syt_count(lambda.parts()) * abs(chi), factorial(static_cast<unsigned>(n)));
    }
    return tv;
  };
  if (tv_by_strips(1) != 1 || gi_gap(1).tv != 1) return fail("tv at 2n=2 is not 1");
  if (tv_by_strips(2) != make_rational(1, 2) || gi_gap(2).tv != make_rational(1, 2)) return fail("tv at 2n=4 is not 1/2");
  Rational prev = 2;
  std::string trail;
  for (int h = 1; h <= 6; ++h) {
    auto g = gi_gap(h);
    if (g.p.total() != 1 || g.q.total() != 1) return fail("sum p or q != 1 at 2n=" + std::to_string(2 * h));
    if (g.tv > prev) return fail("tv increased at 2n=" + std::to_string(2 * h));
    if (h <= 4 && g.tv != tv_by_strips(h)) return fail("tv disagrees with border-strip route at 2n=" + std::to_string(2 * h));
    if (!gi_gap_bound_report(h).within_bound) return fail("character exceeds bound at 2n=" + std::to_string(2 * h));
    prev = g.tv;
    trail += (h > 1 ? ", " : "") + to_string(g.tv);
  }
  return {true, "tv over 2n = 2..12: " + trail + "; all within bound"};
}

Verdict symmetric_integrity() {
  for (int n = 1; n <= 9; ++n) {
    auto t = character_table(n);
    const auto k = t.rows.size();
    const BigInt order = factorial(static_cast<unsigned>(n));
    BigInt dims = 0;
    for (std::size_t a = 0; a < k; ++a) {
      dims += t.entries[a][0] * t.entries[a][0];
      for (std::size_t b = 0; b < k; ++b) {
        BigInt row = 0, col = 0;
        for (std::size_t c = 0; c < k; ++c) {
          row += t.class_sizes[c] * t.entries[a][c] * t.entries[b][c];
          col += t.entries[c][a] * t.entries[c][b];
        }
        if (row != (a == b ? order : BigInt(0))) return fail("row orthogonality n=" + std::to_string(n));
        if (col * t.class_sizes[a] != (a == b ? order : BigInt(0))) return fail("column orthogonality n=" + std::to_string(n));
      }
    }
    if (dims != order) return fail("sum of d^2 != n! at n=" + std::to_string(n));
  }
  std::mt19937_64 rng(2024);
  double worst = 0;
  for (int n = 1; n <= 6; ++n) {
    auto all = all_permutations(static_cast<std::size_t>(n));
    for (const auto& lambda : partitions_of(n)) {
      YoungOrthogonalRep rep(lambda, n);
      for (int t = 0; t < 200; ++t) {
        const auto& g = all[rng() % all.size()];
        worst = std::max(worst, std::abs(rep.character(g) - mn_character(lambda, cycle_type(g)).convert_to<double>()));
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "tables n <= 9 orthogonal; traces n <= 6 max deviation %.2e", worst);
  return {worst <= 1e-9, buf};
}

Verdict product_catalog_check() {
  auto cat = product_catalog(6, 6);
  if (cat.size() != 64) return fail("catalog size " + std::to_string(cat.size()));
  auto hist = dimension_histogram(cat);
  if (hist != std::map<int, int>{{1, 16}, {2, 32}, {4, 16}}) return fail("dimension histogram");
  std::set<int> expect{7, 8, 15, 16, 23, 24, 31, 32, 39, 40};
  for (int i = 47; i <= 64; ++i) expect.insert(i);
  if (zero_character_set(6, 6) != expect) return fail("zero-character index set");
  std::mt19937_64 rng(66);
  for (const auto& rho : cat)
    for (int t = 0; t < 500; ++t) {
      auto g = sample_typed_pair(rho, rng);
      if (!closed_form_matches(rho, g)) return fail("closed form disagrees at index " + std::to_string(rho.index));
      auto direct = oracle::kron(rho.factor_m.irrep.matrix(g.first), rho.factor_n.irrep.matrix(g.second)).trace();
      if (!(direct == catalog_character(rho, g))) return fail("trace mismatch at index " + std::to_string(rho.index));
    }
  auto mism = compare_with_printed_table(6, 6);
  std::string note = mism.empty() ? "" : "; printed table differs only in sign-varying tag at index";
  for (const auto& m : mism) note += " " + std::to_string(m.index);
  return {true, "64 entries, histogram 16/32/16, 28 zero indices, 32000 exact evaluations" + note};
}

Verdict graph_ground_truth() {
  for (int n = 3; n <= 8; ++n)
    if (brute_force_aut(cycle_graph(n)).order() != static_cast<std::size_t>(2 * n))
      return fail("|Aut(C_" + std::to_string(n) + ")|");
  for (int m = 3; m <= 6; ++m)
    for (int n = m + 1; n <= 6; ++n)
      if (brute_force_aut(cycles_union({m, n})).order() != static_cast<std::size_t>(4 * m * n))
        return fail("|Aut(C_" + std::to_string(m) + " + C_" + std::to_string(n) + ")|");
  std::size_t graphs = 0, accepted = 0;
  for (int v = 1; v <= 6; ++v)
    for (const auto& g : all_labeled_graphs(v)) {
      bool nontrivial = brute_force_aut(g).order() > 1;
      bool acc = ga_gi_turing_reduction(g).accepted;
      if (acc != nontrivial) return fail("reduction disagrees on " + g.canonical_edge_string());
      ++graphs;
      accepted += acc;
    }
  return {true, "Aut orders verified; reduction matches on all " + std::to_string(graphs) +
                    " labeled graphs with <= 6 vertices (" + std::to_string(graphs - accepted) + " rigid)"};
}

Verdict frobenius_reciprocity() {
  std::size_t checks = 0;
  for (int n = 3; n <= 6; ++n) {
    auto sn = share(symmetric_group(n));
    auto emb = dihedral_in_symmetric(n);
    std::vector<ClassFunction<Permutation>> chis;
    for (const auto& lambda : partitions_of(n))
      chis.push_back(ClassFunction<Permutation>::from(sn, [&](const Permutation& p) {
        return CyclotomicInteger(mn_character(lambda, cycle_type(p)).convert_to<std::int64_t>());
      }));
    for (const auto& s : subgroup_catalog(n)) {
      std::vector<Permutation> members;
      for (const auto& e : s.elements) members.push_back(as_permutation(e));
      std::sort(members.begin(), members.end());
      auto h = share(sn->subgroup(members));
      for (const auto& rho : dihedral_irreps(n)) {
        auto psi = restrict(emb.character(rho), h);
        for (const auto& chi : chis) {
          if (!frobenius_check(psi, chi).equal) return fail("S_" + std::to_string(n) + " " + s.name());
          ++checks;
        }
      }
    }
  }
  for (int n = 3; n <= 10; ++n) {
    auto d = share(dihedral_group(n));
    auto cat = subgroup_catalog(n);
    auto irreps = dihedral_irreps(n);
    for (const auto& big : cat)
      for (const auto& small : cat) {
        if (!std::includes(big.elements.begin(), big.elements.end(), small.elements.begin(), small.elements.end())) continue;
        auto g = subgroup_view(d, big);
        auto h = subgroup_view(d, small);
        for (const auto& a : irreps)
          for (const auto& b : irreps) {
            if (!frobenius_check(irrep_character(a, h), irrep_character(b, g)).equal)
              return fail(small.name() + " in " + big.name());
            ++checks;
          }
      }
  }
  return {true, std::to_string(checks) + " exact checks: subgroups of D_n in S_n (n <= 6), subgroup pairs of D_n (n <= 10)"};
}

Verdict normalization_identity() {
  std::size_t complete = 0;
  for (int n = 3; n <= 12; ++n)
    for (const auto& s : subgroup_catalog(n)) {
      auto d = dihedral_label_distribution(n, s);
      auto sv = dihedral_statevector(n, s, DihedralElement::identity(n)).distribution;
      if (d.total() != 1 || sv.total() != 1 || !d.complete_dual) return fail("subgroup " + s.name());
      complete += 2;
    }
  for (int n = 3; n <= 8; ++n) {
    auto d = cycle_auto_distribution(n, CycleAutoMode::Ambient).distribution;
    if (d.total() != 1 || !d.complete_dual) return fail("ambient view n=" + std::to_string(n));
    ++complete;
  }
  for (int h = 1; h <= 6; ++h) {
    auto g = gi_gap(h);
    if (g.p.total() != 1 || g.q.total() != 1) return fail("gi distributions");
    complete += 2;
  }
  std::size_t flagged = 0;
  for (int n = 3; n <= 16; ++n) {
    auto d = cycle_auto_distribution(n).distribution;
    const Rational expect = make_rational(BigInt(2 * n), factorial(static_cast<unsigned>(n)));
    if (d.total() != expect) return fail("paper view total at n=" + std::to_string(n));
    if (d.complete_dual) return fail("paper view marked complete");
    if (d.normalized() != (expect == 1)) return fail("normalization flag at n=" + std::to_string(n));
    flagged += !d.normalized();
  }
  auto prod = product_sampling_failure_report(3, 4);
  if (prod.total != make_rational(1, 105) || prod.normalized) return fail("product view total");
  return {true, std::to_string(complete) + " complete-dual distributions sum to 1; D_n-label view sums to 2n/n!, flagged for " +
                    std::to_string(flagged) + " of 14 n (n = 3 is exactly 1)"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cycle-automorphism sampling failure", 5, cycle_automorphism_failure},
      {2, "statevector oracle equivalence", 60, statevector_equivalence},
      {3, "GI gap exactness", 120, gi_gap_exactness},
      {4, "symmetric character integrity", 90, symmetric_integrity},
      {5, "D_6 x D_6 catalog", 30, product_catalog_check},
      {6, "graph-side ground truth", 120, graph_ground_truth},
      {7, "Frobenius reciprocity", 60, frobenius_reciprocity},
      {8, "normalization identity", 5, normalization_identity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= c.budget_seconds;
    bool ok = v.ok && in_budget;
    failures += !ok;
    std::printf("%s  [%d] %s: %s (%.2fs, budget %.0fs%s)\n", ok ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str(), secs,
                c.budget_seconds, in_budget ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
