#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsplab/dihedral.hpp"
#include "hsplab/graph.hpp"
#include "hsplab/json_io.hpp"
#include "hsplab/product_reps.hpp"
#include "hsplab/sampling.hpp"
#include "hsplab/symmetric.hpp"
#include "hsplab/verify.hpp"
#include "hsplab/young.hpp"

namespace hsplab::cli {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kUsage = 2 };

struct Outcome {
  int exit_code = kOk;
  std::string out;  // stdout
  std::string err;  // stderr
};

namespace detail {

inline Graph load_graph(const std::string& file, const std::vector<int>& cycles) {
  if (!file.empty() && !cycles.empty()) throw CLI::ValidationError("give either --file or --cycles, not both");
  if (!cycles.empty()) return cycles_union(cycles);
  if (file.empty()) throw CLI::ValidationError("a graph is required: --file PATH or --cycles a,b,c");
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open graph file '" + file + "'");
  return read_graph(in);
}

inline Json dihedral_irreps_payload(int n) {
  Json irreps = Json::array();
  for (const auto& rho : dihedral_irreps(n)) irreps.push_back(dihedral_irrep_json(rho));
  Json elements = Json::array();
  for (const auto& e : dihedral_elements(n)) elements.push_back(e.to_string());
  return Json{{"n", n},
              {"order", 2 * n},
              {"class_count", conjugacy_class_count(n)},
              {"elements", std::move(elements)},
              {"irreps", std::move(irreps)}};
}

/// Float statevector over S_n for the ambient view, using orthogonal-form matrices.
inline std::vector<double> ambient_float_probabilities(int n) {
  require_cap("statevector over S_n: n", n, kYoungOrthogonalCap);
  auto emb = dihedral_in_symmetric(n);
  const double g_order = factorial(static_cast<unsigned>(n)).convert_to<double>();
  const double h_order = static_cast<double>(emb.image->order());
  std::vector<double> out;
  for (const auto& lambda : partitions_of(n)) {
    YoungOrthogonalRep rep(lambda, n);
    RealMatrix m(rep.dimension());
    for (const auto& h : emb.image->elements()) {
      auto r = rep(h);
      for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] += r.a[i];
    }
    double norm = 0;
    for (double v : m.a) norm += v * v;
    out.push_back(static_cast<double>(rep.dimension()) * norm / (g_order * h_order));
  }
  return out;
}

inline Outcome cycle_auto(int n, const std::string& mode_name, bool oracle) {
  const auto mode = mode_name == "ambient" ? CycleAutoMode::Ambient : CycleAutoMode::Paper;
  auto d = cycle_auto_distribution(n, mode);
  CommandResult r{"sample cycle-auto", {{"n", n}, {"mode", mode_name}, {"oracle", oracle}}, {}, true};
  Json probs = Json::object();
  for (std::size_t i = 0; i < d.distribution.size(); ++i)
    probs[d.distribution.labels[i]] = rational_json(d.distribution.probabilities[i]);
  r.payload = {{"probabilities", probs},
               {"distribution", distribution_json(d.distribution)},
               {"expected_total", rational_json(d.expected_total)}};
  if (mode == CycleAutoMode::Paper) {
    Json sums = Json::object();
    for (std::size_t i = 0; i < d.distribution.size(); ++i)
      sums[d.distribution.labels[i]] = cyclotomic_json(d.character_sums[i]);
    r.payload["character_sums"] = std::move(sums);
    r.payload["note"] = d.distribution.normalized()
                            ? "distribution is normalized"
                            : "labels are D_n irreps only; the total is 2n/n!, not 1";
  }
  bool ok = true;
  if (oracle) {
    if (mode == CycleAutoMode::Paper) {
      // Coset state of the hidden D_n inside D_n itself: only the trivial block survives.
      auto full = parse_dihedral_subgroup(n, "full");
      auto sv = dihedral_statevector(n, full, DihedralElement::identity(n));
      const Rational scale = make_rational(BigInt(2 * n), factorial(static_cast<unsigned>(n)));
      Json rows = Json::array();
      for (std::size_t i = 0; i < sv.distribution.size(); ++i) {
        bool agrees = sv.distribution.probabilities[i] * scale == d.distribution.probabilities[i];
        ok = ok && agrees;
        rows.push_back({{"label", sv.distribution.labels[i]},
                        {"statevector", rational_json(sv.distribution.probabilities[i])},
                        {"scaled", rational_json(sv.distribution.probabilities[i] * scale)},
                        {"agrees", agrees}});
      }
      r.payload["oracle"] = {{"entries", rows}, {"max_float_deviation", sv.max_float_deviation}, {"agrees", ok}};
    } else {
      auto fl = ambient_float_probabilities(n);
      double worst = 0;
      for (std::size_t i = 0; i < fl.size(); ++i)
        worst = std::max(worst, std::abs(fl[i] - d.distribution.probabilities[i].convert_to<double>()));
      ok = worst <= kFloatTolerance;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3e", worst);
      r.payload["oracle"] = {{"max_float_deviation", buf}, {"agrees", ok}};
    }
  }
  return {ok ? kOk : kVerificationFailure, r.dump(), ok ? "" : "statevector cross-check disagrees\n"};
}

inline Outcome sample_hsp(const std::string& group, int n, const std::string& spec) {
  if (group != "dihedral") throw CLI::ValidationError("--group: only 'dihedral' is supported");
  auto s = parse_dihedral_subgroup(n, spec);
  auto lp = dihedral_label_distribution(n, s);
  auto sv = dihedral_statevector(n, s, DihedralElement::identity(n));
  auto promise = dihedral_hsp_instance(n, s).verify_promise();
  bool agree = lp.probabilities == sv.distribution.probabilities && sv.max_float_deviation <= kFloatTolerance;
  Json rows = Json::array();
  for (std::size_t i = 0; i < lp.size(); ++i)
    rows.push_back({{"label", lp.labels[i]},
                    {"label_probability", rational_json(lp.probabilities[i])},
                    {"statevector", rational_json(sv.distribution.probabilities[i])}});
  Json elements = Json::array();
  for (const auto& e : s.elements) elements.push_back(e.to_string());
  CommandResult r{"sample hsp", {{"group", group}, {"n", n}, {"subgroup", spec}}, {}, true};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", sv.max_float_deviation);
  r.payload = {{"subgroup", {{"name", s.name()}, {"spec", s.spec()}, {"order", s.order()}, {"elements", elements}}},
               {"promise", {{"holds", promise.holds}, {"labels", promise.distinct_labels}, {"index", promise.index}}},
               {"entries", rows},
               {"label_distribution", distribution_json(lp)},
               {"statevector_distribution", distribution_json(sv.distribution)},
               {"max_float_deviation", buf},
               {"agree", agree}};
  return {agree ? kOk : kVerificationFailure, r.dump(), agree ? "" : "label probability and statevector disagree\n"};
}

inline Outcome gi_gap_cmd(int half_n) {
  auto gap = gi_gap(half_n);
  auto bound = gi_gap_bound_report(half_n);
  CommandResult r{"gi-gap", {{"half_n", half_n}}, {}, true};
  std::ostringstream bound_text;
  bound_text.precision(6);
  bound_text << bound.bound;
  r.payload = {{"sigma", gap.sigma.to_cycle_string()},
               {"p", distribution_json(gap.p)},
               {"q", distribution_json(gap.q)},
               {"tv", rational_json(gap.tv)},
               {"bound",
                {{"max_abs_character", bigint_json(bound.max_abs_character)},
                 {"bound_squared", bound.bound_squared.str()},
                 {"bound_approx", bound_text.str()},
                 {"within_bound", bound.within_bound}}}};
  return {kOk, r.dump(), ""};
}

inline Outcome product_catalog_cmd(int m, int n, int km, int kn) {
  auto cat = product_catalog(m, n, km, kn);
  Json entries = Json::array();
  for (const auto& rho : cat) entries.push_back(catalog_entry_json(rho));
  Json hist = Json::object();
  for (auto [dim, count] : dimension_histogram(cat)) hist[std::to_string(dim)] = count;
  auto zeros = zero_character_set(m, n, km, kn);
  CommandResult r{"product catalog", {{"m", m}, {"n", n}, {"k_m", km}, {"k_n", kn}}, {}, true};
  r.payload = {{"size", cat.size()},
               {"dimension_histogram", hist},
               {"zero_character_indices", std::vector<int>(zeros.begin(), zeros.end())},
               {"entries", entries}};
  if (m % 2 == 0 && n % 2 == 0) {
    Json mism = Json::array();
    for (const auto& t : compare_with_printed_table(m, n, km, kn))
      mism.push_back({{"index", t.index}, {"printed", t.printed}, {"computed", t.computed}});
    r.payload["printed_table_mismatches"] = mism;
  }
  return {kOk, r.dump(), ""};
}

inline Outcome product_failure_cmd(int m, int n) {
  auto rep = product_sampling_failure_report(m, n);
  Json entries = Json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"index", e.index},
                       {"label", e.label},
                       {"dimension", e.dimension},
                       {"multiplicity", rational_json(e.multiplicity)},
                       {"probability", rational_json(e.probability)}});
  CommandResult r{"product failure", {{"m", m}, {"n", n}}, {}, true};
  r.payload = {{"trivial_probability", rational_json(rep.trivial_probability)},
               {"total", rational_json(rep.total)},
               {"normalized", rep.normalized},
               {"entries", entries}};
  return {kOk, r.dump(), ""};
}

inline Outcome graph_aut_cmd(const Graph& g, const Json& params) {
  auto aut = brute_force_aut(g);
  CommandResult r{"graph aut", params, {}, true};
  r.payload = {{"graph", graph_json(g)},
               {"order", aut.order()},
               {"generators", permutation_list_json(aut.generators)},
               {"elements", permutation_list_json(aut.elements)}};
  return {kOk, r.dump(), ""};
}

inline Outcome graph_ga2gi_cmd(const Graph& g, const Json& params) {
  auto red = ga_gi_turing_reduction(g);
  Json transcript = Json::array();
  for (const auto& q : red.transcript) transcript.push_back({{"i", q.i}, {"j", q.j}, {"isomorphic", q.isomorphic}});
  CommandResult r{"graph ga2gi", params, {}, true};
  r.payload = {{"graph", graph_json(g)},
               {"accepted", red.accepted},
               {"nontrivial_automorphism", red.accepted},
               {"queries", red.transcript.size()},
               {"transcript", transcript}};
  return {kOk, r.dump(), ""};
}

inline Outcome graph_family_cmd(int m, int count) {
  auto g = disjoint_cycle_family(m, count);
  CommandResult r{"graph family", {{"m", m}, {"count", count}}, {}, true};
  r.payload = {{"graph", graph_json(g)}, {"text", format_graph(g)}};
  return {kOk, r.dump(), ""};
}

inline const CLI::App* deepest(const CLI::App* app) {
  for (const auto* sub : app->get_subcommands()) return deepest(sub);
  return app;
}

/// Re-runs a few commands and compares the bytes.
inline InvariantResult determinism_check(const std::function<Outcome(const std::vector<std::string>&)>& runner) {
  return hsplab::detail::run_check("cli", "repeated runs are byte-identical", [&] {
    const std::vector<std::vector<std::string>> cmds{{"chartable", "--n", "5"},
                                                     {"sample", "cycle-auto", "--n", "6"},
                                                     {"sample", "hsp", "--group", "dihedral", "--n", "6", "--subgroup", "dihedral:2:1"},
                                                     {"gi-gap", "--half-n", "3"},
                                                     {"product", "catalog", "--m", "6", "--n", "6"},
                                                     {"graph", "aut", "--cycles", "3,4"}};
    for (const auto& c : cmds) {
      auto a = runner(c), b = runner(c);
      if (a.out != b.out || a.exit_code != b.exit_code) return CheckOutcome{false, c.front()};
    }
    return CheckOutcome{true, std::to_string(cmds.size()) + " commands run twice"};
  });
}

inline Outcome verify_cmd(int max_n, bool as_json, const std::function<Outcome(const std::vector<std::string>&)>& runner) {
  VerifyOptions opt;
  opt.max_n = max_n;
  auto results = verify_all(opt);
  results.push_back(determinism_check(runner));
  std::size_t failed = 0;
  std::ostringstream text, err;
  Json rows = Json::array();
  for (const auto& res : results) {
    failed += !res.passed;
    text << (res.passed ? "PASS  " : "FAIL  ") << res.module << ": " << res.name << " (" << res.detail << ")\n";
    rows.push_back({{"module", res.module}, {"name", res.name}, {"passed", res.passed}, {"detail", res.detail}});
    char buf[96];
    std::snprintf(buf, sizeof buf, "%8.3fs  ", res.seconds);
    err << buf << res.module << ": " << res.name << '\n';
  }
  text << results.size() - failed << "/" << results.size() << " invariants passed\n";
  std::string out;
  if (as_json) {
    CommandResult r{"verify all", {{"max_n", max_n}}, {}, true};
    r.payload = {{"results", rows}, {"passed", results.size() - failed}, {"total", results.size()}};
    out = r.dump();
  } else {
    out = text.str();
  }
  return {failed ? kVerificationFailure : kOk, out, err.str()};
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact character theory and Fourier sampling for hidden subgroup problems", "hsplab"};
  app.require_subcommand(1);
  app.fallthrough(false);
  std::function<Outcome()> action;

  int ct_n = 0;
  std::string ct_format = "json";
  auto* ct = app.add_subcommand("chartable", "character table of S_n");
  ct->add_option("--n", ct_n, "degree")->required()->check(CLI::Range(1, 1000));
  ct->add_option("--format", ct_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  ct->callback([&] {
    action = [&] {
      auto t = character_table(ct_n);
      if (ct_format == "text") return Outcome{kOk, character_table_text(t), ""};
      CommandResult r{"chartable", {{"n", ct_n}}, character_table_json(t), true};
      return Outcome{kOk, r.dump(), ""};
    };
  });

  int di_n = 0;
  auto* dih = app.add_subcommand("dihedral", "dihedral group data");
  dih->require_subcommand(1);
  auto* di = dih->add_subcommand("irreps", "irreducible representations of D_n");
  di->add_option("--n", di_n, "polygon size")->required()->check(CLI::Range(3, 1 << 20));
  di->callback([&] {
    action = [&] {
      CommandResult r{"dihedral irreps", {{"n", di_n}}, detail::dihedral_irreps_payload(di_n), true};
      return Outcome{kOk, r.dump(), ""};
    };
  });

  auto* smp = app.add_subcommand("sample", "Fourier sampling distributions");
  smp->require_subcommand(1);
  int ca_n = 0;
  std::string ca_mode = "paper";
  bool ca_oracle = false;
  auto* ca = smp->add_subcommand("cycle-auto", "hidden D_n = Aut(C_n) inside S_n");
  ca->add_option("--n", ca_n, "cycle length")->required()->check(CLI::Range(3, 1 << 20));
  ca->add_option("--mode", ca_mode, "paper or ambient")->check(CLI::IsMember({"paper", "ambient"}));
  ca->add_flag("--oracle", ca_oracle, "cross-check against the statevector");
  ca->callback([&] { action = [&] { return detail::cycle_auto(ca_n, ca_mode, ca_oracle); }; });

  std::string hsp_group = "dihedral", hsp_spec;
  int hsp_n = 0;
  auto* hsp = smp->add_subcommand("hsp", "label distribution for a hidden subgroup");
  hsp->add_option("--group", hsp_group, "ambient group family")->required();
  hsp->add_option("--n", hsp_n, "group parameter")->required()->check(CLI::Range(3, 1 << 20));
  hsp->add_option("--subgroup", hsp_spec, "cyclic:d, dihedral:d:i, trivial, rotations or full")->required();
  hsp->callback([&] { action = [&] { return detail::sample_hsp(hsp_group, hsp_n, hsp_spec); }; });

  int ss_n = 0;
  auto* ss = smp->add_subcommand("strong", "matrix entries of the D_n coset state");
  ss->add_option("--n", ss_n, "polygon size")->required()->check(CLI::Range(3, 1 << 20));
  ss->callback([&] {
    action = [&] {
      Json rows = Json::array();
      for (const auto& e : strong_sampling_note(ss_n))
        rows.push_back({{"label", e.label},
                        {"probability", rational_json(e.probability)},
                        {"entries", e.entry_count},
                        {"zero_entries", e.zero_entries},
                        {"statement", e.statement}});
      CommandResult r{"sample strong", {{"n", ss_n}}, {{"entries", rows}}, true};
      return Outcome{kOk, r.dump(), ""};
    };
  });

  int gg_half = 0;
  auto* gg = app.add_subcommand("gi-gap", "distance between isomorphic and non-isomorphic label distributions");
  gg->add_option("--half-n", gg_half, "half the degree of the symmetric group")->required()->check(CLI::Range(1, 1000));
  gg->callback([&] { action = [&] { return detail::gi_gap_cmd(gg_half); }; });

  auto* prod = app.add_subcommand("product", "irreps of D_m x D_n");
  prod->require_subcommand(1);
  int pc_m = 0, pc_n = 0, pc_km = 1, pc_kn = 1;
  auto* pc = prod->add_subcommand("catalog", "the 64-entry catalog");
  pc->add_option("--m", pc_m, "first factor")->required()->check(CLI::Range(3, 1 << 20));
  pc->add_option("--n", pc_n, "second factor")->required()->check(CLI::Range(3, 1 << 20));
  pc->add_option("--km", pc_km, "frequency of the two-dimensional m-factor")->check(CLI::PositiveNumber);
  pc->add_option("--kn", pc_kn, "frequency of the two-dimensional n-factor")->check(CLI::PositiveNumber);
  pc->callback([&] { action = [&] { return detail::product_catalog_cmd(pc_m, pc_n, pc_km, pc_kn); }; });
  int pf_m = 0, pf_n = 0;
  auto* pf = prod->add_subcommand("failure", "label probabilities for Aut(C_m + C_n) in S_{m+n}");
  pf->add_option("--m", pf_m, "first cycle")->required()->check(CLI::Range(3, 1 << 20));
  pf->add_option("--n", pf_n, "second cycle")->required()->check(CLI::Range(3, 1 << 20));
  pf->callback([&] { action = [&] { return detail::product_failure_cmd(pf_m, pf_n); }; });

  auto* gr = app.add_subcommand("graph", "graph automorphisms and isomorphism");
  gr->require_subcommand(1);
  std::string ga_file;
  std::vector<int> ga_cycles;
  auto* ga = gr->add_subcommand("aut", "automorphism group by exhaustive search");
  ga->add_option("--file", ga_file, "graph file: 'n m' then m edge lines");
  ga->add_option("--cycles", ga_cycles, "disjoint union of cycles")->delimiter(',')->check(CLI::Range(3, 1 << 20));
  ga->callback([&] {
    action = [&] {
      Json params{{"file", ga_file}, {"cycles", ga_cycles}};
      return detail::graph_aut_cmd(detail::load_graph(ga_file, ga_cycles), params);
    };
  });
  std::string gt_file;
  std::vector<int> gt_cycles;
  auto* gt = gr->add_subcommand("ga2gi", "decide a nontrivial automorphism with isomorphism queries");
  gt->add_option("--file", gt_file, "graph file: 'n m' then m edge lines");
  gt->add_option("--cycles", gt_cycles, "disjoint union of cycles")->delimiter(',')->check(CLI::Range(3, 1 << 20));
  gt->callback([&] {
    action = [&] {
      Json params{{"file", gt_file}, {"cycles", gt_cycles}};
      return detail::graph_ga2gi_cmd(detail::load_graph(gt_file, gt_cycles), params);
    };
  });
  int gf_m = 0, gf_count = 0;
  auto* gf = gr->add_subcommand("family", "disjoint copies of C_m");
  gf->add_option("--m", gf_m, "cycle length")->required()->check(CLI::Range(3, 1 << 20));
  gf->add_option("--count", gf_count, "number of cycles, of lengths m, m+1, ...")->required()->check(CLI::Range(1, 1 << 20));
  gf->callback([&] { action = [&] { return detail::graph_family_cmd(gf_m, gf_count); }; });

  auto* ver = app.add_subcommand("verify", "invariant suite");
  ver->require_subcommand(1);
  int va_max = 8;
  bool va_json = false;
  auto* va = ver->add_subcommand("all", "run every invariant");
  va->add_option("--max-n", va_max, "bound for the expensive families")->check(CLI::Range(1, 64));
  va->add_flag("--json", va_json, "JSON report instead of lines");
  va->callback([&] {
    action = [&] { return detail::verify_cmd(va_max, va_json, [](const std::vector<std::string>& a) { return run(a); }); };
  });

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args.front();
    if (!known) return {kUsage, "", "error: unknown subcommand '" + args.front() + "'\n\n" + app.help()};
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kOk, detail::deepest(&app)->help(), ""};
  } catch (const CLI::ParseError& e) {
    return {kUsage, "", std::string("error: ") + e.what() + "\n\n" + detail::deepest(&app)->help()};
  }

  try {
    return action();
  } catch (const CapacityError& e) {
    return {kUsage, "", std::string("capacity error: ") + e.what() + "\n"};
  } catch (const CLI::Error& e) {
    return {kUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kVerificationFailure, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace hsplab::cli
