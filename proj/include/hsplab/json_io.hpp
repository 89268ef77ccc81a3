#pragma once

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsplab/cyclotomic.hpp"
#include "hsplab/dihedral.hpp"
#include "hsplab/graph.hpp"
#include "hsplab/matrix.hpp"
#include "hsplab/numeric.hpp"
#include "hsplab/product_reps.hpp"
#include "hsplab/sampling.hpp"
#include "hsplab/symmetric.hpp"

namespace hsplab {

using Json = nlohmann::json;  // std::map-backed, so keys come out sorted

/// "num/den", or the bare integer when the denominator is one.
inline Json rational_json(const Rational& q) { return q.str(); }

/// Small integers as JSON numbers, larger ones as decimal strings.
inline Json bigint_json(const BigInt& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
    return z.convert_to<long long>();
  return z.str();
}

inline Json cyclotomic_json(const CyclotomicInteger& z) {
  auto c = z.to_complex();
  auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
  return Json{{"order", z.order()}, {"coeffs", z.coeffs()}, {"approx", {clean(c.real()), clean(c.imag())}}};
}

inline Json matrix_json(const CycMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(cyclotomic_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json partition_labels(const std::vector<Partition>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline Json character_table_json(const CharacterTable& t) {
  Json entries = Json::array();
  for (const auto& row : t.entries) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(bigint_json(v));
    entries.push_back(std::move(r));
  }
  Json sizes = Json::array();
  for (const auto& s : t.class_sizes) sizes.push_back(bigint_json(s));
  return Json{{"n", t.n},
              {"rows", partition_labels(t.rows)},
              {"cols", partition_labels(t.cols)},
              {"entries", std::move(entries)},
              {"class_sizes", std::move(sizes)}};
}

/// Aligned plain-text table, irreps down the side and classes across.
inline std::string character_table_text(const CharacterTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"chi \\ class"};
  for (const auto& c : t.cols) header.push_back(c.to_string());
  cells.push_back(header);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::string> line{t.rows[r].to_string()};
    for (const auto& v : t.entries[r]) line.push_back(v.str());
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      if (i == 0) out << std::left << std::setw(static_cast<int>(width[i])) << line[i];
      else out << std::right << std::setw(static_cast<int>(width[i])) << line[i];
    }
    out << '\n';
  }
  return out.str();
}

inline Json distribution_json(const SamplingDistribution& d) {
  Json probs = Json::array();
  for (const auto& p : d.probabilities) probs.push_back(rational_json(p));
  return Json{{"labels", d.labels},
              {"probabilities", std::move(probs)},
              {"total", rational_json(d.total())},
              {"normalized", d.normalized()},
              {"complete_dual", d.complete_dual}};
}

inline Json dihedral_irrep_json(const DihedralIrrep& rho) {
  const int n = rho.n;
  Json chars = Json::array();
  for (const auto& e : dihedral_elements(n))
    chars.push_back(Json{{"element", e.to_string()}, {"value", cyclotomic_json(rho.character(e))}});
  return Json{{"label", rho.label()},
              {"dimension", rho.dimension()},
              {"k", rho.k},
              {"irreducible", rho.irreducible},
              {"matrices",
               {{"x", matrix_json(rho.matrix(DihedralElement::x(n)))},
                {"y", matrix_json(rho.matrix(DihedralElement::y(n)))}}},
              {"characters", std::move(chars)}};
}

inline Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

inline Json permutation_list_json(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_cycle_string());
  return out;
}

inline Json catalog_entry_json(const ProductIrrep& rho) {
  return Json{{"index", rho.index},
              {"label", rho.label()},
              {"dimension", rho.dimension()},
              {"factor_m", rho.factor_m.label()},
              {"factor_n", rho.factor_n.label()},
              {"element_types", {to_string(rho.factor_m.type), to_string(rho.factor_n.type)}},
              {"closed_form", closed_form(rho).tag()}};
}

/// Reproducible envelope for every CLI command.
struct CommandResult {
  std::string command;
  Json parameters = Json::object();
  Json payload = Json::object();
  bool exact = true;

  Json to_json() const {
    return Json{{"command", command}, {"parameters", parameters}, {"payload", payload}, {"exact", exact}};
  }
  std::string dump() const { return to_json().dump(2) + "\n"; }
};

}  // namespace hsplab
