#pragma once

// Output documents for the CLI: one JSON envelope per command kind,
// plus CSV and Markdown renderings.  Serialization is byte-stable for
// a fixed tool version: key order is fixed, everything is integers or
// bare labels, newlines are LF.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "atlas/checks.hpp"
#include "atlas/config.hpp"
#include "atlas/errors.hpp"
#include "atlas/lattice.hpp"
#include "atlas/lines.hpp"
#include "atlas/monodromy.hpp"
#include "atlas/version.hpp"
#include "atlas/weyl.hpp"

namespace atlas {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, md };

struct OutputDocument {
  std::string kind;
  Json payload;
  std::string csv;
  std::string md;
};

namespace detail {

inline Json coords_json(const LatticeVector& v) {
  Json arr = Json::array();
  for (int i = 0; i < 7; ++i) arr.push_back(v[i]);
  return arr;
}

inline std::string coords_csv(const LatticeVector& v) {
  std::string s;
  for (int i = 0; i < 7; ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string cycles_string(const RootPerm& p) {
  std::string s;
  for (const auto& cyc : p.cycles()) {
    s += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(cyc[k]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace detail

inline Json document_meta() {
  Json meta;
  meta["tool"] = kToolName;
  meta["version"] = kToolVersion;
  meta["canonical_order"] =
      "roots: lexicographic on (e0..e6); lines: E1..E6, F12..F56, G1..G6";
  return meta;
}

inline std::string render(const OutputDocument& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return doc.csv;
    case OutputFormat::md: return doc.md;
    case OutputFormat::json: break;
  }
  Json envelope;
  envelope["kind"] = doc.kind;
  envelope["meta"] = document_meta();
  envelope["payload"] = doc.payload;
  return envelope.dump(2) + "\n";
}

// --- roots -----------------------------------------------------------------

inline OutputDocument doc_roots() {
  OutputDocument doc;
  doc.kind = "roots";
  Json arr = Json::array();
  std::string csv, md = "| # | e0 | e1 | e2 | e3 | e4 | e5 | e6 |\n|---|----|----|----|----|----|----|----|\n";
  int idx = 0;
  for (const Root& r : root_system().roots()) {
    arr.push_back(detail::coords_json(r.vec()));
    csv += detail::coords_csv(r.vec()) + "\n";
    md += "| " + std::to_string(idx++) + " |";
    for (int i = 0; i < 7; ++i) md += " " + std::to_string(r.vec()[i]) + " |";
    md += "\n";
  }
  doc.payload["count"] = 72;
  doc.payload["roots"] = std::move(arr);
  doc.csv = std::move(csv);
  doc.md = std::move(md);
  return doc;
}

// --- lines -----------------------------------------------------------------

inline OutputDocument doc_lines() {
  OutputDocument doc;
  doc.kind = "lines";
  Json lines = Json::array();
  std::string csv, md = "| label | class | meets |\n|-------|-------|-------|\n";
  const auto& g = incidence_graph();
  for (int k = 0; k < 27; ++k) {
    const Line& l = lines27()[static_cast<std::size_t>(k)];
    Json entry;
    entry["label"] = l.label();
    entry["class"] = detail::coords_json(l.cls);
    lines.push_back(std::move(entry));
    csv += l.label() + "," + detail::coords_csv(l.cls) + "\n";
    std::string meets;
    for (int m = 0; m < 27; ++m)
      if (g.adj[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]) {
        if (!meets.empty()) meets += ' ';
        meets += lines27()[static_cast<std::size_t>(m)].label();
      }
    md += "| " + l.label() + " | " + to_string(l.cls) + " | " + meets + " |\n";
  }
  Json incidence = Json::array();
  for (int a = 0; a < 27; ++a) {
    Json row = Json::array();
    for (int b = 0; b < 27; ++b) row.push_back(g.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    incidence.push_back(std::move(row));
  }
  doc.payload["count"] = 27;
  doc.payload["lines"] = std::move(lines);
  doc.payload["incidence"] = std::move(incidence);
  doc.csv = std::move(csv);
  doc.md = std::move(md);
  return doc;
}

// --- decompose ---------------------------------------------------------------

inline OutputDocument doc_decompose(const LatticeVector& alpha) {
  OutputDocument doc;
  doc.kind = "decompose";
  const auto pairs = decompose_root(alpha);  // throws NotARoot when invalid
  doc.payload["root"] = detail::coords_json(alpha);
  Json arr = Json::array();
  std::string csv, md = "| L1 | L2 |\n|----|----|\n";
  for (const auto& [a, b] : pairs) {
    const std::string la = lines27()[static_cast<std::size_t>(a)].label();
    const std::string lb = lines27()[static_cast<std::size_t>(b)].label();
    Json entry;
    entry["l1"] = la;
    entry["l2"] = lb;
    arr.push_back(std::move(entry));
    csv += la + "," + lb + "\n";
    md += "| " + la + " | " + lb + " |\n";
  }
  doc.payload["count"] = pairs.size();
  doc.payload["pairs"] = std::move(arr);
  doc.csv = std::move(csv);
  doc.md = std::move(md);
  return doc;
}

// --- orbits -----------------------------------------------------------------

inline OutputDocument doc_orbits_from_roots(const std::vector<Root>& generators,
                                            const Json& input_desc) {
  OutputDocument doc;
  doc.kind = "orbits";
  const auto blocks = orbits(generators);
  const ClosedSubsystem sub = close_subsystem(generators);
  const auto& rs = root_system();

  std::array<bool, 72> effective{};
  for (const Root& r : sub.roots) effective[static_cast<std::size_t>(rs.checked_index(r.vec()))] = true;
  int inside = 0;
  for (const auto& block : blocks) {
    bool in = true;
    for (int i : block)
      if (!effective[static_cast<std::size_t>(i)]) {
        in = false;
        break;
      }
    inside += in;
  }

  doc.payload["input"] = input_desc;
  doc.payload["label"] = sub.label.str();
  Json gens = Json::array();
  for (const Root& r : generators) gens.push_back(detail::coords_json(r.vec()));
  doc.payload["generators"] = std::move(gens);
  doc.payload["group_order"] = ReflectionGroup::generate(generators).order();
  doc.payload["orbit_count"] = blocks.size();

  std::map<std::size_t, int> sizes;
  for (const auto& b : blocks) sizes[b.size()] += 1;
  Json size_multiset = Json::array();
  for (const auto& [size, n] : sizes) {
    Json entry;
    entry["size"] = size;
    entry["blocks"] = n;
    size_multiset.push_back(std::move(entry));
  }
  doc.payload["size_multiset"] = std::move(size_multiset);
  doc.payload["effective"] = Json{{"inside", inside}, {"outside", static_cast<int>(blocks.size()) - inside}};

  Json jblocks = Json::array();
  std::string csv;
  for (const auto& b : blocks) {
    Json row = Json::array();
    std::string line;
    for (int i : b) {
      row.push_back(i);
      if (!line.empty()) line += ',';
      line += std::to_string(i);
    }
    jblocks.push_back(std::move(row));
    csv += line + "\n";
  }
  doc.payload["blocks"] = std::move(jblocks);
  doc.csv = std::move(csv);

  std::string md = "Orbits of W(R_e) on the 72 roots\n\n";
  md += "- label: " + sub.label.str() + "\n";
  md += "- orbit count: " + std::to_string(blocks.size()) + "\n";
  md += "- effective split: " + std::to_string(inside) + " inside R_e, " +
        std::to_string(static_cast<int>(blocks.size()) - inside) + " outside\n\n";
  md += "| block | size | roots |\n|-------|------|-------|\n";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    std::string members;
    for (int i : blocks[k]) {
      if (!members.empty()) members += ' ';
      members += std::to_string(i);
    }
    md += "| " + std::to_string(k) + " | " + std::to_string(blocks[k].size()) + " | " + members + " |\n";
  }
  doc.md = std::move(md);
  return doc;
}

inline OutputDocument doc_orbits_from_config(const SubsystemConfig& config) {
  Json input;
  input["config"] = config.str();
  return doc_orbits_from_roots(realize(config), input);
}

// --- table1 -----------------------------------------------------------------

struct TableDiff {
  bool checked = false;
  std::vector<std::string> mismatches;
};

inline OutputDocument doc_table1(bool diff, TableDiff* diff_out = nullptr) {
  OutputDocument doc;
  doc.kind = "table1";
  const auto rows = table1();

  Json jrows = Json::array();
  std::string csv;
  std::string md = "| R_e | Type | # |\n|-----|------|---|\n";
  for (const auto& row : rows) {
    Json entry;
    entry["config"] = row.config.str();
    entry["type"] = row.bruce_wall_type;
    entry["count"] = row.count;
    jrows.push_back(std::move(entry));
    csv += row.config.str() + "," + row.bruce_wall_type + "," + std::to_string(row.count) + "\n";
    md += "| " + row.config.str() + " | " + row.bruce_wall_type + " | " + std::to_string(row.count) + " |\n";
  }
  doc.payload["rows"] = std::move(jrows);

  if (diff) {
    TableDiff d;
    d.checked = true;
    const auto& published = table1_published();
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (rows[k].count != published[k].count)
        d.mismatches.push_back(rows[k].config.str() + ": computed " + std::to_string(rows[k].count) +
                               ", published " + std::to_string(published[k].count));
    Json jd;
    jd["match"] = d.mismatches.empty();
    jd["mismatches"] = d.mismatches;
    doc.payload["diff"] = std::move(jd);
    if (diff_out) *diff_out = std::move(d);
  }
  doc.csv = std::move(csv);
  doc.md = std::move(md);
  return doc;
}

// --- eckardt ----------------------------------------------------------------

inline OutputDocument doc_eckardt() {
  OutputDocument doc;
  doc.kind = "eckardt";
  const auto free3 = eckardt_search();
  const auto model = eckardt_line_model();
  if (free3.empty()) throw InternalError("eckardt: no free order-3 element found");

  const WeylElement& rep = free3.front();
  doc.payload["free_order3_count"] = free3.size();
  doc.payload["representative"] = Json{{"cycles", detail::cycles_string(rep.perm())}};

  const auto blocks = rep.perm().cycles();
  Json jblocks = Json::array();
  std::string csv;
  for (const auto& b : blocks) {
    Json row = Json::array();
    std::string line;
    for (int i : b) {
      row.push_back(i);
      if (!line.empty()) line += ',';
      line += std::to_string(i);
    }
    jblocks.push_back(std::move(row));
    csv += line + "\n";
  }
  doc.payload["orbit_count"] = blocks.size();
  doc.payload["orbits"] = std::move(jblocks);

  const bool in_set = std::any_of(free3.begin(), free3.end(), [&](const WeylElement& w) {
    return w.perm() == model.induced.perm();
  });
  Json lm;
  lm["flexes"] = 9;
  lm["sheets"] = 3;
  lm["degree_10_check"] = true;  // enforced during model construction
  lm["induced_order"] = model.induced.order();
  lm["induced_fixes_h"] = model.induced.apply(hyperplane_class()) == hyperplane_class();
  lm["induced_free_on_roots"] = model.induced.perm().fixed_points() == 0;
  lm["induced_orbits"] = model.induced.perm().cycles().size();
  lm["in_search_set"] = in_set;
  Json lperm = Json::array();
  for (int s = 0; s < 27; ++s) lperm.push_back(model.induced_line_perm[static_cast<std::size_t>(s)]);
  lm["line_permutation"] = std::move(lperm);
  lm["induced_cycles"] = detail::cycles_string(model.induced.perm());
  doc.payload["line_model"] = std::move(lm);

  std::string md = "Free Z3 monodromy on the root system\n\n";
  md += "- free order-3 elements: " + std::to_string(free3.size()) + "\n";
  md += "- orbits of the representative: " + std::to_string(blocks.size()) + " (all of size 3)\n";
  md += "- representative cycles: " + detail::cycles_string(rep.perm()) + "\n";
  md += "- line model: 9 flexes x 3 sheets, induced element of order " +
        std::to_string(model.induced.order()) + ", " +
        std::to_string(model.induced.perm().cycles().size()) + " root orbits, in search set: " +
        (in_set ? "yes" : "no") + "\n";
  doc.csv = std::move(csv);
  doc.md = std::move(md);
  return doc;
}

// --- check report -------------------------------------------------------------

inline OutputDocument doc_check(const std::vector<CheckResult>& results) {
  OutputDocument doc;
  doc.kind = "check-report";
  bool all = true;
  Json arr = Json::array();
  std::string csv;
  std::string md = "| check | result | detail |\n|-------|--------|--------|\n";
  for (const auto& r : results) {
    all = all && r.pass;
    Json entry;
    entry["id"] = r.id;
    entry["name"] = r.name;
    entry["pass"] = r.pass;
    entry["detail"] = r.detail;
    arr.push_back(std::move(entry));
    csv += r.id + "," + (r.pass ? "1" : "0") + "\n";
    md += "| " + r.name + " | " + (r.pass ? "pass" : "FAIL") + " | " + r.detail + " |\n";
  }
  doc.payload["all_pass"] = all;
  doc.payload["checks"] = std::move(arr);
  doc.csv = std::move(csv);
  doc.md = std::move(md);
  return doc;
}

}  // namespace atlas
