// Command-line surface: stable serializations of the root census, the
// 27 lines, root decompositions, orbit counts per ADE configuration,
// the Eckardt Z3 data, and the invariant suite.
//
// Exit codes: 0 success, 1 invariant failure, 2 usage/parse error,
// 3 domain error (NotARoot/NotEmbeddable/...), 4 table diff mismatch,
// 5 internal verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atlas/checks.hpp"
#include "atlas/config.hpp"
#include "atlas/errors.hpp"
#include "atlas/io.hpp"
#include "atlas/lattice.hpp"
#include "atlas/version.hpp"

namespace {

std::optional<atlas::OutputFormat> parse_format(const std::string& s) {
  if (s == "json") return atlas::OutputFormat::json;
  if (s == "csv") return atlas::OutputFormat::csv;
  if (s == "md") return atlas::OutputFormat::md;
  return std::nullopt;
}

// Exactly 7 comma-separated signed decimal integers; optional
// surrounding quotes, stray spaces tolerated.
std::optional<atlas::LatticeVector> parse_vector(std::string s) {
  auto strip = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '"' || t.front() == '\'')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '"' || t.back() == '\'')) t.pop_back();
  };
  strip(s);
  atlas::LatticeVector v{};
  int field = 0;
  std::size_t pos = 0;
  while (field < 7) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    strip(tok);
    if (tok.empty()) return std::nullopt;
    try {
      std::size_t used = 0;
      v[field] = std::stoll(tok, &used);
      if (used != tok.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    ++field;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (field != 7) return std::nullopt;
  return v;
}

int emit(const atlas::OutputDocument& doc, atlas::OutputFormat format, const std::string& out_path) {
  const std::string text = atlas::render(doc, format);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "atlas: cannot open " << out_path << " for writing\n";
    return 2;
  }
  f << text;
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"exact combinatorics of the 27 lines and the E6 root system on a cubic surface"};
  app.set_version_flag("--version", std::string(atlas::kToolVersion));
  app.require_subcommand(1);

  std::string format_s = "json";
  std::string out_path;
  bool diff = false;
  std::string root_arg;
  std::string config_arg;
  std::vector<std::string> roots_arg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_s, "output format: json, csv or md");
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* cmd_roots = app.add_subcommand("roots", "the 72 roots in canonical order");
  add_common(cmd_roots);

  CLI::App* cmd_lines = app.add_subcommand("lines", "the 27 lines and their incidence matrix");
  add_common(cmd_lines);

  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "write a root as a difference of skew lines (6 ways)");
  cmd_decompose->add_option("root", root_arg, "7 comma-separated integers")->required();
  add_common(cmd_decompose);

  CLI::App* cmd_orbits =
      app.add_subcommand("orbits", "orbit partition of the 72 roots under W(R_e)");
  cmd_orbits->add_option("--config", config_arg, "ADE configuration label, e.g. A1 or 2A1+A2");
  cmd_orbits->add_option("--roots", roots_arg,
                         "generator roots, each 7 comma-separated integers (';' separates several)");
  add_common(cmd_orbits);

  CLI::App* cmd_table1 = app.add_subcommand("table1", "orbit counts for all 21 ADE configurations");
  cmd_table1->add_flag("--diff", diff, "compare against the published counts; nonzero exit on mismatch");
  add_common(cmd_table1);

  CLI::App* cmd_eckardt = app.add_subcommand("eckardt", "free order-3 monodromy and the 27-line sheet model");
  add_common(cmd_eckardt);

  CLI::App* cmd_check = app.add_subcommand("check", "run the full invariant suite");
  add_common(cmd_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto format = parse_format(format_s);
  if (!format) {
    std::cerr << "atlas: unknown format '" << format_s << "' (expected json, csv or md)\n";
    return 2;
  }

  if (cmd_roots->parsed()) return emit(atlas::doc_roots(), *format, out_path);
  if (cmd_lines->parsed()) return emit(atlas::doc_lines(), *format, out_path);

  if (cmd_decompose->parsed()) {
    const auto v = parse_vector(root_arg);
    if (!v) {
      std::cerr << "atlas: expected 7 comma-separated integers, got '" << root_arg << "'\n";
      return 2;
    }
    if (!atlas::is_root(*v)) {
      atlas::OutputDocument doc;
      doc.kind = "decompose";
      doc.payload["root"] = atlas::detail::coords_json(*v);
      doc.payload["error"] =
          atlas::Json{{"type", "NotARoot"},
                      {"self_pairing", atlas::pairing(*v, *v)},
                      {"h_pairing", atlas::pairing(*v, atlas::hyperplane_class())}};
      doc.csv = doc.md = "NotARoot\n";
      emit(doc, *format, out_path);
      std::cerr << "atlas: " << atlas::to_string(*v) << " is not a root (v.v = "
                << atlas::pairing(*v, *v) << ", v.h = "
                << atlas::pairing(*v, atlas::hyperplane_class()) << ")\n";
      return 3;
    }
    return emit(atlas::doc_decompose(*v), *format, out_path);
  }

  if (cmd_orbits->parsed()) {
    const bool have_config = cmd_orbits->count("--config") > 0;
    const bool have_roots = cmd_orbits->count("--roots") > 0;
    if (have_config == have_roots) {
      std::cerr << "atlas: orbits needs exactly one of --config or --roots\n";
      return 2;
    }
    if (have_config) {
      const auto config = atlas::SubsystemConfig::parse(config_arg);
      return emit(atlas::doc_orbits_from_config(config), *format, out_path);
    }
    std::vector<atlas::Root> gens;
    for (const std::string& chunk : roots_arg) {
      std::size_t pos = 0;
      while (pos <= chunk.size()) {
        std::size_t semi = chunk.find(';', pos);
        const std::string one =
            chunk.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!one.empty()) {
          const auto v = parse_vector(one);
          if (!v) {
            std::cerr << "atlas: expected 7 comma-separated integers, got '" << one << "'\n";
            return 2;
          }
          gens.emplace_back(*v);  // throws NotARoot -> exit 3
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
      }
    }
    atlas::Json input;
    input["roots"] = atlas::Json::array();
    for (const auto& r : gens) input["roots"].push_back(atlas::detail::coords_json(r.vec()));
    return emit(atlas::doc_orbits_from_roots(gens, input), *format, out_path);
  }

  if (cmd_table1->parsed()) {
    atlas::TableDiff table_diff;
    const auto doc = atlas::doc_table1(diff, &table_diff);
    const int rc = emit(doc, *format, out_path);
    if (rc != 0) return rc;
    if (diff && !table_diff.mismatches.empty()) {
      for (const auto& m : table_diff.mismatches) std::cerr << "atlas: table1 mismatch: " << m << "\n";
      return 4;
    }
    return 0;
  }

  if (cmd_eckardt->parsed()) return emit(atlas::doc_eckardt(), *format, out_path);

  if (cmd_check->parsed()) {
    const auto results = atlas::run_invariant_suite();
    const int rc = emit(atlas::doc_check(results), *format, out_path);
    if (rc != 0) return rc;
    for (const auto& r : results)
      if (!r.pass) {
        std::cerr << "atlas: invariant failed: " << r.name << " (" << r.detail << ")\n";
        return 1;
      }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const atlas::ConfigParseError& e) {
    std::cerr << "atlas: " << e.what() << "\n";
    return 2;
  } catch (const atlas::InternalError& e) {
    std::cerr << "atlas: internal verification failure: " << e.what() << "\n";
    return 5;
  } catch (const atlas::Error& e) {
    std::cerr << "atlas: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "atlas: unexpected error: " << e.what() << "\n";
    return 5;
  }
}
