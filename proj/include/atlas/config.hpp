#pragma once

// ADE configuration labels: multisets of simply-laced factors such as
// "2A1+A3".  Canonical form sorts factors by family (A < D < E), then
// rank, and merges repeats into a multiplicity prefix.  The labels
// "∅", "I" and the empty string all denote the empty configuration.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/errors.hpp"

namespace atlas {

struct AdeFactor {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 1;

  friend bool operator==(const AdeFactor&, const AdeFactor&) = default;
  friend auto operator<=>(const AdeFactor&, const AdeFactor&) = default;

  std::string str() const { return family + std::to_string(rank); }

  // Number of roots of the factor: A_n has n(n+1), D_n has 2n(n-1),
  // E6/E7/E8 have 72/126/240.
  std::size_t root_count() const {
    const auto n = static_cast<std::size_t>(rank);
    switch (family) {
      case 'A': return n * (n + 1);
      case 'D': return 2 * n * (n - 1);
      default: return rank == 6 ? 72u : rank == 7 ? 126u : 240u;
    }
  }

  // Order of the factor's Weyl group: (n+1)! for A_n, 2^(n-1) n! for D_n.
  std::uint64_t weyl_order() const {
    auto fact = [](int n) {
      std::uint64_t f = 1;
      for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
      return f;
    };
    switch (family) {
      case 'A': return fact(rank + 1);
      case 'D': return (std::uint64_t{1} << (rank - 1)) * fact(rank);
      default:
        return rank == 6 ? 51840u : rank == 7 ? 2903040u : 696729600u;
    }
  }
};

class SubsystemConfig {
 public:
  SubsystemConfig() = default;

  explicit SubsystemConfig(std::vector<AdeFactor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
  }

  // Grammar: terms (\d*)(A|D|E)(\d+) joined by '+', in any order.
  static SubsystemConfig parse(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '"' || s.front() == '\'')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '"' || s.back() == '\'')) s.remove_suffix(1);
    if (s.empty() || s == "I" || s == "∅") return SubsystemConfig{};

    std::vector<AdeFactor> factors;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t plus = s.find('+', pos);
      std::string_view term = s.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
      parse_term(term, factors);
      if (plus == std::string_view::npos) break;
      pos = plus + 1;
      if (pos == s.size()) throw ConfigParseError("trailing '+' in configuration label");
    }
    return SubsystemConfig{std::move(factors)};
  }

  const std::vector<AdeFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  int factor_count() const { return static_cast<int>(factors_.size()); }

  int total_rank() const {
    int r = 0;
    for (const auto& f : factors_) r += f.rank;
    return r;
  }

  std::size_t root_count() const {
    std::size_t n = 0;
    for (const auto& f : factors_) n += f.root_count();
    return n;
  }

  std::uint64_t weyl_order() const {
    std::uint64_t n = 1;
    for (const auto& f : factors_) n *= f.weyl_order();
    return n;
  }

  std::string str() const {
    if (factors_.empty()) return "∅";
    std::string out;
    std::size_t k = 0;
    while (k < factors_.size()) {
      std::size_t run = k;
      while (run < factors_.size() && factors_[run] == factors_[k]) ++run;
      if (!out.empty()) out += '+';
      if (run - k > 1) out += std::to_string(run - k);
      out += factors_[k].str();
      k = run;
    }
    return out;
  }

  friend bool operator==(const SubsystemConfig&, const SubsystemConfig&) = default;
  friend auto operator<=>(const SubsystemConfig&, const SubsystemConfig&) = default;

 private:
  static void parse_term(std::string_view term, std::vector<AdeFactor>& out) {
    while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
    while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
    if (term.empty()) throw ConfigParseError("empty term in configuration label");

    std::size_t p = 0;
    std::size_t mult = 0;
    while (p < term.size() && term[p] >= '0' && term[p] <= '9') mult = mult * 10 + static_cast<std::size_t>(term[p++] - '0');
    if (p == term.size()) throw ConfigParseError("missing family letter in term");
    if (p == 0) mult = 1;
    if (mult == 0) throw ConfigParseError("zero multiplicity in term");

    const char family = term[p++];
    if (family != 'A' && family != 'D' && family != 'E')
      throw ConfigParseError(std::string("unknown family '") + family + "' (expected A, D or E)");

    if (p == term.size()) throw ConfigParseError("missing rank in term");
    int rank = 0;
    while (p < term.size() && term[p] >= '0' && term[p] <= '9') rank = rank * 10 + (term[p++] - '0');
    if (p != term.size()) throw ConfigParseError("trailing characters in term");

    if (rank < 1 || rank > 8) throw ConfigParseError("rank out of range in term");
    if (family == 'D' && rank < 4)
      throw ConfigParseError("D" + std::to_string(rank) + " is not a distinct type (use A/2A1 labels)");
    if (family == 'E' && rank < 6) throw ConfigParseError("E" + std::to_string(rank) + " is not a Lie type");

    for (std::size_t k = 0; k < mult; ++k) out.push_back(AdeFactor{family, rank});
  }

  std::vector<AdeFactor> factors_;  // kept sorted
};

}  // namespace atlas
