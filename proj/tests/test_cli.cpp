#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef ATLAS_CLI_PATH
#error "ATLAS_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ATLAS_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.stdout_text.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

}  // namespace

TEST_CASE("cli: roots") {
  const auto csv = run_cli("roots --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(count_lines(csv.stdout_text) == 72);
  CHECK(csv.stdout_text.substr(0, csv.stdout_text.find('\n')) == "-2,1,1,1,1,1,1");

  const auto json = run_cli("roots");
  CHECK(json.exit_code == 0);
  CHECK(json.stdout_text.find("\"kind\": \"roots\"") != std::string::npos);
}

TEST_CASE("cli: identical argv gives byte-identical stdout") {
  const auto a = run_cli("table1");
  const auto b = run_cli("table1");
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);

  const auto c = run_cli("orbits --config A1");
  const auto d = run_cli("orbits --config A1");
  CHECK(c.stdout_text == d.stdout_text);
}

TEST_CASE("cli: decompose") {
  const auto ok = run_cli("decompose 2,-1,-1,-1,-1,-1,-1 --format csv");
  CHECK(ok.exit_code == 0);
  CHECK(ok.stdout_text == "G1,E1\nG2,E2\nG3,E3\nG4,E4\nG5,E5\nG6,E6\n");

  const auto six = run_cli("decompose 0,1,-1,0,0,0,0 --format csv");
  CHECK(six.exit_code == 0);
  CHECK(count_lines(six.stdout_text) == 6);

  // h itself is not a root: domain error, diagnostic includes pairings
  const auto bad = run_cli("decompose 3,-1,-1,-1,-1,-1,-1");
  CHECK(bad.exit_code == 3);
  CHECK(bad.stdout_text.find("NotARoot") != std::string::npos);
  CHECK(bad.stdout_text.find("\"self_pairing\": 3") != std::string::npos);
  CHECK(bad.stdout_text.find("\"h_pairing\": 3") != std::string::npos);

  // parse failure
  CHECK(run_cli("decompose 1,2,3").exit_code == 2);
  CHECK(run_cli("decompose a,b,c,d,e,f,g").exit_code == 2);
}

TEST_CASE("cli: eckardt") {
  const auto r = run_cli("eckardt");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"orbit_count\": 24") != std::string::npos);
  CHECK(r.stdout_text.find("\"induced_order\": 3") != std::string::npos);
  CHECK(r.stdout_text.find("\"in_search_set\": true") != std::string::npos);

  const auto csv = run_cli("eckardt --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(count_lines(csv.stdout_text) == 24);
}

TEST_CASE("cli: orbits") {
  const auto a1 = run_cli("orbits --config A1");
  CHECK(a1.exit_code == 0);
  CHECK(a1.stdout_text.find("\"orbit_count\": 51") != std::string::npos);

  const auto roots = run_cli("orbits --roots \"2,-1,-1,-1,-1,-1,-1\"");
  CHECK(roots.exit_code == 0);
  CHECK(roots.stdout_text.find("\"orbit_count\": 51") != std::string::npos);

  const auto multi = run_cli("orbits --roots \"0,1,-1,0,0,0,0;0,0,0,1,-1,0,0\"");
  CHECK(multi.exit_code == 0);
  CHECK(multi.stdout_text.find("\"label\": \"2A1\"") != std::string::npos);
  CHECK(multi.stdout_text.find("\"orbit_count\": 36") != std::string::npos);

  CHECK(run_cli("orbits --config A2+A3").exit_code == 3);   // NotEmbeddable
  CHECK(run_cli("orbits --config 4A2").exit_code == 3);     // RankTooLarge
  CHECK(run_cli("orbits --config B17").exit_code == 2);     // parse error
  CHECK(run_cli("orbits").exit_code == 2);                  // neither input
  CHECK(run_cli("orbits --roots \"3,-1,-1,-1,-1,-1,-1\"").exit_code == 3);  // h is not a root
}

TEST_CASE("cli: table1") {
  const auto md = run_cli("table1 --format md");
  CHECK(md.exit_code == 0);
  CHECK(md.stdout_text.rfind("| R_e | Type | # |", 0) == 0);
  CHECK(count_lines(md.stdout_text) == 23);  // header + separator + 21 rows

  const auto diff = run_cli("table1 --diff");
  CHECK(diff.exit_code == 0);
  CHECK(diff.stdout_text.find("\"match\": true") != std::string::npos);

  const auto csv = run_cli("table1 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(count_lines(csv.stdout_text) == 21);
  CHECK(csv.stdout_text.find("A5,XI,5\n") != std::string::npos);
}

TEST_CASE("cli: usage errors") {
  CHECK(run_cli("roots --format yaml").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli: --out writes exactly what stdout would carry") {
  const std::string path = "cli_out_test.json";
  std::remove(path.c_str());
  const auto direct = run_cli("roots");
  const auto r = run_cli("roots --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.empty());
  std::string file_text;
  {
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) file_text.append(buf.data(), n);
    fclose(f);
  }
  CHECK(file_text == direct.stdout_text);
  std::remove(path.c_str());
}
