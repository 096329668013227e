#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string(RSCOVER_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string last_line(const std::string& s) {
  const auto end = s.find_last_not_of('\n');
  const auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - start);
}

}  // namespace

TEST_CASE("bound evaluation") {
  const auto r = cli("bound random-hamming --q 7 --n 6 --M 16807");
  CHECK(r.status == 0);
  CHECK(last_line(r.out).rfind("7,6,16807,0.871936579", 0) == 0);

  const auto snr = cli("bound crs-min-snr --p 7 --mode rate-to-1");
  CHECK(snr.status == 0);
  CHECK(snr.out.find("25.739208802178") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli("--help").status == 0);
  CHECK(cli("").status == 2);
  CHECK(cli("bound").status == 2);
  CHECK(cli("bound random-hamming --q 7 --n 6 --M 49 --no-such-flag 1").status == 2);
  CHECK(cli("bound random-hamming --q 7 --n 6").status == 2);
  CHECK(cli("bound random-hamming --q 7 --n 6 --M 1").status == 2);
  CHECK(cli("bound random-hamming --q 7 --n 6 --M 49 --format xml").status == 2);
  // --tau is a known flag but not an option of this command
  CHECK(cli("bound random-hamming --q 7 --n 6 --M 49 --tau 2").status == 2);
  CHECK(cli("sim exhaustive --q 31 --n 30 --k 6 --trials 1").status == 2);
  CHECK(cli("bound random-hamming --q 7 --n 6 --M 49 --out /nonexistent-dir/x.csv").status == 1);
}

TEST_CASE("JSON output parses") {
  const auto r = cli("bound random-chordal --n 6 --M 7 --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "bound random-chordal");
  CHECK(std::abs(j["results"][0]["value"].get<double>() - 0.777167527593263) < 1e-9);
  CHECK(j["meta"].contains("timestamp"));
}

TEST_CASE("output files and trial logs") {
  const std::string out = "cli_test_out.csv", log = "cli_test_trials.csv";
  const auto r = cli("sim grs-cover --q 7 --n 6 --k 3 --trials 25 --out " + out +
                     " --trial-log " + log);
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream a(out), b(log);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str().rfind("# command=sim grs-cover", 0) == 0);
  std::size_t rows = 0;
  for (char c : sb.str()) rows += c == '\n';
  CHECK(rows == 26);
  std::remove(out.c_str());
  std::remove(log.c_str());
}

TEST_CASE("repro CSV is byte-identical across worker counts") {
  const auto a = cli("repro table1 --trials 60 --seed 3 --workers 1");
  const auto b = cli("repro table1 --trials 60 --seed 3 --workers 4");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  std::size_t data = 0;
  std::stringstream ss(a.out);
  for (std::string line; std::getline(ss, line);) data += !line.empty() && line[0] != '#';
  CHECK(data == 6);  // header plus k = 1..5
}
