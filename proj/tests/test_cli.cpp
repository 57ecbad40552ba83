#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#ifndef LINKFORGE_CLI_PATH
#error "LINKFORGE_CLI_PATH must be defined by the build"
#endif

namespace {

using json = nlohmann::ordered_json;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(LINKFORGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("catalog verb lists the families") {
  CliResult r = run_cli("catalog");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("fig5a") != std::string::npos);
  CHECK(r.output.find("borromean") != std::string::npos);
}

TEST_CASE("invariants verb works on both input sources") {
  CliResult from_catalog = run_cli("invariants --catalog \"unlink(3)\" --k 4");
  CHECK(from_catalog.exit_code == 0);
  CHECK(from_catalog.output.find("all entries vanish") != std::string::npos);

  char path[] = "/tmp/linkforge_cli_test_XXXXXX";
  int fd = mkstemp(path);
  REQUIRE(fd >= 0);
  {
    std::ofstream out(path);
    out << "X(1,3,2,4)\nX(3,1,4,2)\n";
  }
  CliResult from_pd = run_cli(std::string("invariants --pd ") + path + " --k 2");
  CHECK(from_pd.exit_code == 0);
  CHECK(from_pd.output.find("mu(12) = 1") != std::string::npos);
  std::remove(path);
  close(fd);
}

TEST_CASE("bounds on fig5a reports the theorem-4.2 obstruction in json") {
  CliResult r = run_cli(
      "bounds --catalog \"fig5a(m=6,k1=trefoil,k2=trefoil)\" --k 4 --json");
  CHECK(r.exit_code == 0);
  json envelope = json::parse(r.output);
  CHECK(envelope["tool"] == "linkforge");
  CHECK(envelope["command"] == "bounds");
  const auto& result = envelope["result"];
  CHECK(result["bounds"]["lower"] == 3);
  CHECK(result["bounds"]["upper"] == 4);
  bool saw42 = false;
  for (const auto& cert : result["obstructions"]) {
    if (cert["theorem"] == "Thm4.2" && !cert["concluded"].is_null()) {
      CHECK(cert["concluded"]["k"] == 4);
      CHECK(cert["concluded"]["lower"] == 3);
      saw42 = true;
    }
  }
  CHECK(saw42);
}

TEST_CASE("json output is byte-identical across runs") {
  std::string args = "obstructions --catalog \"fig5b(m=6,k=trefoil)\" --json";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  json envelope = json::parse(a.output);
  CHECK(envelope["result"]["implied_lower_bounds"].size() == 2);
}

TEST_CASE("every verb accepts both input sources") {
  for (const char* verb : {"invariants", "bounds", "obstructions", "validate"}) {
    CliResult r = run_cli(std::string(verb) + " --catalog whitehead");
    CAPTURE(verb);
    CHECK(r.exit_code == 0);
  }
  CliResult search = run_cli("search --catalog whitehead --k 3 --budget 1");
  CHECK(search.exit_code == 0);
}

TEST_CASE("input errors exit with code one and a diagnostic") {
  CliResult missing = run_cli("bounds --pd /nonexistent/missing.pd --k 3");
  CHECK(missing.exit_code == 1);
  CHECK(missing.output.find("cannot open") != std::string::npos);

  CliResult both = run_cli("bounds --k 3");
  CHECK(both.exit_code == 1);

  CliResult bad_spec = run_cli("invariants --catalog granny");
  CHECK(bad_spec.exit_code == 1);
  CHECK(bad_spec.output.find("UnsupportedSpec") != std::string::npos);
}

TEST_CASE("capacity environment variable maps to exit code two") {
  CliResult r = run_cli(
      "invariants --catalog borromean --k 4");
  CHECK(r.exit_code == 0);
  std::string env = "LINKFORGE_CAPACITY=8 " + std::string(LINKFORGE_CLI_PATH);
  FILE* pipe = popen((env + " invariants --catalog borromean --k 4 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(output.find("CapacityExceeded") != std::string::npos);
}

TEST_CASE("search verb honors workers and budget flags") {
  // one twist flip kills mu_1122 = 1, so fig5a(1) has a size-1 witness
  CliResult r = run_cli(
      "search --catalog \"fig5a(m=1,k1=unknot,k2=unknot)\" --k 4 --budget 1 "
      "--workers 4 --json");
  CHECK(r.exit_code == 0);
  json envelope = json::parse(r.output);
  CHECK(envelope["result"]["min_witness_size"] == 1);

  // mu_1122 = 6 needs at least three changes, so budget 1 exhausts empty
  CliResult none = run_cli(
      "search --catalog \"fig5a(m=6,k1=trefoil,k2=trefoil)\" --k 4 "
      "--budget 1 --workers 2 --json");
  CHECK(none.exit_code == 0);
  json nv = json::parse(none.output);
  CHECK(nv["result"]["exhausted"] == true);
  CHECK(nv["result"]["min_witness_size"].is_null());
}
