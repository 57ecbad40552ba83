// linkforge command-line front end. Talks to the core exclusively through
// the C API in linkforge.h; vendored CLI11 and nlohmann/json handle argument
// parsing and rendering.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkforge.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCapacity = 2;

struct DiagramDeleter {
  void operator()(lf_diagram* d) const { lf_diagram_free(d); }
};
using DiagramPtr = std::unique_ptr<lf_diagram, DiagramDeleter>;

struct StringDeleter {
  void operator()(char* s) const { lf_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(lf_status status) {
  switch (status) {
    case LF_OK: return kExitOk;
    case LF_ERR_CAPACITY: return kExitCapacity;
    default: return kExitInput;
  }
}

[[noreturn]] void fail(lf_status status, const std::string& context) {
  std::cerr << "linkforge: " << context << ": " << lf_last_error() << "\n";
  std::exit(exit_code_for(status));
}

struct InputOptions {
  std::string pd_path;
  std::string catalog_spec;
};

void add_input_options(CLI::App* cmd, InputOptions& input) {
  auto* pd = cmd->add_option("--pd", input.pd_path, "PD-notation file");
  auto* cat = cmd->add_option("--catalog", input.catalog_spec,
                              "catalog spec, e.g. fig5a(m=6,k1=trefoil,k2=trefoil)");
  pd->excludes(cat);
  cat->excludes(pd);
}

DiagramPtr load_diagram(const InputOptions& input) {
  if (input.pd_path.empty() == input.catalog_spec.empty()) {
    std::cerr << "linkforge: exactly one of --pd or --catalog is required\n";
    std::exit(kExitInput);
  }
  lf_diagram* raw = nullptr;
  if (!input.pd_path.empty()) {
    std::ifstream file(input.pd_path);
    if (!file) {
      std::cerr << "linkforge: cannot open '" << input.pd_path << "'\n";
      std::exit(kExitInput);
    }
    std::ostringstream text;
    text << file.rdbuf();
    lf_status status = lf_diagram_parse(text.str().c_str(), &raw);
    if (status != LF_OK) fail(status, "parsing " + input.pd_path);
  } else {
    lf_status status = lf_diagram_from_catalog(input.catalog_spec.c_str(), &raw);
    if (status != LF_OK) fail(status, "building " + input.catalog_spec);
  }
  return DiagramPtr(raw);
}

void emit(const std::string& verb, const json& result, bool as_json) {
  if (as_json) {
    json envelope;
    envelope["tool"] = "linkforge";
    envelope["version"] = lf_version();
    envelope["command"] = verb;
    envelope["result"] = result;
    std::cout << envelope.dump(2) << "\n";
  }
}

std::string render_matrix(const json& matrix) {
  std::ostringstream out;
  for (const auto& row : matrix) {
    out << "    [";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << " ";
      out << std::setw(3) << row[j].get<long long>();
    }
    out << " ]\n";
  }
  return out.str();
}

void print_invariants(const json& r) {
  std::cout << "components: " << r["components"].get<int>()
            << "  crossings: " << r["crossings"].get<int>() << "\n";
  std::cout << "linking matrix:\n" << render_matrix(r["linking_matrix"]);
  std::cout << "self-writhe: " << r["self_writhe"].dump()
            << "\nv2 per component: " << r["v2"].dump() << "\n";
  std::cout << "milnor table (k=" << r["milnor_table"]["k"].get<int>()
            << "), nonzero entries:\n";
  bool any = false;
  for (const auto& e : r["milnor_table"]["entries"]) {
    long long mu = e["mu"].get<long long>();
    long long delta = e["delta"].get<long long>();
    if (mu == 0 && delta == 0) continue;
    any = true;
    std::cout << "  mu(";
    for (const auto& i : e["I"]) std::cout << i.get<int>();
    std::cout << ") = " << mu;
    if (delta != 0) std::cout << " (mod " << delta << ")";
    std::cout << "\n";
  }
  if (!any) std::cout << "  (all entries vanish)\n";
}

void print_bounds(const json& r, int k) {
  std::cout << "linking matrix:\n" << render_matrix(r["linking_matrix"]);
  std::cout << "Lambda = " << r["lambda"].get<long long>()
            << "  Lambda* = " << r["lambda_star"].get<long long>()
            << "  Lambda' = " << r["lambda_prime"].get<long long>() << "\n";
  if (!r["lambda_star_min"].is_null()) {
    std::cout << "Lambda* minimized over orderings = "
              << r["lambda_star_min"].get<long long>() << "\n";
  }
  const auto& b = r["bounds"];
  std::cout << "u_" << k << " bounds: " << b["lower"].get<long long>()
            << " <= u_" << k << " <= " << b["upper"].get<long long>();
  if (!b["exact"].is_null()) {
    std::cout << "  (exact: " << b["exact"].get<long long>() << ")";
  }
  std::cout << "\nhomotopy trivializing number: "
            << b["homotopy_lower"].get<long long>() << " <= n_h <= "
            << b["homotopy_upper"].get<long long>() << "\n";
  std::cout << "provenance:";
  for (const auto& p : b["provenance"]) std::cout << " " << p.get<std::string>();
  std::cout << "\n";
  for (const auto& cert : r["obstructions"]) {
    if (cert["concluded"].is_null()) continue;
    std::cout << "obstruction " << cert["theorem"].get<std::string>()
              << ": u_" << cert["concluded"]["k"].get<int>() << " >= "
              << cert["concluded"]["lower"].get<long long>() << "\n";
  }
}

void print_obstructions(const json& r) {
  if (!r["applicable"].get<bool>()) {
    std::cout << "no applicable section-4 obstruction for "
              << r["components"].get<int>() << " components\n";
    return;
  }
  if (r.contains("mu_1122")) {
    std::cout << "mu_1122 = " << r["mu_1122"].get<long long>()
              << " (delta " << r["mu_1122_delta"].get<long long>() << ")\n";
  }
  if (r.contains("mu_123")) {
    std::cout << "mu_123 = " << r["mu_123"].get<long long>()
              << "  pairwise mu_1122 = " << r["mu_1122_pairs"].dump() << "\n";
  }
  for (const auto& cert : r["certificates"]) {
    std::cout << cert["theorem"].get<std::string>() << ":\n";
    for (const auto& h : cert["hypotheses"]) {
      std::cout << "  [" << (h["holds"].get<bool>() ? "ok" : "FAIL") << "] "
                << h["name"].get<std::string>() << " ("
                << h["witness"].get<std::string>() << ")\n";
    }
    if (cert["concluded"].is_null()) {
      std::cout << "  no conclusion\n";
    } else {
      std::cout << "  concluded: u_" << cert["concluded"]["k"].get<int>()
                << " >= " << cert["concluded"]["lower"].get<long long>() << "\n";
    }
  }
}

void print_search(const json& r) {
  std::cout << "examined " << r["examined"].get<unsigned long long>()
            << " change sets";
  if (!r["ms"].is_null()) std::cout << " in " << r["ms"].get<long long>() << " ms";
  std::cout << "\n";
  if (r["min_witness_size"].is_null()) {
    std::cout << (r["exhausted"].get<bool>()
                      ? "exhausted the budget: no trivializing witness\n"
                      : "no witness found\n");
  } else {
    std::cout << "minimal witness size: " << r["min_witness_size"].get<int>()
              << "\n";
    for (const auto& w : r["witnesses"]) {
      std::cout << "  witness: change crossings " << w["changes"].dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link-diagram invariants, C_k-trivializing bounds, and "
               "crossing-change search"};
  app.require_subcommand(1);
  app.fallthrough();

  if (const char* cap = std::getenv("LINKFORGE_CAPACITY")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && value > 0) {
      lf_set_capacity(value);
    } else {
      std::cerr << "linkforge: ignoring malformed LINKFORGE_CAPACITY\n";
    }
  }

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable JSON envelope");

  InputOptions input;
  int k = 4;
  int budget = 2;
  int workers = 1;
  bool min_ordering = false;

  auto* invariants = app.add_subcommand(
      "invariants", "linking matrix, milnor table, and v2 per component");
  add_input_options(invariants, input);
  invariants->add_option("--k", k, "maximum Milnor length (default 4)");

  auto* bounds = app.add_subcommand(
      "bounds", "u_k bound report with derived flags and obstructions");
  add_input_options(bounds, input);
  bounds->add_option("--k", k, "C_k-trivializing target (default 4)");
  bounds->add_flag("--min-ordering", min_ordering,
                   "also minimize Lambda* over component orderings (n <= 8)");

  auto* obstructions = app.add_subcommand(
      "obstructions", "section-4 lower-bound certificates from invariants");
  add_input_options(obstructions, input);

  auto* search = app.add_subcommand(
      "search", "minimal mu-trivializing crossing-change witness");
  add_input_options(search, input);
  search->add_option("--k", k, "Milnor length for triviality (default 4)");
  search->add_option("--budget", budget, "maximum changes to try (default 2)");
  search->add_option("--workers", workers, "worker threads (default 1)");

  auto* catalog = app.add_subcommand("catalog", "list built-in diagrams");

  auto* validate = app.add_subcommand(
      "validate", "check structural invariants of a diagram");
  add_input_options(validate, input);

  CLI11_PARSE(app, argc, argv);

  auto run_report = [&](const char* verb,
                        lf_status (*fn)(const lf_diagram*, char**),
                        void (*printer)(const json&)) {
    DiagramPtr d = load_diagram(input);
    char* raw = nullptr;
    lf_status status = fn(d.get(), &raw);
    if (status != LF_OK) fail(status, verb);
    StringPtr payload(raw);
    json r = json::parse(payload.get());
    if (as_json) {
      emit(verb, r, true);
    } else {
      printer(r);
    }
    return kExitOk;
  };

  if (invariants->parsed()) {
    DiagramPtr d = load_diagram(input);
    char* raw = nullptr;
    lf_status status = lf_invariants_json(d.get(), k, &raw);
    if (status != LF_OK) fail(status, "invariants");
    StringPtr payload(raw);
    json r = json::parse(payload.get());
    if (as_json) {
      emit("invariants", r, true);
    } else {
      print_invariants(r);
    }
    return kExitOk;
  }

  if (bounds->parsed()) {
    DiagramPtr d = load_diagram(input);
    char* raw = nullptr;
    lf_status status = lf_bounds_json(d.get(), k, min_ordering ? 1 : 0, &raw);
    if (status != LF_OK) fail(status, "bounds");
    StringPtr payload(raw);
    json r = json::parse(payload.get());
    if (as_json) {
      emit("bounds", r, true);
    } else {
      print_bounds(r, k);
    }
    return kExitOk;
  }

  if (obstructions->parsed()) {
    return run_report("obstructions", lf_obstructions_json, print_obstructions);
  }

  if (search->parsed()) {
    DiagramPtr d = load_diagram(input);
    char* raw = nullptr;
    lf_status status =
        lf_search_json(d.get(), k, budget, workers, as_json ? 1 : 0, &raw);
    if (status != LF_OK) fail(status, "search");
    StringPtr payload(raw);
    json r = json::parse(payload.get());
    if (as_json) {
      emit("search", r, true);
    } else {
      print_search(r);
    }
    return kExitOk;
  }

  if (catalog->parsed()) {
    char* raw = nullptr;
    lf_status status = lf_catalog_json(&raw);
    if (status != LF_OK) fail(status, "catalog");
    StringPtr payload(raw);
    json r = json::parse(payload.get());
    if (as_json) {
      emit("catalog", r, true);
    } else {
      for (const auto& entry : r["entries"]) {
        std::cout << entry.get<std::string>() << "\n";
      }
    }
    return kExitOk;
  }

  if (validate->parsed()) {
    return run_report("validate", lf_diagram_validate, [](const json& r) {
      if (r["violations"].empty()) {
        std::cout << "no violations\n";
      } else {
        for (const auto& v : r["violations"]) {
          std::cout << v["invariant"].get<std::string>() << ": "
                    << v["detail"].get<std::string>() << "\n";
        }
      }
    });
  }

  return kExitOk;
}
