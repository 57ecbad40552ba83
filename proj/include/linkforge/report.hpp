#pragma once

#include <array>
#include <string>
#include <vector>

#include "linkforge/bounds.hpp"
#include "linkforge/diagram.hpp"
#include "linkforge/search.hpp"

namespace linkforge {

/// Section 4 obstruction checks driven from computed invariants. Applicable
/// to 2- and 3-component diagrams; other sizes report applicable=false.
struct ObstructionScan {
  int components = 0;
  bool applicable = false;
  std::vector<ObstructionCertificate> certificates;
  std::int64_t mu1122 = 0;
  std::int64_t mu1122_delta = 0;
  std::int64_t mu123 = 0;
  std::array<std::int64_t, 3> mu1122_pairs{};
};

ObstructionScan obstruction_scan(const LinkDiagram& d);

std::string to_json(const BoundReport& report);
std::string to_json(const ObstructionCertificate& cert);
std::string to_json(const SearchReport& report, bool stable_ms);

// Verb-level JSON payloads shared by the C API and the CLI.
std::string invariants_report_json(const LinkDiagram& d, int k);
std::string bounds_report_json(const LinkDiagram& d, int k, bool min_ordering);
std::string obstructions_report_json(const LinkDiagram& d);
std::string search_report_json(const LinkDiagram& d, int k, int max_budget,
                               int workers, bool stable_ms);
std::string jin_report_json(const LinkDiagram& d);
std::string validate_report_json(const LinkDiagram& d);
std::string catalog_report_json();

}  // namespace linkforge
