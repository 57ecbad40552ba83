#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace linkforge {

/// Raw planar-diagram notation: one 4-tuple of edge labels per crossing,
/// listed counterclockwise starting at the incoming under-edge, plus a
/// count of zero-crossing unknot components.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int unknots = 0;
};

struct Crossing {
  int id = 0;  // 1-based, input order
  int under_in = 0;
  int over_in = 0;
  int under_out = 0;
  int over_out = 0;
  int sign = 0;  // +1 or -1
};

/// Oriented combinatorial link diagram. Components are indexed 1..n in the
/// order their lowest edge labels appear; zero-crossing unknots follow the
/// edged components. Values are immutable after construction.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> components;  // cyclic edge lists
  std::map<int, int> component_of_edge;      // edge label -> component (1-based)
  int unknot_components = 0;

  /// Total component count including zero-crossing unknots.
  int component_count() const {
    return static_cast<int>(components.size()) + unknot_components;
  }
  int edged_component_count() const {
    return static_cast<int>(components.size());
  }
  int crossing_count() const { return static_cast<int>(crossings.size()); }

  const Crossing& crossing(int id) const;
  /// Successor edge along the orientation of the containing component.
  int successor_edge(int edge) const;
  /// Component index (1-based) of the strand entering as under / over.
  int under_component(const Crossing& c) const;
  int over_component(const Crossing& c) const;
};

struct Violation {
  std::string invariant;  // e.g. "MalformedTuple"
  std::string detail;
};

PDCode parse_pd_code(const std::string& text);
/// Statement-level and structural violations without throwing.
std::vector<Violation> pd_violations(const PDCode& code);

LinkDiagram diagram_from_pd(const PDCode& code);
LinkDiagram parse_pd(const std::string& text);

std::string serialize(const PDCode& code);
std::string serialize(const LinkDiagram& d);
PDCode to_pd_code(const LinkDiagram& d);

/// Structural invariant check on an already-built diagram; empty means valid.
std::vector<Violation> validate(const LinkDiagram& d);

int crossing_sign(const LinkDiagram& d, int crossing_id);
int self_writhe(const LinkDiagram& d, int component);
LinkDiagram apply_changes(const LinkDiagram& d, const std::set<int>& crossing_ids);

/// Classify a crossing: self-crossing of component i, or between i < j.
struct CrossingPair {
  bool self = false;
  int i = 0;
  int j = 0;  // == i for self crossings
};
CrossingPair crossing_components(const LinkDiagram& d, const Crossing& c);

/// Delete the given components (1-based); remaining components keep their
/// relative order, and strands passing through removed crossings are smoothed.
LinkDiagram remove_components(const LinkDiagram& d, const std::set<int>& comps);

}  // namespace linkforge
