#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkforge/diagram.hpp"
#include "linkforge/magnus.hpp"

namespace linkforge {

/// Magnus series for every Wirtinger arc of a diagram, computed by anchored
/// sweeps: the base arc of each component stays exactly 1 + X_i (it *is* the
/// meridian), and the remaining arcs are conjugates propagated along the
/// component. Degree-d coefficients are exact after at most d sweeps.
struct ArcAssignment {
  struct Event {
    int over_arc;
    int sign;
  };

  int degree = 0;
  std::vector<MagnusSeries> series;       // arc id -> series
  std::vector<int> arc_component;         // arc id -> component (1-based)
  std::vector<int> base_arc;              // component (0-based) -> arc id
  std::vector<std::vector<Event>> component_events;  // walk order from base
};

/// Basepoints select which arc of each component anchors the meridian;
/// rotation r picks the r-th arc along the traversal (default 0).
ArcAssignment arc_fixpoint(const LinkDiagram& d, int degree,
                           const std::vector<int>& basepoint_rotation = {});

MagnusSeries longitude_series(const LinkDiagram& d, int component,
                              const ArcAssignment& assignment);

struct MuValue {
  std::int64_t value = 0;
  std::int64_t indeterminacy = 0;
};

/// Milnor mu for an index sequence I (1-based components, |I| >= 2); the
/// value is the reduced residue in [0, delta) whenever delta > 0.
MuValue milnor_mu(const LinkDiagram& d, const std::vector<int>& I);

struct MilnorTable {
  struct Entry {
    std::vector<int> I;
    std::int64_t mu = 0;
    std::int64_t delta = 0;
  };
  int k = 0;
  std::vector<Entry> entries;  // sorted by (length, lexicographic I)

  const Entry* find(const std::vector<int>& I) const;
};

MilnorTable milnor_table(const LinkDiagram& d, int k,
                         const std::vector<int>& basepoint_rotation = {});

bool mu_trivial_to_length(const LinkDiagram& d, int k);

/// Degree-2 finite-type invariant (Conway a2) of one component, by the
/// interlocked-chord Gauss diagram count; other components are ignored.
std::int64_t v2(const LinkDiagram& d, int component, int basepoint_rotation = 0);

std::string to_json(const MilnorTable& table);

}  // namespace linkforge
