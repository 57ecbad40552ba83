#pragma once

// Internal strand-walk representation used to assemble diagrams. A walk is
// the cyclic sequence of crossing passages along one component; emit()
// numbers edges consecutively along each walk and produces PD tuples in the
// library's orientation convention.

#include <vector>

#include "linkforge/diagram.hpp"

namespace linkforge {

struct StrandPassage {
  int crossing;  // 1-based crossing id
  bool over;
};

struct WalkDiagram {
  std::vector<int> signs;  // signs[i] is the sign of crossing i+1
  std::vector<std::vector<StrandPassage>> walks;
  int unknots = 0;

  int add_crossing(int sign) {
    signs.push_back(sign);
    return static_cast<int>(signs.size());
  }

  /// Build PD tuples; each crossing must carry exactly one over and one
  /// under passage. Walks with no passages become unknot components.
  PDCode emit() const;
};

WalkDiagram walks_from_diagram(const LinkDiagram& d);

}  // namespace linkforge
