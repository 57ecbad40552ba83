#include "walks.hpp"

#include <map>
#include <string>

#include "linkforge/errors.hpp"

namespace linkforge {

PDCode
WalkDiagram::emit() const {
  struct Ends {
    int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
    int unders = 0, overs = 0;
  };
  std::vector<Ends> ends(signs.size());

  PDCode code;
  code.unknots = unknots;
  int base = 1;
  for (const auto& walk : walks) {
    const int len = static_cast<int>(walk.size());
    if (len == 0) {
      ++code.unknots;
      continue;
    }
    for (int j = 0; j < len; ++j) {
      const StrandPassage& p = walk[j];
      if (p.crossing < 1 || p.crossing > static_cast<int>(signs.size())) {
        raise(ErrorCode::InvalidParams,
              "walk references unknown crossing " + std::to_string(p.crossing));
      }
      Ends& e = ends[p.crossing - 1];
      int in_edge = base + j;
      int out_edge = base + (j + 1) % len;
      if (p.over) {
        e.over_in = in_edge;
        e.over_out = out_edge;
        ++e.overs;
      } else {
        e.under_in = in_edge;
        e.under_out = out_edge;
        ++e.unders;
      }
    }
    base += len;
  }

  for (std::size_t i = 0; i < signs.size(); ++i) {
    const Ends& e = ends[i];
    if (e.unders != 1 || e.overs != 1) {
      raise(ErrorCode::InvalidParams,
            "crossing " + std::to_string(i + 1) +
                " needs exactly one over and one under passage");
    }
    if (signs[i] > 0) {
      code.crossings.push_back({e.under_in, e.over_out, e.under_out, e.over_in});
    } else {
      code.crossings.push_back({e.under_in, e.over_in, e.under_out, e.over_out});
    }
  }
  return code;
}

WalkDiagram walks_from_diagram(const LinkDiagram& d) {
  WalkDiagram out;
  out.unknots = d.unknot_components;
  for (const auto& c : d.crossings) out.signs.push_back(c.sign);

  // head_of[e]: the passage the edge e runs into.
  std::map<int, StrandPassage> head_of;
  for (const auto& c : d.crossings) {
    head_of[c.under_in] = {c.id, false};
    head_of[c.over_in] = {c.id, true};
  }
  for (const auto& block : d.components) {
    std::vector<StrandPassage> walk;
    walk.reserve(block.size());
    for (int e : block) walk.push_back(head_of.at(e));
    out.walks.push_back(std::move(walk));
  }
  return out;
}

}  // namespace linkforge
