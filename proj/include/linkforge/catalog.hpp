#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkforge/diagram.hpp"

namespace linkforge {

enum class KnotPattern { Unknot, Trefoil, FigureEight };

/// Built-in diagrams addressable as strings, e.g.
/// "hopf(sign=+1,variant=2)" or "fig5a(m=6,k1=trefoil,k2=trefoil)".
struct CatalogSpec {
  enum class Kind {
    Unlink,
    Hopf,
    Trefoil,
    FigureEight,
    Whitehead,
    Borromean,
    Fig5a,
    Fig5b,
  };
  Kind kind = Kind::Unlink;
  int n = 1;            // Unlink component count
  int sign = +1;        // Hopf linking sign
  int variant = 0;      // Hopf: 2|4 crossings; Trefoil: 3|5; Whitehead: 0|1 (kinked)
  int m = 6;            // Fig5a/Fig5b full twists (may be negative)
  KnotPattern k1 = KnotPattern::Trefoil;
  KnotPattern k2 = KnotPattern::Trefoil;
};

CatalogSpec parse_catalog_spec(const std::string& text);
LinkDiagram catalog_link(const CatalogSpec& spec);
LinkDiagram catalog_link(const std::string& spec);

/// One line per catalog family: spec grammar and a short description.
std::vector<std::string> catalog_entries();

}  // namespace linkforge
