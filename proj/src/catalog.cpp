#include "linkforge/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "linkforge/errors.hpp"
#include "walks.hpp"

namespace linkforge {

namespace {

// ---- braid closures -------------------------------------------------------
//
// A braid letter acts on positions (i, i+1), strands flowing downward.
// left_over=true is the generator whose left strand passes over; in this
// library's sign convention that crossing is negative, the inverse positive.

struct BraidLetter {
  int position;
  bool left_over;
};

WalkDiagram braid_closure(int strands, const std::vector<BraidLetter>& word) {
  WalkDiagram wd;
  std::vector<int> occupant(strands);
  std::iota(occupant.begin(), occupant.end(), 0);
  std::vector<std::vector<StrandPassage>> strand_passages(strands);

  for (const auto& letter : word) {
    const int i = letter.position;
    const int id = wd.add_crossing(letter.left_over ? -1 : +1);
    int left = occupant[i - 1];
    int right = occupant[i];
    strand_passages[left].push_back({id, letter.left_over});
    strand_passages[right].push_back({id, !letter.left_over});
    std::swap(occupant[i - 1], occupant[i]);
  }

  // Closure: the strand ending at bottom position q continues as the strand
  // that starts at top position q.
  std::vector<int> successor(strands);
  for (int q = 0; q < strands; ++q) successor[occupant[q]] = q;

  std::vector<bool> used(strands, false);
  for (int start = 0; start < strands; ++start) {
    if (used[start]) continue;
    std::vector<StrandPassage> walk;
    int s = start;
    do {
      used[s] = true;
      walk.insert(walk.end(), strand_passages[s].begin(),
                  strand_passages[s].end());
      s = successor[s];
    } while (s != start);
    wd.walks.push_back(std::move(walk));
  }
  return wd;
}

// ---- local pieces ---------------------------------------------------------

// Reidemeister-1 kink appended at the end of a component's walk.
void add_kink(WalkDiagram& wd, int comp, int sign) {
  const int id = wd.add_crossing(sign);
  auto& walk = wd.walks[comp];
  walk.push_back({id, false});
  walk.push_back({id, true});
}

// Open (long-knot) passage sequence for a pattern, over fresh crossings.
std::vector<StrandPassage> long_knot(WalkDiagram& wd, KnotPattern pattern) {
  std::vector<StrandPassage> seq;
  switch (pattern) {
    case KnotPattern::Unknot:
      break;
    case KnotPattern::Trefoil: {
      int a = wd.add_crossing(+1);
      int b = wd.add_crossing(+1);
      int c = wd.add_crossing(+1);
      seq = {{a, false}, {b, true}, {c, false}, {a, true}, {b, false}, {c, true}};
      break;
    }
    case KnotPattern::FigureEight: {
      int r1 = wd.add_crossing(-1);
      int r2 = wd.add_crossing(+1);
      int r3 = wd.add_crossing(-1);
      int r4 = wd.add_crossing(+1);
      seq = {{r1, true},  {r2, false}, {r4, true},  {r1, false},
             {r3, true},  {r4, false}, {r2, true},  {r3, false}};
      break;
    }
  }
  return seq;
}

void tie_knot(WalkDiagram& wd, int comp, KnotPattern pattern) {
  auto seq = long_knot(wd, pattern);
  auto& walk = wd.walks[comp];
  walk.insert(walk.end(), seq.begin(), seq.end());
}

// The clasp-and-twist-box pattern of Figure 5 between two components: the
// host runs four alternating passes, the partner weaves through them with a
// clasp and a block of full twists. Twist handedness and block position are
// calibrated so that mu_1122(host, partner) comes out to exactly `want_mu`
// with zero linking number and both components unknotted.
struct ClaspBlocks {
  std::vector<StrandPassage> host;
  std::vector<StrandPassage> partner;
};

ClaspBlocks make_clasp_blocks(WalkDiagram& wd, int want_mu) {
  int units, unit_sign;
  if (want_mu >= 0) {
    units = want_mu + 1;
    unit_sign = +1;
  } else if (want_mu == -1) {
    units = 0;
    unit_sign = +1;
  } else {
    units = -want_mu - 1;
    unit_sign = -1;
  }

  const int R1 = wd.add_crossing(-1);
  const int R2 = wd.add_crossing(+1);
  const int R3 = wd.add_crossing(-1);
  const int R4 = wd.add_crossing(+1);
  const int R5 = wd.add_crossing(-1);

  ClaspBlocks blocks;
  blocks.host = {{R1, true}, {R2, false}, {R4, true}, {R5, false}};

  std::vector<StrandPassage> out, back;
  for (int u = 0; u < units; ++u) {
    const int k1 = wd.add_crossing(unit_sign);
    const int k2 = wd.add_crossing(unit_sign);
    out.push_back({k1, false});
    out.push_back({k2, true});
    back.insert(back.begin(), {{k2, false}, {k1, true}});
  }

  // The twist block only embeds planarly on one side of the clasp per
  // handedness: around the first weave pass for positive units, around the
  // middle passes for negative ones.
  auto& walk = blocks.partner;
  walk.push_back({R1, false});
  if (unit_sign > 0) walk.insert(walk.end(), out.begin(), out.end());
  walk.push_back({R3, true});
  if (unit_sign < 0) walk.insert(walk.end(), out.begin(), out.end());
  walk.push_back({R4, false});
  walk.push_back({R2, true});
  if (unit_sign < 0) walk.insert(walk.end(), back.begin(), back.end());
  walk.push_back({R3, false});
  if (unit_sign > 0) walk.insert(walk.end(), back.begin(), back.end());
  walk.push_back({R5, true});
  return blocks;
}

// ---- builders per catalog family ------------------------------------------

LinkDiagram build_unlink(int n) {
  if (n < 1 || n > 64) {
    raise(ErrorCode::UnsupportedSpec, "unlink needs 1 <= n <= 64");
  }
  PDCode code;
  code.unknots = n;
  return diagram_from_pd(code);
}

LinkDiagram build_hopf(int sign, int variant) {
  if (sign != 1 && sign != -1) {
    raise(ErrorCode::UnsupportedSpec, "hopf sign must be +1 or -1");
  }
  if (variant != 2 && variant != 4) {
    raise(ErrorCode::UnsupportedSpec, "hopf variant must be 2 or 4 crossings");
  }
  bool over = sign < 0;  // left_over letters give negative crossings
  std::vector<BraidLetter> word = {{1, over}, {1, over}};
  if (variant == 4) {
    // a Reidemeister-2 pair keeps the link type
    word.push_back({1, true});
    word.push_back({1, false});
  }
  return diagram_from_pd(braid_closure(2, word).emit());
}

LinkDiagram build_trefoil(int variant) {
  if (variant != 3 && variant != 5) {
    raise(ErrorCode::UnsupportedSpec, "trefoil variant must be 3 or 5 crossings");
  }
  std::vector<BraidLetter> word = {{1, false}, {1, false}, {1, false}};
  if (variant == 5) {
    word.push_back({1, true});
    word.push_back({1, false});
  }
  return diagram_from_pd(braid_closure(2, word).emit());
}

LinkDiagram build_figure_eight() {
  std::vector<BraidLetter> word = {{1, true}, {2, false}, {1, true}, {2, false}};
  return diagram_from_pd(braid_closure(3, word).emit());
}

LinkDiagram build_whitehead(bool kinked) {
  std::vector<BraidLetter> word = {
      {1, true}, {2, false}, {1, true}, {2, false}, {1, true}};
  WalkDiagram wd = braid_closure(3, word);
  if (kinked) {
    add_kink(wd, 0, +1);
    add_kink(wd, 1, -1);
  }
  return diagram_from_pd(wd.emit());
}

LinkDiagram build_borromean() {
  std::vector<BraidLetter> word = {{1, true}, {2, false}, {1, true},
                                   {2, false}, {1, true}, {2, false}};
  return diagram_from_pd(braid_closure(3, word).emit());
}

void check_twists(int m) {
  if (std::abs(m) > 50) {
    raise(ErrorCode::UnsupportedSpec, "twist count |m| is capped at 50");
  }
}

LinkDiagram build_fig5a(int m, KnotPattern k1, KnotPattern k2) {
  check_twists(m);
  WalkDiagram wd;
  wd.walks.resize(2);
  ClaspBlocks g = make_clasp_blocks(wd, m);
  wd.walks[0] = g.host;
  wd.walks[1] = g.partner;
  tie_knot(wd, 0, k1);
  tie_knot(wd, 1, k2);
  return diagram_from_pd(wd.emit());
}

LinkDiagram build_fig5b(int m, KnotPattern k) {
  check_twists(m);
  WalkDiagram wd;
  wd.walks.resize(3);
  const int B1 = wd.add_crossing(-1), B2 = wd.add_crossing(+1),
            B3 = wd.add_crossing(-1), B4 = wd.add_crossing(+1),
            B5 = wd.add_crossing(-1), B6 = wd.add_crossing(+1);
  const std::vector<StrandPassage> rings[3] = {
      {{B1, true}, {B2, false}, {B4, true}, {B5, false}},
      {{B1, false}, {B3, true}, {B4, false}, {B6, true}},
      {{B2, true}, {B3, false}, {B5, true}, {B6, false}},
  };

  // One clasp gadget per cyclic pair, spliced into the Borromean walks at
  // positions found by planarity calibration.
  ClaspBlocks g01 = make_clasp_blocks(wd, m);
  ClaspBlocks g12 = make_clasp_blocks(wd, m);
  ClaspBlocks g20 = make_clasp_blocks(wd, m);
  struct Insertion {
    int position;
    const std::vector<StrandPassage>* block;
  };
  const std::vector<Insertion> plan[3] = {
      {{0, &g01.host}, {2, &g20.partner}},
      {{0, &g01.partner}, {0, &g12.host}},
      {{0, &g12.partner}, {1, &g20.host}},
  };
  for (int c = 0; c < 3; ++c) {
    std::vector<StrandPassage> walk;
    for (int p = 0; p <= 4; ++p) {
      for (const auto& ins : plan[c]) {
        if (ins.position == p) {
          walk.insert(walk.end(), ins.block->begin(), ins.block->end());
        }
      }
      if (p < 4) walk.push_back(rings[c][p]);
    }
    wd.walks[c] = walk;
  }
  for (int c = 0; c < 3; ++c) tie_knot(wd, c, k);
  return diagram_from_pd(wd.emit());
}

// ---- spec-string parsing ---------------------------------------------------

std::string lower_nows(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

KnotPattern parse_knot(const std::string& name) {
  if (name == "unknot") return KnotPattern::Unknot;
  if (name == "trefoil") return KnotPattern::Trefoil;
  if (name == "figure_eight" || name == "figureeight" || name == "fig8") {
    return KnotPattern::FigureEight;
  }
  raise(ErrorCode::UnsupportedSpec, "unknown component knot '" + name + "'");
}

int parse_int_value(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    int value = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return value;
  } catch (const std::exception&) {
    raise(ErrorCode::UnsupportedSpec, "bad integer for '" + key + "'");
  }
}

}  // namespace

CatalogSpec parse_catalog_spec(const std::string& text) {
  std::string s = lower_nows(text);
  std::string name = s;
  std::map<std::string, std::string> params;
  std::vector<std::string> positional;

  auto paren = s.find('(');
  if (paren != std::string::npos) {
    if (s.back() != ')') {
      raise(ErrorCode::UnsupportedSpec, "expected ')' in catalog spec");
    }
    name = s.substr(0, paren);
    std::string body = s.substr(paren + 1, s.size() - paren - 2);
    std::size_t start = 0;
    while (start < body.size()) {
      auto comma = body.find(',', start);
      std::string item = body.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!item.empty()) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          positional.push_back(item);
        } else {
          params[item.substr(0, eq)] = item.substr(eq + 1);
        }
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }

  auto get = [&](const std::string& key,
                 std::optional<std::string> fallback) -> std::optional<std::string> {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    return fallback;
  };

  CatalogSpec spec;
  if (name == "unlink") {
    spec.kind = CatalogSpec::Kind::Unlink;
    std::string n = positional.empty() ? get("n", "1").value() : positional[0];
    spec.n = parse_int_value(n, "n");
  } else if (name == "hopf") {
    spec.kind = CatalogSpec::Kind::Hopf;
    std::string sg = positional.empty() ? get("sign", "+1").value() : positional[0];
    spec.sign = parse_int_value(sg, "sign");
    spec.variant = parse_int_value(get("variant", "2").value(), "variant");
  } else if (name == "trefoil") {
    spec.kind = CatalogSpec::Kind::Trefoil;
    spec.variant = parse_int_value(get("variant", "3").value(), "variant");
  } else if (name == "figure_eight" || name == "figureeight" || name == "fig8") {
    spec.kind = CatalogSpec::Kind::FigureEight;
  } else if (name == "whitehead") {
    spec.kind = CatalogSpec::Kind::Whitehead;
    std::string v = get("variant", "plain").value();
    if (v == "plain") {
      spec.variant = 0;
    } else if (v == "kinked") {
      spec.variant = 1;
    } else {
      raise(ErrorCode::UnsupportedSpec, "whitehead variant is plain|kinked");
    }
  } else if (name == "borromean") {
    spec.kind = CatalogSpec::Kind::Borromean;
  } else if (name == "fig5a") {
    spec.kind = CatalogSpec::Kind::Fig5a;
    spec.m = parse_int_value(get("m", "6").value(), "m");
    spec.k1 = parse_knot(get("k1", "trefoil").value());
    spec.k2 = parse_knot(get("k2", "trefoil").value());
  } else if (name == "fig5b") {
    spec.kind = CatalogSpec::Kind::Fig5b;
    spec.m = parse_int_value(get("m", "6").value(), "m");
    spec.k1 = parse_knot(get("k", "trefoil").value());
  } else {
    raise(ErrorCode::UnsupportedSpec, "unknown catalog name '" + name + "'");
  }
  return spec;
}

LinkDiagram catalog_link(const CatalogSpec& spec) {
  switch (spec.kind) {
    case CatalogSpec::Kind::Unlink:
      return build_unlink(spec.n);
    case CatalogSpec::Kind::Hopf:
      return build_hopf(spec.sign, spec.variant);
    case CatalogSpec::Kind::Trefoil:
      return build_trefoil(spec.variant);
    case CatalogSpec::Kind::FigureEight:
      return build_figure_eight();
    case CatalogSpec::Kind::Whitehead:
      return build_whitehead(spec.variant == 1);
    case CatalogSpec::Kind::Borromean:
      return build_borromean();
    case CatalogSpec::Kind::Fig5a:
      return build_fig5a(spec.m, spec.k1, spec.k2);
    case CatalogSpec::Kind::Fig5b:
      return build_fig5b(spec.m, spec.k1);
  }
  raise(ErrorCode::UnsupportedSpec, "unhandled catalog kind");
}

LinkDiagram catalog_link(const std::string& spec) {
  return catalog_link(parse_catalog_spec(spec));
}

std::vector<std::string> catalog_entries() {
  return {
      "unlink(n=3)                      crossingless unlink with n components",
      "hopf(sign=+1,variant=2)          Hopf link; variant 2 or 4 crossings",
      "trefoil(variant=3)               trefoil knot; variant 3 or 5 crossings",
      "figure_eight                     figure-eight knot, 4 crossings",
      "whitehead(variant=plain)         Whitehead link; variant plain|kinked",
      "borromean                        Borromean rings, 6 crossings",
      "fig5a(m=6,k1=trefoil,k2=trefoil) 2-component link, lk=0, mu_1122=m, "
      "component knots tied in",
      "fig5b(m=6,k=trefoil)             3-component link, pairwise fig5a(m,k,k), "
      "mu_123=+-1",
  };
}

}  // namespace linkforge
