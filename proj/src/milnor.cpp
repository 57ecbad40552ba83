#include "linkforge/milnor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "linkforge/errors.hpp"

namespace linkforge {

namespace {

struct Passage {
  int crossing;  // 1-based
  bool over;
};

// head passage of every edge
std::map<int, Passage> edge_heads(const LinkDiagram& d) {
  std::map<int, Passage> heads;
  for (const auto& c : d.crossings) {
    heads[c.under_in] = {c.id, false};
    heads[c.over_in] = {c.id, true};
  }
  return heads;
}

}  // namespace

ArcAssignment arc_fixpoint(const LinkDiagram& d,
                           int degree,
                           const std::vector<int>& basepoint_rotation) {
  if (degree < 1) {
    raise(ErrorCode::InvalidK, "truncation degree must be at least 1");
  }
  {
    auto violations = validate(d);
    if (!violations.empty()) {
      raise(ErrorCode::BrokenTraversal,
            "invalid diagram: " + violations.front().invariant + " (" +
                violations.front().detail + ")");
    }
  }
  const int n = d.component_count();
  const int edged = d.edged_component_count();

  ArcAssignment out;
  out.degree = degree;
  out.base_arc.assign(n, -1);
  out.component_events.resize(n);

  auto heads = edge_heads(d);

  // Arc decomposition: a new arc starts after every under-passage. With no
  // under-passages the whole component is one arc.
  std::map<int, int> arc_of_edge;
  struct PendingEvent {
    int crossing;
    int sign;
    int next_arc;
  };
  std::vector<std::vector<PendingEvent>> events(n);

  for (int ci = 0; ci < edged; ++ci) {
    const auto& block = d.components[ci];
    const int len = static_cast<int>(block.size());
    std::vector<int> under_positions;
    for (int j = 0; j < len; ++j) {
      if (!heads.at(block[j]).over) under_positions.push_back(j);
    }
    int rotation = 0;
    if (ci < static_cast<int>(basepoint_rotation.size()) &&
        !under_positions.empty()) {
      rotation = ((basepoint_rotation[ci] % static_cast<int>(under_positions.size())) +
                  static_cast<int>(under_positions.size())) %
                 static_cast<int>(under_positions.size());
    }

    if (under_positions.empty()) {
      int arc = static_cast<int>(out.arc_component.size());
      out.arc_component.push_back(ci + 1);
      out.base_arc[ci] = arc;
      for (int e : block) arc_of_edge[e] = arc;
      continue;
    }

    const int m = static_cast<int>(under_positions.size());
    // Arc t covers the edges after under event (t-1) up to and including the
    // edge entering under event t; the base arc is arc `rotation`.
    std::vector<int> arc_ids(m);
    for (int t = 0; t < m; ++t) {
      arc_ids[t] = static_cast<int>(out.arc_component.size());
      out.arc_component.push_back(ci + 1);
    }
    out.base_arc[ci] = arc_ids[rotation];
    for (int t = 0; t < m; ++t) {
      int prev = under_positions[(t + m - 1) % m];
      int end = under_positions[t];
      for (int j = (prev + 1) % len;; j = (j + 1) % len) {
        arc_of_edge[block[j]] = arc_ids[t];
        if (j == end) break;
      }
    }
    // Events in walk order starting from the base arc: the base arc ends at
    // under event `rotation`, which produces arc rotation+1, and so on.
    for (int s = 0; s < m; ++s) {
      int t = (rotation + s) % m;
      const Crossing& c = d.crossing(heads.at(block[under_positions[t]]).crossing);
      events[ci].push_back({c.id, c.sign, arc_ids[(t + 1) % m]});
    }
  }

  // Arcs for zero-crossing unknot components.
  for (int ci = edged; ci < n; ++ci) {
    int arc = static_cast<int>(out.arc_component.size());
    out.arc_component.push_back(ci + 1);
    out.base_arc[ci] = arc;
  }

  for (int ci = 0; ci < n; ++ci) {
    for (const auto& ev : events[ci]) {
      const Crossing& c = d.crossing(ev.crossing);
      out.component_events[ci].push_back(
          {arc_of_edge.at(c.over_in), ev.sign});
    }
  }

  const int arc_count = static_cast<int>(out.arc_component.size());
  out.series.reserve(arc_count);
  for (int a = 0; a < arc_count; ++a) {
    out.series.push_back(
        MagnusSeries::meridian(n, degree, out.arc_component[a]));
  }

  // Anchored sweeps: propagate conjugation along each component from its
  // base arc, reading over-arc series from the current table. The closing
  // relation back onto the base arc is the redundant Wirtinger relation and
  // is skipped.
  bool stable = false;
  for (int sweep = 0; sweep < degree + 2 && !stable; ++sweep) {
    stable = true;
    for (int ci = 0; ci < n; ++ci) {
      const auto& evs = events[ci];
      if (evs.empty()) continue;
      MagnusSeries current = out.series[out.base_arc[ci]];
      for (std::size_t s = 0; s + 1 < evs.size(); ++s) {
        const auto& ev = evs[s];
        const MagnusSeries& over =
            out.series[out.component_events[ci][s].over_arc];
        MagnusSeries conjugated =
            (ev.sign > 0) ? over.inverse() * current * over
                          : over * current * over.inverse();
        if (!(conjugated == out.series[ev.next_arc])) {
          out.series[ev.next_arc] = conjugated;
          stable = false;
        }
        current = out.series[ev.next_arc];
      }
    }
  }
  if (!stable) {
    raise(ErrorCode::NoConvergence,
          "arc series failed to stabilize; this indicates a bug");
  }
  return out;
}

MagnusSeries longitude_series(const LinkDiagram& d, int component,
                              const ArcAssignment& assignment) {
  const int n = d.component_count();
  if (component < 1 || component > n) {
    raise(ErrorCode::UnknownComponent,
          "no component " + std::to_string(component));
  }
  MagnusSeries product = MagnusSeries::one(n, assignment.degree);
  for (const auto& ev : assignment.component_events[component - 1]) {
    const MagnusSeries& over = assignment.series[ev.over_arc];
    product = product * (ev.sign > 0 ? over : over.inverse());
  }
  const int w = self_writhe(d, component);
  MagnusSeries framing =
      MagnusSeries::meridian(n, assignment.degree, component).power(-w);
  return framing * product;
}

namespace {

struct MuEngine {
  const LinkDiagram& d;
  ArcAssignment assignment;
  std::vector<MagnusSeries> longitudes;
  std::map<std::vector<int>, MuValue> memo;

  MuEngine(const LinkDiagram& diagram, int degree,
           const std::vector<int>& basepoint_rotation)
      : d(diagram), assignment(arc_fixpoint(diagram, degree, basepoint_rotation)) {
    const int n = d.component_count();
    longitudes.reserve(n);
    for (int i = 1; i <= n; ++i) {
      longitudes.push_back(longitude_series(d, i, assignment));
    }
  }

  std::int64_t raw(const std::vector<int>& I) const {
    std::vector<int> monomial(I.begin(), I.end() - 1);
    return longitudes[I.back() - 1].coefficient(monomial);
  }

  MuValue value(const std::vector<int>& I) {
    auto it = memo.find(I);
    if (it != memo.end()) return it->second;
    std::int64_t delta = 0;
    // gcd of reduced values over all distinct proper subsequences of
    // length >= 2 (0 when they all vanish)
    const int len = static_cast<int>(I.size());
    std::vector<std::vector<int>> subs;
    for (unsigned mask = 1; mask + 1 < (1u << len); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      std::vector<int> J;
      for (int i = 0; i < len; ++i) {
        if (mask & (1u << i)) J.push_back(I[i]);
      }
      subs.push_back(std::move(J));
    }
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    for (const auto& J : subs) {
      delta = std::gcd(delta, value(J).value);
    }
    std::int64_t v = raw(I);
    if (delta > 0) v = ((v % delta) + delta) % delta;
    MuValue result{v, delta};
    memo[I] = result;
    return result;
  }
};

void check_sequence(const LinkDiagram& d, const std::vector<int>& I) {
  if (I.size() < 2) {
    raise(ErrorCode::BadIndexSequence, "index sequence needs length >= 2");
  }
  for (int i : I) {
    if (i < 1 || i > d.component_count()) {
      raise(ErrorCode::BadIndexSequence,
            "component index " + std::to_string(i) + " out of range");
    }
  }
}

}  // namespace

MuValue milnor_mu(const LinkDiagram& d, const std::vector<int>& I) {
  check_sequence(d, I);
  MuEngine engine(d, static_cast<int>(I.size()) - 1, {});
  return engine.value(I);
}

const MilnorTable::Entry* MilnorTable::find(const std::vector<int>& I) const {
  for (const auto& e : entries) {
    if (e.I == I) return &e;
  }
  return nullptr;
}

MilnorTable milnor_table(const LinkDiagram& d, int k,
                         const std::vector<int>& basepoint_rotation) {
  if (k < 2) {
    raise(ErrorCode::InvalidK, "table length must be at least 2");
  }
  MilnorTable table;
  table.k = k;
  MuEngine engine(d, k - 1, basepoint_rotation);
  const int n = d.component_count();
  for (int len = 2; len <= k; ++len) {
    std::vector<int> I(len, 1);
    while (true) {
      table.entries.push_back({I, 0, 0});
      auto mv = engine.value(I);
      table.entries.back().mu = mv.value;
      table.entries.back().delta = mv.indeterminacy;
      int pos = len - 1;
      while (pos >= 0 && I[pos] == n) {
        I[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++I[pos];
    }
  }
  return table;
}

bool mu_trivial_to_length(const LinkDiagram& d, int k) {
  MilnorTable table = milnor_table(d, k);
  for (const auto& e : table.entries) {
    if (e.mu != 0) return false;
  }
  return true;
}

std::int64_t v2(const LinkDiagram& d, int component, int basepoint_rotation) {
  const int n = d.component_count();
  if (component < 1 || component > n) {
    raise(ErrorCode::UnknownComponent,
          "no component " + std::to_string(component));
  }
  if (component > d.edged_component_count()) return 0;

  auto heads = edge_heads(d);
  const auto& block = d.components[component - 1];
  const int len = static_cast<int>(block.size());
  const int rot = ((basepoint_rotation % len) + len) % len;

  struct Chord {
    int first_pos = -1;
    bool first_over = false;
    int second_pos = -1;
    int sign = 0;
  };
  std::map<int, Chord> chords;
  for (int j = 0; j < len; ++j) {
    int e = block[(j + rot) % len];
    const Passage p = heads.at(e);
    const Crossing& c = d.crossing(p.crossing);
    if (d.under_component(c) != component || d.over_component(c) != component) {
      continue;  // not a self-crossing of this component
    }
    Chord& ch = chords[p.crossing];
    if (ch.first_pos < 0) {
      ch.first_pos = j;
      ch.first_over = p.over;
      ch.sign = c.sign;
    } else {
      ch.second_pos = j;
    }
  }

  // Signed count of interlocked pairs met as under(c), over(c'), ... from
  // the basepoint (the Gauss-diagram formula for the Conway coefficient).
  std::int64_t total = 0;
  for (auto it = chords.begin(); it != chords.end(); ++it) {
    for (auto jt = chords.begin(); jt != chords.end(); ++jt) {
      if (it == jt) continue;
      const Chord& a = it->second;
      const Chord& b = jt->second;
      if (a.first_pos < b.first_pos && b.first_pos < a.second_pos &&
          a.second_pos < b.second_pos && !a.first_over && b.first_over) {
        total += static_cast<std::int64_t>(a.sign) * b.sign;
      }
    }
  }
  return total;
}

std::string to_json(const MilnorTable& table) {
  std::ostringstream out;
  out << "{\"k\":" << table.k << ",\"entries\":[";
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    if (i) out << ",";
    const auto& e = table.entries[i];
    out << "{\"I\":[";
    for (std::size_t j = 0; j < e.I.size(); ++j) {
      if (j) out << ",";
      out << e.I[j];
    }
    out << "],\"mu\":" << e.mu << ",\"delta\":" << e.delta << "}";
  }
  out << "]}";
  return out.str();
}

}  // namespace linkforge
