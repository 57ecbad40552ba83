#include "linkforge/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "linkforge/errors.hpp"
#include "walks.hpp"

namespace linkforge {

namespace {

std::string strip_ws(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool parse_int(const std::string& s, std::size_t& pos, long& value) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  value = std::stol(s.substr(start, pos - start));
  return true;
}

struct EdgeOcc {
  int crossing;  // 0-based index into tuples
  int pos;       // 0..3
};

}  // namespace

PDCode parse_pd_code(const std::string& text) {
  PDCode code;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = strip_ws(raw);
    if (line.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (line[0] == 'X' || line[0] == 'x') {
      if (line.size() < 3 || line[1] != '(' || line.back() != ')') {
        raise(ErrorCode::MalformedTuple, "expected X(a,b,c,d)" + where);
      }
      std::string body = line.substr(2, line.size() - 3);
      std::vector<long> vals;
      std::size_t pos = 0;
      while (true) {
        long v = 0;
        if (!parse_int(body, pos, v)) {
          raise(ErrorCode::MalformedTuple, "bad integer in tuple" + where);
        }
        vals.push_back(v);
        if (pos == body.size()) break;
        if (body[pos] != ',') {
          raise(ErrorCode::MalformedTuple, "expected ',' in tuple" + where);
        }
        ++pos;
      }
      if (vals.size() != 4) {
        raise(ErrorCode::MalformedTuple,
              "tuple arity " + std::to_string(vals.size()) + " != 4" + where);
      }
      std::array<int, 4> tuple{};
      for (int i = 0; i < 4; ++i) {
        if (vals[i] < 1) {
          raise(ErrorCode::MalformedTuple,
                "edge labels must be positive" + where);
        }
        tuple[i] = static_cast<int>(vals[i]);
      }
      code.crossings.push_back(tuple);
    } else if (line.rfind("unknots=", 0) == 0) {
      std::string num = line.substr(8);
      std::size_t pos = 0;
      long v = 0;
      if (!parse_int(num, pos, v) || pos != num.size() || v < 0) {
        raise(ErrorCode::MalformedTuple, "bad unknots count" + where);
      }
      code.unknots = static_cast<int>(v);
    } else {
      raise(ErrorCode::MalformedTuple, "unrecognized statement" + where);
    }
  }
  return code;
}

std::vector<Violation> pd_violations(const PDCode& code) {
  std::vector<Violation> out;
  std::map<int, std::vector<EdgeOcc>> occ;
  for (std::size_t i = 0; i < code.crossings.size(); ++i) {
    for (int p = 0; p < 4; ++p) {
      int label = code.crossings[i][p];
      if (label < 1) {
        out.push_back({"MalformedTuple",
                       "crossing " + std::to_string(i + 1) +
                           " has nonpositive edge label"});
        continue;
      }
      occ[label].push_back({static_cast<int>(i), p});
    }
  }
  for (const auto& [label, uses] : occ) {
    if (uses.size() != 2) {
      out.push_back({"DuplicateEdgeUse",
                     "edge " + std::to_string(label) + " used " +
                         std::to_string(uses.size()) + " times"});
    }
  }
  if (code.unknots < 0) {
    out.push_back({"MalformedTuple", "negative unknots count"});
  }
  return out;
}

namespace {

class UnionFind {
public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) {
      parent_[x] = x;
      return x;
    }
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
  std::map<int, int> parent_;
};

enum class Slot : char { Unknown, In, Out };

}  // namespace

LinkDiagram diagram_from_pd(const PDCode& code) {
  for (const auto& v : pd_violations(code)) {
    raise(v.invariant == "DuplicateEdgeUse" ? ErrorCode::DuplicateEdgeUse
                                            : ErrorCode::MalformedTuple,
          v.detail);
  }

  const auto& tuples = code.crossings;
  const int ncross = static_cast<int>(tuples.size());

  std::map<int, std::vector<EdgeOcc>> occ;
  UnionFind uf;
  for (int i = 0; i < ncross; ++i) {
    for (int p = 0; p < 4; ++p) occ[tuples[i][p]].push_back({i, p});
    uf.unite(tuples[i][0], tuples[i][2]);
    uf.unite(tuples[i][1], tuples[i][3]);
  }

  // Component blocks: labels in one component must be consecutive integers.
  std::map<int, std::vector<int>> groups;
  for (const auto& [label, uses] : occ) groups[uf.find(label)].push_back(label);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, labels] : groups) {
    std::sort(labels.begin(), labels.end());
    if (labels.back() - labels.front() + 1 != static_cast<int>(labels.size())) {
      raise(ErrorCode::BrokenTraversal,
            "component containing edge " + std::to_string(labels.front()) +
                " does not have consecutive edge labels");
    }
    blocks.push_back(labels);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::map<int, int> comp_of_edge;
  std::map<int, int> succ;
  for (std::size_t ci = 0; ci < blocks.size(); ++ci) {
    const auto& block = blocks[ci];
    for (int e : block) {
      comp_of_edge[e] = static_cast<int>(ci) + 1;
      succ[e] = (e == block.back()) ? block.front() : e + 1;
    }
  }

  for (int i = 0; i < ncross; ++i) {
    if (succ[tuples[i][0]] != tuples[i][2]) {
      raise(ErrorCode::BrokenTraversal,
            "crossing " + std::to_string(i + 1) +
                ": under-out is not the successor of under-in");
    }
  }

  // Resolve over-strand directions. over_in_pos[i] is 1 (b) or 3 (d).
  std::vector<int> over_in_pos(ncross, 0);
  std::map<std::pair<int, int>, Slot> slot_state;
  std::deque<std::pair<int, int>> queue;

  auto other_occ = [&](int crossing, int pos) -> EdgeOcc {
    int label = tuples[crossing][pos];
    const auto& uses = occ[label];
    if (uses[0].crossing == crossing && uses[0].pos == pos) return uses[1];
    return uses[0];
  };

  std::function<void(int, int, Slot)> set_slot = [&](int crossing, int pos,
                                                     Slot s) {
    auto key = std::make_pair(crossing, pos);
    auto it = slot_state.find(key);
    if (it != slot_state.end()) {
      if (it->second != s) {
        raise(ErrorCode::BrokenTraversal,
              "edge " + std::to_string(tuples[crossing][pos]) +
                  " cannot be oriented consistently");
      }
      return;
    }
    slot_state[key] = s;
    queue.push_back(key);
  };

  for (int i = 0; i < ncross; ++i) {
    set_slot(i, 0, Slot::In);
    set_slot(i, 2, Slot::Out);
    int b = tuples[i][1], d = tuples[i][3];
    bool b_dir = succ[b] == d;  // over runs b -> d
    bool d_dir = succ[d] == b;  // over runs d -> b
    if (!b_dir && !d_dir) {
      raise(ErrorCode::BrokenTraversal,
            "crossing " + std::to_string(i + 1) +
                ": over edges are not successive along a component");
    }
    if (b_dir && !d_dir) {
      set_slot(i, 1, Slot::In);
      set_slot(i, 3, Slot::Out);
    } else if (d_dir && !b_dir) {
      set_slot(i, 3, Slot::In);
      set_slot(i, 1, Slot::Out);
    }
  }

  auto drain = [&]() {
    while (!queue.empty()) {
      auto [crossing, pos] = queue.front();
      queue.pop_front();
      Slot s = slot_state[{crossing, pos}];
      EdgeOcc partner = other_occ(crossing, pos);
      Slot opposite = (s == Slot::In) ? Slot::Out : Slot::In;
      set_slot(partner.crossing, partner.pos, opposite);
      if (pos == 1 || pos == 3) {
        int sibling = (pos == 1) ? 3 : 1;
        set_slot(crossing, sibling, opposite);
      }
    }
  };
  drain();

  // Over-only two-edge components can stay ambiguous; fix them
  // deterministically (lowest crossing first, read the over strand as d->b).
  for (int i = 0; i < ncross; ++i) {
    if (slot_state.find({i, 1}) == slot_state.end()) {
      set_slot(i, 3, Slot::In);
      set_slot(i, 1, Slot::Out);
      drain();
    }
  }

  // Global sanity: every edge has exactly one head and one tail.
  for (const auto& [label, uses] : occ) {
    Slot s0 = slot_state[{uses[0].crossing, uses[0].pos}];
    Slot s1 = slot_state[{uses[1].crossing, uses[1].pos}];
    if (s0 == s1 || s0 == Slot::Unknown || s1 == Slot::Unknown) {
      raise(ErrorCode::BrokenTraversal,
            "edge " + std::to_string(label) + " is not traversed head-to-tail");
    }
  }

  LinkDiagram d;
  d.unknot_components = code.unknots;
  d.components = blocks;
  d.component_of_edge = comp_of_edge;
  d.crossings.reserve(ncross);
  for (int i = 0; i < ncross; ++i) {
    Crossing c;
    c.id = i + 1;
    c.under_in = tuples[i][0];
    c.under_out = tuples[i][2];
    bool d_in = slot_state[{i, 3}] == Slot::In;
    if (d_in) {
      c.over_in = tuples[i][3];
      c.over_out = tuples[i][1];
      c.sign = +1;
    } else {
      c.over_in = tuples[i][1];
      c.over_out = tuples[i][3];
      c.sign = -1;
    }
    d.crossings.push_back(c);
  }
  return d;
}

LinkDiagram parse_pd(const std::string& text) {
  return diagram_from_pd(parse_pd_code(text));
}

std::string serialize(const PDCode& code) {
  std::ostringstream out;
  for (const auto& t : code.crossings) {
    out << "X(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ")\n";
  }
  if (code.unknots > 0) out << "unknots=" << code.unknots << "\n";
  return out.str();
}

PDCode to_pd_code(const LinkDiagram& d) {
  PDCode code;
  code.unknots = d.unknot_components;
  for (const auto& c : d.crossings) {
    if (c.sign > 0) {
      code.crossings.push_back({c.under_in, c.over_out, c.under_out, c.over_in});
    } else {
      code.crossings.push_back({c.under_in, c.over_in, c.under_out, c.over_out});
    }
  }
  return code;
}

std::string serialize(const LinkDiagram& d) { return serialize(to_pd_code(d)); }

const Crossing& LinkDiagram::crossing(int id) const {
  if (id < 1 || id > static_cast<int>(crossings.size())) {
    raise(ErrorCode::UnknownCrossing, "no crossing with id " + std::to_string(id));
  }
  return crossings[id - 1];
}

int LinkDiagram::successor_edge(int edge) const {
  auto it = component_of_edge.find(edge);
  if (it == component_of_edge.end()) {
    raise(ErrorCode::OutOfRange, "unknown edge " + std::to_string(edge));
  }
  const auto& block = components[it->second - 1];
  return (edge == block.back()) ? block.front() : edge + 1;
}

int LinkDiagram::under_component(const Crossing& c) const {
  return component_of_edge.at(c.under_in);
}

int LinkDiagram::over_component(const Crossing& c) const {
  return component_of_edge.at(c.over_in);
}

std::vector<Violation> validate(const LinkDiagram& d) {
  std::vector<Violation> out;

  std::map<int, int> in_count, out_count, use_count;
  for (const auto& c : d.crossings) {
    for (int e : {c.under_in, c.over_in, c.under_out, c.over_out}) {
      if (e < 1) {
        out.push_back({"MalformedTuple", "crossing " + std::to_string(c.id) +
                                             " references nonpositive edge"});
      }
      ++use_count[e];
    }
    ++in_count[c.under_in];
    ++in_count[c.over_in];
    ++out_count[c.under_out];
    ++out_count[c.over_out];
    if (c.sign != 1 && c.sign != -1) {
      out.push_back({"MalformedTuple", "crossing " + std::to_string(c.id) +
                                           " has sign " + std::to_string(c.sign)});
    }
  }
  for (const auto& [e, n] : use_count) {
    if (n != 2) {
      out.push_back({"DuplicateEdgeUse", "edge " + std::to_string(e) + " used " +
                                             std::to_string(n) + " times"});
    }
  }
  for (const auto& [e, n] : in_count) {
    if (n != 1 || out_count[e] != 1) {
      out.push_back({"BrokenTraversal",
                     "edge " + std::to_string(e) +
                         " does not have exactly one head and one tail"});
    }
  }

  // Components must partition the edge set into consecutive blocks.
  std::map<int, int> comp_seen;
  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    const auto& block = d.components[ci];
    if (block.empty()) {
      out.push_back({"BrokenTraversal",
                     "component " + std::to_string(ci + 1) + " has no edges"});
      continue;
    }
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j > 0 && block[j] != block[j - 1] + 1) {
        out.push_back({"BrokenTraversal",
                       "component " + std::to_string(ci + 1) +
                           " edges are not consecutive"});
        break;
      }
    }
    for (int e : block) {
      ++comp_seen[e];
      auto it = d.component_of_edge.find(e);
      if (it == d.component_of_edge.end() ||
          it->second != static_cast<int>(ci) + 1) {
        out.push_back({"BrokenTraversal",
                       "edge " + std::to_string(e) +
                           " has inconsistent component assignment"});
      }
    }
  }
  for (const auto& [e, n] : use_count) {
    (void)n;
    if (comp_seen.find(e) == comp_seen.end()) {
      out.push_back({"BrokenTraversal", "edge " + std::to_string(e) +
                                            " belongs to no component"});
    }
  }

  // Orientation coherence through each crossing.
  if (out.empty()) {
    for (const auto& c : d.crossings) {
      if (d.successor_edge(c.under_in) != c.under_out) {
        out.push_back({"BrokenTraversal",
                       "crossing " + std::to_string(c.id) +
                           ": under strand breaks the traversal"});
      }
      if (d.successor_edge(c.over_in) != c.over_out) {
        out.push_back({"BrokenTraversal",
                       "crossing " + std::to_string(c.id) +
                           ": over strand breaks the traversal"});
      }
    }
  }
  if (d.unknot_components < 0) {
    out.push_back({"MalformedTuple", "negative unknot component count"});
  }
  return out;
}

int crossing_sign(const LinkDiagram& d, int crossing_id) {
  return d.crossing(crossing_id).sign;
}

int self_writhe(const LinkDiagram& d, int component) {
  if (component < 1 || component > d.component_count()) {
    raise(ErrorCode::UnknownComponent,
          "no component " + std::to_string(component));
  }
  int w = 0;
  for (const auto& c : d.crossings) {
    if (d.under_component(c) == component && d.over_component(c) == component) {
      w += c.sign;
    }
  }
  return w;
}

LinkDiagram apply_changes(const LinkDiagram& d, const std::set<int>& crossing_ids) {
  LinkDiagram out = d;
  for (int id : crossing_ids) {
    if (id < 1 || id > static_cast<int>(out.crossings.size())) {
      raise(ErrorCode::UnknownCrossing,
            "no crossing with id " + std::to_string(id));
    }
    Crossing& c = out.crossings[id - 1];
    std::swap(c.under_in, c.over_in);
    std::swap(c.under_out, c.over_out);
    c.sign = -c.sign;
  }
  return out;
}

CrossingPair crossing_components(const LinkDiagram& d, const Crossing& c) {
  CrossingPair p;
  int a = d.under_component(c);
  int b = d.over_component(c);
  p.self = (a == b);
  p.i = std::min(a, b);
  p.j = std::max(a, b);
  return p;
}

LinkDiagram remove_components(const LinkDiagram& d, const std::set<int>& comps) {
  const int n = d.component_count();
  for (int c : comps) {
    if (c < 1 || c > n) {
      raise(ErrorCode::UnknownComponent, "no component " + std::to_string(c));
    }
  }
  const int edged = d.edged_component_count();
  WalkDiagram walks = walks_from_diagram(d);

  // Crossings survive iff both strands stay.
  std::vector<int> new_id(d.crossings.size() + 1, 0);
  WalkDiagram out;
  for (const auto& c : d.crossings) {
    bool keep = !comps.count(d.under_component(c)) &&
                !comps.count(d.over_component(c));
    if (keep) new_id[c.id] = out.add_crossing(c.sign);
  }
  for (int ci = 0; ci < edged; ++ci) {
    if (comps.count(ci + 1)) continue;
    std::vector<StrandPassage> walk;
    for (const auto& p : walks.walks[ci]) {
      if (new_id[p.crossing] != 0) walk.push_back({new_id[p.crossing], p.over});
    }
    out.walks.push_back(std::move(walk));
  }
  out.unknots = d.unknot_components;
  for (int c : comps) {
    if (c > edged) --out.unknots;
  }
  return diagram_from_pd(out.emit());
}

}  // namespace linkforge
