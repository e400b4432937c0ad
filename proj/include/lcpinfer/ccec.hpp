#pragma once

/**
 * @file ccec.hpp
 * @brief Coupling Constrained Eulerian Cycle instances and the 3-SAT gadgets.
 *
 * Every vertex has two in-ports and two out-ports. In the Straight state
 * in1 continues to out1 and in2 to out2; in the Crossing state in1 continues
 * to out2 and in2 to out1. Vertices are grouped into partitions that can only
 * be flipped as a whole. An instance is solved by a set of flipped partitions
 * whose routing turns all edges into one cycle.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lcpinfer/errors.hpp"

namespace lcpinfer {

enum class PortState : std::uint8_t { Straight, Crossing };

inline PortState toggled(PortState s) { return s == PortState::Straight ? PortState::Crossing : PortState::Straight; }

/// Vertex port: `port` is 0 for in1/out1 and 1 for in2/out2.
struct PortRef {
  std::size_t vertex = 0;
  std::uint8_t port = 0;
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

struct CcecEdge {
  PortRef from;  // out-port
  PortRef to;    // in-port
  std::string label;
};

struct VertexTag {
  enum class Kind : std::uint8_t { Plain, Literal, Free, Y };
  Kind kind = Kind::Plain;
  int variable = 0;  // 1-based, Literal only
  bool negated = false;

  std::string name() const {
    switch (kind) {
      case Kind::Literal:
        return (negated ? "~x" : "x") + std::to_string(variable);
      case Kind::Free:
        return "free";
      case Kind::Y:
        return "y";
      default:
        return "v";
    }
  }
};

/// Degree-(2,2) digraph with partitions and an initial state. Vertex i has
/// number i + 1 and partition p has number p + 1.
class CcecInstance {
 public:
  std::size_t add_vertex(PortState initial, VertexTag tag = {}) {
    tags_.push_back(tag);
    initial_.push_back(initial);
    ready_ = false;
    return tags_.size() - 1;
  }

  void connect(std::size_t u, std::uint8_t out_port, std::size_t v, std::uint8_t in_port, std::string label = {}) {
    edges_.push_back({{u, out_port}, {v, in_port}, std::move(label)});
    ready_ = false;
  }

  void set_partitions(std::vector<std::vector<std::size_t>> partitions) {
    partitions_ = std::move(partitions);
    ready_ = false;
  }

  std::size_t vertex_count() const { return tags_.size(); }
  std::size_t partition_count() const { return partitions_.size(); }
  const std::vector<CcecEdge>& edges() const { return edges_; }
  const std::vector<std::vector<std::size_t>>& partitions() const { return partitions_; }
  const std::vector<PortState>& initial_state() const { return initial_; }
  const VertexTag& tag(std::size_t v) const { return tags_.at(v); }
  std::size_t partition_of(std::size_t v) const {
    check_ready();
    return partition_of_[v];
  }

  /// Checks port degrees and the partition cover, then builds port lookups.
  void finalize() {
    const std::size_t n = tags_.size();
    out_edge_.assign(2 * n, kNoEdge);
    in_edge_.assign(2 * n, kNoEdge);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& ed = edges_[e];
      if (ed.from.vertex >= n || ed.to.vertex >= n || ed.from.port > 1 || ed.to.port > 1) {
        throw validation_error("edge " + std::to_string(e) + " refers to a missing vertex or port");
      }
      auto& o = out_edge_[2 * ed.from.vertex + ed.from.port];
      auto& i = in_edge_[2 * ed.to.vertex + ed.to.port];
      if (o != kNoEdge || i != kNoEdge) throw validation_error("port used twice by edge " + std::to_string(e));
      o = e;
      i = e;
    }
    for (std::size_t k = 0; k < 2 * n; ++k) {
      if (out_edge_[k] == kNoEdge || in_edge_[k] == kNoEdge) {
        throw validation_error("vertex " + std::to_string(k / 2 + 1) + " does not have degree (2,2)");
      }
    }
    partition_of_.assign(n, kNoEdge);
    for (std::size_t p = 0; p < partitions_.size(); ++p) {
      if (partitions_[p].empty()) throw validation_error("empty partition " + std::to_string(p + 1));
      for (std::size_t v : partitions_[p]) {
        if (v >= n || partition_of_[v] != kNoEdge) throw validation_error("partitions do not partition the vertices");
        partition_of_[v] = p;
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (partition_of_[v] == kNoEdge) throw validation_error("vertex " + std::to_string(v + 1) + " in no partition");
    }
    ready_ = true;
  }

  bool ready() const { return ready_; }

  std::size_t out_edge(std::size_t v, std::uint8_t port) const {
    check_ready();
    return out_edge_[2 * v + port];
  }
  std::size_t in_edge(std::size_t v, std::uint8_t port) const {
    check_ready();
    return in_edge_[2 * v + port];
  }

  /// Edge taken after `e` when its head vertex is in `state`.
  std::size_t successor(std::size_t e, const std::vector<PortState>& state) const {
    const PortRef to = edges_[e].to;
    const std::uint8_t out = state[to.vertex] == PortState::Straight ? to.port : static_cast<std::uint8_t>(1 - to.port);
    return out_edge_[2 * to.vertex + out];
  }

  /// Weak connectivity of the underlying graph.
  bool is_connected() const {
    const std::size_t n = tags_.size();
    if (n == 0) return true;
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : edges_) parent[find(e.from.vertex)] = find(e.to.vertex);
    for (std::size_t v = 1; v < n; ++v) {
      if (find(v) != find(0)) return false;
    }
    return true;
  }

  std::vector<PortState> state_after(const std::vector<std::size_t>& flipped_partitions) const {
    check_ready();
    std::vector<PortState> s = initial_;
    for (std::size_t p : flipped_partitions) {
      if (p >= partitions_.size()) throw argument_error("no partition " + std::to_string(p + 1));
      for (std::size_t v : partitions_[p]) s[v] = toggled(s[v]);
    }
    return s;
  }

  /// Copy with vertex v moved to index new_index[v].
  CcecInstance renumbered(const std::vector<std::size_t>& new_index) const;

 private:
  static constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

  void check_ready() const {
    if (!ready_) throw validation_error("instance not finalized");
  }

  std::vector<VertexTag> tags_;
  std::vector<PortState> initial_;
  std::vector<CcecEdge> edges_;
  std::vector<std::vector<std::size_t>> partitions_;
  std::vector<std::size_t> out_edge_, in_edge_, partition_of_;
  bool ready_ = false;
};

inline CcecInstance CcecInstance::renumbered(const std::vector<std::size_t>& new_index) const {
  const std::size_t n = tags_.size();
  if (new_index.size() != n) throw argument_error("renumbering size mismatch");
  std::vector<std::size_t> old_of(n, kNoEdge);
  for (std::size_t v = 0; v < n; ++v) {
    if (new_index[v] >= n || old_of[new_index[v]] != kNoEdge) throw argument_error("renumbering is not a permutation");
    old_of[new_index[v]] = v;
  }
  CcecInstance out;
  for (std::size_t i = 0; i < n; ++i) out.add_vertex(initial_[old_of[i]], tags_[old_of[i]]);
  for (const auto& e : edges_) {
    out.connect(new_index[e.from.vertex], e.from.port, new_index[e.to.vertex], e.to.port, e.label);
  }
  auto parts = partitions_;
  for (auto& p : parts) {
    for (auto& v : p) v = new_index[v];
    std::sort(p.begin(), p.end());
  }
  out.set_partitions(std::move(parts));
  out.finalize();
  return out;
}

/// Edge-disjoint cycles induced by `state`; each cycle lists edge ids
/// starting from its smallest edge id, cycles ordered by that id.
inline std::vector<std::vector<std::size_t>> cycles(const CcecInstance& g, const std::vector<PortState>& state) {
  if (!g.ready()) throw validation_error("instance not finalized");
  if (state.size() != g.vertex_count()) throw validation_error("state size mismatch");
  std::vector<bool> seen(g.edges().size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t e0 = 0; e0 < g.edges().size(); ++e0) {
    if (seen[e0]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t e = e0; !seen[e]; e = g.successor(e, state)) {
      seen[e] = true;
      cyc.push_back(e);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

inline std::size_t cycle_count(const CcecInstance& g, const std::vector<PortState>& state) {
  return cycles(g, state).size();
}

inline bool is_eulerian(const CcecInstance& g, const std::vector<PortState>& state) {
  if (g.edges().empty()) return false;
  // Walk one cycle and compare its length with the edge count.
  std::size_t len = 0;
  std::size_t e = 0;
  do {
    e = g.successor(e, state);
    ++len;
  } while (e != 0 && len <= g.edges().size());
  return len == g.edges().size();
}

/// Selected partition indices (0-based), ascending.
struct FlipSet {
  std::vector<std::size_t> partitions;
  friend bool operator==(const FlipSet&, const FlipSet&) = default;
};

inline constexpr std::size_t kDefaultFlipCap = 24;

namespace detail {

inline std::vector<PortState> state_for_mask(const CcecInstance& g, std::uint64_t mask) {
  std::vector<PortState> s = g.initial_state();
  for (std::size_t p = 0; p < g.partition_count(); ++p) {
    if ((mask >> p) & 1u) {
      for (std::size_t v : g.partitions()[p]) s[v] = toggled(s[v]);
    }
  }
  return s;
}

inline FlipSet flipset_of_mask(std::uint64_t mask, std::size_t m) {
  FlipSet f;
  for (std::size_t p = 0; p < m; ++p) {
    if ((mask >> p) & 1u) f.partitions.push_back(p);
  }
  return f;
}

}  // namespace detail

/// Exhaustive search over the 2^m flip sets, lowest mask first; partition p
/// is bit p of the mask. `jobs` > 1 splits the mask range across threads and
/// still reports the lowest solving mask.
inline std::optional<FlipSet> solve(const CcecInstance& g, std::size_t cap = kDefaultFlipCap, std::size_t jobs = 1) {
  if (!g.ready()) throw validation_error("instance not finalized");
  const std::size_t m = g.partition_count();
  if (m > cap || m >= 63)
    throw resource_error("flip search over " + std::to_string(m) + " partitions exceeds cap", cap);
  const std::uint64_t total = std::uint64_t{1} << m;
  if (jobs <= 1 || total < 1024) {
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (is_eulerian(g, detail::state_for_mask(g, mask))) return detail::flipset_of_mask(mask, m);
    }
    return std::nullopt;
  }

  std::atomic<std::uint64_t> best{total};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      // Strided assignment keeps every thread near the low masks.
      for (std::uint64_t mask = t; mask < total && mask < best.load(); mask += jobs) {
        if (is_eulerian(g, detail::state_for_mask(g, mask))) {
          std::uint64_t cur = best.load();
          while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (best.load() == total) return std::nullopt;
  return detail::flipset_of_mask(best.load(), m);
}

// ---------------------------------------------------------------------------
// 3-CNF input and the gadget construction.

struct Cnf {
  std::size_t variables = 0;
  std::vector<std::vector<int>> clauses;  // DIMACS literals, +v or -v
};

inline Cnf parse_dimacs(std::istream& in) {
  Cnf f;
  bool header = false;
  std::vector<int> clause;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      long long nv = 0, nc = 0;
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0) throw argument_error("bad DIMACS header");
      f.variables = static_cast<std::size_t>(nv);
      header = true;
      continue;
    }
    if (!header) throw argument_error("DIMACS clause before header");
    std::istringstream toks(line);
    std::string tok;
    while (toks >> tok) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw argument_error("bad DIMACS literal '" + tok + "'");
      if (lit == 0) {
        f.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::labs(lit)) > f.variables) {
        throw argument_error("literal " + tok + " exceeds declared variable count");
      }
      clause.push_back(static_cast<int>(lit));
    }
  }
  if (!header) throw argument_error("missing DIMACS header");
  if (!clause.empty()) f.clauses.push_back(clause);
  return f;
}

inline Cnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

/// Assignment bit v-1 holds x_v.
inline bool satisfies(const Cnf& f, std::uint64_t assignment) {
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (int lit : c) {
      const bool val = (assignment >> (std::abs(lit) - 1)) & 1u;
      if ((lit > 0) == val) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

inline std::optional<std::uint64_t> brute_force_sat(const Cnf& f) {
  if (f.variables >= 63) throw resource_error("too many variables for brute force", 62);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.variables); ++a) {
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

/// Vertex roles recorded by from_cnf, in final (numbered) indices.
struct CnfLayout {
  struct Clause {
    std::size_t l1, f1, l2, f2, l3;
  };
  struct Extra {
    std::size_t v1, v2, v3, v4;  // v1..v3 labeled x_i, v4 labeled ~x_i
  };
  std::vector<Clause> clauses;
  std::vector<Extra> extras;  // index i-1 for variable i
  std::size_t y = 0;
  std::vector<std::size_t> variable_partition;  // index i-1 for variable i
  std::size_t y_partition = 0;
};

/// Builds the CCEC instance of a 3-CNF formula: one five-vertex gadget per
/// clause, one four-vertex gadget per variable and a vertex y with a self
/// loop, all chained on a main cycle. Variables start false; a literal
/// vertex starts Straight exactly when its literal is false.
///
/// Numbering: the x_1 vertices of the extra gadget of x_1 get the three
/// largest numbers (middle one largest), then those of x_2, and so on; y's
/// partition gets the largest partition number, then x_1, x_2, ...
inline CcecInstance from_cnf(const Cnf& f, CnfLayout* layout = nullptr) {
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    if (f.clauses[c].size() != 3) {
      throw instance_error("clause " + std::to_string(c + 1) + " has " + std::to_string(f.clauses[c].size()) +
                           " literals, expected 3");
    }
    for (int lit : f.clauses[c]) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.variables) {
        throw instance_error("clause " + std::to_string(c + 1) + " uses an undeclared variable");
      }
    }
  }
  if (f.variables == 0) throw instance_error("formula has no variables");

  CcecInstance g;
  auto literal = [&](int lit) {
    const bool neg = lit < 0;
    // All variables start false, so a negative literal starts true.
    return g.add_vertex(neg ? PortState::Crossing : PortState::Straight,
                        {VertexTag::Kind::Literal, std::abs(lit), neg});
  };
  auto free_vertex = [&] { return g.add_vertex(PortState::Straight, {VertexTag::Kind::Free, 0, false}); };

  CnfLayout lay;
  std::vector<std::size_t> free_ids;
  std::vector<std::vector<std::size_t>> var_members(f.variables);
  std::vector<std::pair<std::size_t, std::size_t>> chain;  // (entry vertex, exit vertex) on port 2

  for (const auto& c : f.clauses) {
    CnfLayout::Clause cl{};
    cl.l1 = literal(c[0]);
    cl.f1 = free_vertex();
    cl.l2 = literal(c[1]);
    cl.f2 = free_vertex();
    cl.l3 = literal(c[2]);
    free_ids.push_back(cl.f1);
    free_ids.push_back(cl.f2);
    var_members[std::abs(c[0]) - 1].push_back(cl.l1);
    var_members[std::abs(c[1]) - 1].push_back(cl.l2);
    var_members[std::abs(c[2]) - 1].push_back(cl.l3);

    g.connect(cl.l1, 0, cl.f1, 1);
    g.connect(cl.f1, 1, cl.l2, 0);
    g.connect(cl.l2, 0, cl.f2, 1);
    g.connect(cl.f2, 1, cl.l3, 0);
    g.connect(cl.l1, 1, cl.l2, 1);
    g.connect(cl.l2, 1, cl.l3, 1);
    g.connect(cl.f1, 0, cl.f2, 0);
    g.connect(cl.l3, 0, cl.f1, 0);
    g.connect(cl.f2, 0, cl.l1, 0);
    chain.emplace_back(cl.l1, cl.l3);
    lay.clauses.push_back(cl);
  }

  for (std::size_t i = 1; i <= f.variables; ++i) {
    const int v = static_cast<int>(i);
    CnfLayout::Extra ex{literal(v), literal(v), literal(v), literal(-v)};
    const std::size_t ids[4] = {ex.v1, ex.v2, ex.v3, ex.v4};
    for (std::size_t t = 0; t < 4; ++t) {
      var_members[i - 1].push_back(ids[t]);
      g.connect(ids[t], 0, ids[(t + 1) % 4], 0);
      if (t < 3) g.connect(ids[t], 1, ids[t + 1], 1);
    }
    chain.emplace_back(ex.v1, ex.v4);
    lay.extras.push_back(ex);
  }

  // y routes the main cycle through its self loop while Crossing.
  lay.y = g.add_vertex(PortState::Crossing, {VertexTag::Kind::Y, 0, false});
  g.connect(lay.y, 0, lay.y, 0);
  chain.emplace_back(lay.y, lay.y);
  for (std::size_t t = 0; t < chain.size(); ++t) {
    g.connect(chain[t].second, 1, chain[(t + 1) % chain.size()].first, 1);
  }

  // Partitions: free singletons first (low numbers), then x_N .. x_1, then y.
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t fv : free_ids) parts.push_back({fv});
  lay.variable_partition.assign(f.variables, 0);
  for (std::size_t i = f.variables; i >= 1; --i) {
    lay.variable_partition[i - 1] = parts.size();
    parts.push_back(var_members[i - 1]);
  }
  lay.y_partition = parts.size();
  parts.push_back({lay.y});
  g.set_partitions(std::move(parts));

  // Vertex numbers: extra-gadget x_i vertices take the top, the rest keep
  // construction order below them.
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> new_index(n, n);
  std::size_t top = n;
  for (const auto& ex : lay.extras) {
    new_index[ex.v2] = --top;
    new_index[ex.v1] = --top;
    new_index[ex.v3] = --top;
  }
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (new_index[v] == n) new_index[v] = next++;
  }
  CcecInstance out = g.renumbered(new_index);

  if (layout) {
    auto remap = [&](std::size_t& v) { v = new_index[v]; };
    for (auto& cl : lay.clauses) {
      remap(cl.l1), remap(cl.f1), remap(cl.l2), remap(cl.f2), remap(cl.l3);
    }
    for (auto& ex : lay.extras) {
      remap(ex.v1), remap(ex.v2), remap(ex.v3), remap(ex.v4);
    }
    remap(lay.y);
    *layout = std::move(lay);
  }
  return out;
}

/// State of `g` for a truth assignment (bit v-1 = x_v) with free vertices
/// and y left at their initial state.
inline std::vector<PortState> state_for_assignment(const CcecInstance& g, std::uint64_t assignment) {
  std::vector<PortState> s = g.initial_state();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& t = g.tag(v);
    if (t.kind != VertexTag::Kind::Literal) continue;
    const bool val = (assignment >> (t.variable - 1)) & 1u;
    const bool literal_true = val != t.negated;
    s[v] = literal_true ? PortState::Crossing : PortState::Straight;
  }
  return s;
}

/// Graphviz rendering; each vertex shows its number, tag, partition and state.
inline std::string ccec_to_dot(const CcecInstance& g, const std::vector<PortState>* state = nullptr) {
  const auto& st = state ? *state : g.initial_state();
  std::ostringstream os;
  os << "digraph ccec {\n  node [shape=record];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v + 1 << " [label=\"{<i1>in1|<i2>in2}|" << v + 1 << " " << g.tag(v).name() << "\\nP"
       << g.partition_of(v) + 1 << " " << (st[v] == PortState::Straight ? "straight" : "crossing")
       << "|{<o1>out1|<o2>out2}\"];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  v" << e.from.vertex + 1 << ":o" << int(e.from.port) + 1 << " -> v" << e.to.vertex + 1 << ":i"
       << int(e.to.port) + 1;
    if (!e.label.empty()) os << " [label=\"" << e.label << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lcpinfer
