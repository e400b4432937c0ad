#include <gtest/gtest.h>

#include <numeric>

#include "lcpinfer/ccec.hpp"

using namespace lcpinfer;

namespace {

const Cnf kFourVariables{4, {{1, 2, -3}, {-1, 3, 4}, {1, -2, -4}}};

// Two vertices with port-aligned edges in both directions: two cycles when
// both states agree, one big cycle otherwise.
CcecInstance two_vertex(PortState s0, PortState s1) {
  CcecInstance g;
  g.add_vertex(s0);
  g.add_vertex(s1);
  g.connect(0, 0, 1, 0);
  g.connect(0, 1, 1, 1);
  g.connect(1, 0, 0, 0);
  g.connect(1, 1, 0, 1);
  g.set_partitions({{0}, {1}});
  g.finalize();
  return g;
}

// All 3-CNF formulas over `vars` variables with `k` clauses, each clause a
// sorted triple of literals.
std::vector<Cnf> all_formulas(std::size_t vars, std::size_t k) {
  std::vector<int> lits;
  for (int v = 1; v <= static_cast<int>(vars); ++v) {
    lits.push_back(v);
    lits.push_back(-v);
  }
  std::vector<std::vector<int>> triples;
  for (std::size_t a = 0; a < lits.size(); ++a)
    for (std::size_t b = a; b < lits.size(); ++b)
      for (std::size_t c = b; c < lits.size(); ++c) triples.push_back({lits[a], lits[b], lits[c]});
  std::vector<Cnf> out;
  if (k == 1) {
    for (const auto& t : triples) out.push_back({vars, {t}});
  } else {
    for (std::size_t i = 0; i < triples.size(); ++i)
      for (std::size_t j = i; j < triples.size(); ++j) out.push_back({vars, {triples[i], triples[j]}});
  }
  return out;
}

}  // namespace

TEST(Cycles, TwoVertexInstance) {
  const auto crossing = two_vertex(PortState::Straight, PortState::Crossing);
  EXPECT_EQ(cycle_count(crossing, crossing.initial_state()), 1u);
  EXPECT_TRUE(is_eulerian(crossing, crossing.initial_state()));
  const auto straight = two_vertex(PortState::Straight, PortState::Straight);
  EXPECT_EQ(cycle_count(straight, straight.initial_state()), 2u);
  EXPECT_FALSE(is_eulerian(straight, straight.initial_state()));
  EXPECT_EQ(solve(crossing), FlipSet{});
  EXPECT_EQ(solve(straight), (FlipSet{{0}}));
}

TEST(Cycles, PartitionTheEdges) {
  const auto g = from_cnf(kFourVariables);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto st = g.state_after({mask & 1 ? 0u : 1u, static_cast<std::size_t>(mask % 11)});
    std::vector<int> seen(g.edges().size(), 0);
    std::size_t total = 0;
    for (const auto& c : cycles(g, st)) {
      total += c.size();
      for (auto e : c) ++seen[e];
    }
    EXPECT_EQ(total, g.edges().size());
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(Instance, RejectsMalformed) {
  CcecInstance g;
  g.add_vertex(PortState::Straight);
  g.connect(0, 0, 0, 0);
  g.set_partitions({{0}});
  EXPECT_THROW(g.finalize(), validation_error);
  g.connect(0, 1, 0, 1);
  g.set_partitions({});
  EXPECT_THROW(g.finalize(), validation_error);
  g.set_partitions({{0}});
  EXPECT_NO_THROW(g.finalize());
  CcecInstance raw;
  raw.add_vertex(PortState::Straight);
  EXPECT_THROW(cycles(raw, raw.initial_state()), validation_error);
}

TEST(FromCnf, FourVariableShape) {
  CnfLayout layout;
  const auto g = from_cnf(kFourVariables, &layout);
  EXPECT_EQ(g.vertex_count(), 32u);
  EXPECT_EQ(g.partition_count(), 11u);
  EXPECT_TRUE(g.is_connected());
  EXPECT_GT(cycle_count(g, g.initial_state()), 1u);
  EXPECT_EQ(layout.clauses.size(), 3u);
  EXPECT_EQ(layout.extras.size(), 4u);
  EXPECT_EQ(layout.y_partition, 10u);
  EXPECT_EQ(g.tag(layout.y).kind, VertexTag::Kind::Y);
  // The x1 extra gadget holds the largest vertex numbers, middle one last.
  EXPECT_EQ(layout.extras[0].v2, 31u);
  EXPECT_EQ(layout.extras[0].v1, 30u);
  EXPECT_EQ(layout.extras[0].v3, 29u);
  EXPECT_TRUE(g.tag(layout.extras[0].v4).negated);
  EXPECT_EQ(solve(g).has_value(), brute_force_sat(kFourVariables).has_value());
}

TEST(FromCnf, VertexCounts) {
  EXPECT_EQ(from_cnf({3, {{1, 2, 3}}}).vertex_count(), 18u);
  EXPECT_THROW(from_cnf({2, {{1, 2}}}), instance_error);
  EXPECT_THROW(from_cnf({2, {{1, 2, 3}}}), instance_error);
  EXPECT_THROW(from_cnf({0, {}}), instance_error);
}

TEST(Solve, UnsatisfiableAndCap) {
  const Cnf unsat{1, {{1, 1, 1}, {-1, -1, -1}}};
  EXPECT_FALSE(solve(from_cnf(unsat)).has_value());
  EXPECT_THROW(solve(from_cnf(kFourVariables), 5), resource_error);
  try {
    solve(from_cnf(kFourVariables), 5);
  } catch (const resource_error& e) {
    EXPECT_EQ(e.cap(), 5u);
  }
}

TEST(Solve, ParallelMatchesSerial) {
  const auto g = from_cnf(kFourVariables);
  EXPECT_EQ(solve(g, kDefaultFlipCap, 4), solve(g));
  const auto u = from_cnf({2, {{1, 1, 2}, {-1, -1, -2}}});
  EXPECT_EQ(solve(u, kDefaultFlipCap, 3), solve(u));
}

TEST(Solve, AgreesWithBruteForceSat) {
  std::size_t checked = 0;
  for (std::size_t vars = 1; vars <= 3; ++vars) {
    for (std::size_t k = 1; k <= 2; ++k) {
      for (const auto& f : all_formulas(vars, k)) {
        ASSERT_EQ(solve(from_cnf(f)).has_value(), brute_force_sat(f).has_value());
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 1896u);
}

TEST(Assignment, FlippingAVariablePartitionTogglesItsLiterals) {
  CnfLayout layout;
  const auto g = from_cnf(kFourVariables, &layout);
  for (std::size_t i = 1; i <= 4; ++i) {
    const auto st = g.state_after({layout.variable_partition[i - 1]});
    EXPECT_EQ(st, state_for_assignment(g, std::uint64_t{1} << (i - 1)));
  }
}

// Every satisfying assignment extends to an Eulerian state by flipping
// free vertices only.
TEST(Assignment, SatisfyingAssignmentsHaveFreeCompletions) {
  for (const auto& f : all_formulas(2, 2)) {
    CnfLayout layout;
    const auto g = from_cnf(f, &layout);
    std::vector<std::size_t> free_parts;
    for (std::size_t p = 0; p < g.partition_count(); ++p) {
      if (g.tag(g.partitions()[p][0]).kind == VertexTag::Kind::Free) free_parts.push_back(p);
    }
    for (std::uint64_t a = 0; a < 4; ++a) {
      if (!satisfies(f, a)) continue;
      bool found = false;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_parts.size()) && !found; ++m) {
        std::vector<std::size_t> flips;
        for (std::size_t i = 1; i <= 2; ++i)
          if ((a >> (i - 1)) & 1u) flips.push_back(layout.variable_partition[i - 1]);
        for (std::size_t t = 0; t < free_parts.size(); ++t)
          if ((m >> t) & 1u) flips.push_back(free_parts[t]);
        found = is_eulerian(g, g.state_after(flips));
      }
      ASSERT_TRUE(found);
    }
  }
}

TEST(Dimacs, ParsesAndRejects) {
  const auto f = parse_dimacs("c comment\np cnf 2 2\n1 -2 2 0\n-1 2 2 0\n");
  EXPECT_EQ(f.variables, 2u);
  EXPECT_EQ(f.clauses, (std::vector<std::vector<int>>{{1, -2, 2}, {-1, 2, 2}}));
  EXPECT_THROW(parse_dimacs("1 2 3 0\n"), argument_error);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n1 x 0\n"), argument_error);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 2 0\n"), argument_error);
}

TEST(Dot, RendersPortsAndStates) {
  const auto g = from_cnf({1, {{1, 1, 1}}});
  const auto dot = ccec_to_dot(g, &g.initial_state());
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("straight"), std::string::npos);
  EXPECT_NE(dot.find("crossing"), std::string::npos);
}
