#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "sgrp/cayley.hpp"

using namespace sgrp;

namespace {

// Reference transition test: an edge is a transition edge iff there is no
// directed path from its destination back to its source.
bool reachable(TwoSidedCayleyGraph const& g, int from, int to) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::queue<int> q;
  q.push(from);
  seen[static_cast<std::size_t>(from)] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == to) return true;
    for (int e : g.out_edges(v)) {
      int w = g.edges()[static_cast<std::size_t>(e)].dst;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        q.push(w);
      }
    }
  }
  return false;
}

int count_substr(std::string const& s, std::string const& needle) {
  int n = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos;
       pos = s.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("graph shape for the trivial semigroup on one letter") {
  auto s = share(corpus::trivial());
  auto gens = corpus::gens({"a"}, {0});
  auto g = TwoSidedCayleyGraph::build(s, gens);
  int I = FiniteSemigroup::kIdentity;

  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 4);  // |A| (n+1)^2

  // Vertices whose right component is I have no outgoing edges; vertices
  // whose left component is I have no incoming loops.
  CHECK(g.out_edges(g.vertex_id(I, I)).empty());
  CHECK(g.out_edges(g.vertex_id(0, I)).empty());
  CHECK(g.out_edges(g.vertex_id(I, 0)).size() == 2);

  // The only loop sits at (e, e).
  int loops = 0;
  for (auto const& e : g.edges()) {
    if (e.src == e.dst) {
      ++loops;
      CHECK(e.src == g.vertex_id(0, 0));
      CHECK_FALSE(g.is_transition(g.find_edge(e.src, e.letter, e.dst)));
    }
  }
  CHECK(loops == 1);
  CHECK(g.transition_count() == 3);
  CHECK(g.vertex_label(g.vertex_id(I, 0)) == "(I,e)");
}

TEST_CASE("edge count is |A| (n+1)^2 and loops are never transitions") {
  for (auto const& inst : corpus::instances()) {
    CAPTURE(inst.name);
    auto g = TwoSidedCayleyGraph::build(inst.s, inst.minimal_gens);
    int n1 = inst.s->order() + 1;
    CHECK(static_cast<int>(g.edges().size()) ==
          inst.minimal_gens.size() * n1 * n1);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      if (g.edges()[e].src == g.edges()[e].dst) {
        CHECK_FALSE(g.is_transition(static_cast<int>(e)));
      }
    }
  }
}

TEST_CASE("edges satisfy the defining relation") {
  auto s = share(corpus::semilattice2());
  auto gens = corpus::gens({"a", "b"}, {0, 1});
  auto g = TwoSidedCayleyGraph::build(s, gens);
  for (auto const& e : g.edges()) {
    auto [s1, t1] = g.vertex(e.src);
    auto [s2, t2] = g.vertex(e.dst);
    int img = gens.image(e.letter);
    CHECK(s->mul(s1, img) == s2);
    CHECK(s->mul(img, t2) == t1);
  }
}

TEST_CASE("transition flags match the reachability definition") {
  std::vector<corpus::Instance> insts = corpus::instances();
  for (auto const& inst : insts) {
    CAPTURE(inst.name);
    auto g = TwoSidedCayleyGraph::build(inst.s, inst.minimal_gens);
    if (g.vertex_count() > 400) continue;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      auto const& edge = g.edges()[e];
      bool trans = !reachable(g, edge.dst, edge.src);
      CHECK(g.is_transition(static_cast<int>(e)) == trans);
      CHECK(trans == (g.scc_of(edge.src) != g.scc_of(edge.dst)));
    }
  }
}

TEST_CASE("canonical paths walk prefix-suffix vertices") {
  auto s = share(corpus::semilattice2());
  auto gens = corpus::gens({"a", "b"}, {0, 1});
  auto g = TwoSidedCayleyGraph::build(s, gens);
  int I = FiniteSemigroup::kIdentity;

  auto p = g.path_of_word({0, 1});  // ab
  REQUIRE(p.vertices.size() == 3);
  CHECK(p.vertices[0] == g.vertex_id(I, 1));  // (I, ab) = (I, b)
  CHECK(p.vertices[1] == g.vertex_id(0, 1));  // (a, b)
  CHECK(p.vertices[2] == g.vertex_id(1, I));  // (ab, I) = (b, I)
  REQUIRE(p.edge_ids.size() == 2);
  for (std::size_t i = 0; i < p.edge_ids.size(); ++i) {
    auto const& e = g.edges()[static_cast<std::size_t>(p.edge_ids[i])];
    CHECK(e.src == p.vertices[i]);
    CHECK(e.dst == p.vertices[i + 1]);
    CHECK(e.letter == p.word[i]);
  }
  CHECK_THROWS_AS(g.path_of_word({}), Error);
}

TEST_CASE("transition sets distinguish and merge words") {
  auto s = share(corpus::trivial());
  auto gens = corpus::gens({"a"}, {0});
  auto g = TwoSidedCayleyGraph::build(s, gens);

  auto ta = g.transition_set({0});
  auto taa = g.transition_set({0, 0});
  auto taaa = g.transition_set({0, 0, 0});
  CHECK(ta.count() == 1);
  CHECK(taa.count() == 2);
  CHECK(taa == taaa);
  CHECK_FALSE(ta == taa);
}

TEST_CASE("dot export is deterministic and marks transitions bold") {
  auto s = share(corpus::trivial());
  auto gens = corpus::gens({"a"}, {0});
  auto g = TwoSidedCayleyGraph::build(s, gens);

  auto d1 = g.to_dot();
  auto d2 = g.to_dot();
  CHECK(d1 == d2);
  CHECK(d1.find("digraph") != std::string::npos);
  CHECK(count_substr(d1, "bold") == 3);
  CHECK(count_substr(d1, "->") == 4);

  DotOptions reach;
  reach.only_reachable = true;
  auto dr = g.to_dot(reach);
  // Restricting to vertices on canonical paths drops (I,I) and keeps the
  // three path vertices with all four edges intact.
  CHECK(count_substr(dr, "label=\"(I,I)\"") == 0);
  CHECK(count_substr(dr, "->") == 4);
  CHECK(dr.find("(I,e)") != std::string::npos);
}
