#ifndef SGRP_CAYLEY_HPP
#define SGRP_CAYLEY_HPP

#include <string>
#include <vector>

#include "sgrp/semigroup.hpp"
#include "sgrp/util.hpp"

namespace sgrp {

/// One labelled edge of the two-sided Cayley graph, identified by the triple
/// (source vertex, letter, target vertex).
struct CayleyEdge {
  int src;
  int letter;
  int dst;
};

/// A labelled path: word, the visited vertices (word length + 1 of them) and
/// the edge ids traversed.
struct GraphPath {
  Word word;
  std::vector<int> vertices;
  std::vector<int> edge_ids;
};

struct DotOptions {
  /// Restrict to vertices lying on the canonical path of some word, i.e.
  /// vertices both reachable from a start vertex (I, s) and co-reachable
  /// to an end vertex (s, I).
  bool only_reachable = false;
};

/// The two-sided Cayley graph of a generating map: vertices are all pairs
/// (s, t) over S^I, and an a-labelled edge (s1, t1) -> (s2, t2) exists iff
/// s1 * a = s2 and t1 = a * t2 (products in S^I).  An edge is a transition
/// edge iff its endpoints lie in distinct strongly connected components.
class TwoSidedCayleyGraph {
 public:
  static TwoSidedCayleyGraph build(SemigroupPtr s, GeneratingMap gens);

  SemigroupPtr const& semigroup() const { return semigroup_; }
  GeneratingMap const& gens() const { return gens_; }

  int vertex_count() const { return (order_ + 1) * (order_ + 1); }
  /// s and t range over {FiniteSemigroup::kIdentity} and element indices.
  int vertex_id(int s, int t) const {
    return (s + 1) * (order_ + 1) + (t + 1);
  }
  std::pair<int, int> vertex(int id) const {
    return {id / (order_ + 1) - 1, id % (order_ + 1) - 1};
  }
  std::string vertex_label(int id) const;

  std::vector<CayleyEdge> const& edges() const { return edges_; }
  std::vector<int> const& out_edges(int v) const {
    return out_[static_cast<std::size_t>(v)];
  }
  /// Edge id of (src, letter, dst), or -1 when absent.
  int find_edge(int src, int letter, int dst) const;

  int scc_of(int v) const { return scc_[static_cast<std::size_t>(v)]; }
  bool is_transition(int edge_id) const {
    return transition_index_[static_cast<std::size_t>(edge_id)] >= 0;
  }
  /// Dense index among transition edges, -1 for non-transition edges.
  int transition_index(int edge_id) const {
    return transition_index_[static_cast<std::size_t>(edge_id)];
  }
  int transition_count() const { return transition_count_; }

  /// The canonical path of a nonempty word u from (I, phi(u)) to (phi(u), I);
  /// its i-th vertex is (phi(u_1..u_i), phi(u_{i+1}..u_n)).
  GraphPath path_of_word(Word const& u) const;

  /// Set of transition edges crossed by the canonical path of u, as a bitset
  /// over dense transition indices.
  DynBitset transition_set(Word const& u) const;

  std::string to_dot(DotOptions const& options = {}) const;

 private:
  SemigroupPtr semigroup_;
  GeneratingMap gens_;
  int order_ = 0;
  std::vector<CayleyEdge> edges_;
  std::vector<std::vector<int>> out_;  // vertex -> edge ids, build order
  std::vector<int> scc_;
  std::vector<int> transition_index_;
  int transition_count_ = 0;
};

}  // namespace sgrp

#endif  // SGRP_CAYLEY_HPP
