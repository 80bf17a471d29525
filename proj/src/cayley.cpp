#include "sgrp/cayley.hpp"

#include <algorithm>

namespace sgrp {

namespace {

// Iterative Tarjan over edge-id adjacency.
std::vector<int> scc_of_graph(int vertex_count,
                              std::vector<std::vector<int>> const& out,
                              std::vector<CayleyEdge> const& edges) {
  std::vector<int> index(static_cast<std::size_t>(vertex_count), -1);
  std::vector<int> low(static_cast<std::size_t>(vertex_count), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(vertex_count), false);
  std::vector<int> stack, comp(static_cast<std::size_t>(vertex_count), -1);
  int next_index = 0, next_comp = 0;
  struct Frame {
    int v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (int root = 0; root < vertex_count; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& fr = call.back();
      int v = fr.v;
      if (fr.edge == 0) {
        index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] =
            next_index++;
        stack.push_back(v);
        on_stack[static_cast<std::size_t>(v)] = true;
      }
      bool descended = false;
      while (fr.edge < out[static_cast<std::size_t>(v)].size()) {
        int w = edges[static_cast<std::size_t>(
                          out[static_cast<std::size_t>(v)][fr.edge++])]
                    .dst;
        if (index[static_cast<std::size_t>(w)] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)],
                       index[static_cast<std::size_t>(w)]);
        }
      }
      if (descended) continue;
      if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp[static_cast<std::size_t>(w)] = next_comp;
          if (w == v) break;
        }
        ++next_comp;
      }
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().v;
        low[static_cast<std::size_t>(parent)] =
            std::min(low[static_cast<std::size_t>(parent)],
                     low[static_cast<std::size_t>(v)]);
      }
    }
  }
  return comp;
}

}  // namespace

TwoSidedCayleyGraph TwoSidedCayleyGraph::build(SemigroupPtr s,
                                               GeneratingMap gens) {
  validate_generating(*s, gens);
  TwoSidedCayleyGraph g;
  g.semigroup_ = std::move(s);
  g.gens_ = std::move(gens);
  g.order_ = g.semigroup_->order();
  int const n = g.order_;
  auto const& sg = *g.semigroup_;
  int const I = FiniteSemigroup::kIdentity;

  // For fixed a and t2, the unique source component is t1 = a * t2, so the
  // edge set is exactly {(s1, a*t2) -a-> (s1*a, t2)}: |A| * (n+1)^2 edges.
  std::vector<std::vector<std::vector<int>>> solutions(
      static_cast<std::size_t>(g.gens_.size()),
      std::vector<std::vector<int>>(static_cast<std::size_t>(n + 1)));
  for (int a = 0; a < g.gens_.size(); ++a) {
    int img = g.gens_.image(a);
    for (int t2 = I; t2 < n; ++t2) {
      int t1 = sg.mul(img, t2);
      solutions[static_cast<std::size_t>(a)][static_cast<std::size_t>(t1 + 1)]
          .push_back(t2);
    }
  }
  g.out_.assign(static_cast<std::size_t>(g.vertex_count()), {});
  for (int s1 = I; s1 < n; ++s1) {
    for (int t1 = I; t1 < n; ++t1) {
      int src = g.vertex_id(s1, t1);
      for (int a = 0; a < g.gens_.size(); ++a) {
        int s2 = sg.mul(s1, g.gens_.image(a));
        for (int t2 : solutions[static_cast<std::size_t>(a)]
                               [static_cast<std::size_t>(t1 + 1)]) {
          int dst = g.vertex_id(s2, t2);
          g.out_[static_cast<std::size_t>(src)].push_back(
              static_cast<int>(g.edges_.size()));
          g.edges_.push_back({src, a, dst});
        }
      }
    }
  }

  g.scc_ = scc_of_graph(g.vertex_count(), g.out_, g.edges_);
  g.transition_index_.assign(g.edges_.size(), -1);
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    if (g.scc_[static_cast<std::size_t>(g.edges_[e].src)] !=
        g.scc_[static_cast<std::size_t>(g.edges_[e].dst)]) {
      g.transition_index_[e] = g.transition_count_++;
    }
  }
  return g;
}

std::string TwoSidedCayleyGraph::vertex_label(int id) const {
  auto [s, t] = vertex(id);
  return "(" + semigroup_->name(s) + "," + semigroup_->name(t) + ")";
}

int TwoSidedCayleyGraph::find_edge(int src, int letter, int dst) const {
  for (int e : out_[static_cast<std::size_t>(src)]) {
    if (edges_[static_cast<std::size_t>(e)].letter == letter &&
        edges_[static_cast<std::size_t>(e)].dst == dst) {
      return e;
    }
  }
  return -1;
}

GraphPath TwoSidedCayleyGraph::path_of_word(Word const& u) const {
  if (u.empty()) {
    throw Error("paths are defined for nonempty words only");
  }
  auto const& sg = *semigroup_;
  std::size_t const len = u.size();
  // Prefix images phi(u_1..u_i) and suffix images phi(u_{i+1}..u_n).
  std::vector<int> prefix(len + 1, FiniteSemigroup::kIdentity);
  std::vector<int> suffix(len + 1, FiniteSemigroup::kIdentity);
  for (std::size_t i = 0; i < len; ++i) {
    prefix[i + 1] = sg.mul(prefix[i], gens_.image(u[i]));
  }
  for (std::size_t i = len; i > 0; --i) {
    suffix[i - 1] = sg.mul(gens_.image(u[i - 1]), suffix[i]);
  }
  GraphPath p;
  p.word = u;
  p.vertices.reserve(len + 1);
  for (std::size_t i = 0; i <= len; ++i) {
    p.vertices.push_back(vertex_id(prefix[i], suffix[i]));
  }
  p.edge_ids.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    int e = find_edge(p.vertices[i], u[i], p.vertices[i + 1]);
    if (e == -1) {
      throw Error("internal error: canonical path edge missing");
    }
    p.edge_ids.push_back(e);
  }
  return p;
}

DynBitset TwoSidedCayleyGraph::transition_set(Word const& u) const {
  auto p = path_of_word(u);
  DynBitset t(static_cast<std::size_t>(transition_count_));
  for (int e : p.edge_ids) {
    int idx = transition_index(e);
    if (idx >= 0) {
      t.set(static_cast<std::size_t>(idx));
    }
  }
  return t;
}

std::string TwoSidedCayleyGraph::to_dot(DotOptions const& options) const {
  std::vector<bool> keep(static_cast<std::size_t>(vertex_count()), true);
  if (options.only_reachable) {
    int const n = order_;
    int const I = FiniteSemigroup::kIdentity;
    std::vector<bool> fwd(static_cast<std::size_t>(vertex_count()), false);
    std::vector<bool> bwd(static_cast<std::size_t>(vertex_count()), false);
    std::vector<int> queue;
    for (int t = 0; t < n; ++t) {
      int v = vertex_id(I, t);
      fwd[static_cast<std::size_t>(v)] = true;
      queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int e : out_[static_cast<std::size_t>(queue[head])]) {
        int w = edges_[static_cast<std::size_t>(e)].dst;
        if (!fwd[static_cast<std::size_t>(w)]) {
          fwd[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::vector<int>> in(static_cast<std::size_t>(vertex_count()));
    for (auto const& e : edges_) {
      in[static_cast<std::size_t>(e.dst)].push_back(e.src);
    }
    queue.clear();
    for (int s = 0; s < n; ++s) {
      int v = vertex_id(s, I);
      bwd[static_cast<std::size_t>(v)] = true;
      queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int w : in[static_cast<std::size_t>(queue[head])]) {
        if (!bwd[static_cast<std::size_t>(w)]) {
          bwd[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
    for (int v = 0; v < vertex_count(); ++v) {
      keep[static_cast<std::size_t>(v)] =
          fwd[static_cast<std::size_t>(v)] && bwd[static_cast<std::size_t>(v)];
    }
  }

  std::string dot = "digraph cayley {\n  rankdir=LR;\n";
  for (int v = 0; v < vertex_count(); ++v) {
    if (!keep[static_cast<std::size_t>(v)]) continue;
    dot += "  v" + std::to_string(v) + " [label=\"" + vertex_label(v) + "\"];\n";
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto const& edge = edges_[e];
    if (!keep[static_cast<std::size_t>(edge.src)] ||
        !keep[static_cast<std::size_t>(edge.dst)]) {
      continue;
    }
    dot += "  v" + std::to_string(edge.src) + " -> v" + std::to_string(edge.dst) +
           " [label=\"" + gens_.letters[static_cast<std::size_t>(edge.letter)] +
           "\"";
    if (is_transition(static_cast<int>(e))) {
      dot += " style=bold";
    }
    dot += "];\n";
  }
  dot += "}\n";
  return dot;
}

}  // namespace sgrp
