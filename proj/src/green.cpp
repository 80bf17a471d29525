#include "sgrp/green.hpp"

#include <algorithm>
#include <numeric>

namespace sgrp {

namespace {

// Iterative Tarjan over an adjacency-list digraph.  Returns the component id
// per vertex; ids are then renumbered by least vertex.
std::vector<int> scc_ids(std::vector<std::vector<int>> const& adj) {
  int const n = static_cast<int>(adj.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next_index = 0;
  int next_comp = 0;

  struct Frame {
    int v;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
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
      while (fr.edge < adj[static_cast<std::size_t>(v)].size()) {
        int w = adj[static_cast<std::size_t>(v)][fr.edge++];
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
      if (low[static_cast<std::size_t>(v)] ==
          index[static_cast<std::size_t>(v)]) {
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

  // Renumber components by least member vertex for determinism.
  std::vector<int> least(static_cast<std::size_t>(next_comp), n);
  for (int v = 0; v < n; ++v) {
    auto& m = least[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    m = std::min(m, v);
  }
  std::vector<int> order(static_cast<std::size_t>(next_comp));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return least[static_cast<std::size_t>(a)] < least[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(static_cast<std::size_t>(next_comp));
  for (int i = 0; i < next_comp; ++i) {
    rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  }
  for (auto& c : comp) c = rank[static_cast<std::size_t>(c)];
  return comp;
}

std::vector<std::vector<int>> classes_from_ids(std::vector<int> const& ids) {
  int count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(count));
  for (int v = 0; v < static_cast<int>(ids.size()); ++v) {
    classes[static_cast<std::size_t>(ids[static_cast<std::size_t>(v)])]
        .push_back(v);
  }
  return classes;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

GreenData greens(FiniteSemigroup const& s) {
  int const n = s.order();
  std::vector<std::vector<int>> right(static_cast<std::size_t>(n)),
      left(static_cast<std::size_t>(n)), both(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<int> r, l;
    r.reserve(static_cast<std::size_t>(n));
    l.reserve(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) {
      r.push_back(s.at(x, g));
      l.push_back(s.at(g, x));
    }
    r = sorted_unique(std::move(r));
    l = sorted_unique(std::move(l));
    std::vector<int> b = r;
    b.insert(b.end(), l.begin(), l.end());
    right[static_cast<std::size_t>(x)] = std::move(r);
    left[static_cast<std::size_t>(x)] = std::move(l);
    both[static_cast<std::size_t>(x)] = sorted_unique(std::move(b));
  }

  GreenData g;
  g.r_of = scc_ids(right);
  g.l_of = scc_ids(left);
  g.j_of = scc_ids(both);
  g.r_classes = classes_from_ids(g.r_of);
  g.l_classes = classes_from_ids(g.l_of);
  g.j_classes = classes_from_ids(g.j_of);

  // H = R meet L; classes keyed by (r, l) pairs, renumbered by least element.
  std::vector<int> h_raw(static_cast<std::size_t>(n), -1);
  std::vector<int> first_of_pair;
  for (int v = 0; v < n; ++v) {
    int found = -1;
    for (std::size_t k = 0; k < first_of_pair.size(); ++k) {
      int w = first_of_pair[k];
      if (g.r_of[static_cast<std::size_t>(w)] == g.r_of[static_cast<std::size_t>(v)] &&
          g.l_of[static_cast<std::size_t>(w)] == g.l_of[static_cast<std::size_t>(v)]) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found == -1) {
      found = static_cast<int>(first_of_pair.size());
      first_of_pair.push_back(v);
    }
    h_raw[static_cast<std::size_t>(v)] = found;
  }
  g.h_of = h_raw;
  g.h_classes = classes_from_ids(g.h_of);

  g.j_regular.assign(g.j_classes.size(), false);
  for (int e : s.idempotents()) {
    g.j_regular[static_cast<std::size_t>(g.j_of[static_cast<std::size_t>(e)])] =
        true;
  }

  // J-order by reachability on the condensation of the two-sided digraph.
  int jc = g.j_class_count();
  std::vector<std::vector<int>> dag(static_cast<std::size_t>(jc));
  for (int x = 0; x < n; ++x) {
    for (int y : both[static_cast<std::size_t>(x)]) {
      int a = g.j_of[static_cast<std::size_t>(x)];
      int b = g.j_of[static_cast<std::size_t>(y)];
      if (a != b) dag[static_cast<std::size_t>(a)].push_back(b);
    }
  }
  for (auto& row : dag) row = sorted_unique(std::move(row));
  g.j_leq.assign(static_cast<std::size_t>(jc),
                 std::vector<bool>(static_cast<std::size_t>(jc), false));
  for (int c = 0; c < jc; ++c) {
    // DFS from c; d reachable from c means d <= c.
    std::vector<int> stack{c};
    std::vector<bool> seen(static_cast<std::size_t>(jc), false);
    seen[static_cast<std::size_t>(c)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      g.j_leq[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = true;
      for (int w : dag[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return g;
}

std::vector<int> minimal_ideal(FiniteSemigroup const& s) {
  // The product of all elements lies in the least ideal, which equals the
  // ideal that product generates.
  int z = 0;
  for (int x = 1; x < s.order(); ++x) z = s.at(z, x);
  std::vector<bool> in(static_cast<std::size_t>(s.order()), false);
  std::vector<int> queue{z};
  in[static_cast<std::size_t>(z)] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int g = 0; g < s.order(); ++g) {
      for (int y : {s.at(x, g), s.at(g, x)}) {
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = true;
          queue.push_back(y);
        }
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_completely_simple(FiniteSemigroup const& s) {
  return static_cast<int>(minimal_ideal(s).size()) == s.order();
}

}  // namespace sgrp
