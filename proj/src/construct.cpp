#include "sgrp/construct.hpp"

#include <algorithm>

namespace sgrp {

FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
  int const n = s.order();
  FiniteSemigroup out;
  out.order_ = n + 1;
  out.table_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out.table_[static_cast<std::size_t>(x) * (n + 1) + y] = s.at(x, y);
    }
  }
  for (int x = 0; x <= n; ++x) {
    out.table_[static_cast<std::size_t>(x) * (n + 1) + n] = x;
    out.table_[static_cast<std::size_t>(n) * (n + 1) + x] = x;
  }
  out.names_.reserve(static_cast<std::size_t>(n + 1));
  for (int x = 0; x < n; ++x) out.names_.push_back(s.name(x));
  std::string id_name = "I";
  while (std::find(out.names_.begin(), out.names_.end(), id_name) !=
         out.names_.end()) {
    id_name += "'";
  }
  out.names_.push_back(id_name);
  out.adjoined_ = n;
  return out;
}

FiniteSemigroup rees_matrix(FiniteSemigroup const& group,
                            std::vector<std::vector<int>> const& p) {
  auto id = group.identity_element();
  if (!id) {
    throw Error("Rees matrix base is not a group: no identity element");
  }
  for (int g = 0; g < group.order(); ++g) {
    bool invertible = false;
    for (int h = 0; h < group.order() && !invertible; ++h) {
      invertible = group.at(g, h) == *id && group.at(h, g) == *id;
    }
    if (!invertible) {
      throw Error("Rees matrix base is not a group: element " +
                  std::to_string(g) + " has no inverse");
    }
  }
  int const num_lambda = static_cast<int>(p.size());
  if (num_lambda == 0 || p[0].empty()) {
    throw Error("sandwich matrix must be nonempty");
  }
  int const num_i = static_cast<int>(p[0].size());
  for (auto const& row : p) {
    if (static_cast<int>(row.size()) != num_i) {
      throw Error("sandwich matrix rows must have equal length");
    }
    for (int e : row) {
      if (e < 0 || e >= group.order()) {
        throw Error("sandwich matrix entry out of range");
      }
    }
  }

  int const ng = group.order();
  int const order = num_i * ng * num_lambda;
  auto code = [&](int i, int g, int l) {
    return (i * ng + g) * num_lambda + l;
  };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> names(static_cast<std::size_t>(order));
  for (int i = 0; i < num_i; ++i) {
    for (int g = 0; g < ng; ++g) {
      for (int l = 0; l < num_lambda; ++l) {
        names[static_cast<std::size_t>(code(i, g, l))] =
            "(" + std::to_string(i) + "," + group.name(g) + "," +
            std::to_string(l) + ")";
      }
    }
  }
  for (int i = 0; i < num_i; ++i) {
    for (int g = 0; g < ng; ++g) {
      for (int l = 0; l < num_lambda; ++l) {
        for (int j = 0; j < num_i; ++j) {
          for (int h = 0; h < ng; ++h) {
            for (int m = 0; m < num_lambda; ++m) {
              int prod = group.at(group.at(g, p[static_cast<std::size_t>(l)]
                                                [static_cast<std::size_t>(j)]),
                                  h);
              table[static_cast<std::size_t>(code(i, g, l)) * order +
                    code(j, h, m)] = code(i, prod, m);
            }
          }
        }
      }
    }
  }
  std::vector<int> all(static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x) all[static_cast<std::size_t>(x)] = x;
  return FiniteSemigroup::from_table_with_generators(order, std::move(table),
                                                     std::move(names), all);
}

namespace {

std::vector<int> class_map_from_partition(
    int order, std::vector<std::vector<int>> const& partition) {
  std::vector<int> cls(static_cast<std::size_t>(order), -1);
  for (auto const& block : partition) {
    if (block.empty()) {
      throw Error("partition has an empty class");
    }
    for (int x : block) {
      if (x < 0 || x >= order) {
        throw Error("partition element out of range: " + std::to_string(x));
      }
      if (cls[static_cast<std::size_t>(x)] != -1) {
        throw Error("partition classes overlap at element " + std::to_string(x));
      }
      cls[static_cast<std::size_t>(x)] = 1;
    }
  }
  for (int x = 0; x < order; ++x) {
    if (cls[static_cast<std::size_t>(x)] == -1) {
      throw Error("partition misses element " + std::to_string(x));
    }
  }
  // Renumber classes by least element.
  std::vector<std::pair<int, std::size_t>> by_least;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    by_least.emplace_back(*std::min_element(partition[b].begin(),
                                            partition[b].end()),
                          b);
  }
  std::sort(by_least.begin(), by_least.end());
  std::fill(cls.begin(), cls.end(), -1);
  for (std::size_t rank = 0; rank < by_least.size(); ++rank) {
    for (int x : partition[by_least[rank].second]) {
      cls[static_cast<std::size_t>(x)] = static_cast<int>(rank);
    }
  }
  return cls;
}

}  // namespace

QuotientResult quotient(SemigroupPtr s,
                        std::vector<std::vector<int>> const& partition) {
  int const n = s->order();
  auto cls = class_map_from_partition(n, partition);
  int const m = static_cast<int>(partition.size());

  // Congruence check: related pairs stay related under both translations.
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (cls[static_cast<std::size_t>(x)] != cls[static_cast<std::size_t>(y)]) {
        continue;
      }
      for (int t = 0; t < n; ++t) {
        if (cls[static_cast<std::size_t>(s->at(x, t))] !=
            cls[static_cast<std::size_t>(s->at(y, t))]) {
          throw Error("partition is not a congruence: " + std::to_string(x) +
                      " ~ " + std::to_string(y) + " but classes of x*t, y*t "
                      "differ for t=" + std::to_string(t));
        }
        if (cls[static_cast<std::size_t>(s->at(t, x))] !=
            cls[static_cast<std::size_t>(s->at(t, y))]) {
          throw Error("partition is not a congruence: " + std::to_string(x) +
                      " ~ " + std::to_string(y) + " but classes of t*x, t*y "
                      "differ for t=" + std::to_string(t));
        }
      }
    }
  }

  // Representative per class (least element) for table and names.
  std::vector<int> rep(static_cast<std::size_t>(m), -1);
  for (int x = n - 1; x >= 0; --x) rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])] = x;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      table[static_cast<std::size_t>(a) * m + b] =
          cls[static_cast<std::size_t>(s->at(rep[static_cast<std::size_t>(a)],
                                             rep[static_cast<std::size_t>(b)]))];
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    names[static_cast<std::size_t>(a)] =
        "[" + s->name(rep[static_cast<std::size_t>(a)]) + "]";
  }
  std::vector<int> all(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) all[static_cast<std::size_t>(a)] = a;
  auto q = share(FiniteSemigroup::from_table_with_generators(
      m, std::move(table), std::move(names), all));
  return {q, Homomorphism(std::move(s), q, std::move(cls))};
}

QuotientResult rees_quotient(SemigroupPtr s, std::vector<int> const& ideal) {
  if (ideal.empty()) {
    throw Error("ideal must be nonempty");
  }
  std::vector<bool> in(static_cast<std::size_t>(s->order()), false);
  for (int x : ideal) {
    if (x < 0 || x >= s->order()) {
      throw Error("ideal element out of range: " + std::to_string(x));
    }
    in[static_cast<std::size_t>(x)] = true;
  }
  for (int x : ideal) {
    for (int t = 0; t < s->order(); ++t) {
      if (!in[static_cast<std::size_t>(s->at(x, t))]) {
        throw Error("not a two-sided ideal: " + std::to_string(x) + "*" +
                    std::to_string(t) + " escapes");
      }
      if (!in[static_cast<std::size_t>(s->at(t, x))]) {
        throw Error("not a two-sided ideal: " + std::to_string(t) + "*" +
                    std::to_string(x) + " escapes");
      }
    }
  }
  std::vector<std::vector<int>> partition;
  std::vector<int> zero_block;
  for (int x = 0; x < s->order(); ++x) {
    if (in[static_cast<std::size_t>(x)]) {
      zero_block.push_back(x);
    } else {
      partition.push_back({x});
    }
  }
  partition.push_back(std::move(zero_block));
  auto out = quotient(std::move(s), partition);
  // Rename the collapsed class to 0 when the ideal is proper.
  if (static_cast<int>(out.semigroup->order()) > 1) {
    // Names live in the shared semigroup; rebuild with the zero renamed.
    auto const& q = *out.semigroup;
    int zero_class = out.projection(ideal[0]);
    std::vector<std::string> names;
    for (int a = 0; a < q.order(); ++a) {
      names.push_back(a == zero_class ? "0" : q.name(a));
    }
    std::vector<int> all(static_cast<std::size_t>(q.order()));
    for (int a = 0; a < q.order(); ++a) all[static_cast<std::size_t>(a)] = a;
    auto renamed = share(FiniteSemigroup::from_table_with_generators(
        q.order(), q.table(), std::move(names), all));
    out = {renamed, Homomorphism(out.projection.source(), renamed,
                                 out.projection.map())};
  }
  return out;
}

Homomorphism hom_from_generator_images(SemigroupPtr source,
                                       GeneratingMap const& gens,
                                       SemigroupPtr target,
                                       std::vector<int> const& letter_images) {
  validate_generating(*source, gens);
  if (letter_images.size() != gens.letters.size()) {
    throw Error("letter image list does not match alphabet size");
  }
  for (int v : letter_images) {
    if (v < 0 || v >= target->order()) {
      throw Error("letter image out of range: " + std::to_string(v));
    }
  }
  int const n = source->order();
  std::vector<int> value(static_cast<std::size_t>(n), -1);
  std::vector<Word> witness(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int a = 0; a < gens.size(); ++a) {
    int s = gens.image(a);
    int v = letter_images[static_cast<std::size_t>(a)];
    if (value[static_cast<std::size_t>(s)] == -1) {
      value[static_cast<std::size_t>(s)] = v;
      witness[static_cast<std::size_t>(s)] = {a};
      queue.push_back(s);
    } else if (value[static_cast<std::size_t>(s)] != v) {
      throw Error("map is not well defined: letters " +
                  word_to_string(gens, witness[static_cast<std::size_t>(s)]) +
                  " and " + gens.letters[static_cast<std::size_t>(a)] +
                  " share an image but are sent to different elements");
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int a = 0; a < gens.size(); ++a) {
      int y = source->at(x, gens.image(a));
      int v = target->at(value[static_cast<std::size_t>(x)],
                         letter_images[static_cast<std::size_t>(a)]);
      if (value[static_cast<std::size_t>(y)] == -1) {
        value[static_cast<std::size_t>(y)] = v;
        witness[static_cast<std::size_t>(y)] = witness[static_cast<std::size_t>(x)];
        witness[static_cast<std::size_t>(y)].push_back(a);
        queue.push_back(y);
      } else if (value[static_cast<std::size_t>(y)] != v) {
        Word w = witness[static_cast<std::size_t>(x)];
        w.push_back(a);
        throw Error("map is not well defined: words " +
                    word_to_string(gens, witness[static_cast<std::size_t>(y)]) +
                    " and " + word_to_string(gens, w) +
                    " are equal in the source but images differ");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (value[static_cast<std::size_t>(x)] != -1) continue;
    // Only a flagged adjoined identity may be outside the closure.
    auto e = target->identity_element();
    if (x == source->adjoined_identity() && e) {
      value[static_cast<std::size_t>(x)] = *e;
    } else {
      throw Error("element " + std::to_string(x) +
                  " is not generated and has no canonical image");
    }
  }
  return Homomorphism(std::move(source), std::move(target), std::move(value));
}

}  // namespace sgrp
