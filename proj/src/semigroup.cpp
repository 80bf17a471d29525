#include "sgrp/semigroup.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

namespace sgrp {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

FiniteSemigroup FiniteSemigroup::from_table(
    std::vector<std::vector<int>> const& rows, std::vector<std::string> names,
    std::optional<int> adjoined) {
  FiniteSemigroup s;
  s.order_ = static_cast<int>(rows.size());
  if (s.order_ == 0) {
    throw Error("empty multiplication table");
  }
  s.table_.reserve(static_cast<std::size_t>(s.order_) * s.order_);
  for (auto const& row : rows) {
    if (static_cast<int>(row.size()) != s.order_) {
      throw Error("multiplication table is not square");
    }
    s.table_.insert(s.table_.end(), row.begin(), row.end());
  }
  if (!names.empty() && static_cast<int>(names.size()) != s.order_) {
    throw Error("name list does not match order");
  }
  s.names_ = std::move(names);
  s.check_range();
  s.check_associativity_full();
  if (adjoined) {
    if (*adjoined < 0 || *adjoined >= s.order_) {
      throw Error("adjoined identity index out of range");
    }
    for (int x = 0; x < s.order_; ++x) {
      if (s.at(*adjoined, x) != x || s.at(x, *adjoined) != x) {
        throw Error("flagged adjoined identity is not a two-sided identity");
      }
    }
    s.adjoined_ = adjoined;
  }
  return s;
}

FiniteSemigroup FiniteSemigroup::from_table_with_generators(
    int order, std::vector<int> table, std::vector<std::string> names,
    std::vector<int> const& generators) {
  FiniteSemigroup s;
  s.order_ = order;
  s.table_ = std::move(table);
  if (order <= 0 || s.table_.size() != static_cast<std::size_t>(order) * order) {
    throw Error("flat table size does not match order");
  }
  if (!names.empty() && static_cast<int>(names.size()) != order) {
    throw Error("name list does not match order");
  }
  s.names_ = std::move(names);
  s.check_range();
  s.check_associativity_light(generators);
  return s;
}

void FiniteSemigroup::check_range() const {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] < 0 || table_[i] >= order_) {
      throw Error("table entry out of range at position " + std::to_string(i) +
                  ": " + std::to_string(table_[i]));
    }
  }
}

void FiniteSemigroup::check_associativity_full() const {
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y) {
      int xy = at(x, y);
      for (int z = 0; z < order_; ++z) {
        if (at(xy, z) != at(x, at(y, z))) {
          throw Error("table is not associative: ((x*y)*z != x*(y*z) for x=" +
                      std::to_string(x) + ", y=" + std::to_string(y) +
                      ", z=" + std::to_string(z) + ")");
        }
      }
    }
  }
}

// Light's test: with G generating, (x*g)*y == x*(g*y) for all g in G and all
// x, y implies full associativity.
void FiniteSemigroup::check_associativity_light(
    std::vector<int> const& generators) const {
  auto closure = generated_closure(*this, generators);
  if (static_cast<int>(closure.size()) != order_) {
    throw Error("generator set for Light's test does not generate");
  }
  for (int g : generators) {
    for (int x = 0; x < order_; ++x) {
      int xg = at(x, g);
      for (int y = 0; y < order_; ++y) {
        if (at(xg, y) != at(x, at(g, y))) {
          throw Error("table is not associative: ((x*g)*y != x*(g*y) for x=" +
                      std::to_string(x) + ", g=" + std::to_string(g) +
                      ", y=" + std::to_string(y) + ")");
        }
      }
    }
  }
}

int FiniteSemigroup::power(int s, long long k) const {
  if (k < 1) {
    throw Error("power exponent must be >= 1");
  }
  if (s == kIdentity) return kIdentity;
  int acc = s;
  for (long long i = 1; i < k; ++i) {
    acc = at(acc, s);
  }
  return acc;
}

std::pair<int, int> FiniteSemigroup::index_period(int s) const {
  if (s == kIdentity) return {1, 1};
  // Positions are 1-based: seen[x] = least k with s^k = x.
  std::vector<int> seen(static_cast<std::size_t>(order_), 0);
  int x = s;
  int k = 1;
  while (seen[static_cast<std::size_t>(x)] == 0) {
    seen[static_cast<std::size_t>(x)] = k;
    x = at(x, s);
    ++k;
  }
  int index = seen[static_cast<std::size_t>(x)];
  int period = k - index;
  return {index, period};
}

int FiniteSemigroup::omega_power(int s, long long shift) const {
  if (s == kIdentity) return kIdentity;
  auto [index, period] = index_period(s);
  // Least multiple of the period that reaches the cycle.
  long long base = ((index + period - 1) / period) * static_cast<long long>(period);
  long long off = ((shift % period) + period) % period;
  return power(s, base + off);
}

int FiniteSemigroup::omega_exponent() const {
  long long lcm = 1;
  long long max_index = 1;
  for (int s = 0; s < order_; ++s) {
    auto [index, period] = index_period(s);
    max_index = std::max(max_index, static_cast<long long>(index));
    long long a = lcm, b = period;
    while (b != 0) {
      long long t = a % b;
      a = b;
      b = t;
    }
    lcm = lcm / a * period;
  }
  long long n = ((max_index + lcm - 1) / lcm) * lcm;
  return static_cast<int>(n);
}

std::vector<int> FiniteSemigroup::idempotents() const {
  std::vector<int> out;
  for (int s = 0; s < order_; ++s) {
    if (at(s, s) == s) {
      out.push_back(s);
    }
  }
  return out;
}

std::optional<int> FiniteSemigroup::identity_element() const {
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x) {
      ok = at(e, x) == x && at(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

std::string FiniteSemigroup::name(int s) const {
  if (s == kIdentity) return "I";
  if (!names_.empty()) return names_[static_cast<std::size_t>(s)];
  return "s" + std::to_string(s);
}

int GeneratingMap::letter_of(std::string const& symbol) const {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == symbol) return static_cast<int>(i);
  }
  return -1;
}

GeneratingMap GeneratingMap::identity_of(FiniteSemigroup const& s) {
  GeneratingMap g;
  g.letters.reserve(static_cast<std::size_t>(s.order()));
  g.images.reserve(static_cast<std::size_t>(s.order()));
  for (int i = 0; i < s.order(); ++i) {
    g.letters.push_back(s.name(i));
    g.images.push_back(i);
  }
  return g;
}

std::vector<int> generated_closure(FiniteSemigroup const& s,
                                   std::vector<int> const& seed) {
  std::vector<bool> in(static_cast<std::size_t>(s.order()), false);
  std::vector<int> queue;
  for (int g : seed) {
    if (g < 0 || g >= s.order()) {
      throw Error("generator index out of range: " + std::to_string(g));
    }
    if (!in[static_cast<std::size_t>(g)]) {
      in[static_cast<std::size_t>(g)] = true;
      queue.push_back(g);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int g : seed) {
      int y = s.at(x, g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
      y = s.at(g, x);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

void validate_generating(FiniteSemigroup const& s, GeneratingMap const& gens) {
  if (gens.letters.empty()) {
    throw Error("generating map has no letters");
  }
  if (gens.letters.size() != gens.images.size()) {
    throw Error("generating map letter/image size mismatch");
  }
  for (std::size_t i = 0; i < gens.letters.size(); ++i) {
    if (gens.letters[i].empty()) {
      throw Error("generating map has an empty letter symbol");
    }
    for (std::size_t j = i + 1; j < gens.letters.size(); ++j) {
      if (gens.letters[i] == gens.letters[j]) {
        throw Error("duplicate letter symbol: " + gens.letters[i]);
      }
    }
  }
  auto closure = generated_closure(s, gens.images);
  std::vector<bool> in(static_cast<std::size_t>(s.order()), false);
  for (int x : closure) in[static_cast<std::size_t>(x)] = true;
  for (int x = 0; x < s.order(); ++x) {
    if (!in[static_cast<std::size_t>(x)] && x != s.adjoined_identity()) {
      throw Error("images do not generate: element " + std::to_string(x) +
                  " (" + s.name(x) + ") is not reached");
    }
  }
}

int eval_word(FiniteSemigroup const& s, GeneratingMap const& gens,
              Word const& w) {
  int acc = FiniteSemigroup::kIdentity;
  for (int letter : w) {
    if (letter < 0 || letter >= gens.size()) {
      throw Error("letter index out of range: " + std::to_string(letter));
    }
    acc = s.mul(acc, gens.image(letter));
  }
  return acc;
}

std::string word_to_string(GeneratingMap const& gens, Word const& w) {
  bool compact = true;
  for (auto const& l : gens.letters) {
    compact = compact && l.size() == 1;
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ".";
    out += gens.letters[static_cast<std::size_t>(w[i])];
  }
  return out;
}

std::vector<Word> words_up_to(int alphabet_size, int max_len,
                              long long guard) {
  if (alphabet_size < 1) {
    throw Error("alphabet must be nonempty");
  }
  long long total = 0;
  long long layer = 1;
  for (int len = 1; len <= max_len; ++len) {
    if (layer > guard / alphabet_size) {
      throw Error("word enumeration would exceed " + std::to_string(guard) +
                  " words");
    }
    layer *= alphabet_size;
    total += layer;
    if (total > guard) {
      throw Error("word enumeration would exceed " + std::to_string(guard) +
                  " words");
    }
  }
  std::vector<Word> out;
  if (max_len < 1) return out;
  out.reserve(static_cast<std::size_t>(total));
  // Military order: previous layer extended by every letter.
  std::size_t layer_begin = 0;
  for (int a = 0; a < alphabet_size; ++a) {
    out.push_back({a});
  }
  for (int len = 2; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int a = 0; a < alphabet_size; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace sgrp
