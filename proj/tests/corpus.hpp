#ifndef SGRP_TESTS_CORPUS_HPP
#define SGRP_TESTS_CORPUS_HPP

// Small semigroups with fixed generating maps, shared by the unit tests and
// the acceptance run.  Orders stay at or below six so exhaustive word
// oracles remain fast.

#include <string>
#include <vector>

#include "sgrp/construct.hpp"
#include "sgrp/semigroup.hpp"

namespace corpus {

using sgrp::FiniteSemigroup;
using sgrp::GeneratingMap;
using sgrp::SemigroupPtr;

/// One-element semigroup {e}.
inline FiniteSemigroup trivial() {
  return FiniteSemigroup::from_table({{0}}, {"e"});
}

/// Two-element semilattice {a, b} with bottom b: ab = ba = bb = b.
inline FiniteSemigroup semilattice2() {
  return FiniteSemigroup::from_table({{0, 1}, {1, 1}}, {"a", "b"});
}

/// Three-element chain semilattice a > b > c under meet.
inline FiniteSemigroup chain3() {
  return FiniteSemigroup::from_table(
      {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, {"a", "b", "c"});
}

/// Cyclic group of order two, identity first.
inline FiniteSemigroup z2() {
  return FiniteSemigroup::from_table({{0, 1}, {1, 0}}, {"e", "g"});
}

/// Cyclic group of order three, identity first.
inline FiniteSemigroup z3() {
  return FiniteSemigroup::from_table(
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {"e", "g", "h"});
}

/// Z/2 with a zero adjoined: {e, g, z}.
inline FiniteSemigroup z2zero() {
  return FiniteSemigroup::from_table(
      {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}, {"e", "g", "z"});
}

/// Z/3 with a zero adjoined: {e, g, h, z}.
inline FiniteSemigroup z3zero() {
  return FiniteSemigroup::from_table(
      {{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}, {3, 3, 3, 3}},
      {"e", "g", "h", "z"});
}

/// Null semigroup {n, z}: every product is z.
inline FiniteSemigroup null2() {
  return FiniteSemigroup::from_table({{1, 1}, {1, 1}}, {"n", "z"});
}

/// Monogenic semigroup with index 2 and period 2: {x, x^2, x^3}, x^4 = x^2.
inline FiniteSemigroup mono22() {
  return FiniteSemigroup::from_table(
      {{1, 2, 1}, {2, 1, 2}, {1, 2, 1}}, {"x", "x2", "x3"});
}

/// Two left zeros: xy = x.
inline FiniteSemigroup leftzero2() {
  return FiniteSemigroup::from_table({{0, 0}, {1, 1}}, {"x", "y"});
}

/// Two right zeros: xy = y.
inline FiniteSemigroup rightzero2() {
  return FiniteSemigroup::from_table({{0, 1}, {0, 1}}, {"x", "y"});
}

/// 2x2 rectangular band as a Rees matrix semigroup over the trivial group.
inline FiniteSemigroup band22() {
  return sgrp::rees_matrix(trivial(), {{0, 0}, {0, 0}});
}

/// 3x2 rectangular band (three rows, two columns).
inline FiniteSemigroup band32() {
  return sgrp::rees_matrix(trivial(), {{0, 0, 0}, {0, 0, 0}});
}

/// Right group Z/2 x {two right zeros} as a 1x2 Rees matrix over Z/2.
inline FiniteSemigroup rightgroup4() {
  return sgrp::rees_matrix(z2(), {{0}, {0}});
}

/// Eight-element Rees matrix semigroup over Z/2 with a nontrivial sandwich
/// entry.
inline FiniteSemigroup rees8() {
  return sgrp::rees_matrix(z2(), {{0, 0}, {0, 1}});
}

inline GeneratingMap gens(std::vector<std::string> letters,
                          std::vector<int> images) {
  GeneratingMap g;
  g.letters = std::move(letters);
  g.images = std::move(images);
  return g;
}

struct Instance {
  std::string name;
  SemigroupPtr s;
  /// A minimal generating map (no letter can be dropped).
  GeneratingMap minimal_gens;
};

/// The instances used for expansion/oracle and cover testing.  Every
/// generating map here is minimal; alphabets have at most two letters so the
/// word oracle at L = expansion order + 1 stays cheap.
inline std::vector<Instance> instances() {
  std::vector<Instance> out;
  auto add = [&out](std::string name, FiniteSemigroup s, GeneratingMap g) {
    out.push_back({std::move(name), sgrp::share(std::move(s)), std::move(g)});
  };
  add("trivial", trivial(), gens({"a"}, {0}));
  add("semilattice2", semilattice2(), gens({"a", "b"}, {0, 1}));
  add("z2", z2(), gens({"g"}, {1}));
  add("z3", z3(), gens({"g"}, {1}));
  add("z2zero", z2zero(), gens({"g", "z"}, {1, 2}));
  add("z3zero", z3zero(), gens({"g", "z"}, {1, 3}));
  add("null2", null2(), gens({"n"}, {0}));
  add("mono22", mono22(), gens({"x"}, {0}));
  add("leftzero2", leftzero2(), gens({"x", "y"}, {0, 1}));
  add("rightzero2", rightzero2(), gens({"x", "y"}, {0, 1}));
  add("band22", band22(), gens({"p", "q"}, {0, 3}));
  add("rightgroup4", rightgroup4(), gens({"p", "q"}, {2, 3}));
  return out;
}

}  // namespace corpus

#endif  // SGRP_TESTS_CORPUS_HPP
