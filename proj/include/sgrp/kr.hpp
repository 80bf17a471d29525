#ifndef SGRP_KR_HPP
#define SGRP_KR_HPP

#include <memory>
#include <vector>

#include "sgrp/cayley.hpp"
#include "sgrp/homomorphism.hpp"
#include "sgrp/semigroup.hpp"
#include "sgrp/util.hpp"

namespace sgrp {

/// Invariant deciding word equivalence: two words are identified iff they
/// share an image and cross the same transition edges on their canonical
/// paths.
struct KrSignature {
  int image = FiniteSemigroup::kIdentity;
  DynBitset tset;

  bool operator==(KrSignature const& o) const {
    return image == o.image && tset == o.tset;
  }
};

/// Signature of a nonempty word in a two-sided Cayley graph.
KrSignature signature(TwoSidedCayleyGraph const& graph, Word const& u);

/// The expansion of a generating map: the quotient of all nonempty words by
/// signature equality.  Elements are numbered in breadth-first discovery
/// order (letters in alphabet order first, then one-letter extensions of
/// earlier classes).
struct KrExpansion {
  SemigroupPtr base;
  GeneratingMap base_gens;
  std::shared_ptr<TwoSidedCayleyGraph const> graph;

  SemigroupPtr result;
  /// Same alphabet as base_gens; images are the classes of the letters.
  GeneratingMap result_gens;
  std::vector<int> letter_classes;
  /// First word discovered per class; its length never exceeds the order.
  std::vector<Word> representatives;
  /// Projection result -> base sending the class of w to its image.
  Homomorphism projection;

  /// Class of a word (virtual identity for the empty word).
  int eval(Word const& w) const;
};

/// Builds the expansion.  `budget` bounds the total step count (graph edges,
/// signature computations and table fills) and a BudgetError is thrown when
/// it is exhausted.  When `spent` is non-null the steps consumed are
/// reported there.
KrExpansion kr_expand(SemigroupPtr s, GeneratingMap gens,
                      long long budget = kDefaultBudget,
                      long long* spent = nullptr);

/// Independent oracle: groups every word of length 1..max_len by its
/// signature, computed per word from the graph alone.  Groups are ordered by
/// first word in military order, words within a group likewise.
std::vector<std::vector<Word>> oracle_classes(SemigroupPtr s,
                                              GeneratingMap const& gens,
                                              int max_len);

/// Given expansions of phi: A+ -> S and psi: B+ -> T, a homomorphism
/// lambda: S -> T and a letter substitution alpha (a word over B per letter
/// of A) with lambda(phi(a)) = psi(alpha(a)) for every letter, returns the
/// unique homomorphism between the expansions commuting with both squares.
/// Throws Error when the hypothesis fails.
Homomorphism induced_hom(KrExpansion const& source, KrExpansion const& target,
                         Homomorphism const& lambda,
                         std::vector<Word> const& alpha);

/// Levels 0..n of the iterated expansion, with connecting projections.
struct KrTower {
  /// levels[i] is the i-th expansion's semigroup with its generating map;
  /// level 0 is the base.
  struct Level {
    SemigroupPtr semigroup;
    GeneratingMap gens;
  };
  std::vector<Level> levels;
  /// connecting[i] maps level i+1 onto level i.
  std::vector<Homomorphism> connecting;
  int requested_levels = 0;
  bool budget_exhausted = false;

  int computed_levels() const { return static_cast<int>(levels.size()) - 1; }

  /// Composite projection level m -> level n for m >= n.
  Homomorphism connecting_map(int m, int n) const;
};

/// Iterates kr_expand `levels` times, sharing one budget across all levels;
/// on exhaustion the tower is returned truncated with budget_exhausted set.
KrTower kr_tower(SemigroupPtr s, GeneratingMap gens, int levels,
                 long long budget = kDefaultBudget);

}  // namespace sgrp

#endif  // SGRP_KR_HPP
