#ifndef SGRP_GREEN_HPP
#define SGRP_GREEN_HPP

#include <vector>

#include "sgrp/semigroup.hpp"

namespace sgrp {

/// Green's relations of a finite semigroup.  Class ids are dense and ordered
/// by the least element index in each class; every class list is sorted.
struct GreenData {
  std::vector<int> r_of, l_of, j_of, h_of;
  std::vector<std::vector<int>> r_classes, l_classes, j_classes, h_classes;
  /// J-class contains an idempotent.
  std::vector<bool> j_regular;
  /// j_leq[c][d]: J-class c is below or equal to d in the J-order, i.e. the
  /// elements of c lie in the ideal S^I x S^I generated by any x in d.
  std::vector<std::vector<bool>> j_leq;

  int j_class_count() const { return static_cast<int>(j_classes.size()); }
};

/// Computes all four relations by mutual-divisibility reachability in S^I.
GreenData greens(FiniteSemigroup const& s);

/// The least two-sided ideal, sorted ascending.
std::vector<int> minimal_ideal(FiniteSemigroup const& s);

/// True iff the minimal ideal is the whole semigroup.
bool is_completely_simple(FiniteSemigroup const& s);

}  // namespace sgrp

#endif  // SGRP_GREEN_HPP
