#ifndef SGRP_CONSTRUCT_HPP
#define SGRP_CONSTRUCT_HPP

#include <vector>

#include "sgrp/homomorphism.hpp"
#include "sgrp/semigroup.hpp"

namespace sgrp {

/// S with a new identity adjoined at index order(), even when S already has
/// one.  The new element is recorded as the adjoined identity.
FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

/// Rees matrix semigroup over a group G with sandwich matrix P (rows indexed
/// by lambda, columns by i; entries are elements of G).  Elements are the
/// triples (i, g, lambda) ordered with i outermost, and multiply by
/// (i, g, l) (j, h, m) = (i, g P[l][j] h, m).
FiniteSemigroup rees_matrix(FiniteSemigroup const& group,
                            std::vector<std::vector<int>> const& p);

struct QuotientResult {
  SemigroupPtr semigroup;
  Homomorphism projection;
};

/// Quotient by a partition, which must be a congruence; classes are
/// renumbered by least element.  Throws Error with a witness when the
/// partition is not a congruence or not a partition.
QuotientResult quotient(SemigroupPtr s,
                        std::vector<std::vector<int>> const& partition);

/// Rees quotient: collapses a two-sided ideal to a zero named "0".
QuotientResult rees_quotient(SemigroupPtr s, std::vector<int> const& ideal);

/// The unique homomorphism with source generated by `gens` that sends each
/// letter image to `letter_images` in the target, if it is well defined.
/// A flagged adjoined identity outside the closure maps to the target's
/// identity element when one exists.
Homomorphism hom_from_generator_images(SemigroupPtr source,
                                       GeneratingMap const& gens,
                                       SemigroupPtr target,
                                       std::vector<int> const& letter_images);

}  // namespace sgrp

#endif  // SGRP_CONSTRUCT_HPP
