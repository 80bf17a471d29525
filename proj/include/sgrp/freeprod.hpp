#ifndef SGRP_FREEPROD_HPP
#define SGRP_FREEPROD_HPP

#include <optional>
#include <string>
#include <vector>

#include "sgrp/homomorphism.hpp"
#include "sgrp/semigroup.hpp"

namespace sgrp {

/// A nonempty product of blocks (factor index, element) with distinct
/// adjacent factor indices: the normal form of a nonzero element of a free
/// product.
struct AlternatingForm {
  std::vector<std::pair<int, int>> blocks;

  bool operator==(AlternatingForm const& o) const { return blocks == o.blocks; }
  bool operator<(AlternatingForm const& o) const;
};

/// The free product of the factors truncated at block length `cap`: all
/// alternating forms of length <= cap plus an absorbing zero; concatenation
/// merges boundary blocks from the same factor and any longer product is
/// zero.
struct TruncatedFreeProduct {
  std::vector<SemigroupPtr> factors;
  int cap = 0;
  SemigroupPtr result;
  /// Element index -> form; the zero element is last and has no form.
  std::vector<AlternatingForm> forms;
  int zero = 0;
  /// Per-factor embedding x -> single-block form (injective).
  std::vector<Homomorphism> embeddings;

  /// Element index of a form; throws Error if its block length exceeds cap
  /// or it is not alternating.
  int index_of(AlternatingForm const& form) const;
};

/// Builds the truncated product.  Throws Error when the element count would
/// exceed 100000.
TruncatedFreeProduct truncated_free_product(std::vector<SemigroupPtr> factors,
                                            int cap);

/// Merges adjacent blocks from the same factor (multiplying inside the
/// factor) to produce the alternating normal form of a block sequence.
AlternatingForm normal_form(std::vector<SemigroupPtr> const& factors,
                            std::vector<std::pair<int, int>> const& blocks);

/// Decides whether two forms denote distinct elements by building the
/// truncation at cap = max(block lengths) + 1, where distinct forms stay
/// distinct.
struct SeparationResult {
  bool equal = false;
  int cap = 0;
  std::optional<TruncatedFreeProduct> product;
  int image_u = -1;
  int image_v = -1;
};

SeparationResult separate(std::vector<SemigroupPtr> const& factors,
                          AlternatingForm const& u, AlternatingForm const& v);

/// Display rendering such as "(0:g)(1:e)".
std::string form_to_string(std::vector<SemigroupPtr> const& factors,
                           AlternatingForm const& form);

}  // namespace sgrp

#endif  // SGRP_FREEPROD_HPP
