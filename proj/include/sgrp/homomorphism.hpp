#ifndef SGRP_HOMOMORPHISM_HPP
#define SGRP_HOMOMORPHISM_HPP

#include <vector>

#include "sgrp/semigroup.hpp"

namespace sgrp {

/// A total map between two finite semigroups, validated to be multiplicative
/// on all element pairs at construction.
class Homomorphism {
 public:
  Homomorphism() = default;
  Homomorphism(SemigroupPtr source, SemigroupPtr target, std::vector<int> map);

  SemigroupPtr const& source() const { return source_; }
  SemigroupPtr const& target() const { return target_; }
  std::vector<int> const& map() const { return map_; }

  /// Applies the map; the virtual identity maps to the virtual identity.
  int operator()(int s) const {
    return s == FiniteSemigroup::kIdentity ? s
                                           : map_[static_cast<std::size_t>(s)];
  }

  bool is_onto() const;
  bool is_injective() const;

  /// h after g (g first): requires g.target and h.source to have equal
  /// tables.
  static Homomorphism compose(Homomorphism const& h, Homomorphism const& g);

 private:
  SemigroupPtr source_;
  SemigroupPtr target_;
  std::vector<int> map_;
};

}  // namespace sgrp

#endif  // SGRP_HOMOMORPHISM_HPP
