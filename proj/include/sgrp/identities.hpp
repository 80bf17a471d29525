#ifndef SGRP_IDENTITIES_HPP
#define SGRP_IDENTITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "sgrp/semigroup.hpp"

namespace sgrp {

/// One factor of an omega-term: a variable raised either to a plain power
/// k >= 1 or to omega+shift.  Nested omega exponents are not supported.
struct OmegaFactor {
  char var;
  bool has_omega = false;
  long long shift = 0;  // meaningful when has_omega
  long long power = 1;  // meaningful when !has_omega
};

/// A nonempty product of omega-factors.
struct OmegaWord {
  std::vector<OmegaFactor> factors;
  std::string str() const;
};

/// An identity lhs = rhs between omega-terms, e.g. "xyz=xz" or
/// "x^w y x^w = x^w".  Variables are single letters; exponents are written
/// ^k, ^w, ^w+k or ^w-k.
struct Identity {
  OmegaWord lhs, rhs;
  std::vector<char> variables;  // in order of first appearance

  static Identity parse(std::string const& text);
  std::string str() const;
};

/// Outcome of an identity check; when it fails, `assignment` maps each
/// variable to the violating element.
struct IdentityCheck {
  bool holds = true;
  std::vector<std::pair<char, int>> assignment;
};

/// Evaluates an omega-term under an assignment (parallel to
/// identity.variables).  Elements may include the virtual identity.
int eval_omega_word(FiniteSemigroup const& s, OmegaWord const& w,
                    std::vector<char> const& variables,
                    std::vector<int> const& values);

/// Checks the identity over all assignments of elements of `domain` to the
/// variables; the first violation in lexicographic domain order is reported.
IdentityCheck satisfies_identity_on(FiniteSemigroup const& s,
                                    Identity const& id,
                                    std::vector<int> const& domain);

/// Checks the identity with variables ranging over the whole semigroup.
IdentityCheck satisfies_identity(FiniteSemigroup const& s, Identity const& id);

}  // namespace sgrp

#endif  // SGRP_IDENTITIES_HPP
