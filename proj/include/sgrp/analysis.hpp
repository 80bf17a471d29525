#ifndef SGRP_ANALYSIS_HPP
#define SGRP_ANALYSIS_HPP

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "sgrp/green.hpp"
#include "sgrp/homomorphism.hpp"
#include "sgrp/identities.hpp"
#include "sgrp/kr.hpp"
#include "sgrp/semigroup.hpp"

namespace sgrp {

/// Witnessed verdict for equidivisibility: whenever uv = xy, some t in S^I
/// satisfies x = ut, ty = v or xt = u, y = tv.  The witness is the first
/// failing quadruple (u, v, x, y) in lexicographic order.
struct EquidivReport {
  bool equidivisible = true;
  bool has_witness = false;
  std::array<int, 4> witness{};
};

EquidivReport is_equidivisible(FiniteSemigroup const& s);

/// The one-sided weakening that holds in every expansion: whenever uv = xy
/// there, some t in the base's S^I relates the projections.
struct DistanceOneReport {
  bool holds = true;
  bool has_witness = false;
  std::array<int, 4> witness{};
};

DistanceOneReport check_distance_one_equidivisibility(KrExpansion const& exp);

/// Violation of letter super-cancellativity: elements a, b of the generating
/// set and u, v in S^I with ua = vb (or au = bv when left_sided) yet a != b
/// or u != v.
struct LscViolation {
  bool left_sided = false;
  int a = 0;
  int b = 0;
  int u = FiniteSemigroup::kIdentity;
  int v = FiniteSemigroup::kIdentity;
};

struct LscReport {
  bool holds = true;
  std::optional<LscViolation> violation;
};

/// Brute-force scan over the images of the generating map and all u, v in
/// S^I; reports the first violation in scan order (a, b, u, v nested, right
/// side before left).
LscReport is_letter_super_cancellative(FiniteSemigroup const& s,
                                       GeneratingMap const& gens);

/// Verdict of the cover test: S is a cover iff the expansion over the
/// canonical generating map (identity on all elements, unless `gens`
/// overrides it) admits a homomorphic section of the projection.
struct KrCoverReport {
  bool is_cover = false;
  std::shared_ptr<KrExpansion const> expansion;
  /// Section theta with projection o theta = identity, when found.
  std::optional<Homomorphism> section;
  long long steps = 0;
};

KrCoverReport is_kr_cover(SemigroupPtr s, long long budget = kDefaultBudget,
                          GeneratingMap const* gens = nullptr);

/// Lift of a completely simple J-class through an aperiodic-fiber morphism:
/// a subsemigroup of the source that the morphism maps isomorphically onto
/// K.  `lift` is indexed parallel to K.
struct CsRetraction {
  std::vector<int> subsemigroup;
  std::vector<int> lift;
};

/// Preconditions checked: pi onto, every idempotent fiber is aperiodic
/// (x^w = x^(w+1) on it), and K is a J-class of the target closed under
/// multiplication.
CsRetraction cs_retraction(Homomorphism const& pi, std::vector<int> const& k);

/// Fails when some idempotent fiber violates one of the identities.
struct VMorphismReport {
  bool holds = true;
  int idempotent = -1;
  std::size_t identity_index = 0;
  std::vector<std::pair<char, int>> assignment;
};

VMorphismReport is_v_morphism(Homomorphism const& pi,
                              std::vector<Identity> const& identities);

/// Per-level absorption check: with z the omega power of the letter's image,
/// z [w] z = z for every word w of length <= max_len, and z lies in the
/// minimal ideal.
struct AbsorptionLevel {
  int level = 0;
  int order = 0;
  bool absorbs = true;
  bool in_minimal_ideal = true;
  std::optional<Word> witness;
};

struct AbsorptionReport {
  bool holds = true;
  std::vector<AbsorptionLevel> levels;
};

AbsorptionReport check_absorption(KrTower const& tower, int letter,
                                  int max_len);

/// Counts, per tower level, the bounded-length letter-super-cancellativity
/// violations: pairs of words u, v of length <= max_len and letters a, b
/// with [ua] = [vb] but a != b or [u] != [v] (and the left-sided dual).
struct TowerLscLevel {
  int level = 0;
  long long right_violations = 0;
  long long left_violations = 0;
};

std::vector<TowerLscLevel> check_tower_lsc(KrTower const& tower, int max_len);

/// Requires S to be a cover (throws Error otherwise), then reports the cover
/// test for S with an identity adjoined.
KrCoverReport check_identity_adjunction_preserves_cover(
    SemigroupPtr s, long long budget = kDefaultBudget);

}  // namespace sgrp

#endif  // SGRP_ANALYSIS_HPP
