#ifndef SGRP_SEMIGROUP_HPP
#define SGRP_SEMIGROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgrp/util.hpp"

namespace sgrp {

/// A finite semigroup given by its full multiplication table.  Elements are
/// dense indices 0..order-1; table[x][y] is the index of x*y.  Associativity
/// is validated on construction.
class FiniteSemigroup {
 public:
  /// Virtual identity used when formulas quantify over S^I.  It is never an
  /// element index; mul() treats it as a two-sided identity.
  static constexpr int kIdentity = -1;

  FiniteSemigroup() = default;

  /// Builds from a square table, checking shape, entry range and
  /// associativity (full n^3 scan; the error message carries a witness
  /// triple).  Names are optional display labels, one per element.  When
  /// `adjoined` is given, that element must be a two-sided identity and is
  /// flagged as adjoined.
  static FiniteSemigroup from_table(std::vector<std::vector<int>> const& rows,
                                    std::vector<std::string> names = {},
                                    std::optional<int> adjoined = {});

  /// Builds from a flat row-major table whose associativity is verified by
  /// Light's test against `generators`, which must generate the semigroup.
  /// Used by internal constructions whose tables can be large.
  static FiniteSemigroup from_table_with_generators(
      int order, std::vector<int> table, std::vector<std::string> names,
      std::vector<int> const& generators);

  int order() const { return order_; }

  /// Table lookup; both arguments must be element indices.
  int at(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }

  /// Product in S^I: kIdentity acts as a two-sided identity.
  int mul(int x, int y) const {
    if (x == kIdentity) return y;
    if (y == kIdentity) return x;
    return at(x, y);
  }

  /// s^k for k >= 1 (s may be kIdentity).
  int power(int s, long long k) const;

  /// Index and period of the subsemigroup generated by s: the least (i, p)
  /// with s^(i+p) = s^i.  For kIdentity returns (1, 1).
  std::pair<int, int> index_period(int s) const;

  /// s^(omega+shift): the unique idempotent power of s, shifted `shift`
  /// steps along the cycle of s.  kIdentity is its own omega power.
  int omega_power(int s, long long shift = 0) const;

  /// Least n >= 1 with x^n = x^omega for every element x.
  int omega_exponent() const;

  bool is_idempotent(int s) const {
    return s == kIdentity || at(s, s) == s;
  }
  std::vector<int> idempotents() const;

  /// Two-sided identity element, if the table has one.
  std::optional<int> identity_element() const;

  /// Index recorded by adjoin_identity(); disjoint from identity_element(),
  /// which detects identities structurally.
  std::optional<int> adjoined_identity() const { return adjoined_; }

  std::string name(int s) const;
  std::vector<std::string> const& names() const { return names_; }
  std::vector<int> const& table() const { return table_; }

  bool operator==(FiniteSemigroup const& o) const {
    return order_ == o.order_ && table_ == o.table_;
  }

 private:
  friend FiniteSemigroup adjoin_identity(FiniteSemigroup const&);

  void check_range() const;
  void check_associativity_full() const;
  void check_associativity_light(std::vector<int> const& generators) const;

  int order_ = 0;
  std::vector<int> table_;  // row-major, order_ * order_
  std::vector<std::string> names_;
  std::optional<int> adjoined_;
};

using SemigroupPtr = std::shared_ptr<FiniteSemigroup const>;

inline SemigroupPtr share(FiniteSemigroup s) {
  return std::make_shared<FiniteSemigroup const>(std::move(s));
}

/// A word over a finite alphabet, stored as letter indices into a
/// GeneratingMap.  Words are nonempty wherever they denote semigroup
/// elements; the empty word stands for the virtual identity.
using Word = std::vector<int>;

/// A finite alphabet of display symbols together with one image element per
/// letter.  The images must generate the semigroup (an adjoined identity is
/// exempt).
struct GeneratingMap {
  std::vector<std::string> letters;
  std::vector<int> images;

  int size() const { return static_cast<int>(letters.size()); }
  int image(int letter) const { return images[static_cast<std::size_t>(letter)]; }

  /// Letter index of `symbol`, or -1.
  int letter_of(std::string const& symbol) const;

  /// The canonical map: one letter per element, named after it.
  static GeneratingMap identity_of(FiniteSemigroup const& s);
};

/// Closure of `seed` under the table, sorted ascending.
std::vector<int> generated_closure(FiniteSemigroup const& s,
                                   std::vector<int> const& seed);

/// Throws Error unless gens is well formed and its images generate s
/// (the flagged adjoined identity need not be reached).
void validate_generating(FiniteSemigroup const& s, GeneratingMap const& gens);

/// Image of a word under a generating map; the empty word maps to
/// FiniteSemigroup::kIdentity.
int eval_word(FiniteSemigroup const& s, GeneratingMap const& gens,
              Word const& w);

/// Renders a word with its letter symbols; single-character alphabets join
/// without separators.
std::string word_to_string(GeneratingMap const& gens, Word const& w);

/// All words over `alphabet_size` letters of length 1..max_len in military
/// order (by length, then lexicographically).  Throws Error if the count
/// would exceed `guard`.
std::vector<Word> words_up_to(int alphabet_size, int max_len,
                              long long guard = 20'000'000);

}  // namespace sgrp

#endif  // SGRP_SEMIGROUP_HPP
