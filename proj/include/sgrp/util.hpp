#ifndef SGRP_UTIL_HPP
#define SGRP_UTIL_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgrp {

/// Base class for all errors raised by the library.  Carries a message only;
/// structured witnesses are embedded in the message text.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a computation exceeds its step budget.
struct BudgetError : Error {
  using Error::Error;
};

/// Fixed-width bitset sized at runtime.  Used for transition-edge sets, where
/// the universe (all transition edges of one graph) is known up front.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  std::size_t size() const { return nbits_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) {
      c += static_cast<std::size_t>(__builtin_popcountll(w));
    }
    return c;
  }

  /// Indices of set bits, ascending.
  std::vector<std::size_t> bits() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nbits_; ++i) {
      if (test(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  bool operator==(DynBitset const& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(DynBitset const& o) const { return !(*this == o); }

  std::uint64_t hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// FNV-1a over a byte string; used for report content hashes.
std::uint64_t fnv1a64(std::string_view data);

/// Lower-case hex rendering of a 64-bit value, zero padded to 16 digits.
std::string to_hex(std::uint64_t v);

/// Spent/remaining step accounting shared by graph construction, expansion
/// and the section search.  Throws BudgetError once more than `limit` steps
/// have been charged.
class Budget {
 public:
  explicit Budget(long long limit) : limit_(limit) {}

  void charge(long long steps, char const* what) {
    spent_ += steps;
    if (spent_ > limit_) {
      throw BudgetError(std::string("budget exceeded during ") + what + " (" +
                        std::to_string(spent_) + " > " +
                        std::to_string(limit_) + " steps)");
    }
  }
  long long spent() const { return spent_; }
  long long limit() const { return limit_; }

 private:
  long long limit_;
  long long spent_ = 0;
};

inline constexpr long long kDefaultBudget = 1'000'000;

}  // namespace sgrp

#endif  // SGRP_UTIL_HPP
