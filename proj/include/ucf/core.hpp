#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "ucf/error.hpp"
#include "ucf/rational.hpp"

namespace ucf {

/// Word capacity: ground sets are [n] with 1 <= n <= kMaxGround.
inline constexpr int kMaxGround = 64;

/// Size of the ground set [n] = {1, ..., n}.
class GroundSize {
 public:
  constexpr GroundSize() = default;
  explicit GroundSize(int n) : n_(n) {
    if (n < 1 || n > kMaxGround)
      throw Error(ErrorCode::OutOfRange, "ground size " + std::to_string(n) + " outside [1, 64]");
  }
  [[nodiscard]] constexpr int value() const noexcept { return n_; }
  friend constexpr auto operator<=>(GroundSize, GroundSize) = default;

 private:
  int n_ = 1;
};

/// A subset of [n] packed into one machine word; element i lives in bit i-1.
class SetWord {
 public:
  using word_type = std::uint64_t;

  constexpr SetWord() = default;
  constexpr explicit SetWord(word_type bits) : bits_(bits) {}

  /// Builds a set from 1-based element labels.
  static SetWord of(std::initializer_list<int> elements) {
    return of(std::span<const int>(elements.begin(), elements.size()));
  }
  static SetWord of(std::span<const int> elements) {
    word_type bits = 0;
    for (int e : elements) {
      if (e < 1 || e > kMaxGround)
        throw Error(ErrorCode::OutOfRange, "element " + std::to_string(e) + " outside [1, 64]");
      bits |= word_type{1} << (e - 1);
    }
    return SetWord(bits);
  }
  /// The prefix set [m] = {1, ..., m}; [0] is the empty set.
  static constexpr SetWord prefix(int m) noexcept {
    return SetWord(m >= 64 ? ~word_type{0} : (word_type{1} << m) - 1);
  }
  static constexpr SetWord full(GroundSize n) noexcept { return prefix(n.value()); }
  static constexpr SetWord single(int element) noexcept { return SetWord(word_type{1} << (element - 1)); }

  [[nodiscard]] constexpr word_type bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr bool contains(int element) const noexcept {
    return (bits_ >> (element - 1)) & 1U;
  }
  [[nodiscard]] constexpr bool subset_of(SetWord o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  [[nodiscard]] constexpr bool proper_subset_of(SetWord o) const noexcept {
    return subset_of(o) && bits_ != o.bits_;
  }
  [[nodiscard]] constexpr bool intersects(SetWord o) const noexcept { return (bits_ & o.bits_) != 0; }
  /// Smallest element, or 0 for the empty set.
  [[nodiscard]] constexpr int min_element() const noexcept {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }
  /// Largest element, or 0 for the empty set.
  [[nodiscard]] constexpr int max_element() const noexcept { return 64 - std::countl_zero(bits_); }

  [[nodiscard]] std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (word_type b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// "{1,2,3}" / "{}".
  [[nodiscard]] std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend constexpr SetWord operator|(SetWord a, SetWord b) noexcept { return SetWord(a.bits_ | b.bits_); }
  friend constexpr SetWord operator&(SetWord a, SetWord b) noexcept { return SetWord(a.bits_ & b.bits_); }
  friend constexpr SetWord operator-(SetWord a, SetWord b) noexcept { return SetWord(a.bits_ & ~b.bits_); }
  friend constexpr SetWord operator^(SetWord a, SetWord b) noexcept { return SetWord(a.bits_ ^ b.bits_); }
  constexpr SetWord& operator|=(SetWord o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr SetWord& operator&=(SetWord o) noexcept { bits_ &= o.bits_; return *this; }

  friend constexpr auto operator<=>(SetWord, SetWord) = default;

 private:
  word_type bits_ = 0;
};

/// A set of distinct subsets of [n], held in ascending order of bit value.
/// Since X proper-subset Y implies bits(X) < bits(Y), the canonical order is
/// also a linear extension of inclusion.
class Family {
 public:
  Family() = default;
  explicit Family(GroundSize n) : n_(n) {}

  /// Sorts the members; throws DuplicateMember / OutOfRange on bad input.
  Family(GroundSize n, std::vector<SetWord> members) : n_(n), members_(std::move(members)) {
    const SetWord universe = SetWord::full(n_);
    for (SetWord s : members_)
      if (!s.subset_of(universe))
        throw Error(ErrorCode::OutOfRange, "member " + s.str() + " not within [" + std::to_string(n_.value()) + "]");
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) throw Error(ErrorCode::DuplicateMember, "duplicate member " + dup->str());
  }
  Family(int n, std::initializer_list<std::initializer_list<int>> sets) : Family(GroundSize(n), to_words(sets)) {}

  /// Builds a family from a mask over the power set of [n] (bit s set iff the
  /// subset with bit pattern s is a member). Requires n <= 6.
  static Family from_powerset_mask(GroundSize n, std::uint64_t mask) {
    Family f(n);
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
      f.members_.emplace_back(static_cast<SetWord::word_type>(std::countr_zero(m)));
    return f;
  }

  [[nodiscard]] GroundSize ground() const noexcept { return n_; }
  [[nodiscard]] int n() const noexcept { return n_.value(); }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] const std::vector<SetWord>& members() const noexcept { return members_; }
  [[nodiscard]] SetWord operator[](std::size_t i) const noexcept { return members_[i]; }
  [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
  [[nodiscard]] auto end() const noexcept { return members_.end(); }

  [[nodiscard]] bool contains(SetWord s) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), s);
  }
  /// Index of s in the canonical order, or -1.
  [[nodiscard]] std::ptrdiff_t index_of(SetWord s) const noexcept {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    return (it != members_.end() && *it == s) ? it - members_.begin() : -1;
  }

  /// Same ground size, members filtered by pred (order preserved).
  template <class Pred>
  [[nodiscard]] Family filter(Pred&& pred) const {
    Family out(n_);
    for (SetWord s : members_)
      if (pred(s)) out.members_.push_back(s);
    return out;
  }

  /// Returns a copy with s inserted (no-op when already present).
  [[nodiscard]] Family with(SetWord s) const {
    if (!s.subset_of(SetWord::full(n_))) throw Error(ErrorCode::OutOfRange, "member " + s.str() + " outside ground");
    Family out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), s);
    if (it == out.members_.end() || *it != s) out.members_.insert(it, s);
    return out;
  }
  [[nodiscard]] Family without(SetWord s) const {
    return filter([s](SetWord m) { return m != s; });
  }

  [[nodiscard]] std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out += ',';
      out += members_[i].str();
    }
    return out + "}";
  }

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family& a, const Family& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                                  b.members_.end());
  }

 private:
  static std::vector<SetWord> to_words(std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<SetWord> out;
    for (auto s : sets) out.push_back(SetWord::of(s));
    return out;
  }

  GroundSize n_;
  std::vector<SetWord> members_;
};

// ---------------------------------------------------------------------------
// Predicates and operators

/// Union of all members.
inline SetWord base_set(const Family& f) {
  if (f.empty()) throw Error(ErrorCode::EmptyFamily, "base_set of empty family");
  SetWord b;
  for (SetWord s : f) b |= s;
  return b;
}

/// Same as base_set but an empty family yields the empty set.
inline SetWord union_of(std::span<const SetWord> sets) noexcept {
  SetWord b;
  for (SetWord s : sets) b |= s;
  return b;
}

inline bool has_full_base(const Family& f) { return !f.empty() && base_set(f) == SetWord::full(f.ground()); }

/// At least one nonempty member and closed under pairwise union.
inline bool is_union_closed(const Family& f) {
  const auto& m = f.members();
  if (m.empty() || m.back().empty()) return false;
  std::unordered_set<SetWord::word_type> lookup;
  lookup.reserve(m.size() * 2);
  for (SetWord s : m) lookup.insert(s.bits());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!lookup.contains((m[i] | m[j]).bits())) return false;
  return true;
}

/// Smallest union-closed superfamily (pairwise unions iterated to a fixpoint).
inline Family union_closure(const Family& f) {
  if (f.empty()) throw Error(ErrorCode::EmptyFamily, "union_closure of empty family");
  std::vector<SetWord> work(f.begin(), f.end());
  std::unordered_set<SetWord::word_type> seen;
  for (SetWord s : work) seen.insert(s.bits());
  // Every new member is unioned with everything before it, so a single sweep
  // over the growing list reaches the fixpoint.
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      SetWord u = work[i] | work[j];
      if (seen.insert(u.bits()).second) work.push_back(u);
    }
  return Family(f.ground(), std::move(work));
}

/// Membership signature of every element 1..n, as a bit-vector over member
/// indices (one word per 64 members).
inline std::vector<std::vector<std::uint64_t>> element_signatures(const Family& f) {
  const std::size_t words = (f.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> sig(static_cast<std::size_t>(f.n()), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (int e : f[i].elements()) sig[static_cast<std::size_t>(e - 1)][i / 64] |= std::uint64_t{1} << (i % 64);
  return sig;
}

/// Every pair of distinct elements of [n] is split by some member. Elements in
/// no member all share the empty signature, so two of them break separation.
inline bool is_separating(const Family& f) {
  if (f.size() <= 64) {
    std::uint64_t one[kMaxGround] = {};
    for (std::size_t i = 0; i < f.size(); ++i)
      for (auto b = f[i].bits(); b != 0; b &= b - 1) one[std::countr_zero(b)] |= std::uint64_t{1} << i;
    std::sort(one, one + f.n());
    return std::adjacent_find(one, one + f.n()) == one + f.n();
  }
  auto sig = element_signatures(f);
  std::sort(sig.begin(), sig.end());
  return std::adjacent_find(sig.begin(), sig.end()) == sig.end();
}

enum class SizeCmp { lt, le, gt, ge };

/// Members whose cardinality compares against x as requested.
inline Family slice(const Family& f, SizeCmp kind, const Rational& x) {
  return f.filter([&](SetWord s) {
    const Rational size(s.size());
    switch (kind) {
      case SizeCmp::lt: return size < x;
      case SizeCmp::le: return size <= x;
      case SizeCmp::gt: return size > x;
      case SizeCmp::ge: return size >= x;
    }
    return false;
  });
}

enum class SubsetKind { proper, improper };

/// Members contained in x (properly, or not necessarily).
inline Family slice_subset(const Family& f, SubsetKind kind, SetWord x) {
  return f.filter([&](SetWord s) { return kind == SubsetKind::proper ? s.proper_subset_of(x) : s.subset_of(x); });
}

/// Elements of s covered by no other member of ctx.
inline SetWord irr(SetWord s, const Family& ctx) {
  if (!ctx.contains(s)) throw Error(ErrorCode::NotAMember, s.str() + " is not a member of " + ctx.str());
  SetWord others;
  for (SetWord m : ctx)
    if (m != s) others |= m;
  return s - others;
}

/// Private parts of every member, computed in one pass (O(|S|)).
inline std::vector<SetWord> irr_all(std::span<const SetWord> sets) {
  const std::size_t m = sets.size();
  std::vector<SetWord> prefix(m + 1), suffix(m + 1);
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] | sets[i];
  for (std::size_t i = m; i > 0; --i) suffix[i - 1] = suffix[i] | sets[i - 1];
  std::vector<SetWord> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = sets[i] - (prefix[i] | suffix[i + 1]);
  return out;
}

/// Every member has a nonempty private part; vacuous for the empty family.
inline bool is_irredundant(const Family& f) {
  for (SetWord p : irr_all(f.members()))
    if (p.empty()) return false;
  return true;
}

inline std::int64_t total_size(const Family& f) noexcept {
  std::int64_t sum = 0;
  for (SetWord s : f) sum += s.size();
  return sum;
}

/// Average member cardinality as an exact rational.
inline Rational avg_size(const Family& f) {
  if (f.empty()) throw Error(ErrorCode::EmptyFamily, "avg_size of empty family");
  return Rational(total_size(f), static_cast<std::int64_t>(f.size()));
}

/// count[i-1] = number of members containing element i.
inline std::vector<int> frequencies(const Family& f) {
  std::vector<int> count(static_cast<std::size_t>(f.n()), 0);
  for (SetWord s : f)
    for (auto b = s.bits(); b != 0; b &= b - 1) ++count[static_cast<std::size_t>(std::countr_zero(b))];
  return count;
}

struct FranklWitness {
  int element = 0;
  int count = 0;
  Rational threshold;
  bool ok = false;
};

/// Most frequent element (smallest on ties), |F|/2, and whether it reaches it.
inline FranklWitness frankl_witness(const Family& f) {
  if (f.empty()) throw Error(ErrorCode::EmptyFamily, "frankl_witness of empty family");
  const auto count = frequencies(f);
  auto best = std::max_element(count.begin(), count.end());  // first maximum = smallest element
  FranklWitness w;
  w.element = static_cast<int>(best - count.begin()) + 1;
  w.count = *best;
  w.threshold = Rational(static_cast<std::int64_t>(f.size()), 2);
  w.ok = 2 * static_cast<std::int64_t>(w.count) >= static_cast<std::int64_t>(f.size());
  return w;
}

/// Throws unless f is union-closed with base exactly [n].
inline void require_union_closed_full(const Family& f) {
  if (!is_union_closed(f)) throw Error(ErrorCode::NotUnionClosed, "family is not union-closed");
  if (!has_full_base(f)) throw Error(ErrorCode::BaseNotFull, "base set is not [" + std::to_string(f.n()) + "]");
}

}  // namespace ucf
