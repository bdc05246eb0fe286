#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ucf/core.hpp"

namespace ucf {

namespace detail {

/// Bit-vector over member indices.
class IndexBits {
 public:
  IndexBits() = default;
  explicit IndexBits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  [[nodiscard]] bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  [[nodiscard]] bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  IndexBits& operator|=(const IndexBits& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  IndexBits& subtract(const IndexBits& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1)
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// below[i]: members properly contained in member i. cover[i]: the Hasse
/// children of member i (proper subsets with nothing of the family between).
struct InclusionOrder {
  std::vector<IndexBits> below;
  std::vector<IndexBits> cover;
  std::vector<bool> maximal;

  explicit InclusionOrder(const Family& f) {
    const std::size_t m = f.size();
    below.assign(m, IndexBits(m));
    maximal.assign(m, true);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (f[j].proper_subset_of(f[i])) {
          below[i].set(j);
          maximal[j] = false;
        }
    cover = below;
    for (std::size_t i = 0; i < m; ++i) {
      IndexBits deeper(m);
      below[i].for_each([&](std::size_t j) { deeper |= below[j]; });
      cover[i].subtract(deeper);
    }
  }
};

}  // namespace detail

/// Maximum chain length only; O(|F|^2) and allocation-light for hot loops.
inline int chain_height(const Family& f) {
  const auto& m = f.members();
  if (m.empty()) throw Error(ErrorCode::EmptyFamily, "height of empty family");
  std::vector<int> down(m.size(), 1);
  int best = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (down[j] >= down[i] && m[j].proper_subset_of(m[i])) down[i] = down[j] + 1;
    best = std::max(best, down[i]);
  }
  return best;
}

struct ChainReport {
  int height = 0;
  std::vector<SetWord> witness_chain;  // strictly decreasing, length == height
  int r = 0;
  std::vector<SetWord> r_witness;      // a maximal chain of size r
};

/// Height h with the lexicographically least maximum chain, and r (minimum
/// size of a maximal chain) computed over the Hasse diagram.
inline ChainReport height(const Family& f) {
  if (f.empty()) throw Error(ErrorCode::EmptyFamily, "height of empty family");
  const std::size_t m = f.size();
  const detail::InclusionOrder order(f);

  std::vector<int> down(m, 1);
  for (std::size_t i = 0; i < m; ++i)
    order.below[i].for_each([&](std::size_t j) { down[i] = std::max(down[i], down[j] + 1); });

  ChainReport rep;
  rep.height = *std::max_element(down.begin(), down.end());
  std::size_t cur = static_cast<std::size_t>(std::find(down.begin(), down.end(), rep.height) - down.begin());
  rep.witness_chain.push_back(f[cur]);
  while (down[cur] > 1) {
    std::size_t next = m;
    order.below[cur].for_each([&](std::size_t j) {
      if (next == m && down[j] == down[cur] - 1) next = j;
    });
    cur = next;
    rep.witness_chain.push_back(f[cur]);
  }

  std::vector<int> shortest(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    int best = 0;
    order.cover[i].for_each([&](std::size_t j) {
      if (best == 0 || shortest[j] < best) best = shortest[j];
    });
    shortest[i] = best + 1;
  }
  std::size_t top = m;
  for (std::size_t i = 0; i < m; ++i)
    if (order.maximal[i] && (top == m || shortest[i] < shortest[top])) top = i;
  rep.r = shortest[top];
  cur = top;
  rep.r_witness.push_back(f[cur]);
  while (shortest[cur] > 1) {
    std::size_t next = m;
    order.cover[cur].for_each([&](std::size_t j) {
      if (next == m && shortest[j] == shortest[cur] - 1) next = j;
    });
    cur = next;
    rep.r_witness.push_back(f[cur]);
  }
  return rep;
}

/// Hasse children of member s within f, in canonical order.
inline std::vector<SetWord> hasse_children(const Family& f, SetWord s) {
  std::vector<SetWord> below;
  for (SetWord m : f)
    if (m.proper_subset_of(s)) below.push_back(m);
  std::vector<SetWord> out;
  for (SetWord c : below) {
    bool covered = std::any_of(below.begin(), below.end(), [&](SetWord z) { return c.proper_subset_of(z); });
    if (!covered) out.push_back(c);
  }
  return out;
}

struct Lemma13Result {
  bool holds = true;
  std::vector<SetWord> offending_chain;  // a maximal chain with no (n-1)-member
};

/// Every maximal chain of a separating union-closed family passes through a
/// member of size n-1. Maximal chains start at [n] and continue through a
/// Hasse child of [n], so it suffices to inspect those children.
inline Lemma13Result lemma13_check(const Family& f) {
  require_union_closed_full(f);
  if (!is_separating(f)) throw Error(ErrorCode::NotSeparating, "family is not separating");
  const SetWord full = SetWord::full(f.ground());
  Lemma13Result res;
  for (SetWord child : hasse_children(f, full)) {
    if (child.size() == f.n() - 1) continue;
    res.holds = false;
    res.offending_chain = {full, child};
    for (auto next = hasse_children(f, child); !next.empty(); next = hasse_children(f, res.offending_chain.back()))
      res.offending_chain.push_back(next.front());
    break;
  }
  return res;
}

/// (size + h - 3) / (h - 1).
inline Rational thm12_bound(std::int64_t size, std::int64_t h) {
  if (h == 1) throw Error(ErrorCode::DegenerateHeight, "height 1 with more than one member is impossible");
  if (size <= 1 || h < 1) throw Error(ErrorCode::TooSmall, "bound needs |F| > 1 and h >= 2");
  return Rational(size + h - 3, h - 1);
}

struct Thm12Witness {
  std::vector<SetWord> chain;  // C_1 ⊋ ... ⊋ C_h
  std::vector<int> picks;      // c_i, smallest element of C_i \ C_{i+1}
  std::vector<int> rest_counts;  // memberships of c_i outside {C_1, C_h}
  int element = 0;
  int count = 0;  // memberships over the whole family
  Rational bound;
  bool ok = false;
};

/// Replays the counting argument: pick one element from each layer of the
/// least maximum chain and keep the one seen most often off the chain ends.
inline Thm12Witness thm12_witness(const Family& f) {
  if (!is_union_closed(f)) throw Error(ErrorCode::NotUnionClosed, "family is not union-closed");
  if (f.size() <= 1) throw Error(ErrorCode::TooSmall, "needs more than one member");
  if (!has_full_base(f)) throw Error(ErrorCode::BaseNotFull, "base set is not [n]");

  Thm12Witness w;
  w.chain = height(f).witness_chain;
  const auto h = static_cast<std::int64_t>(w.chain.size());
  w.bound = thm12_bound(static_cast<std::int64_t>(f.size()), h);
  const SetWord top = w.chain.front(), bottom = w.chain.back();
  std::size_t best = 0;
  for (std::size_t i = 0; i + 1 < w.chain.size(); ++i) {
    const int c = (w.chain[i] - w.chain[i + 1]).min_element();
    int rest = 0;
    for (SetWord s : f)
      if (s != top && s != bottom && s.contains(c)) ++rest;
    w.picks.push_back(c);
    w.rest_counts.push_back(rest);
    if (rest > w.rest_counts[best]) best = i;
  }
  w.element = w.picks[best];
  w.count = static_cast<int>(std::count_if(f.begin(), f.end(), [&](SetWord s) { return s.contains(w.element); }));
  w.ok = Rational(w.count) >= w.bound;
  return w;
}

/// Separation restricted to the elements of `universe`.
inline bool is_separating_on(const Family& f, SetWord universe) {
  std::vector<std::vector<std::uint64_t>> sig;
  auto all = element_signatures(f);
  for (int e : universe.elements()) sig.push_back(std::move(all[static_cast<std::size_t>(e - 1)]));
  std::sort(sig.begin(), sig.end());
  return std::adjacent_find(sig.begin(), sig.end()) == sig.end();
}

struct SizeBoundStep {
  std::size_t family_size = 0;
  int base_size = 0;
  int x = 0;  // most frequent element removed at this level (0 at the last level)
  int y = 0;  // secondary element when every member contains x, else 0
  bool separating = false;  // on the level's own base
};

struct SizeBoundTrace {
  std::vector<SizeBoundStep> steps;
  bool holds = true;  // |family| >= |base| at every level
};

/// Replays the induction behind |F| >= n: descend to F_x (or to (F^_x)_y when
/// x lies in every member) until a single member remains.
inline SizeBoundTrace size_bound_witness(const Family& f) {
  if (!is_union_closed(f)) throw Error(ErrorCode::NotUnionClosed, "family is not union-closed");
  if (!is_separating_on(f, base_set(f))) throw Error(ErrorCode::NotSeparating, "family is not separating");

  auto most_frequent = [](const Family& g) {
    const auto count = frequencies(g);
    return static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin()) + 1;
  };

  SizeBoundTrace trace;
  Family cur = f;
  while (true) {
    SizeBoundStep step;
    step.family_size = cur.size();
    const SetWord base = base_set(cur);
    step.base_size = base.size();
    step.separating = is_separating_on(cur, base);
    trace.holds = trace.holds && step.family_size >= static_cast<std::size_t>(step.base_size);
    if (cur.size() == 1) {
      trace.steps.push_back(step);
      break;
    }
    step.x = most_frequent(cur);
    const SetWord xs = SetWord::single(step.x);
    Family next = cur.filter([&](SetWord s) { return s.contains(step.x); });
    if (next.size() == cur.size()) {
      std::vector<SetWord> stripped;
      for (SetWord s : cur) stripped.push_back(s - xs);
      const Family hat(cur.ground(), std::move(stripped));
      step.y = most_frequent(hat);
      next = hat.filter([&](SetWord s) { return s.contains(step.y); });
    }
    if (next.size() >= cur.size() || next.empty())
      throw Error(ErrorCode::Internal, "size-bound recursion made no progress on " + cur.str());
    trace.steps.push_back(step);
    cur = std::move(next);
  }
  return trace;
}

}  // namespace ucf
