#pragma once

// Slow, definition-level reference implementations used to cross-check the
// library, plus a seeded random family generator.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "ucf/ucf.hpp"

namespace oracle {

using ucf::Family;
using ucf::SetWord;

/// Longest strictly decreasing chain by plain DFS over all members.
inline int height(const Family& f) {
  std::function<int(SetWord)> down = [&](SetWord top) {
    int best = 1;
    for (SetWord s : f)
      if (s.proper_subset_of(top)) best = std::max(best, 1 + down(s));
    return best;
  };
  int best = 0;
  for (SetWord s : f) best = std::max(best, down(s));
  return best;
}

/// Every maximal chain, top first.
inline std::vector<std::vector<SetWord>> maximal_chains(const Family& f) {
  std::vector<std::vector<SetWord>> out;
  std::vector<SetWord> cur;
  auto covered_by = [&](SetWord lo, SetWord hi) {
    if (!lo.proper_subset_of(hi)) return false;
    for (SetWord m : f)
      if (lo.proper_subset_of(m) && m.proper_subset_of(hi)) return false;
    return true;
  };
  std::function<void()> extend = [&] {
    bool any = false;
    for (SetWord s : f)
      if (covered_by(s, cur.back())) {
        any = true;
        cur.push_back(s);
        extend();
        cur.pop_back();
      }
    if (!any) out.push_back(cur);
  };
  for (SetWord top : f) {
    bool maximal = true;
    for (SetWord s : f) maximal = maximal && !top.proper_subset_of(s);
    if (!maximal) continue;
    cur = {top};
    extend();
  }
  return out;
}

inline int min_maximal_chain(const Family& f) {
  std::size_t best = f.size();
  for (const auto& c : maximal_chains(f)) best = std::min(best, c.size());
  return static_cast<int>(best);
}

/// Every maximal chain contains a member of size n-1.
inline bool lemma13(const Family& f) {
  for (const auto& c : maximal_chains(f))
    if (std::none_of(c.begin(), c.end(), [&](SetWord s) { return s.size() == f.n() - 1; })) return false;
  return true;
}

/// Pairwise definition: every pair of distinct elements is split by a member.
inline bool separating(const Family& f) {
  for (int a = 1; a <= f.n(); ++a)
    for (int b = a + 1; b <= f.n(); ++b) {
      bool split = false;
      for (SetWord s : f) split = split || (s.contains(a) != s.contains(b));
      if (!split) return false;
    }
  return true;
}

inline bool union_closed(const Family& f) {
  if (std::none_of(f.begin(), f.end(), [](SetWord s) { return !s.empty(); })) return false;
  for (SetWord a : f)
    for (SetWord b : f)
      if (!f.contains(a | b)) return false;
  return true;
}

/// Smallest number of members of size < n/2 whose union is the union of all
/// such members, found by testing every subfamily.
inline int min_cover_size(const Family& f) {
  std::vector<SetWord> small;
  for (SetWord s : f)
    if (2 * s.size() < f.n() && !s.empty()) small.push_back(s);
  SetWord target;
  for (SetWord s : small) target |= s;
  if (target.empty()) return 0;
  int best = static_cast<int>(small.size());
  for (std::uint32_t mask = 1; mask < (1u << small.size()); ++mask) {
    SetWord u;
    for (std::size_t i = 0; i < small.size(); ++i)
      if ((mask >> i) & 1u) u |= small[i];
    if (u == target) best = std::min(best, std::popcount(mask));
  }
  return best;
}

/// Union closure of a handful of random sets plus [n]; always union-closed
/// with full base.
inline Family random_uc(std::mt19937_64& rng, int n, int seeds) {
  std::uniform_int_distribution<std::uint64_t> word(0, (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1));
  std::vector<SetWord> sets{SetWord::full(ucf::GroundSize(n))};
  for (int i = 0; i < seeds; ++i) sets.emplace_back(word(rng));
  std::bernoulli_distribution coin(0.5);
  if (coin(rng)) sets.emplace_back();
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return ucf::union_closure(Family(ucf::GroundSize(n), std::move(sets)));
}

}  // namespace oracle
