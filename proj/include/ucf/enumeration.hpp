#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "ucf/bfamily.hpp"
#include "ucf/chains.hpp"
#include "ucf/core.hpp"

namespace ucf {

/// Largest ground size the exhaustive enumerator accepts.
inline constexpr int kMaxEnumN = 5;
/// Largest ground size for the naive 2^(2^n) oracle.
inline constexpr int kMaxBruteN = 4;

using IntRange = std::pair<int, int>;  // inclusive

struct EnumFilter {
  std::optional<bool> separating;
  std::optional<IntRange> height;
  std::optional<IntRange> bsize;  // |B|, minimum cover size
  std::optional<bool> contains_empty;

  [[nodiscard]] bool empty() const noexcept { return !separating && !height && !bsize && !contains_empty; }

  /// Cheap tests first; |B| is only computed when requested.
  [[nodiscard]] bool matches(const Family& f) const {
    if (contains_empty && (f.contains(SetWord()) != *contains_empty)) return false;
    if (separating && is_separating(f) != *separating) return false;
    if (height) {
      const int h = chain_height(f);
      if (h < height->first || h > height->second) return false;
    }
    if (bsize) {
      const int b = b_report(f).size;
      if (b < bsize->first || b > bsize->second) return false;
    }
    return true;
  }
};

namespace detail {

struct EnumNode {
  std::uint64_t mask;  // power-set mask of the members decided in so far
  int next;            // next candidate subset to decide; -1 at a leaf
};

inline std::uint64_t powerset_full(int n) { return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << n)) - 1; }

/// Candidate s may join the closed family `mask` iff every union s|X with a
/// member X is already a member or s itself. Larger subsets are decided
/// first, so a missing union was excluded on an earlier branch.
inline bool can_include(std::uint64_t mask, int s) noexcept {
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    const int u = s | std::countr_zero(m);
    if (u != s && !((mask >> u) & 1U)) return false;
  }
  return true;
}

template <class Leaf>
void enum_dfs(EnumNode node, Leaf& leaf) {
  if (node.next < 0) {
    leaf(node.mask);
    return;
  }
  const int s = node.next;
  if (can_include(node.mask, s)) enum_dfs(EnumNode{node.mask | (std::uint64_t{1} << s), s - 1}, leaf);
  enum_dfs(EnumNode{node.mask, s - 1}, leaf);
}

/// Subtree roots after `depth` decisions, in depth-first (include-first) order.
inline std::vector<EnumNode> enum_roots(int n, int depth) {
  const int top = (1 << n) - 1;
  std::vector<EnumNode> roots;
  auto rec = [&](auto&& self, EnumNode node, int d) -> void {
    if (d == 0 || node.next < 0) {
      roots.push_back(node);
      return;
    }
    const int s = node.next;
    if (can_include(node.mask, s)) self(self, EnumNode{node.mask | (std::uint64_t{1} << s), s - 1}, d - 1);
    self(self, EnumNode{node.mask, s - 1}, d - 1);
  };
  rec(rec, EnumNode{std::uint64_t{1} << top, top - 1}, depth);
  return roots;
}

inline void check_enum_n(int n) {
  if (n < 1) throw Error(ErrorCode::BadN, "n must be positive");
  if (n > kMaxEnumN) throw Error(ErrorCode::NTooLarge, "exhaustive enumeration is capped at n=5");
}

}  // namespace detail

/// Visits every union-closed family with base exactly [n] passing the filter,
/// once each and in a fixed order. Returns the number visited.
template <class Visitor>
std::uint64_t enumerate_uc(int n, const EnumFilter& filter, Visitor&& visit) {
  detail::check_enum_n(n);
  const GroundSize g(n);
  std::uint64_t count = 0;
  auto leaf = [&](std::uint64_t mask) {
    Family f = Family::from_powerset_mask(g, mask);
    if (!filter.matches(f)) return;
    ++count;
    visit(f);
  };
  const int top = (1 << n) - 1;
  detail::enum_dfs(detail::EnumNode{std::uint64_t{1} << top, top - 1}, leaf);
  return count;
}

/// Worker count: `requested` if nonzero, else hardware concurrency (>= 1).
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Parallel fold over the same sequence enumerate_uc visits. Each subtree
/// folds into its own accumulator; accumulators are merged in subtree order,
/// so the result does not depend on the worker count.
template <class Acc, class Visit, class Merge>
Acc enumerate_uc_reduce(int n, const EnumFilter& filter, unsigned threads, Visit visit, Merge merge) {
  detail::check_enum_n(n);
  const GroundSize g(n);
  const auto roots = detail::enum_roots(n, std::min(8, (1 << n) - 1));
  std::vector<Acc> parts(roots.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < roots.size(); i = cursor++) {
      auto leaf = [&](std::uint64_t mask) {
        Family f = Family::from_powerset_mask(g, mask);
        if (filter.matches(f)) visit(parts[i], f);
      };
      detail::enum_dfs(roots[i], leaf);
    }
  };
  const unsigned workers = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(roots.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  Acc total{};
  for (auto& p : parts) merge(total, std::move(p));
  return total;
}

/// Naive oracle: scans all 2^(2^n) subfamilies of the power set.
inline std::vector<Family> brute_force_uc(int n) {
  if (n < 1) throw Error(ErrorCode::BadN, "n must be positive");
  if (n > kMaxBruteN) throw Error(ErrorCode::NTooLarge, "brute-force oracle is capped at n=4");
  const GroundSize g(n);
  const std::uint64_t limit = std::uint64_t{1} << (1 << n);
  std::vector<Family> out;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    Family f = Family::from_powerset_mask(g, mask);
    if (is_union_closed(f) && has_full_base(f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Minimum image under all relabelings of [n] (n! permutations).
inline Family canonical_form(const Family& f) {
  if (f.n() > 8) throw Error(ErrorCode::NTooLarge, "canonical form is limited to n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(f.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Family> best;
  do {
    std::vector<SetWord> img;
    img.reserve(f.size());
    for (SetWord s : f) {
      SetWord::word_type b = 0;
      for (int e : s.elements()) b |= SetWord::word_type{1} << perm[static_cast<std::size_t>(e - 1)];
      img.emplace_back(b);
    }
    Family cand(f.ground(), std::move(img));
    if (!best || cand < *best) best = std::move(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

// ---------------------------------------------------------------------------
// Theorem verification

enum class TheoremId { T1_2, L1_3, T1_4, L2_1_1, T2_1, C2_2, T4_1, PROPS };

inline constexpr std::pair<TheoremId, std::string_view> kTheoremNames[] = {
    {TheoremId::T1_2, "T1.2"}, {TheoremId::L1_3, "L1.3"}, {TheoremId::T1_4, "T1.4"}, {TheoremId::L2_1_1, "L2.1.1"},
    {TheoremId::T2_1, "T2.1"}, {TheoremId::C2_2, "C2.2"}, {TheoremId::T4_1, "T4.1"}, {TheoremId::PROPS, "PROPS"},
};

constexpr std::string_view to_string(TheoremId id) {
  for (auto [k, v] : kTheoremNames)
    if (k == id) return v;
  return "?";
}

inline TheoremId parse_theorem_id(std::string_view s) {
  for (auto [k, v] : kTheoremNames)
    if (v == s) return k;
  throw Error(ErrorCode::UnknownTheorem, "unknown theorem id '" + std::string(s) + "'");
}

struct Violation {
  Family family;
  std::string detail;
};

struct VerifyOptions {
  unsigned threads = 0;
  bool hypothesis_necessity = false;  // T2.1 / C2.2: drop the 4 <= n requirement
  std::size_t max_violations = 1000;  // stored; all are counted
};

struct VerifyReport {
  int n = 0;
  TheoremId id = TheoremId::T1_2;
  EnumFilter filter;
  std::string hypothesis;
  std::uint64_t families_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> stats;
  double elapsed_seconds = 0;

  [[nodiscard]] bool pass() const noexcept { return violation_count == 0; }
};

namespace detail {

struct VerifyAcc {
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> stats;
  std::size_t cap = 0;

  void violate(const Family& f, std::string detail) {
    ++violation_count;
    if (violations.size() < cap) violations.push_back({f, std::move(detail)});
  }
};

inline bool avg_at_least_half(const Family& f) {
  return 2 * total_size(f) >= static_cast<std::int64_t>(f.n()) * static_cast<std::int64_t>(f.size());
}

inline int max_frequency(const Family& f) {
  const auto c = frequencies(f);
  return *std::max_element(c.begin(), c.end());
}

/// Checks one family already known to satisfy the theorem's hypotheses.
inline void check_family(TheoremId id, const Family& f, VerifyAcc& acc) {
  const int n = f.n();
  const auto size = static_cast<std::int64_t>(f.size());
  switch (id) {
    case TheoremId::T1_2: {
      const ChainReport ch = height(f);
      const Rational top(max_frequency(f));
      const Rational bh = thm12_bound(size, ch.height);
      const Rational br = thm12_bound(size, ch.r);
      if (top < bh) acc.violate(f, "max frequency " + top.str() + " < " + bh.str() + " (h)");
      if (top < br) acc.violate(f, "max frequency " + top.str() + " < " + br.str() + " (r)");
      const Thm12Witness w = thm12_witness(f);
      if (!w.ok) acc.violate(f, "chain witness count " + std::to_string(w.count) + " < " + w.bound.str());
      ++acc.stats["h=" + std::to_string(ch.height)];
      break;
    }
    case TheoremId::L1_3: {
      const Lemma13Result r = lemma13_check(f);
      if (!r.holds) acc.violate(f, "maximal chain without an (n-1)-member");
      break;
    }
    case TheoremId::T1_4:
      if (!avg_at_least_half(f)) acc.violate(f, "Avg " + avg_size(f).str() + " < n/2");
      break;
    case TheoremId::L2_1_1: {
      if (size < n) acc.violate(f, "|F| = " + std::to_string(size) + " < n");
      const SizeBoundTrace t = size_bound_witness(f);
      if (!t.holds) acc.violate(f, "recursion level with |F'| < |b(F')|");
      for (const auto& s : t.steps)
        if (!s.separating) {
          ++acc.stats["nonseparating_levels"];
          break;
        }
      acc.stats["max_trace_length"] = std::max<std::uint64_t>(acc.stats["max_trace_length"], t.steps.size());
      break;
    }
    case TheoremId::T2_1:
      if (!avg_at_least_half(f)) acc.violate(f, "Avg " + avg_size(f).str() + " < n/2");
      break;
    case TheoremId::C2_2: {
      const FranklWitness w = frankl_witness(f);
      if (!w.ok) acc.violate(f, "max frequency " + std::to_string(w.count) + " < |F|/2");
      break;
    }
    case TheoremId::T4_1: {
      const Rational floor_bound(n / 2 - 1);
      if (!(avg_size(f) > floor_bound)) acc.violate(f, "Avg " + avg_size(f).str() + " <= floor(n/2) - 1");
      const PropSuite ps = prop_suite(f);
      const PropRecord& l = ps.get("L");
      if (!l.holds) acc.violate(f, "L: " + l.detail);
      if (n % 2 == 0) {
        const bool rigid = std::all_of(ps.cover.begin(), ps.cover.end(), [&](SetWord s) { return 2 * s.size() == n - 2; });
        ++acc.stats[rigid ? "even_rigid" : "even_not_rigid"];
      }
      break;
    }
    case TheoremId::PROPS: {
      for (const Family& cover : all_min_covers(f)) {
        const PropSuite ps = prop_suite(f, cover);
        ++acc.stats["covers"];
        for (const auto& r : ps.records) {
          if (!r.applicable) continue;
          ++acc.stats["applicable:" + r.id];
          if (!r.holds) acc.violate(f, r.id + ": " + r.detail + " under cover " + cover.str());
        }
        for (const auto& [set, form] : ps.prop_i_forms) ++acc.stats["I:" + std::string(to_string(form))];
      }
      break;
    }
  }
}

}  // namespace detail

/// Filter describing a theorem's hypotheses (the part the enumerator applies).
inline EnumFilter theorem_filter(TheoremId id) {
  EnumFilter f;
  switch (id) {
    case TheoremId::T1_2: break;
    case TheoremId::L1_3:
    case TheoremId::L2_1_1:
    case TheoremId::PROPS: f.separating = true; break;
    case TheoremId::T1_4:
      f.separating = true;
      f.height = IntRange{1, 3};
      break;
    case TheoremId::T2_1:
    case TheoremId::C2_2:
      f.separating = true;
      f.height = IntRange{4, 4};
      f.bsize = IntRange{0, 2};
      break;
    case TheoremId::T4_1:
      f.separating = true;
      f.height = IntRange{4, 4};
      f.bsize = IntRange{4, 4};
      break;
  }
  return f;
}

inline std::string theorem_hypothesis(TheoremId id, bool necessity) {
  switch (id) {
    case TheoremId::T1_2: return "union-closed, |F| > 1";
    case TheoremId::L1_3: return "separating union-closed";
    case TheoremId::T1_4: return "separating union-closed, h <= 3";
    case TheoremId::L2_1_1: return "separating union-closed";
    case TheoremId::T2_1:
    case TheoremId::C2_2:
      return necessity ? "separating union-closed, h = 4, |B| <= 2 (4 <= n dropped)"
                       : "separating union-closed, h = 4 <= n, |B| <= 2";
    case TheoremId::T4_1: return "separating union-closed, h = |B| = 4";
    case TheoremId::PROPS: return "separating union-closed; each proposition adds its own hypotheses";
  }
  return "";
}

/// Exhaustively checks a theorem over every union-closed family with base [n]
/// that satisfies its hypotheses.
inline VerifyReport verify_theorem(TheoremId id, int n, const VerifyOptions& opt = {}) {
  detail::check_enum_n(n);
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.n = n;
  rep.id = id;
  rep.filter = theorem_filter(id);
  rep.hypothesis = theorem_hypothesis(id, opt.hypothesis_necessity);
  const bool needs_n4 = (id == TheoremId::T2_1 || id == TheoremId::C2_2) && !opt.hypothesis_necessity;

  if (!(needs_n4 && n < 4)) {
    auto visit = [&](detail::VerifyAcc& acc, const Family& f) {
      if (id == TheoremId::T1_2 && f.size() <= 1) return;
      acc.cap = opt.max_violations;
      ++acc.checked;
      detail::check_family(id, f, acc);
    };
    auto merge = [&](detail::VerifyAcc& total, detail::VerifyAcc&& part) {
      total.checked += part.checked;
      total.violation_count += part.violation_count;
      for (auto& v : part.violations)
        if (total.violations.size() < opt.max_violations) total.violations.push_back(std::move(v));
      for (auto& [k, v] : part.stats) {
        if (k == "max_trace_length") total.stats[k] = std::max(total.stats[k], v);
        else total.stats[k] += v;
      }
    };
    auto acc = enumerate_uc_reduce<detail::VerifyAcc>(n, rep.filter, opt.threads, visit, merge);
    rep.families_checked = acc.checked;
    rep.violation_count = acc.violation_count;
    rep.violations = std::move(acc.violations);
    rep.stats = std::move(acc.stats);
  }
  std::set<Family> classes;
  for (const auto& v : rep.violations) classes.insert(canonical_form(v.family));
  if (!rep.violations.empty()) rep.stats["violation_iso_classes"] = classes.size();
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace ucf
