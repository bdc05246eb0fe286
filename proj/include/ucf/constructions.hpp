#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucf/bfamily.hpp"
#include "ucf/chains.hpp"
#include "ucf/core.hpp"

namespace ucf {

inline constexpr int ceil_half(int n) noexcept { return (n + 1) / 2; }

/// Parity offset n - 2*ceil(n/2) + 2: 2 for even n, 1 for odd n.
inline constexpr int parity_delta(int n) noexcept { return n - 2 * ceil_half(n) + 2; }

struct ConstructionParams {
  GroundSize n;
  int k = 0;  // height target, A^(k) only
  [[nodiscard]] int delta() const noexcept { return parity_delta(n.value()); }
};

/// Properties asserted when a construction is built.
struct Certificate {
  std::string kind;
  int n = 0;
  int k = 0;
  bool verified = false;
  bool union_closed = false;
  bool separating = false;
  bool base_full = false;
  bool lemma13 = false;
  int height = 0;
  int expected_height = 0;
  int bsize = -1;
  Rational avg;
  bool avg_ok = false;  // Avg >= n/2 for A*, Avg < n/2 otherwise
  std::optional<Rational> closed_form;
  std::string notes;

  [[nodiscard]] bool ok() const {
    return verified && union_closed && separating && base_full && lemma13 && height == expected_height && bsize == 1 &&
           avg_ok && (!closed_form || *closed_form == avg);
  }
};

struct Construction {
  Family family;
  Certificate certificate;
};

/// Closed-form averages of the extremal families.
inline Rational astarstar_avg_closed_form(std::int64_t n) {
  if (n % 2 == 0) return Rational(n * n * n + 36 * n - 32, 2 * n * n + 4 * n + 32);
  return Rational(n * n * n + 3 * n * n + 15 * n - 3, 2 * n * n + 8 * n + 22);
}
inline Rational ak_peak_avg_closed_form(std::int64_t n) {
  if (n % 2 == 0) return Rational(n * n * n + 60 * n + 16, 2 * n * n + 4 * n + 80);
  return Rational(n * n * n + 3 * n * n + 31 * n + 29, 2 * n * n + 8 * n + 54);
}

namespace detail {

/// All k-subsets of [m], appended to out.
inline void append_k_subsets(int m, int k, std::vector<SetWord>& out) {
  if (k < 0 || k > m) return;
  if (k == 0) {
    out.emplace_back();
    return;
  }
  const SetWord::word_type limit = SetWord::word_type{1} << m;
  for (SetWord::word_type s = (SetWord::word_type{1} << k) - 1; s < limit;) {
    out.emplace_back(s);
    const SetWord::word_type c = s & (~s + 1), nx = s + c;
    s = (((nx ^ s) >> 2) / c) | nx;
  }
}

inline std::vector<SetWord> astar_members(int n) {
  const int c = ceil_half(n);
  std::vector<SetWord> out{SetWord::full(GroundSize(n)), SetWord::prefix(c - 1)};
  for (int x = c + 1; x <= n; ++x) out.push_back(SetWord::full(GroundSize(n)) - SetWord::single(x));
  append_k_subsets(c - 1, c - 2, out);
  return out;
}

inline Certificate certify(const Family& f, std::string kind, int k, int expected_height, bool avg_at_least_half,
                           std::optional<Rational> closed_form, bool verify) {
  Certificate c;
  c.kind = std::move(kind);
  c.n = f.n();
  c.k = k;
  c.expected_height = expected_height;
  c.avg = avg_size(f);
  c.closed_form = std::move(closed_form);
  const bool at_least = Rational(2) * c.avg >= Rational(f.n());
  c.avg_ok = avg_at_least_half ? at_least : !at_least;
  if (!verify) return c;
  c.verified = true;
  c.union_closed = is_union_closed(f);
  c.separating = is_separating(f);
  c.base_full = has_full_base(f);
  c.height = chain_height(f);
  if (c.union_closed && c.base_full) {
    c.bsize = b_report(f).size;
    c.lemma13 = c.separating && lemma13_check(f).holds;
  }
  if (!c.ok()) throw Error(ErrorCode::CertificateFailed, c.kind + " n=" + std::to_string(c.n) + " failed verification");
  return c;
}

}  // namespace detail

/// {[n], [c-1]} ∪ {[n] \ {x} : x > c} ∪ binom([c-1], c-2), c = ceil(n/2).
inline Construction build_astar(int n, bool verify = true) {
  if (n < 4 || n > kMaxGround) throw Error(ErrorCode::BadN, "A* needs 4 <= n <= 64");
  Family f(GroundSize(n), detail::astar_members(n));
  auto cert = detail::certify(f, "astar", 0, 4, true, std::nullopt, verify);
  return {std::move(f), std::move(cert)};
}

/// A* ∪ binom([c-1], c-3).
inline Construction build_astarstar(int n, bool verify = true) {
  if (n < 9 || n > kMaxGround) throw Error(ErrorCode::BadN, "A** needs 9 <= n <= 64");
  auto members = detail::astar_members(n);
  detail::append_k_subsets(ceil_half(n) - 1, ceil_half(n) - 3, members);
  Family f(GroundSize(n), std::move(members));
  auto cert = detail::certify(f, "astarstar", 0, 5, false, astarstar_avg_closed_form(n), verify);
  return {std::move(f), std::move(cert)};
}

/// Which recurrence branch fires at step k (A^(k) -> A^(k+1)), for k in [5, n].
/// Returns the size m of the prefix set [m] added, or nullopt on no match;
/// throws BranchGap when more than one branch matches.
inline std::optional<int> ak_step_prefix(int n, int k) {
  const int c = ceil_half(n), d = parity_delta(n);
  std::optional<int> m;
  int matches = 0;
  if (5 <= k && k <= 5 + d) {
    m = c + k - 5;
    ++matches;
  }
  // k = 2i + d, i in [3, (n - d)/2]
  if ((k - d) % 2 == 0 && (k - d) / 2 >= 3 && (k - d) / 2 <= (n - d) / 2) {
    m = c - (k + 2 - d) / 2;
    ++matches;
  }
  // k = 2i + d + 1, i in [3, (n - d - 2)/2]
  if ((k - d - 1) % 2 == 0 && (k - d - 1) / 2 >= 3 && (k - d - 1) / 2 <= (n - d - 2) / 2) {
    m = c + (k - 5 + d) / 2;
    ++matches;
  }
  if (matches > 1) throw Error(ErrorCode::BranchGap, "recurrence branches overlap at k=" + std::to_string(k));
  return m;
}

/// Checks that exactly one branch fires for every k in [5, n] and that the
/// step at k = n adds [0] = ∅, agreeing with A^(n+1) = A^(n) ∪ {∅}.
inline void check_ak_branches(int n) {
  for (int k = 5; k <= n; ++k)
    if (!ak_step_prefix(n, k)) throw Error(ErrorCode::BranchGap, "no recurrence branch at k=" + std::to_string(k));
  if (*ak_step_prefix(n, n) != 0) throw Error(ErrorCode::BranchGap, "final step does not add the empty set");
}

/// A^(5) = A**, then one prefix set per step until height k.
inline Construction build_ak(int n, int k, bool verify = true) {
  if (n < 11 || n > kMaxGround) throw Error(ErrorCode::BadN, "A^(k) needs 11 <= n <= 64");
  if (k < 5 || k > n + 1) throw Error(ErrorCode::BadK, "A^(k) needs 5 <= k <= n+1");
  check_ak_branches(n);
  auto members = build_astarstar(n, false).family.members();
  for (int step = 5; step < k; ++step) members.push_back(SetWord::prefix(*ak_step_prefix(n, step)));
  Family f(GroundSize(n), std::move(members));
  std::optional<Rational> closed;
  if (k == 5) closed = astarstar_avg_closed_form(n);
  if (k == 6 + parity_delta(n)) closed = ak_peak_avg_closed_form(n);
  auto cert = detail::certify(f, "ak", k, k, false, closed, verify);
  cert.notes = "second branch runs to i=(n-Δ)/2; its k=n step adds [0]=∅, the final step";
  return {std::move(f), std::move(cert)};
}

}  // namespace ucf
