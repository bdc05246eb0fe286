#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucf/bounds.hpp"
#include "ucf/chains.hpp"
#include "ucf/core.hpp"

namespace ucf {

/// B = b(A_{<n/2}) and a minimum-size subfamily of A_{<n/2} covering it.
struct BReport {
  SetWord B;
  Family cover;
  int size = 0;
};

namespace detail {

/// Index combinations of `cands` of the given size whose union is `target`,
/// in lexicographic order; stops after the first hit unless `all`.
inline void covers_of_size(const std::vector<SetWord>& cands, SetWord target, int size, bool all,
                           std::vector<std::vector<SetWord>>& out) {
  const std::size_t m = cands.size();
  std::vector<SetWord> suffix(m + 1);
  for (std::size_t i = m; i > 0; --i) suffix[i - 1] = suffix[i] | cands[i - 1];
  std::vector<SetWord> pick;
  auto rec = [&](auto&& self, std::size_t start, SetWord acc) -> bool {
    if (static_cast<int>(pick.size()) == size) {
      if (acc != target) return false;
      out.push_back(pick);
      return !all;
    }
    const std::size_t need = static_cast<std::size_t>(size) - pick.size();
    for (std::size_t i = start; i + need <= m; ++i) {
      if ((acc | suffix[i]) != target) break;
      if (cands[i].subset_of(acc)) continue;  // adds nothing, cannot be in a minimum cover
      pick.push_back(cands[i]);
      bool stop = self(self, i + 1, acc | cands[i]);
      pick.pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(rec, 0, SetWord());
}

struct SmallSlice {
  Family small;  // A_{<n/2}
  SetWord B;
  std::vector<SetWord> candidates;  // nonempty members of `small`
};

inline SmallSlice small_slice(const Family& f) {
  SmallSlice s;
  s.small = slice(f, SizeCmp::lt, Rational(f.n(), 2));
  for (SetWord m : s.small) {
    s.B |= m;
    if (!m.empty()) s.candidates.push_back(m);
  }
  return s;
}

inline std::vector<std::vector<SetWord>> min_covers(const Family& f, bool all) {
  require_union_closed_full(f);
  const SmallSlice s = small_slice(f);
  const int cap = chain_height(f);
  std::vector<std::vector<SetWord>> out;
  if (s.B.empty()) {
    out.emplace_back();
    return out;
  }
  for (int size = 1; size <= cap; ++size) {
    covers_of_size(s.candidates, s.B, size, all, out);
    if (!out.empty()) return out;
  }
  throw Error(ErrorCode::Internal, "no cover of size <= h for " + f.str());
}

}  // namespace detail

/// Finds the lexicographically least minimum cover of B by members of A_{<n/2}.
inline BReport b_report(const Family& f) {
  auto covers = detail::min_covers(f, false);
  BReport r;
  r.cover = Family(f.ground(), std::move(covers.front()));
  r.B = union_of(r.cover.members());
  r.size = static_cast<int>(r.cover.size());
  if (!is_irredundant(r.cover)) throw Error(ErrorCode::Internal, "minimum cover is not irredundant");
  return r;
}

/// All minimum covers, in lexicographic order.
inline std::vector<Family> all_min_covers(const Family& f) {
  std::vector<Family> out;
  for (auto& c : detail::min_covers(f, true)) out.emplace_back(f.ground(), std::move(c));
  return out;
}

/// k[i] = number of elements of [n] lying in exactly i members of the cover
/// (k[0] counts the uncovered ones).
struct KCounts {
  std::vector<int> k;
  [[nodiscard]] int at(int i) const { return k.at(static_cast<std::size_t>(i)); }
};

inline KCounts k_counts(const Family& cover, GroundSize n) {
  if (cover.empty()) throw Error(ErrorCode::EmptyFamily, "k_counts of empty cover");
  KCounts out;
  out.k.assign(cover.size() + 1, 0);
  for (int e = 1; e <= n.value(); ++e) {
    int c = 0;
    for (SetWord s : cover) c += s.contains(e);
    ++out.k[static_cast<std::size_t>(c)];
  }
  std::int64_t weighted = 0;
  for (std::size_t i = 1; i < out.k.size(); ++i) weighted += static_cast<std::int64_t>(i) * out.k[i];
  if (weighted != total_size(cover)) throw Error(ErrorCode::Internal, "double counting identity failed");
  return out;
}

// ---------------------------------------------------------------------------
// Proposition suite

enum class IForm { eq_irr_union, form_i, form_ii, form_iii, violation };

constexpr std::string_view to_string(IForm f) {
  switch (f) {
    case IForm::eq_irr_union: return "eq-irr-union";
    case IForm::form_i: return "form-i";
    case IForm::form_ii: return "form-ii";
    case IForm::form_iii: return "form-iii";
    case IForm::violation: return "violation";
  }
  return "?";
}

struct PropRecord {
  std::string id;
  bool applicable = false;
  bool holds = true;
  std::string detail;
  std::vector<SetWord> witness;
};

struct PropSuite {
  Family cover;
  std::vector<PropRecord> records;
  std::vector<std::pair<SetWord, IForm>> prop_i_forms;

  [[nodiscard]] const PropRecord& get(std::string_view id) const {
    for (const auto& r : records)
      if (r.id == id) return r;
    throw Error(ErrorCode::Internal, "no proposition " + std::string(id));
  }
  [[nodiscard]] bool all_hold() const {
    return std::all_of(records.begin(), records.end(), [](const PropRecord& r) { return !r.applicable || r.holds; });
  }
};

/// Identifiers, in report order. "BH" is |B| <= h; "E.partition" and "E.avg"
/// are the four-part structure of A_{<n/2} and the subcase average bounds
/// when |B| = 2 and |B| = n - 1.
inline constexpr std::string_view kPropIds[] = {"BH", "A", "B", "C", "E", "E.partition", "E.avg",
                                                "F",  "G", "H", "I", "J", "K",           "L"};

namespace detail {

struct PropContext {
  const Family& f;
  int n;
  bool separating;
  int h;
  Family small;
  SetWord B;
  const Family& cover;
  int bsize;
  std::vector<SetWord> irr;  // irr within the cover, aligned with cover order
};

inline PropRecord rec(std::string_view id, bool applicable) {
  PropRecord r;
  r.id = std::string(id);
  r.applicable = applicable;
  return r;
}

inline void fail(PropRecord& r, std::string detail, std::vector<SetWord> witness) {
  if (!r.holds) return;  // keep the first witness
  r.holds = false;
  r.detail = std::move(detail);
  r.witness = std::move(witness);
}

/// Standing hypotheses of the |B| <= 2 argument.
inline bool small_cover_case(const PropContext& c) { return c.separating && c.h == 4 && c.n >= 4 && c.bsize <= 2; }
/// Standing hypotheses of the |B| in {3, 4} discussion.
inline bool height4_case(const PropContext& c) { return c.separating && c.h == 4; }

inline void props_small_b(const PropContext& c, PropSuite& out) {
  const bool app = small_cover_case(c) && c.B.size() < c.n - 1;
  const Family below = slice_subset(c.f, SubsetKind::proper, c.B);
  const auto& xs = below.members();
  const int b = c.B.size();

  PropRecord a = rec("A", app);
  if (app)
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        if ((c.B - xs[i]).intersects(c.B - xs[j])) fail(a, "complements within B intersect", {xs[i], xs[j]});
  out.records.push_back(std::move(a));

  PropRecord pb = rec("B", app);
  if (app) {
    const bool avg_ok = Rational(2) * avg_size(c.f) >= Rational(c.n);
    const auto k = static_cast<int>(xs.size());
    if (!avg_ok && !(1 <= k && k <= b))
      fail(pb, "Avg < n/2 and |A_{⊊B}| = " + std::to_string(k) + " outside [1, |B|]", {c.B});
  }
  out.records.push_back(std::move(pb));

  PropRecord pc = rec("C", app);
  if (app) {
    const std::int64_t sum = total_size(below);
    const std::int64_t rhs = (static_cast<std::int64_t>(xs.size()) - 1) * b;
    if (sum < rhs) fail(pc, "sum " + std::to_string(sum) + " < " + std::to_string(rhs), xs);
  }
  out.records.push_back(std::move(pc));
}

inline void props_case2(const PropContext& c, PropSuite& out) {
  bool app = small_cover_case(c) && c.bsize == 2 && c.B.size() == c.n - 1;
  std::optional<SetWord> b3;
  if (app) {
    const SetWord b1 = c.cover[0], b2 = c.cover[1];
    for (SetWord s : c.small)
      if (s.intersects(b1) && s.intersects(b2)) {
        b3 = s;
        break;
      }
    app = b3.has_value() && c.small.size() >= 4;
  }
  const auto& sm = c.small.members();

  PropRecord e = rec("E", app);
  if (app) {
    const std::int64_t need2 = 3 * static_cast<std::int64_t>(c.n) + 1;  // 2 * (3n+1)/2
    const std::size_t m = sm.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k)
          for (std::size_t l = k + 1; l < m; ++l) {
            const std::int64_t sum = sm[i].size() + sm[j].size() + sm[k].size() + sm[l].size();
            if (2 * sum < need2) fail(e, "four sets with total size " + std::to_string(sum), {sm[i], sm[j], sm[k], sm[l]});
          }
  }
  out.records.push_back(std::move(e));

  PropRecord part = rec("E.partition", app);
  if (app) {
    const SetWord b1 = c.cover[0], b2 = c.cover[1];
    const SetWord p[4] = {b1 - *b3, *b3 - b2, *b3 - b1, b2 - *b3};
    const bool parts_ok = std::none_of(std::begin(p), std::end(p), [](SetWord s) { return s.empty(); }) &&
                          (p[0] | p[1] | p[2] | p[3]) == c.B;
    if (!parts_ok) fail(part, "parts do not partition B", {p[0], p[1], p[2], p[3]});
    for (SetWord x : sm) {
      int hits = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) hits += (x == (p[i] | p[j]));
      if (hits != 1) fail(part, "member is not a union of exactly two parts", {x});
    }
    if (sm.size() > 6) fail(part, "|A_{<n/2}| exceeds 6", {});
  }
  out.records.push_back(std::move(part));

  PropRecord avg = rec("E.avg", app && c.small.size() <= 6);
  if (avg.applicable) {
    const SetWord full = SetWord::full(c.f.ground());
    auto y = std::find_if(c.f.begin(), c.f.end(), [&](SetWord s) { return s.size() == c.n - 1; });
    if (y == c.f.end()) {
      fail(avg, "no member of size n-1", {});
    } else {
      Family hat = c.small.with(*y).with(full);
      const Rational bound = case2_subcase_bound(c.n, static_cast<int>(c.small.size()));
      if (avg_size(hat) < bound) fail(avg, "Avg " + avg_size(hat).str() + " < " + bound.str(), hat.members());
    }
  }
  out.records.push_back(std::move(avg));
}

inline void props_b3(const PropContext& c, PropSuite& out) {
  const bool base3 = height4_case(c) && c.bsize == 3;
  const SetWord u = base3 ? (c.irr[0] | c.irr[1] | c.irr[2]) : SetWord();

  PropRecord pf = rec("F", base3);
  if (base3 && c.B.size() < c.n - 1) fail(pf, "|B| = " + std::to_string(c.B.size()), {c.B});
  out.records.push_back(std::move(pf));

  const bool full = base3 && c.B.size() == c.n;
  PropRecord pg = rec("G", full);
  if (full)
    for (SetWord a : c.small)
      if (!c.cover.contains(a) && u.subset_of(a)) fail(pg, "union of private parts inside a small member", {a});
  out.records.push_back(std::move(pg));

  PropRecord ph = rec("H", full);
  if (full)
    for (SetWord a : c.small)
      for (int i = 0; i < 3; ++i) {
        const int ir = c.irr[static_cast<std::size_t>(i)].size();
        if (ir <= 1) continue;
        const int meet = (a & c.irr[static_cast<std::size_t>(i)]).size();
        if (meet != 0 && meet != ir - 1 && meet != ir) fail(ph, "partial overlap with a private part", {a, c.cover[static_cast<std::size_t>(i)]});
      }
  out.records.push_back(std::move(ph));

  const bool near = base3 && c.B.size() == c.n - 1;
  PropRecord pi = rec("I", near);
  if (near) {
    for (SetWord a : c.small) {
      if (c.cover.contains(a)) continue;
      IForm form = IForm::eq_irr_union;
      if (a != u) {
        int matches = 0;
        for (int t = 0; t < 3; ++t) {
          const SetWord bj = c.cover[static_cast<std::size_t>((t + 1) % 3)];
          const SetWord bk = c.cover[static_cast<std::size_t>((t + 2) % 3)];
          const SetWord sym = (bj | bk) - (bj & bk);
          if (!a.intersects(c.irr[static_cast<std::size_t>(t)]) && sym.subset_of(a)) {
            ++matches;
            form = t == 0 ? IForm::form_i : (t == 1 ? IForm::form_ii : IForm::form_iii);
          }
        }
        if (matches != 1) {
          form = IForm::violation;
          fail(pi, std::to_string(matches) + " forms match", {a});
        }
      }
      out.prop_i_forms.emplace_back(a, form);
    }
  }
  out.records.push_back(std::move(pi));
}

inline void props_b4(const PropContext& c, PropSuite& out) {
  const bool app = height4_case(c) && c.bsize == 4;

  PropRecord pj = rec("J", app);
  if (app && c.B.size() != c.n) fail(pj, "|B| = " + std::to_string(c.B.size()), {c.B});
  out.records.push_back(std::move(pj));

  PropRecord pk = rec("K", app);
  if (app)
    for (std::size_t i = 0; i < 4; ++i)
      if (c.irr[i].size() != 1) fail(pk, "private part of size " + std::to_string(c.irr[i].size()), {c.cover[i]});
  out.records.push_back(std::move(pk));

  PropRecord pl = rec("L", app);
  if (app) {
    const int n = c.n;
    const std::int64_t sum = total_size(c.cover);
    if (n % 2 == 0) {
      if (sum != 2 * n - 4) fail(pl, "sum of sizes " + std::to_string(sum) + " != 2n-4", c.cover.members());
      for (SetWord s : c.cover)
        if (2 * s.size() != n - 2) fail(pl, "member size differs from (n-2)/2", {s});
    } else {
      if (sum < 2 * n - 4 || sum > 2 * n - 2) fail(pl, "sum of sizes " + std::to_string(sum) + " outside [2n-4, 2n-2]", c.cover.members());
      for (SetWord s : c.cover)
        if (2 * s.size() < n - 5) fail(pl, "member smaller than (n-5)/2", {s});
      for (SetWord s : c.cover)
        if (2 * s.size() == n - 5)
          for (SetWord t : c.cover)
            if (t != s && 2 * t.size() != n - 1) fail(pl, "a (n-5)/2 member forces the others to (n-1)/2", {s, t});
    }
  }
  out.records.push_back(std::move(pl));
}

}  // namespace detail

/// Evaluates every proposition for f against the given minimum cover.
inline PropSuite prop_suite(const Family& f, const Family& cover) {
  require_union_closed_full(f);
  auto sl = detail::small_slice(f);
  PropSuite out;
  out.cover = cover;
  detail::PropContext c{f, f.n(), is_separating(f), chain_height(f), std::move(sl.small), sl.B, out.cover,
                        static_cast<int>(cover.size()), irr_all(cover.members())};

  PropRecord bh = detail::rec("BH", true);
  if (c.bsize > c.h) detail::fail(bh, "|B| exceeds h", cover.members());
  out.records.push_back(std::move(bh));
  detail::props_small_b(c, out);
  detail::props_case2(c, out);
  detail::props_b3(c, out);
  detail::props_b4(c, out);
  return out;
}

/// Same, with the lexicographically least minimum cover.
inline PropSuite prop_suite(const Family& f) { return prop_suite(f, b_report(f).cover); }

}  // namespace ucf
