#pragma once

// JSON report builders used by the `ucf` command-line tool. Rationals are
// always rendered as reduced "p/q" strings, sets as ascending element arrays.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ucf/ucf.hpp"

namespace ucf::report {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a, hex encoded.
inline std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

inline Json to_json(SetWord s) { return Json(s.elements()); }
inline Json to_json(const Rational& r) { return r.str(); }

inline Json sets_json(std::span<const SetWord> sets) {
  Json a = Json::array();
  for (SetWord s : sets) a.push_back(to_json(s));
  return a;
}
inline Json to_json(const Family& f) { return sets_json(f.members()); }

inline Json inapplicable(std::string_view reason) {
  return Json{{"status", "inapplicable"}, {"reason", std::string(reason)}};
}

inline Json to_json(const PropRecord& r) {
  Json j{{"applicable", r.applicable}};
  if (r.applicable) {
    j["holds"] = r.holds;
    if (!r.holds) {
      j["detail"] = r.detail;
      j["witness"] = sets_json(r.witness);
    }
  }
  return j;
}

inline Json to_json(const Certificate& c) {
  Json j{{"kind", c.kind}, {"n", c.n}};
  if (c.kind == "ak") j["k"] = c.k;
  j["delta"] = parity_delta(c.n);
  j["verified"] = c.verified;
  if (c.verified) {
    j["union_closed"] = c.union_closed;
    j["separating"] = c.separating;
    j["base_full"] = c.base_full;
    j["lemma13"] = c.lemma13;
    j["height"] = c.height;
    j["expected_height"] = c.expected_height;
    j["bsize"] = c.bsize;
  }
  j["avg"] = to_json(c.avg);
  j["half_n"] = to_json(Rational(c.n, 2));
  j["avg_condition"] = c.kind == "astar" ? "Avg >= n/2" : "Avg < n/2";
  j["avg_ok"] = c.avg_ok;
  if (c.closed_form) {
    j["closed_form"] = to_json(*c.closed_form);
    j["closed_form_matches"] = *c.closed_form == c.avg;
  }
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (c.verified) j["ok"] = c.ok();
  return j;
}

inline Json to_json(const EnumFilter& f) {
  Json j = Json::object();
  if (f.separating) j["separating"] = *f.separating;
  if (f.height) j["height"] = {f.height->first, f.height->second};
  if (f.bsize) j["bsize"] = {f.bsize->first, f.bsize->second};
  if (f.contains_empty) j["contains_empty"] = *f.contains_empty;
  return j;
}

inline Json to_json(const BoundEval& e) {
  return Json{{"value", to_json(e.value)}, {"x", to_json(e.x)}, {"y", to_json(e.y)}};
}

struct Analysis {
  Json json;
  bool violation = false;  // some applicable check failed
};

/// Everything the library can say about one family.
inline Analysis analyze(const Family& f, std::string_view path, std::string_view input_digest) {
  Analysis out;
  Json& j = out.json;
  j["command"] = "analyze";
  j["input"] = {{"path", std::string(path)}, {"digest", std::string(input_digest)}};
  j["n"] = f.n();
  j["size"] = f.size();
  const bool uc = is_union_closed(f);
  const bool sep = is_separating(f);
  j["union_closed"] = uc;
  j["separating"] = sep;
  if (f.empty()) {
    j["status"] = "empty family";
    return out;
  }
  const bool full = has_full_base(f);
  j["base"] = to_json(base_set(f));
  j["base_full"] = full;
  j["irredundant"] = is_irredundant(f);

  const ChainReport ch = height(f);
  j["height"] = ch.height;
  j["height_chain"] = sets_json(ch.witness_chain);
  j["r"] = ch.r;
  j["r_chain"] = sets_json(ch.r_witness);

  const Rational avg = avg_size(f), half(f.n(), 2);
  j["avg"] = to_json(avg);
  j["half_n"] = to_json(half);
  j["avg_vs_half"] = avg < half ? "below" : (avg == half ? "equal" : "above");
  j["frequencies"] = frequencies(f);
  const FranklWitness fw = frankl_witness(f);
  j["frankl"] = {{"element", fw.element}, {"count", fw.count}, {"threshold", to_json(fw.threshold)}, {"ok", fw.ok}};
  if (uc && !fw.ok) out.violation = true;

  const std::string_view why = !uc ? "NotUnionClosed" : (!full ? "BaseNotFull" : "");
  if (!why.empty()) {
    for (const char* key : {"b_report", "k_counts", "lemma13", "thm12", "size_bound", "theorems", "propositions"})
      j[key] = inapplicable(why);
    j["status"] = "ok";
    return out;
  }

  const BReport br = b_report(f);
  j["b_report"] = {{"B", to_json(br.B)}, {"cover", to_json(br.cover)}, {"size", br.size}};
  j["k_counts"] = br.size == 0 ? inapplicable("EmptyFamily") : Json(k_counts(br.cover, f.ground()).k);

  if (sep) {
    const Lemma13Result l = lemma13_check(f);
    j["lemma13"] = {{"holds", l.holds}};
    if (!l.holds) {
      j["lemma13"]["offending_chain"] = sets_json(l.offending_chain);
      out.violation = true;
    }
  } else {
    j["lemma13"] = inapplicable("NotSeparating");
  }

  if (f.size() > 1) {
    const Thm12Witness w = thm12_witness(f);
    j["thm12"] = {{"bound", to_json(w.bound)},
                  {"bound_r", to_json(thm12_bound(static_cast<std::int64_t>(f.size()), ch.r))},
                  {"chain", sets_json(w.chain)},
                  {"picks", w.picks},
                  {"element", w.element},
                  {"count", w.count},
                  {"ok", w.ok}};
    if (!w.ok) out.violation = true;
  } else {
    j["thm12"] = inapplicable("TooSmall");
  }

  if (sep) {
    const SizeBoundTrace t = size_bound_witness(f);
    Json steps = Json::array();
    for (const auto& s : t.steps)
      steps.push_back({{"size", s.family_size}, {"base", s.base_size}, {"x", s.x}, {"y", s.y}, {"separating", s.separating}});
    j["size_bound"] = {{"holds", t.holds}, {"steps", steps}};
    if (!t.holds) out.violation = true;
  } else {
    j["size_bound"] = inapplicable("NotSeparating");
  }

  const int n = f.n();
  const bool at_least_half = !(avg < half);
  Json th = Json::object();
  auto theorem = [&](const char* id, bool applicable, bool holds) {
    th[id] = applicable ? Json{{"applicable", true}, {"holds", holds}} : Json{{"applicable", false}};
    if (applicable && !holds) out.violation = true;
  };
  theorem("T1.4", sep && ch.height <= 3, at_least_half);
  theorem("T2.1", sep && ch.height == 4 && n >= 4 && br.size <= 2, at_least_half);
  theorem("C2.2", sep && ch.height == 4 && n >= 4 && br.size <= 2, fw.ok);
  theorem("T4.1", sep && ch.height == 4 && br.size == 4, avg > Rational(n / 2 - 1));
  j["theorems"] = th;

  const PropSuite ps = prop_suite(f, br.cover);
  Json props = Json::object();
  for (const auto& r : ps.records) props[r.id] = to_json(r);
  j["propositions"] = props;
  if (!ps.all_hold()) out.violation = true;
  if (!ps.prop_i_forms.empty()) {
    Json forms = Json::array();
    for (const auto& [a, form] : ps.prop_i_forms) forms.push_back({{"set", to_json(a)}, {"form", to_string(form)}});
    j["prop_i_forms"] = forms;
  }
  j["status"] = out.violation ? "violation" : "ok";
  return out;
}

inline Json construction_report(const Construction& c) {
  Json j;
  j["command"] = "construct";
  j["kind"] = c.certificate.kind;
  j["n"] = c.certificate.n;
  if (c.certificate.kind == "ak") j["k"] = c.certificate.k;
  j["size"] = c.family.size();
  j["certificate"] = to_json(c.certificate);
  return j;
}

inline Json verify_report(const VerifyReport& r, bool timing) {
  Json j;
  j["command"] = "verify";
  j["id"] = std::string(to_string(r.id));
  j["n"] = r.n;
  j["hypothesis"] = r.hypothesis;
  j["filter"] = to_json(r.filter);
  j["families_checked"] = r.families_checked;
  j["violation_count"] = r.violation_count;
  j["pass"] = r.pass();
  j["stats"] = Json(r.stats);
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"family", to_json(x.family)}, {"detail", x.detail}, {"canonical", to_json(canonical_form(x.family))}});
  j["violations"] = v;
  if (timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

struct BoundsSummary {
  Json json;
  bool ok = true;
};

/// Minimizations of f and g, the zeta/f and eta/g identities on integer
/// points, and the subcase average bounds for one n.
inline BoundsSummary bounds_report(std::int64_t n, const Rational& step) {
  BoundsSummary out;
  Json& j = out.json;
  j["command"] = "bounds";
  j["n"] = n;
  j["grid_step"] = to_json(step);

  auto minim = [&](const char* name, const Minimization& m, const Rational& expected) {
    Json mj{{"grid", to_json(m.grid)}, {"grid_points", m.grid_points}};
    if (m.integer) mj["integer"] = to_json(*m.integer);
    mj["integer_points"] = m.integer_points;
    mj["claimed"] = to_json(m.claimed);
    mj["claimed_expected"] = to_json(expected);
    const bool ok = m.claimed.value == expected && !(m.grid.value < m.claimed.value) &&
                    (!m.integer || !(m.integer->value < m.claimed.value));
    mj["ok"] = ok;
    out.ok = out.ok && ok;
    j[name] = mj;
  };
  try {
    minim("min_f", minimize_f(n, step), Rational(n, 2));
  } catch (const Error& e) {
    j["min_f"] = inapplicable(to_string(e.code()));
  }
  try {
    minim("min_g", minimize_g(n, step), Rational(n, 2) + Rational(n - 2, n + 6));
  } catch (const Error& e) {
    j["min_g"] = inapplicable(to_string(e.code()));
  }

  std::size_t points = 0;
  bool identities = true;
  for (std::int64_t x = 0; x <= n; ++x)
    for (std::int64_t y = 0; y <= x; ++y) {
      ++points;
      identities = identities && zeta(n, x, y) == f_relax(n, x, y) && eta(n, x, y) == g_relax(n, x, y);
    }
  j["identities"] = {{"points", points}, {"zeta_eq_f_and_eta_eq_g", identities}};
  out.ok = out.ok && identities;

  if (n >= 4) {
    Json sub = Json::object();
    for (int m : {4, 5, 6}) sub[std::to_string(m)] = to_json(case2_subcase_bound(n, m));
    j["case2_subcase_bounds"] = sub;
  }
  j["status"] = out.ok ? "ok" : "violation";
  return out;
}

}  // namespace ucf::report
