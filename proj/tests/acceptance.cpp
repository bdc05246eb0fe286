// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. `--deep` adds the n = 5 exhaustive runs.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ucf/ucf.hpp"

using namespace ucf;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  while (!o.note.empty() && (o.note.back() == ' ' || o.note.back() == ';')) o.note.pop_back();
  std::ostringstream time;
  time.precision(2);
  time << std::fixed << secs;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << o.note << "; " << time.str() << "s)"
            << std::endl;
}

Outcome verify_runs(TheoremId id, int lo, int hi, std::ostringstream& note) {
  Outcome o;
  for (int n = lo; n <= hi; ++n) {
    const VerifyReport r = verify_theorem(id, n);
    note << to_string(id) << " n=" << n << ": " << r.families_checked << " checked, " << r.violation_count
         << " violations; ";
    if (!r.pass()) o.pass = false;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool deep = false;
  for (int i = 1; i < argc; ++i) deep = deep || std::strcmp(argv[i], "--deep") == 0;
  const int top = deep ? 5 : 4;

  criterion(1, "n=3 family {123,12,1,2,{}} has h=4 and Avg=7/5 < 3/2", [] {
    const Family f(3, {{1, 2, 3}, {1, 2}, {1}, {2}, {}});
    const int h = height(f).height;
    const Rational avg = avg_size(f);
    std::ostringstream note;
    note << "h=" << h << ", Avg=" << avg;
    return Outcome{is_union_closed(f) && is_separating(f) && h == 4 && avg == Rational(7, 5) && avg < Rational(3, 2),
                   note.str()};
  });

  criterion(2, "separating families with h<=3 have Avg>=n/2, n=1..4", [] {
    std::ostringstream note;
    Outcome o = verify_runs(TheoremId::T1_4, 1, 4, note);
    o.note = note.str();
    return o;
  });

  criterion(3, "separating h=4 families with |cover|<=2 have Avg>=n/2, n=4" + std::string(deep ? ",5" : ""), [&] {
    std::ostringstream note;
    Outcome o = verify_runs(TheoremId::T2_1, 4, top, note);
    o.note = note.str();
    return o;
  });

  criterion(4, "maximal chains meet an (n-1)-set, |F|>=n recursion, chain bound, Frankl witness, n<=4", [] {
    std::ostringstream note;
    Outcome o{true, ""};
    for (TheoremId id : {TheoremId::L1_3, TheoremId::L2_1_1, TheoremId::T1_2, TheoremId::C2_2}) {
      const Outcome part = verify_runs(id, 1, 4, note);
      o.pass = o.pass && part.pass;
    }
    o.note = note.str();
    return o;
  });

  criterion(5, "A* certificates for n=4..40", [] {
    Outcome o{true, ""};
    for (int n = 4; n <= 40; ++n) {
      const Certificate c = build_astar(n).certificate;
      const bool good = c.ok() && c.height == 4 && c.bsize == 1 && c.separating && c.union_closed &&
                        Rational(2) * c.avg >= Rational(n);
      if (!good) {
        o.pass = false;
        o.note += "n=" + std::to_string(n) + " failed; ";
      }
    }
    if (o.pass) o.note = "37 certificates";
    return o;
  });

  criterion(6, "A** certificates for n=9..40 with exact closed-form averages", [] {
    Outcome o{true, ""};
    for (int n = 9; n <= 40; ++n) {
      const Certificate c = build_astarstar(n).certificate;
      const Rational expected = n % 2 == 0 ? Rational(std::int64_t{n} * n * n + 36 * n - 32, 2 * n * n + 4 * n + 32)
                                           : Rational(std::int64_t{n} * n * n + 3 * n * n + 15 * n - 3,
                                                      2 * n * n + 8 * n + 22);
      const bool good = c.ok() && c.height == 5 && c.bsize == 1 && c.avg < Rational(n, 2) && c.avg == expected;
      if (!good) {
        o.pass = false;
        o.note += "n=" + std::to_string(n) + " failed; ";
      }
    }
    if (o.pass) o.note = "32 certificates";
    return o;
  });

  criterion(7, "A^(k) for n=11..16, k=5..n+1: height k, separating, |cover|=1, Avg<n/2, peak closed form", [] {
    Outcome o{true, ""};
    int built = 0;
    for (int n = 11; n <= 16; ++n)
      for (int k = 5; k <= n + 1; ++k) {
        const Construction con = build_ak(n, k);
        const Certificate& c = con.certificate;
        ++built;
        bool good = c.ok() && c.height == k && height(con.family).height == k && c.separating && c.bsize == 1 &&
                    c.avg < Rational(n, 2);
        if (k == 6 + parity_delta(n)) {
          const std::int64_t m = n;
          const Rational expected = n % 2 == 0
                                        ? Rational(m * m * m + 60 * m + 16, 2 * m * m + 4 * m + 80)
                                        : Rational(m * m * m + 3 * m * m + 31 * m + 29, 2 * m * m + 8 * m + 54);
          good = good && c.avg == expected;
        }
        if (!good) {
          o.pass = false;
          o.note += "n=" + std::to_string(n) + " k=" + std::to_string(k) + " failed; ";
        }
      }
    if (o.pass) o.note = std::to_string(built) + " families";
    return o;
  });

  criterion(8, "zeta=f and eta=g on integer points, minima of f and g, n=4..40", [] {
    Outcome o{true, ""};
    std::size_t points = 0;
    for (std::int64_t n = 4; n <= 40; ++n) {
      for (std::int64_t x = 0; x <= n; ++x)
        for (std::int64_t y = 0; y <= x; ++y) {
          ++points;
          if (zeta(n, x, y) != f_relax(n, x, y) || eta(n, x, y) != g_relax(n, x, y)) {
            o.pass = false;
            o.note += "identity fails at n=" + std::to_string(n) + "; ";
          }
        }
      if (n % 2 != 0) continue;
      const Rational half(n, 2), gmin = half + Rational(n - 2, n + 6);
      const Minimization mf = minimize_f(n, Rational(1, 2)), mg = minimize_g(n, Rational(1, 2));
      const bool good = mf.integer && mg.integer && mf.integer->value >= half && mg.integer->value >= gmin &&
                        f_relax(n, Rational(n / 2 - 1), Rational(n / 2 - 1)) == half &&
                        g_relax(n, Rational(n / 2), Rational(n / 2)) == gmin;
      if (!good) {
        o.pass = false;
        o.note += "minimum fails at n=" + std::to_string(n) + "; ";
      }
    }
    if (o.pass) o.note = std::to_string(points) + " integer points";
    return o;
  });

  criterion(9, "averaging identity on random rational vectors, N<=8, and counting corollary, N<=20", [] {
    Outcome o{true, ""};
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> num(-1000, 1000), den(1, 97);
    int vectors = 0;
    for (int N = 1; N <= 8; ++N)
      for (int k = 1; k <= N; ++k)
        for (int t = 0; t < 100; ++t) {
          std::vector<Rational> p;
          for (int i = 0; i < N; ++i) p.emplace_back(num(rng), den(rng));
          ++vectors;
          if (!prop_d_check(p, k)) o.pass = false;
        }
    for (std::int64_t N = 1; N <= 20; ++N)
      for (std::int64_t k = 1; k <= N; ++k)
        if (binomial(N - 1, k - 1) * N != binomial(N, k) * k) o.pass = false;
    o.note = std::to_string(vectors) + " vectors";
    return o;
  });

  criterion(10, "height-4 four-set-cover bound, propositions F-L, even-n rigidity, n=4" + std::string(deep ? ",5" : ""),
            [&] {
              std::ostringstream note;
              Outcome o{true, ""};
              for (int n = 4; n <= top; ++n) {
                const VerifyReport t = verify_theorem(TheoremId::T4_1, n);
                const VerifyReport p = verify_theorem(TheoremId::PROPS, n);
                const auto stat = [](const VerifyReport& r, const char* key) {
                  auto it = r.stats.find(key);
                  return it == r.stats.end() ? std::uint64_t{0} : it->second;
                };
                bool rigid = true;
                if (n % 2 == 0)
                  rigid = stat(t, "even_not_rigid") == 0 && stat(t, "even_rigid") == t.families_checked;
                o.pass = o.pass && t.pass() && p.pass() && rigid;
                note << "n=" << n << ": T4.1 " << t.families_checked << " checked/" << t.violation_count
                     << " violations";
                if (n % 2 == 0) note << ", rigid " << stat(t, "even_rigid") << "/" << t.families_checked;
                note << ", props " << p.families_checked << " checked/" << p.violation_count << " violations";
                for (const char* id : {"F", "G", "H", "I", "J", "K", "L"})
                  note << " " << id << ":" << stat(p, (std::string("applicable:") + id).c_str());
                note << "; ";
              }
              o.note = note.str();
              return o;
            });

  criterion(11, "incremental enumerator equals exhaustive oracle, n=1..4; n=2 counts 8 and 6", [] {
    Outcome o{true, ""};
    for (int n = 1; n <= 4; ++n) {
      std::vector<Family> e;
      enumerate_uc(n, {}, [&](const Family& f) { e.push_back(f); });
      std::sort(e.begin(), e.end());
      const auto b = brute_force_uc(n);
      o.note += "n=" + std::to_string(n) + ": " + std::to_string(e.size()) + "; ";
      if (e != b) o.pass = false;
    }
    EnumFilter sep;
    sep.separating = true;
    const auto all2 = enumerate_uc(2, {}, [](const Family&) {});
    const auto sep2 = enumerate_uc(2, sep, [](const Family&) {});
    o.note += "n=2 all " + std::to_string(all2) + ", separating " + std::to_string(sep2);
    o.pass = o.pass && all2 == 8 && sep2 == 6;
    return o;
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
