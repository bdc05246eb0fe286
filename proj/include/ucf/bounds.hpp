#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ucf/rational.hpp"

namespace ucf {

/// Binomial coefficient; zero outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw Error(ErrorCode::Overflow, "binomial too large");
  }
  return static_cast<std::int64_t>(r);
}

// Lower bounds on the average member size of the reduced family used in the
// |B| = 1 and |B| = 2 arguments, in terms of b = |B| and a = |A_{⊊B}|.

/// zeta(b, a) = (2n - 1 + b a + (n - b - 1)(n - a - 3)) / n
inline Rational zeta(std::int64_t n, const Rational& b, const Rational& a) {
  const Rational nn(n);
  return (Rational(2 * n - 1) + b * a + (nn - b - 1) * (nn - a - 3)) / nn;
}

/// Continuous relaxation of zeta: f(x, y) = n - x - y - 2 + (2xy + 3x + y + 2) / n.
inline Rational f_relax(std::int64_t n, const Rational& x, const Rational& y) {
  const Rational nn(n);
  return nn - x - y - 2 + (Rational(2) * x * y + Rational(3) * x + y + 2) / nn;
}

/// eta(b, a) = (2n - 1 + b a) / (a + 3)
inline Rational eta(std::int64_t n, const Rational& b, const Rational& a) {
  if (a == Rational(-3)) throw Error(ErrorCode::ZeroDenominator, "eta at a = -3");
  return (Rational(2 * n - 1) + b * a) / (a + 3);
}

/// g(x, y) = (2n + xy - 1) / (y + 3), undefined at y = -3.
inline Rational g_relax(std::int64_t n, const Rational& x, const Rational& y) {
  if (y == Rational(-3)) throw Error(ErrorCode::ZeroDenominator, "g at y = -3");
  return (Rational(2 * n) + x * y - 1) / (y + 3);
}

struct BoundEval {
  Rational value;
  Rational x;
  Rational y;
};

struct Minimization {
  BoundEval grid;                    // best grid point (ties: smallest x, then y)
  std::optional<BoundEval> integer;  // best integer feasible point, if any
  BoundEval claimed;                 // value at the claimed continuous minimizer
  std::size_t grid_points = 0;
  std::size_t integer_points = 0;
};

namespace detail {

/// Scans lo_x <= x <= hi_x, 1 <= y <= x on the grid anchored at (lo_x, 1).
template <class Fn>
Minimization minimize_region(const Rational& lo_x, const Rational& hi_x, const Rational& step, Fn&& fn) {
  if (step <= Rational(0)) throw Error(ErrorCode::OutOfRange, "grid step must be positive");
  if (hi_x < lo_x || hi_x < Rational(1)) throw Error(ErrorCode::EmptyRegion, "feasible region is empty");
  Minimization out;
  bool have_grid = false;
  auto consider = [](std::optional<BoundEval>& best, const BoundEval& e) {
    if (!best || e.value < best->value) best = e;
  };
  std::optional<BoundEval> grid;
  for (Rational x = lo_x; x <= hi_x; x += step) {
    for (Rational y(1); y <= x; y += step) {
      consider(grid, BoundEval{fn(x, y), x, y});
      ++out.grid_points;
      have_grid = true;
    }
  }
  if (!have_grid) throw Error(ErrorCode::EmptyRegion, "grid contains no feasible point");
  out.grid = *grid;
  for (std::int64_t x = std::max<std::int64_t>(1, lo_x.ceil()); Rational(x) <= hi_x; ++x)
    for (std::int64_t y = 1; y <= x; ++y) {
      consider(out.integer, BoundEval{fn(Rational(x), Rational(y)), Rational(x), Rational(y)});
      ++out.integer_points;
    }
  return out;
}

}  // namespace detail

/// Minimizes f over 1 <= y <= x <= (n-1)/2. The claimed optimum is
/// f(n/2 - 1, n/2 - 1) = n/2.
inline Minimization minimize_f(std::int64_t n, const Rational& step) {
  auto fn = [n](const Rational& x, const Rational& y) { return f_relax(n, x, y); };
  Minimization m = detail::minimize_region(Rational(1), Rational(n - 1, 2), step, fn);
  const Rational c = Rational(n, 2) - 1;
  m.claimed = BoundEval{fn(c, c), c, c};
  return m;
}

/// Minimizes g over n/2 <= x <= n-2, 1 <= y <= x. The claimed optimum is
/// g(n/2, n/2) = n/2 + (n-2)/(n+6).
inline Minimization minimize_g(std::int64_t n, const Rational& step) {
  auto fn = [n](const Rational& x, const Rational& y) { return g_relax(n, x, y); };
  Minimization m = detail::minimize_region(Rational(n, 2), Rational(n - 2), step, fn);
  const Rational c(n, 2);
  m.claimed = BoundEval{fn(c, c), c, c};
  return m;
}

struct PropDResult {
  Rational lhs;  // binom(N-1, k-1) * sum p
  Rational rhs;  // sum over k-subsets S of sum_{j in S} p_j
  bool identity = false;
  bool corollary = false;  // binom(N-1, k-1) * N == binom(N, k) * k
};

/// Evaluates both sides of the k-subset averaging identity directly.
inline PropDResult prop_d_eval(std::span<const Rational> p, int k) {
  const int n = static_cast<int>(p.size());
  if (k < 1 || k > n) throw Error(ErrorCode::BadK, "k must lie in [1, N]");
  if (n > 24) throw Error(ErrorCode::OutOfRange, "N too large for direct subset enumeration");
  PropDResult r;
  Rational sum;
  for (const Rational& v : p) sum += v;
  r.lhs = Rational(binomial(n - 1, k - 1)) * sum;
  // Gosper's hack over k-subsets of [N].
  for (std::uint32_t s = (1u << k) - 1; s < (1u << n);) {
    for (int j = 0; j < n; ++j)
      if ((s >> j) & 1u) r.rhs += p[static_cast<std::size_t>(j)];
    const std::uint32_t c = s & -s, nx = s + c;
    s = (((nx ^ s) >> 2) / c) | nx;
  }
  r.identity = r.lhs == r.rhs;
  r.corollary = binomial(n - 1, k - 1) * n == binomial(n, k) * k;
  return r;
}

inline bool prop_d_check(std::span<const Rational> p, int k) {
  const auto r = prop_d_eval(p, k);
  return r.identity && r.corollary;
}

/// Lower bound on Avg(A<n/2 ∪ {Y, [n]}) when |A<n/2| = m in {4, 5, 6}:
/// (7n-1)/12, (31n-3)/56, (17n-1)/32.
inline Rational case2_subcase_bound(std::int64_t n, int m) {
  if (n < 4) throw Error(ErrorCode::BadN, "subcase bounds need n >= 4");
  Rational bound;
  switch (m) {
    case 4: bound = Rational(7 * n - 1, 12); break;
    case 5: bound = Rational(31 * n - 3, 56); break;
    case 6: bound = Rational(17 * n - 1, 32); break;
    default: throw Error(ErrorCode::BadM, "m must be 4, 5 or 6");
  }
  if (!(bound > Rational(n, 2))) throw Error(ErrorCode::Internal, "subcase bound not above n/2");
  return bound;
}

}  // namespace ucf
