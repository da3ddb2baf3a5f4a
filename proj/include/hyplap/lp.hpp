// Dense two-phase simplex, templated on the scalar so the same code runs in
// floating point or exact rational arithmetic. Sized for the small
// feasibility systems and L1 fits this library needs; Bland's rule keeps it
// cycle-free.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hyplap/common.hpp"

namespace hyplap {

/// Exact fraction on 64-bit words. Throws Error on overflow so callers can
/// fall back to floating point.
struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(num, den) = 1

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : d;
  }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = 0x7fffffffffffffffLL;
    if (n > lim || n < -lim || d > lim)
      throw Error("rational arithmetic overflow");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }

  /// Best rational with denominator <= max_den (continued fractions);
  /// empty when no such fraction reproduces x to tol.
  static std::optional<Rational> approximate(double x, long long max_den,
                                             double tol = 1e-12) {
    if (!std::isfinite(x)) return std::nullopt;
    double v = x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
      const double fl = std::floor(v);
      if (std::fabs(fl) > 9e17) return std::nullopt;
      const long long a = static_cast<long long>(fl);
      const long long p2 = a * p1 + p0;
      const long long q2 = a * q1 + q0;
      if (q2 > max_den || q2 < 0) break;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      if (std::fabs(v - fl) < 1e-15) break;
      v = 1.0 / (v - fl);
    }
    if (q1 == 0) return std::nullopt;
    Rational r(p1, q1);
    if (std::fabs(r.to_double() - x) <= tol * std::max(1.0, std::fabs(x)))
      return r;
    return std::nullopt;
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(static_cast<__int128>(a.num) * b.den +
                         static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(static_cast<__int128>(a.num) * b.den -
                         static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(static_cast<__int128>(a.num) * b.num,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw DomainError("rational division by zero");
    return from_i128(static_cast<__int128>(a.num) * b.den,
                     static_cast<__int128>(a.den) * b.num);
  }
  Rational operator-() const {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }
};

namespace lp {

template <class S>
struct Traits;

template <>
struct Traits<double> {
  static double zero() { return 0.0; }
  static double eps() { return 1e-11; }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
};

template <>
struct Traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational eps() { return Rational(0); }
  static Rational abs(const Rational& x) { return x.num < 0 ? -x : x; }
  static double to_double(const Rational& x) { return x.to_double(); }
};

enum class Status { optimal, infeasible, unbounded };

template <class S>
struct Result {
  Status status = Status::infeasible;
  S objective = Traits<S>::zero();
  std::vector<S> x;               // primal solution (real variables only)
  S phase1_objective = Traits<S>::zero();  // residual infeasibility
};

/// min c.x  s.t.  A x = b,  x >= 0.
template <class S>
Result<S> simplex_min(std::vector<std::vector<S>> A, std::vector<S> b,
                      const std::vector<S>& c) {
  const S zero = Traits<S>::zero();
  const S eps = Traits<S>::eps();
  int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : static_cast<int>(c.size());

  for (int r = 0; r < m; ++r)
    if (b[r] < zero) {
      for (auto& v : A[r]) v = -v;
      b[r] = -b[r];
    }

  // Tableau columns: n real variables followed by m artificials.
  const int total = n + m;
  std::vector<std::vector<S>> T(m, std::vector<S>(total, zero));
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) T[r][j] = A[r][j];
    T[r][n + r] = S(1);
    basis[r] = n + r;
  }
  std::vector<S> rhs = b;

  auto pivot = [&](int pr, int pc) {
    const S piv = T[pr][pc];
    for (int j = 0; j < total; ++j) T[pr][j] = T[pr][j] / piv;
    rhs[pr] = rhs[pr] / piv;
    for (int r = 0; r < m; ++r) {
      if (r == pr) continue;
      const S factor = T[r][pc];
      if (factor == zero) continue;
      for (int j = 0; j < total; ++j) T[r][j] = T[r][j] - factor * T[pr][j];
      rhs[r] = rhs[r] - factor * rhs[pr];
    }
    basis[pr] = pc;
  };

  // Bland's rule simplex over columns [0, limit).
  auto run = [&](const std::vector<S>& cost, int limit) -> bool {
    for (int iter = 0; iter < 20000; ++iter) {
      int enter = -1;
      for (int j = 0; j < limit && enter < 0; ++j) {
        S rc = cost[j];
        for (int r = 0; r < m; ++r)
          if (cost[basis[r]] != zero) rc = rc - cost[basis[r]] * T[r][j];
        if (rc < -eps && !(Traits<S>::abs(rc) <= eps)) enter = j;
      }
      if (enter < 0) return true;  // optimal
      int leave = -1;
      for (int r = 0; r < m; ++r) {
        if (T[r][enter] > eps) {
          if (leave < 0) {
            leave = r;
          } else {
            const S lhs = rhs[r] * T[leave][enter];
            const S rhsv = rhs[leave] * T[r][enter];
            if (lhs < rhsv || (lhs == rhsv && basis[r] < basis[leave]))
              leave = r;
          }
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
    throw Error("simplex iteration limit exceeded");
  };

  Result<S> res;

  // Phase 1: minimize the artificial sum.
  std::vector<S> cost1(total, zero);
  for (int j = n; j < total; ++j) cost1[j] = S(1);
  run(cost1, total);
  S art = zero;
  for (int r = 0; r < m; ++r)
    if (basis[r] >= n) art += rhs[r];
  res.phase1_objective = art;
  if (art > eps && !(Traits<S>::abs(art) <= eps)) {
    res.status = Status::infeasible;
    return res;
  }

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (int r = 0; r < m;) {
    if (basis[r] < n) {
      ++r;
      continue;
    }
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
      if (!(Traits<S>::abs(T[r][j]) <= eps) && T[r][j] != zero) col = j;
    if (col >= 0) {
      pivot(r, col);
      ++r;
    } else {
      T.erase(T.begin() + r);
      rhs.erase(rhs.begin() + r);
      basis.erase(basis.begin() + r);
      --m;
    }
  }

  // Phase 2 over the real columns only.
  std::vector<S> cost2(total, zero);
  for (int j = 0; j < n; ++j) cost2[j] = c[j];
  if (!run(cost2, n)) {
    res.status = Status::unbounded;
    return res;
  }

  res.status = Status::optimal;
  res.x.assign(n, zero);
  for (int r = 0; r < m; ++r)
    if (basis[r] < n) res.x[basis[r]] = rhs[r];
  res.objective = zero;
  for (int j = 0; j < n; ++j)
    if (c[j] != zero) res.objective += c[j] * res.x[j];
  return res;
}

/// Feasibility of  A x = b,  lo <= x <= hi  (all bounds finite).
/// Returns the witness and the phase-1 residual (0 when feasible).
template <class S>
struct BoxResult {
  bool feasible = false;
  std::vector<S> x;
  S slack = Traits<S>::zero();
};

template <class S>
BoxResult<S> box_feasible(const std::vector<std::vector<S>>& A,
                          const std::vector<S>& b, const std::vector<S>& lo,
                          const std::vector<S>& hi) {
  const S zero = Traits<S>::zero();
  const int rows = static_cast<int>(A.size());
  const int nv = static_cast<int>(lo.size());

  // Substitute y = x - lo >= 0 and add bound rows y_j + s_j = hi_j - lo_j.
  const int total = nv + nv;  // y then slacks
  std::vector<std::vector<S>> M(rows + nv, std::vector<S>(total, zero));
  std::vector<S> rhs(rows + nv, zero);
  for (int r = 0; r < rows; ++r) {
    S shift = zero;
    for (int j = 0; j < nv; ++j) {
      M[r][j] = A[r][j];
      shift += A[r][j] * lo[j];
    }
    rhs[r] = b[r] - shift;
  }
  for (int j = 0; j < nv; ++j) {
    M[rows + j][j] = S(1);
    M[rows + j][nv + j] = S(1);
    rhs[rows + j] = hi[j] - lo[j];
  }

  std::vector<S> c(total, zero);
  auto r = simplex_min<S>(M, rhs, c);
  BoxResult<S> out;
  out.slack = r.phase1_objective;
  out.feasible = (r.status == Status::optimal);
  if (out.feasible) {
    out.x.resize(nv);
    for (int j = 0; j < nv; ++j) out.x[j] = r.x[j] + lo[j];
  }
  return out;
}

}  // namespace lp
}  // namespace hyplap
