// Eigenpair certificates for the 1-Laplacian. A pair (lambda, f) is an
// eigenpair iff multipliers z_h in Sgn(boundary f (h)) and z_i in Sgn(f(i))
// exist with, per vertex,
//   sum_{h: i input} z_h - sum_{h: i output} z_h = lambda deg(i) z_i.
// Multipliers are pinned to the sign wherever the argument is nonzero; the
// rest is a linear feasibility problem, solved by phase-1 simplex. The
// hyperedge side is the same statement with the roles of the incidence
// rows/columns exchanged.
#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "hyplap/common.hpp"
#include "hyplap/hypergraph.hpp"
#include "hyplap/lp.hpp"
#include "hyplap/operators.hpp"

namespace hyplap {

struct OneLapCertificate {
  double lambda = 0.0;
  bool feasible = false;
  double slack = 0.0;  // phase-1 residual; 0 when feasible
  std::vector<double> z_edge;    // multipliers over H
  std::vector<double> z_vertex;  // multipliers over V
  bool exact_arithmetic = false;
};

/// Zero out entries below rel_tol * ||x||_inf; candidates taken from p -> 1
/// limits carry numerical noise at their exact zeros.
inline std::vector<double> round_small(const std::vector<double>& x,
                                       double rel_tol) {
  const double cut = rel_tol * inf_norm(x);
  std::vector<double> out(x);
  for (double& t : out)
    if (std::fabs(t) <= cut) t = 0.0;
  return out;
}

namespace detail {

template <class S>
struct ScalarMaker;

template <>
struct ScalarMaker<double> {
  static double frac(long long n, long long d) {
    return static_cast<double>(n) / static_cast<double>(d);
  }
};

template <>
struct ScalarMaker<Rational> {
  static Rational frac(long long n, long long d) { return Rational(n, d); }
};

template <class S>
OneLapCertificate verify_1lap_impl(const OrientedHypergraph& g,
                                   const S& lambda, double lambda_d,
                                   const std::vector<double>& x, Side side) {
  const int n = g.vertex_count();
  const int m = g.hyperedge_count();
  const S zero = lp::Traits<S>::zero();
  auto frac = [](long long a, long long b) {
    return ScalarMaker<S>::frac(a, b);
  };

  // Pinned signs and free-variable index maps.
  std::vector<int> sgn_edge(m, 0), sgn_vertex(n, 0);
  std::vector<int> free_edge_idx(m, -1), free_vertex_idx(n, -1);
  int nfree = 0;

  if (side == Side::vertex) {
    const auto b = boundary(g, x);
    for (int h = 0; h < m; ++h) sgn_edge[h] = sign_of(b[h]);
    for (int i = 0; i < n; ++i) sgn_vertex[i] = sign_of(x[i]);
  } else {
    const auto c = coboundary(g, x);
    for (int i = 0; i < n; ++i) sgn_vertex[i] = sign_of(c[i]);
    for (int h = 0; h < m; ++h) sgn_edge[h] = sign_of(x[h]);
  }
  for (int h = 0; h < m; ++h)
    if (sgn_edge[h] == 0) free_edge_idx[h] = nfree++;
  int nfree_edges = nfree;
  for (int i = 0; i < n; ++i)
    if (sgn_vertex[i] == 0) free_vertex_idx[i] = nfree++;

  const int rows = side == Side::vertex ? n : m;
  std::vector<std::vector<S>> a(rows, std::vector<S>(nfree, zero));
  std::vector<S> rhs(rows, zero);

  if (side == Side::vertex) {
    // Row per vertex: sum_h sign(i,h) z_h - lambda deg(i) z_i = 0.
    for (int i = 0; i < n; ++i) {
      S r = zero;
      if (sgn_vertex[i] != 0)
        r = lambda * frac(g.degree(i) * sgn_vertex[i], 1);
      else
        a[i][free_vertex_idx[i]] = -(lambda * frac(g.degree(i), 1));
      for (auto [h, sgn] : g.incident(i)) {
        if (sgn_edge[h] != 0)
          r -= frac(sgn * sgn_edge[h], 1);
        else
          a[i][free_edge_idx[h]] += frac(sgn, 1);
      }
      rhs[i] = r;
    }
  } else {
    // Row per hyperedge: sum_{i in h} sign(i,h)/deg(i) z_i - lambda z_h = 0.
    for (int h = 0; h < m; ++h) {
      S r = zero;
      if (sgn_edge[h] != 0)
        r = lambda * frac(sgn_edge[h], 1);
      else
        a[h][free_edge_idx[h]] = -lambda;
      auto add = [&](int i, int sgn) {
        if (sgn_vertex[i] != 0)
          r -= frac(sgn * sgn_vertex[i], g.degree(i));
        else
          a[h][free_vertex_idx[i]] += frac(sgn, g.degree(i));
      };
      for (int i : g.hyperedge(h).in) add(i, +1);
      for (int i : g.hyperedge(h).out) add(i, -1);
      rhs[h] = r;
    }
  }

  std::vector<S> lo(nfree, frac(-1, 1)), hi(nfree, frac(1, 1));
  const auto sol = lp::box_feasible<S>(a, rhs, lo, hi);

  OneLapCertificate cert;
  cert.lambda = lambda_d;
  cert.feasible = sol.feasible;
  cert.slack = lp::Traits<S>::to_double(sol.slack);
  cert.z_edge.assign(m, 0.0);
  cert.z_vertex.assign(n, 0.0);
  for (int h = 0; h < m; ++h)
    cert.z_edge[h] =
        sgn_edge[h] != 0
            ? sgn_edge[h]
            : (sol.feasible ? lp::Traits<S>::to_double(sol.x[free_edge_idx[h]])
                            : 0.0);
  for (int i = 0; i < n; ++i)
    cert.z_vertex[i] =
        sgn_vertex[i] != 0
            ? sgn_vertex[i]
            : (sol.feasible
                   ? lp::Traits<S>::to_double(sol.x[free_vertex_idx[i]])
                   : 0.0);
  (void)nfree_edges;
  return cert;
}

}  // namespace detail

/// Decide whether (lambda, x) is a 1-Laplacian eigenpair by constructing a
/// multiplier witness, or report infeasibility (a valid answer, not an
/// error). Uses exact rational arithmetic when lambda is a small fraction,
/// floating phase-1 simplex otherwise.
inline OneLapCertificate verify_1lap_eigenpair(const OrientedHypergraph& g,
                                               double lambda,
                                               const std::vector<double>& x,
                                               Side side) {
  if (is_zero_function(x)) throw ZeroFunctionError("candidate is zero");
  if (lambda < 0.0) throw DomainError("lambda must be nonnegative");

  if (auto rat = Rational::approximate(lambda, 1000000)) {
    try {
      auto cert = detail::verify_1lap_impl<Rational>(g, *rat, lambda, x, side);
      cert.exact_arithmetic = true;
      return cert;
    } catch (const Error&) {
      // overflow in exact arithmetic: fall through to floating point
    }
  }
  return detail::verify_1lap_impl<double>(g, lambda, lambda, x, side);
}

}  // namespace hyplap
