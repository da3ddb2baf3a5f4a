// The p-Laplace operators on oriented hypergraphs and the functionals they
// derive from: boundary/coboundary maps, p-energies, degree-weighted norms,
// generalized Rayleigh quotients and their exact gradients (p > 1).
#pragma once

#include <cmath>
#include <vector>

#include "hyplap/common.hpp"
#include "hyplap/hypergraph.hpp"

namespace hyplap {

/// Per hyperedge h: sum of f over h_in minus sum of f over h_out.
/// Equals (incidence)^T f.
inline HyperedgeFunction boundary(const OrientedHypergraph& g,
                                  const VertexFunction& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw DimensionError("vertex function has wrong length");
  HyperedgeFunction b(g.hyperedge_count(), 0.0);
  for (int h = 0; h < g.hyperedge_count(); ++h) {
    double s = 0.0;
    for (int i : g.hyperedge(h).in) s += f[i];
    for (int i : g.hyperedge(h).out) s -= f[i];
    b[h] = s;
  }
  return b;
}

/// Per vertex i: sum of gamma over hyperedges with i as input minus sum over
/// hyperedges with i as output. Equals incidence * gamma.
inline VertexFunction coboundary(const OrientedHypergraph& g,
                                 const HyperedgeFunction& gamma) {
  if (static_cast<int>(gamma.size()) != g.hyperedge_count())
    throw DimensionError("hyperedge function has wrong length");
  VertexFunction c(g.vertex_count(), 0.0);
  for (int i = 0; i < g.vertex_count(); ++i) {
    double s = 0.0;
    for (auto [h, sgn] : g.incident(i)) s += sgn * gamma[h];
    c[i] = s;
  }
  return c;
}

/// Normalized vertex p-Laplacian, p > 1:
///   (Delta_p f)(i) = (1/deg i) * sum_{h ∋ i} sign(i,h) |b_h|^{p-2} b_h
/// where b = boundary(f). The factor |b|^{p-2} b is 0 at b = 0.
inline VertexFunction apply_vertex_p_laplacian(const OrientedHypergraph& g,
                                               double p,
                                               const VertexFunction& f) {
  require_p_gt1(p);
  const HyperedgeFunction b = boundary(g, f);
  std::vector<double> w(b.size());
  for (std::size_t h = 0; h < b.size(); ++h) w[h] = signed_pow(b[h], p);
  VertexFunction out(g.vertex_count(), 0.0);
  for (int i = 0; i < g.vertex_count(); ++i) {
    double s = 0.0;
    for (auto [h, sgn] : g.incident(i)) s += sgn * w[h];
    out[i] = s / g.degree(i);
  }
  return out;
}

/// Normalized hyperedge p-Laplacian, p > 1:
///   (Delta_p^H gamma)(h) = sum_{i ∈ h} sign(i,h) (1/deg i) |c_i|^{p-2} c_i
/// where c = coboundary(gamma).
inline HyperedgeFunction apply_hyperedge_p_laplacian(
    const OrientedHypergraph& g, double p, const HyperedgeFunction& gamma) {
  require_p_gt1(p);
  const VertexFunction c = coboundary(g, gamma);
  std::vector<double> w(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    w[i] = signed_pow(c[i], p) / g.degree(static_cast<int>(i));
  HyperedgeFunction out(g.hyperedge_count(), 0.0);
  for (int h = 0; h < g.hyperedge_count(); ++h) {
    double s = 0.0;
    for (int i : g.hyperedge(h).in) s += w[i];
    for (int i : g.hyperedge(h).out) s -= w[i];
    out[h] = s;
  }
  return out;
}

// Energies and norms. Sums collect their nonzero terms in index order and
// reduce with pairwise summation, so equal inputs give bit-equal results.

inline double vertex_energy(const OrientedHypergraph& g, double p,
                            const VertexFunction& f) {
  require_p_ge1(p);
  const HyperedgeFunction b = boundary(g, f);
  std::vector<double> terms;
  terms.reserve(b.size());
  for (double t : b)
    if (t != 0.0) terms.push_back(pow_abs(t, p));
  return pairwise_sum(terms);
}

/// Degree-weighted p-norm to the p-th power: sum_i deg(i) |f(i)|^p.
inline double vertex_norm_pp(const OrientedHypergraph& g, double p,
                             const VertexFunction& f) {
  require_p_ge1(p);
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw DimensionError("vertex function has wrong length");
  std::vector<double> terms;
  terms.reserve(f.size());
  for (int i = 0; i < g.vertex_count(); ++i)
    if (f[i] != 0.0) terms.push_back(g.degree(i) * pow_abs(f[i], p));
  return pairwise_sum(terms);
}

inline double hyperedge_energy(const OrientedHypergraph& g, double p,
                               const HyperedgeFunction& gamma) {
  require_p_ge1(p);
  const VertexFunction c = coboundary(g, gamma);
  std::vector<double> terms;
  terms.reserve(c.size());
  for (int i = 0; i < g.vertex_count(); ++i)
    if (c[i] != 0.0) terms.push_back(pow_abs(c[i], p) / g.degree(i));
  return pairwise_sum(terms);
}

/// Unweighted p-norm to the p-th power: sum_h |gamma(h)|^p.
inline double hyperedge_norm_pp(const OrientedHypergraph& g, double p,
                                const HyperedgeFunction& gamma) {
  require_p_ge1(p);
  if (static_cast<int>(gamma.size()) != g.hyperedge_count())
    throw DimensionError("hyperedge function has wrong length");
  std::vector<double> terms;
  terms.reserve(gamma.size());
  for (double t : gamma)
    if (t != 0.0) terms.push_back(pow_abs(t, p));
  return pairwise_sum(terms);
}

inline double energy(const OrientedHypergraph& g, double p,
                     const std::vector<double>& x, Side side) {
  return side == Side::vertex ? vertex_energy(g, p, x)
                              : hyperedge_energy(g, p, x);
}

inline double norm_pp(const OrientedHypergraph& g, double p,
                      const std::vector<double>& x, Side side) {
  return side == Side::vertex ? vertex_norm_pp(g, p, x)
                              : hyperedge_norm_pp(g, p, x);
}

inline double norm_p(const OrientedHypergraph& g, double p,
                     const std::vector<double>& x, Side side) {
  return std::pow(norm_pp(g, p, x, side), 1.0 / p);
}

/// Generalized Rayleigh quotient E_p(x) / ||x||_p^p for the chosen side.
inline double rayleigh_quotient(const OrientedHypergraph& g, double p,
                                const std::vector<double>& x, Side side) {
  if (is_zero_function(x)) throw ZeroFunctionError("argument is zero");
  return energy(g, p, x, side) / norm_pp(g, p, x, side);
}

/// Exact gradient of RQ_p at f (vertex side), p > 1:
///   d_i RQ_p(f) = p deg(i) (Delta_p f(i) - RQ_p(f) |f(i)|^{p-2} f(i)) / ||f||_p^p
inline VertexFunction grad_rq_vertex(const OrientedHypergraph& g, double p,
                                     const VertexFunction& f) {
  require_p_gt1(p);
  if (is_zero_function(f)) throw ZeroFunctionError("argument is zero");
  const double rq = rayleigh_quotient(g, p, f, Side::vertex);
  const double denom = vertex_norm_pp(g, p, f);
  const VertexFunction lap = apply_vertex_p_laplacian(g, p, f);
  VertexFunction grad(f.size());
  for (int i = 0; i < g.vertex_count(); ++i)
    grad[i] = p * g.degree(i) * (lap[i] - rq * signed_pow(f[i], p)) / denom;
  return grad;
}

/// Hyperedge analog; the degree weight sits inside the operator here, so the
/// outer factor is just p / ||gamma||_p^p.
inline HyperedgeFunction grad_rq_hyperedge(const OrientedHypergraph& g,
                                           double p,
                                           const HyperedgeFunction& gamma) {
  require_p_gt1(p);
  if (is_zero_function(gamma)) throw ZeroFunctionError("argument is zero");
  const double rq = rayleigh_quotient(g, p, gamma, Side::hyperedge);
  const double denom = hyperedge_norm_pp(g, p, gamma);
  const HyperedgeFunction lap = apply_hyperedge_p_laplacian(g, p, gamma);
  HyperedgeFunction grad(gamma.size());
  for (int h = 0; h < g.hyperedge_count(); ++h)
    grad[h] = p * (lap[h] - rq * signed_pow(gamma[h], p)) / denom;
  return grad;
}

inline std::vector<double> grad_rq(const OrientedHypergraph& g, double p,
                                   const std::vector<double>& x, Side side) {
  return side == Side::vertex ? grad_rq_vertex(g, p, x)
                              : grad_rq_hyperedge(g, p, x);
}

inline std::vector<double> apply_p_laplacian(const OrientedHypergraph& g,
                                             double p,
                                             const std::vector<double>& x,
                                             Side side) {
  return side == Side::vertex ? apply_vertex_p_laplacian(g, p, x)
                              : apply_hyperedge_p_laplacian(g, p, x);
}

}  // namespace hyplap
