// Nodal domains of vertex functions and the two Courant-type bounds:
// for an eigenfunction of the k-th min-max eigenvalue with multiplicity r,
// at most k+r-1 nodal domains; on inputs-only hypergraphs, at most n-k+r
// signed (positive plus negative) domains.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hyplap/common.hpp"
#include "hyplap/eigen.hpp"
#include "hyplap/hypergraph.hpp"
#include "hyplap/report.hpp"

namespace hyplap {

struct NodalReport {
  VertexSubset support;
  std::vector<std::vector<int>> domains;
  std::vector<std::vector<int>> positive_domains;
  std::vector<std::vector<int>> negative_domains;
};

/// Support and nodal domains of f. Entries with |f(i)| <= threshold count
/// as zero; threshold < 0 selects the default 1e-9 * ||f||_inf (numerical
/// eigenvectors carry noise at exact zeros, and domain counts are
/// threshold-sensitive).
inline NodalReport nodal_domains(const OrientedHypergraph& g,
                                 const VertexFunction& f,
                                 double threshold = -1.0) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw DimensionError("vertex function has wrong length");
  if (threshold < 0.0) threshold = 1e-9 * inf_norm(f);

  const int n = g.vertex_count();
  NodalReport rep;
  rep.support.assign(n, false);
  VertexSubset pos(n, false), neg(n, false);
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (std::fabs(f[i]) > threshold) {
      rep.support[i] = true;
      any = true;
      (f[i] > 0 ? pos : neg)[i] = true;
    }
  }
  if (!any) throw ZeroFunctionError("function is zero below the threshold");

  rep.domains = connected_components(n, restrict_to(g, rep.support));
  rep.positive_domains = connected_components(n, restrict_to(g, pos));
  rep.negative_domains = connected_components(n, restrict_to(g, neg));
  return rep;
}

namespace detail {

struct CourantIndex {
  int k = 1;  // 1-based position of the eigenvalue group
  int r = 1;  // multiplicity (eigenspace dimension at p = 2)
  bool exact = true;
};

/// Position and multiplicity of each pair. For a full p = 2 spectrum both
/// are exact (grouping by gap tolerance); for variational extremal pairs the
/// position is 1 or n and r = 1 is only a lower bound on the multiplicity.
inline std::vector<CourantIndex> courant_indices(
    const std::vector<EigenPair>& pairs, double p, int dim, double gap_tol) {
  std::vector<CourantIndex> idx(pairs.size());
  if (p == 2.0 && static_cast<int>(pairs.size()) == dim) {
    std::size_t a = 0;
    while (a < pairs.size()) {
      std::size_t b = a;
      while (b + 1 < pairs.size() &&
             std::fabs(pairs[b + 1].value - pairs[a].value) <= gap_tol)
        ++b;
      for (std::size_t j = a; j <= b; ++j) {
        idx[j].k = static_cast<int>(a) + 1;
        idx[j].r = static_cast<int>(b - a + 1);
        idx[j].exact = true;
      }
      a = b + 1;
    }
    return idx;
  }
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (!pairs[j].extremum)
      throw DomainError(
          "pairs must come from the full p=2 spectrum or be tagged extremal");
    idx[j].k = *pairs[j].extremum == Extremum::minimum ? 1 : dim;
    idx[j].r = 1;
    idx[j].exact = false;
  }
  return idx;
}

}  // namespace detail

/// Check the nodal-domain bound (#domains <= k + r - 1) for each eigenpair.
/// A failed report is a finding, not an exception. Reports for extremal
/// pairs at p != 2 are marked informational: their r = 1 is only a lower
/// bound on the multiplicity.
inline std::vector<BoundReport> check_courant(
    const OrientedHypergraph& g, double p,
    const std::vector<EigenPair>& pairs, double gap_tol = 1e-7,
    double threshold = -1.0) {
  const auto idx =
      detail::courant_indices(pairs, p, g.vertex_count(), gap_tol);
  std::vector<BoundReport> out;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto rep = nodal_domains(g, pairs[j].function, threshold);
    const int count = static_cast<int>(rep.domains.size());
    const int bound = idx[j].k + idx[j].r - 1;
    auto br = make_bound(
        "courant.nodal",
        static_cast<double>(count), static_cast<double>(bound),
        "eigenvalue " + std::to_string(pairs[j].value) + " (k=" +
            std::to_string(idx[j].k) + ", r=" + std::to_string(idx[j].r) +
            (idx[j].exact ? ")" : ", lower-bound multiplicity)"),
        0.0);
    br.informational = !idx[j].exact;
    out.push_back(std::move(br));
  }
  return out;
}

/// Inputs-only variant: positive plus negative domain count <= n - k + r.
inline std::vector<BoundReport> check_courant_inputs_only(
    const OrientedHypergraph& g, double p,
    const std::vector<EigenPair>& pairs, double gap_tol = 1e-7,
    double threshold = -1.0) {
  if (!g.inputs_only())
    throw NotInputsOnlyError("hypergraph has non-empty output sets");
  const int n = g.vertex_count();
  const auto idx = detail::courant_indices(pairs, p, n, gap_tol);
  std::vector<BoundReport> out;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto rep = nodal_domains(g, pairs[j].function, threshold);
    const int count = static_cast<int>(rep.positive_domains.size() +
                                       rep.negative_domains.size());
    const int bound = n - idx[j].k + idx[j].r;
    auto br = make_bound(
        "courant.signed_nodal",
        static_cast<double>(count), static_cast<double>(bound),
        "eigenvalue " + std::to_string(pairs[j].value) + " (k=" +
            std::to_string(idx[j].k) + ", r=" + std::to_string(idx[j].r) +
            (idx[j].exact ? ")" : ", lower-bound multiplicity)"),
        0.0);
    br.informational = !idx[j].exact;
    out.push_back(std::move(br));
  }
  return out;
}

/// The convexity inequality behind the signed Courant bound:
///   |tA + sB|^p >= (|t|^p A + |s|^p B) |A+B|^{p-2} (A+B)   for A*B <= 0,
/// with the right side read as 0 when A + B = 0.
inline bool convexity_lemma_check(double p, double t, double s, double A,
                                  double B, double slack = 1e-12) {
  require_p_ge1(p);
  if (A * B > 0) throw DomainError("requires A*B <= 0");
  const double lhs = pow_abs(t * A + s * B, p);
  const double rhs = (pow_abs(t, p) * A + pow_abs(s, p) * B) *
                     signed_pow(A + B, p);
  return lhs + slack >= rhs;
}

/// p = 1 strengthening: |tA + sB| >= (|t| A + |s| B) z for every
/// z in Sgn(A+B); checks the worst case over z.
inline bool convexity_lemma_check_signed(double t, double s, double A,
                                         double B, double slack = 1e-12) {
  if (A * B > 0) throw DomainError("requires A*B <= 0");
  const double lhs = std::fabs(t * A + s * B);
  const double coeff = std::fabs(t) * A + std::fabs(s) * B;
  const double rhs =
      A + B != 0.0 ? coeff * sign_of(A + B) : std::fabs(coeff);
  return lhs + slack >= rhs;
}

}  // namespace hyplap
