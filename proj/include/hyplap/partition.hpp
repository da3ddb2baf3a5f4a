// Combinatorial quantities tied to the spectra: set imbalances e_p, the
// Cheeger constant, balanced-min/max k-cuts, signed colorings, (k,l)-family
// bounds, the t/c-parameterized partition bounds, and the hyperedge-side
// analogs. Exhaustive enumerators carry hard size limits; heuristics must
// be requested explicitly and are flagged in the result.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hyplap/common.hpp"
#include "hyplap/hypergraph.hpp"
#include "hyplap/report.hpp"

namespace hyplap {

/// Disjoint nonempty blocks covering the ground set (vertices or
/// hyperedges, depending on use).
struct Partition {
  std::vector<std::vector<int>> blocks;
};

/// k subsets covering their union exactly l times each.
struct KLFamily {
  std::vector<VertexSubset> sets;
  int l = 1;
};

/// Color assignment over vertices or hyperedges; colors are 0..num_colors-1.
struct Coloring {
  std::vector<int> assignment;
  int num_colors = 0;
};

// ---------------------------------------------------------------------------
// e_p and friends.

/// e_p(S) = sum_h |#(S ∩ h_in) - #(S ∩ h_out)|^p; e_p of the empty set is 0.
inline double e_p(const OrientedHypergraph& g, const VertexSubset& S,
                  double p) {
  require_p_ge1(p);
  if (static_cast<int>(S.size()) != g.vertex_count())
    throw DimensionError("subset size does not match vertex count");
  std::vector<double> terms;
  terms.reserve(g.hyperedge_count());
  for (const auto& h : g.hyperedges()) {
    int d = 0;
    for (int i : h.in) d += S[i];
    for (int i : h.out) d -= S[i];
    if (d != 0) terms.push_back(pow_abs(d, p));
  }
  return pairwise_sum(terms);
}

/// Hyperedge-side analog over a hyperedge subset:
/// e_p(Ĥ) = sum_i (1/deg i) |#(Ĥ ∩ i_in) - #(Ĥ ∩ i_out)|^p.
inline double e_p_hyperedges(const OrientedHypergraph& g,
                             const HyperedgeSubset& hs, double p) {
  require_p_ge1(p);
  if (static_cast<int>(hs.size()) != g.hyperedge_count())
    throw DimensionError("subset size does not match hyperedge count");
  std::vector<double> terms;
  terms.reserve(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    int d = 0;
    for (auto [h, sgn] : g.incident(i))
      if (hs[h]) d += sgn;
    if (d != 0) terms.push_back(pow_abs(d, p) / g.degree(i));
  }
  return pairwise_sum(terms);
}

inline int subset_size(const HyperedgeSubset& hs, int) = delete;

/// eta_p(Ĥ) = e_p(Ĥ) / #Ĥ for a nonempty hyperedge subset.
inline double eta_p(const OrientedHypergraph& g, const HyperedgeSubset& hs,
                    double p) {
  const int count = static_cast<int>(std::count(hs.begin(), hs.end(), true));
  if (count == 0) throw EmptySubsetError("eta_p of the empty subset");
  return e_p_hyperedges(g, hs, p) / count;
}

// ---------------------------------------------------------------------------
// Enumeration helpers (deterministic order).

namespace detail {

/// Partitions of {0..n-1} into exactly k nonempty blocks, emitted as
/// restricted-growth strings in lexicographic order.
inline void for_each_partition(int n, int k,
                               const std::function<void(const Partition&)>& f) {
  std::vector<int> code(n, 0);
  Partition part;
  auto emit = [&]() {
    part.blocks.assign(k, {});
    for (int i = 0; i < n; ++i) part.blocks[code[i]].push_back(i);
    f(part);
  };
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (n - pos < k - used) return;  // cannot reach k blocks
    if (pos == n) {
      if (used == k) emit();
      return;
    }
    const int top = std::min(used, k - 1);
    for (int c = 0; c <= top; ++c) {
      code[pos] = c;
      rec(pos + 1, std::max(used, c + 1));
    }
  };
  if (n >= k && k >= 1) rec(1, 1);  // element 0 is pinned to block 0
}

/// (k,l)-families over n vertices: each vertex is either outside the union
/// or assigned one of the l-subsets of {0..k-1}.
inline void for_each_kl_family(
    int n, int k, int l, const std::function<void(const KLFamily&)>& f) {
  std::vector<std::vector<int>> combos;
  std::vector<int> pick;
  std::function<void(int)> gen = [&](int from) {
    if (static_cast<int>(pick.size()) == l) {
      combos.push_back(pick);
      return;
    }
    for (int c = from; c < k; ++c) {
      pick.push_back(c);
      gen(c + 1);
      pick.pop_back();
    }
  };
  gen(0);
  const int radix = static_cast<int>(combos.size()) + 1;  // 0 = outside
  std::vector<int> digit(n, 0);
  KLFamily fam;
  fam.l = l;
  while (true) {
    bool any = false;
    fam.sets.assign(k, VertexSubset(n, false));
    for (int i = 0; i < n; ++i) {
      if (digit[i] > 0) {
        any = true;
        for (int c : combos[digit[i] - 1]) fam.sets[c][i] = true;
      }
    }
    if (any) f(fam);
    int pos = 0;
    while (pos < n && ++digit[pos] == radix) digit[pos++] = 0;
    if (pos == n) break;
  }
}

struct ParityDsu {
  std::vector<int> parent, rank_, parity;
  explicit ParityDsu(int n) : parent(n), rank_(n, 0), parity(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  std::pair<int, int> find(int x) {
    int par = 0;
    int root = x;
    while (parent[root] != root) {
      par ^= parity[root];
      root = parent[root];
    }
    // path compression
    while (parent[x] != root) {
      const int next = parent[x];
      const int np = par ^ parity[x];
      parent[x] = root;
      parity[x] = par;
      par = np;
      x = next;
    }
    return {root, parity[x]};
  }
  /// Enforce parity(a) xor parity(b) == rel; false on contradiction.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ rel;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Cheeger constant.

struct CheegerResult {
  double value = 0.0;
  VertexSubset argmin;
  bool widened = false;  // no S satisfied vol S <= 1/2 vol S̄; the feasible
                         // region was widened to vol S <= vol S̄
};

/// Exhaustive Cheeger constant: min over nonempty S with
/// vol(S) <= 1/2 vol(V \ S) of e(S)/vol(S), with e = e_2. On instances
/// where no S satisfies the constraint the region widens to
/// vol(S) <= vol(V \ S) and the result is flagged.
inline CheegerResult cheeger(const OrientedHypergraph& g,
                             int exhaustive_limit = 20) {
  const int n = g.vertex_count();
  if (n > exhaustive_limit)
    throw SizeLimitError("cheeger: exhaustive enumeration limited to n <= " +
                         std::to_string(exhaustive_limit));
  const double total = g.volume();
  CheegerResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < 2 && best.argmin.empty(); ++pass) {
    for (std::uint64_t mask = 1; mask + 1 < (1ull << n); ++mask) {
      const VertexSubset s = subset_from_mask(n, mask);
      const double vol = g.volume(s);
      const double volc = total - vol;
      const bool ok = pass == 0 ? vol <= 0.5 * volc : vol <= volc;
      if (!ok) continue;
      const double ratio = e_p(g, s, 2.0) / vol;
      if (ratio < best.value) {
        best.value = ratio;
        best.argmin = s;
      }
    }
    best.widened = pass == 1;
  }
  return best;
}

// ---------------------------------------------------------------------------
// k-cuts.

enum class KCutMode { balanced_min, max_cut };

struct KCutResult {
  double value = 0.0;
  Partition partition;
  bool heuristic = false;
};

namespace detail {

inline double kcut_objective(const OrientedHypergraph& g, double p,
                             KCutMode mode, const Partition& part) {
  const int n = g.vertex_count();
  double sum = 0.0;
  for (const auto& block : part.blocks) {
    VertexSubset s(n, false);
    for (int i : block) s[i] = true;
    const double e = e_p(g, s, p);
    sum += mode == KCutMode::balanced_min ? e / g.volume(s) : e;
  }
  return sum;
}

}  // namespace detail

/// Balanced minimum k-cut (min sum e_p(V_i)/vol V_i) or maximum k-cut
/// (max sum e_p(V_i)) over partitions into exactly k nonempty blocks.
/// Exhaustive up to exact_limit vertices; above that a single-vertex-move
/// local search runs only when allow_heuristic is set.
inline KCutResult k_cut(const OrientedHypergraph& g, int k, double p,
                        KCutMode mode, bool allow_heuristic = false,
                        int exact_limit = 12) {
  require_p_ge1(p);
  const int n = g.vertex_count();
  if (k < 2 || k > n) throw IndexError("k must be in [2, n]");

  const bool minimize = mode == KCutMode::balanced_min;
  KCutResult best;
  best.value = minimize ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();

  if (n <= exact_limit) {
    detail::for_each_partition(n, k, [&](const Partition& part) {
      const double v = detail::kcut_objective(g, p, mode, part);
      if (minimize ? v < best.value : v > best.value) {
        best.value = v;
        best.partition = part;
      }
    });
    return best;
  }

  if (!allow_heuristic)
    throw SizeLimitError("k_cut: exact enumeration limited to n <= " +
                         std::to_string(exact_limit));

  // Greedy local search from a round-robin start.
  std::vector<int> assign(n);
  for (int i = 0; i < n; ++i) assign[i] = i % k;
  auto to_partition = [&]() {
    Partition part;
    part.blocks.assign(k, {});
    for (int i = 0; i < n; ++i) part.blocks[assign[i]].push_back(i);
    return part;
  };
  double cur = detail::kcut_objective(g, p, mode, to_partition());
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n; ++i) {
      const int old = assign[i];
      if (std::count(assign.begin(), assign.end(), old) == 1) continue;
      for (int c = 0; c < k; ++c) {
        if (c == old) continue;
        assign[i] = c;
        const double v = detail::kcut_objective(g, p, mode, to_partition());
        if (minimize ? v < cur - 1e-15 : v > cur + 1e-15) {
          cur = v;
          improved = true;
        } else {
          assign[i] = old;
        }
      }
    }
  }
  best.value = cur;
  best.partition = to_partition();
  best.heuristic = true;
  return best;
}

// ---------------------------------------------------------------------------
// Sandwiches.

/// lambda_1 <= e_p(S)/vol(S) <= lambda_n for nonempty S.
inline std::vector<BoundReport> sandwich_ep(const OrientedHypergraph& g,
                                            const VertexSubset& S, double p,
                                            double lambda1, double lambda_n,
                                            double tol = 1e-8) {
  if (subset_size(S) == 0) throw EmptySubsetError("S must be nonempty");
  const double ratio = e_p(g, S, p) / g.volume(S);
  return {
      make_bound("ep_ratio.lower", lambda1, ratio, "e_p(S)/vol(S)", tol),
      make_bound("ep_ratio.upper", ratio, lambda_n, "e_p(S)/vol(S)", tol),
  };
}

// ---------------------------------------------------------------------------
// Colorings.

namespace detail {

/// Exact chromatic number of a conflict graph by branch-and-bound
/// backtracking; vertices are colored in degree order.
inline int chromatic_number(const std::vector<std::vector<bool>>& adj,
                            std::vector<int>* out_colors) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) {
    out_colors->clear();
    return 0;
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) deg[i] += adj[i][j];
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });

  std::vector<int> colors(n, -1), best_colors;
  int best = n + 1;
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (used >= best) return;
    if (pos == n) {
      best = used;
      best_colors = colors;
      return;
    }
    const int v = order[pos];
    for (int c = 0; c < std::min(used + 1, best - 1); ++c) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        if (colors[u] == c && adj[v][u]) ok = false;
      if (ok) {
        colors[v] = c;
        rec(pos + 1, std::max(used, c + 1));
        colors[v] = -1;
      }
    }
  };
  rec(0, 0);
  *out_colors = best_colors;
  return best;
}

inline int greedy_coloring(const std::vector<std::vector<bool>>& adj,
                           std::vector<int>* out_colors) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) deg[i] += adj[i][j];
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<int> colors(n, -1);
  int used = 0;
  for (int v : order) {
    std::vector<bool> taken(n + 1, false);
    for (int u = 0; u < n; ++u)
      if (adj[v][u] && colors[u] >= 0) taken[colors[u]] = true;
    int c = 0;
    while (taken[c]) ++c;
    colors[v] = c;
    used = std::max(used, c + 1);
  }
  *out_colors = colors;
  return used;
}

/// Vertex conflict graphs. Signed: conflict iff anti-oriented in some
/// hyperedge. Unsigned: conflict iff co-incident in some hyperedge.
inline std::vector<std::vector<bool>> vertex_conflicts(
    const OrientedHypergraph& g, bool signed_only) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& h : g.hyperedges()) {
    if (!signed_only) {
      std::vector<int> all(h.in);
      all.insert(all.end(), h.out.begin(), h.out.end());
      for (int a : all)
        for (int b : all)
          if (a != b) adj[a][b] = true;
    }
    for (int a : h.in)
      for (int b : h.out) {
        adj[a][b] = true;
        adj[b][a] = true;
      }
  }
  return adj;
}

/// Hyperedge conflicts: h and h' conflict iff some vertex is an input in
/// one and an output in the other.
inline std::vector<std::vector<bool>> hyperedge_conflicts(
    const OrientedHypergraph& g) {
  const int m = g.hyperedge_count();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (int i = 0; i < g.vertex_count(); ++i) {
    const auto& inc = g.incident(i);
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b)
        if (inc[a].second != inc[b].second) {
          adj[inc[a].first][inc[b].first] = true;
          adj[inc[b].first][inc[a].first] = true;
        }
  }
  return adj;
}

}  // namespace detail

struct ColoringResult {
  int chi = 0;
  Coloring coloring;
  bool exact = true;
};

/// Signed coloring number: vertex side requires anti-oriented pairs to get
/// distinct colors; hyperedge side requires hyperedges meeting a vertex
/// with opposite roles to differ. Exact backtracking up to exact_limit
/// elements, greedy (flagged) above when allowed.
inline ColoringResult signed_coloring_number(const OrientedHypergraph& g,
                                             Side side,
                                             bool allow_heuristic = false,
                                             int exact_limit = 20) {
  const auto adj = side == Side::vertex
                       ? detail::vertex_conflicts(g, /*signed_only=*/true)
                       : detail::hyperedge_conflicts(g);
  const int dim = static_cast<int>(adj.size());
  ColoringResult res;
  if (dim <= exact_limit) {
    res.chi = detail::chromatic_number(adj, &res.coloring.assignment);
    res.exact = true;
  } else if (allow_heuristic) {
    res.chi = detail::greedy_coloring(adj, &res.coloring.assignment);
    res.exact = false;
  } else {
    throw SizeLimitError("signed_coloring_number: exact mode limited to " +
                         std::to_string(exact_limit) + " elements");
  }
  res.coloring.num_colors = res.chi;
  return res;
}

/// Plain coloring number of the co-incidence relation (an upper bound for
/// the signed coloring number).
inline ColoringResult unsigned_coloring_number(const OrientedHypergraph& g,
                                               bool allow_heuristic = false,
                                               int exact_limit = 20) {
  const auto adj = detail::vertex_conflicts(g, /*signed_only=*/false);
  ColoringResult res;
  if (g.vertex_count() <= exact_limit) {
    res.chi = detail::chromatic_number(adj, &res.coloring.assignment);
  } else if (allow_heuristic) {
    res.chi = detail::greedy_coloring(adj, &res.coloring.assignment);
    res.exact = false;
  } else {
    throw SizeLimitError("unsigned_coloring_number: exact mode limited");
  }
  res.coloring.num_colors = res.chi;
  return res;
}

/// Two-sided bound from a valid signed vertex coloring with classes V_i:
///   lambda_1 <= (1/chi) sum_i sum_h #(V_i ∩ h)^p / vol(V_i) <= lambda_n.
/// Classes avoid anti-oriented pairs, so per class the imbalance equals the
/// plain intersection count. At p = 1 the middle quantity equals 1 exactly
/// and matches lambda_n; that equality is emitted as a third report.
inline std::vector<BoundReport> signed_coloring_bound(
    const OrientedHypergraph& g, double p, const Coloring& coloring,
    double lambda1, double lambda_n, double tol = 1e-8) {
  require_p_ge1(p);
  const int n = g.vertex_count();
  if (static_cast<int>(coloring.assignment.size()) != n)
    throw InvalidColoringError("assignment length does not match");
  const int k = coloring.num_colors;
  if (k <= 0) throw InvalidColoringError("no colors");
  std::vector<std::vector<int>> classes(k);
  for (int i = 0; i < n; ++i) {
    const int c = coloring.assignment[i];
    if (c < 0 || c >= k) throw InvalidColoringError("color out of range");
    classes[c].push_back(i);
  }
  for (const auto& cls : classes)
    if (cls.empty()) throw InvalidColoringError("unused color class");
  for (const auto& h : g.hyperedges())
    for (int a : h.in)
      for (int b : h.out)
        if (coloring.assignment[a] == coloring.assignment[b])
          throw InvalidColoringError(
              "anti-oriented pair shares a color class");

  std::vector<double> class_terms;
  for (const auto& cls : classes) {
    VertexSubset s(n, false);
    for (int i : cls) s[i] = true;
    std::vector<double> terms;
    for (const auto& h : g.hyperedges()) {
      int cnt = 0;
      for (int i : h.in) cnt += s[i];
      for (int i : h.out) cnt += s[i];
      if (cnt != 0) terms.push_back(pow_abs(cnt, p));
    }
    class_terms.push_back(pairwise_sum(terms) / g.volume(s));
  }
  const double middle = pairwise_sum(class_terms) / k;

  std::vector<BoundReport> out = {
      make_bound("signed_coloring.lower", lambda1, middle,
                 "chi=" + std::to_string(k), tol),
      make_bound("signed_coloring.upper", middle, lambda_n,
                 "chi=" + std::to_string(k), tol),
  };
  if (p == 1.0) {
    auto eq = make_bound("signed_coloring.p1_equality",
                         std::fabs(middle - 1.0), 0.0, "middle == 1", tol);
    out.push_back(std::move(eq));
  }
  return out;
}

/// Two-sided p = 2 bound from a (k,l)-family:
///   lambda_1 <= (k sum_r e(S_r) - l^2 e(∪S_r)) / ((k-l) l vol(∪S_r))
///            <= lambda_n.
inline std::vector<BoundReport> kl_family_bound(const OrientedHypergraph& g,
                                                const KLFamily& family,
                                                double lambda1,
                                                double lambda_n,
                                                double tol = 1e-8) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(family.sets.size());
  const int l = family.l;
  if (l < 1 || k <= 0) throw InvalidFamilyError("need k >= 1 and l >= 1");
  if (k == l) throw DegenerateError("k = l makes the bound degenerate");
  if (k < l) throw InvalidFamilyError("need k > l");

  VertexSubset uni(n, false);
  std::vector<int> cover(n, 0);
  for (const auto& s : family.sets) {
    if (static_cast<int>(s.size()) != n)
      throw InvalidFamilyError("set size does not match vertex count");
    for (int i = 0; i < n; ++i)
      if (s[i]) {
        uni[i] = true;
        ++cover[i];
      }
  }
  if (subset_size(uni) == 0) throw InvalidFamilyError("empty union");
  for (int i = 0; i < n; ++i)
    if (uni[i] && cover[i] != l)
      throw InvalidFamilyError("union is not covered exactly l times");

  std::vector<double> es;
  es.reserve(k);
  for (const auto& s : family.sets) es.push_back(e_p(g, s, 2.0));
  const double sum_e = pairwise_sum(es);
  const double ratio = (k * sum_e - static_cast<double>(l) * l *
                                        e_p(g, uni, 2.0)) /
                       ((k - l) * static_cast<double>(l) * g.volume(uni));
  const std::string witness =
      "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")";
  return {
      make_bound("kl_family.lower", lambda1, ratio, witness, tol),
      make_bound("kl_family.upper", ratio, lambda_n, witness, tol),
  };
}

// ---------------------------------------------------------------------------
// General t/c-parameterized partition bounds.

namespace detail {

inline void validate_partition(int ground, const Partition& part) {
  std::vector<int> seen(ground, 0);
  if (part.blocks.empty()) throw InvalidFamilyError("empty partition");
  for (const auto& b : part.blocks) {
    if (b.empty()) throw InvalidFamilyError("partition has an empty block");
    for (int i : b) {
      if (i < 0 || i >= ground) throw IndexError("partition index range");
      ++seen[i];
    }
  }
  for (int c : seen)
    if (c != 1) throw InvalidFamilyError("blocks must partition the set");
}

inline double partition_e_sum(const OrientedHypergraph& g, double p,
                              const Partition& part) {
  std::vector<double> es;
  es.reserve(part.blocks.size());
  for (const auto& b : part.blocks) {
    VertexSubset s(g.vertex_count(), false);
    for (int i : b) s[i] = true;
    es.push_back(e_p(g, s, p));
  }
  return pairwise_sum(es);
}

}  // namespace detail

/// Value of the lower estimate for lambda_n at parameters (t, c):
///   [c^{p-1} |t+1|^p sum_r e_p(V_r) - (c/(1-c))^{p-1} k e_p(V)]
///   / [vol(V) (|t|^p + k - 1)].
inline double general_partition_lambda_n_value(const OrientedHypergraph& g,
                                               double p,
                                               const Partition& part,
                                               double t, double c) {
  require_p_ge1(p);
  if (!(c > 0.0 && c < 1.0)) throw DomainError("c must lie in (0, 1)");
  detail::validate_partition(g.vertex_count(), part);
  const int k = static_cast<int>(part.blocks.size());
  const double sum_e = detail::partition_e_sum(g, p, part);
  const double ev = e_p(g, full_subset(g.vertex_count()), p);
  const double num = std::pow(c, p - 1.0) * pow_abs(t + 1.0, p) * sum_e -
                     std::pow(c / (1.0 - c), p - 1.0) * k * ev;
  return num / (g.volume() * (pow_abs(t, p) + k - 1));
}

/// Value of the upper estimate for lambda_1 at parameter t:
///   [|t+1|^p sum_r e_p(V_r) + k e_p(V)] / [vol(V) (|t|^p + k - 1)].
inline double general_partition_lambda_1_value(const OrientedHypergraph& g,
                                               double p,
                                               const Partition& part,
                                               double t) {
  require_p_ge1(p);
  detail::validate_partition(g.vertex_count(), part);
  const int k = static_cast<int>(part.blocks.size());
  const double sum_e = detail::partition_e_sum(g, p, part);
  const double ev = e_p(g, full_subset(g.vertex_count()), p);
  return (pow_abs(t + 1.0, p) * sum_e + k * ev) /
         (g.volume() * (pow_abs(t, p) + k - 1));
}

/// The (t, c) bound pair for one partition: a lower estimate for lambda_n
/// and an upper estimate for lambda_1.
inline std::vector<BoundReport> general_partition_bounds(
    const OrientedHypergraph& g, double p, const Partition& part, double t,
    double c, double lambda1, double lambda_n, double tol = 1e-8) {
  const double low = general_partition_lambda_n_value(g, p, part, t, c);
  const double up = general_partition_lambda_1_value(g, p, part, t);
  const std::string witness = "k=" + std::to_string(part.blocks.size()) +
                              ", t=" + std::to_string(t) +
                              ", c=" + std::to_string(c);
  return {
      make_bound("partition.lambda_n_lower", low, lambda_n, witness, tol),
      make_bound("partition.lambda_1_upper", lambda1, up, witness, tol),
  };
}

/// The standard specializations: (t, c) = (k-1, 1/2), (k-1, 1/k), (1, 1/2)
/// for the lambda_n estimate; t = -1 and the t -> infinity limit for the
/// lambda_1 estimate; and at p = 1 the two-sided sum e_1(V_r)/vol(V) form.
inline std::vector<BoundReport> partition_corollary_bounds(
    const OrientedHypergraph& g, double p, const Partition& part,
    double lambda1, double lambda_n, double tol = 1e-8) {
  detail::validate_partition(g.vertex_count(), part);
  const int k = static_cast<int>(part.blocks.size());
  std::vector<BoundReport> out;
  auto lower = [&](double t, double c, const std::string& tag) {
    const double v = general_partition_lambda_n_value(g, p, part, t, c);
    out.push_back(
        make_bound("partition.lambda_n_lower." + tag, v, lambda_n, tag, tol));
  };
  if (k >= 2) {
    lower(k - 1.0, 0.5, "t=k-1,c=1/2");
    lower(k - 1.0, 1.0 / k, "t=k-1,c=1/k");
  }
  lower(1.0, 0.5, "t=1,c=1/2");

  const double ev_ratio =
      e_p(g, full_subset(g.vertex_count()), p) / g.volume();
  out.push_back(make_bound("partition.lambda_1_upper.t=-1", lambda1,
                           ev_ratio, "e_p(V)/vol(V)", tol));
  const double sum_ratio = detail::partition_e_sum(g, p, part) / g.volume();
  out.push_back(make_bound("partition.lambda_1_upper.t=inf", lambda1,
                           sum_ratio, "sum e_p(V_r)/vol(V)", tol));
  if (p == 1.0) {
    out.push_back(make_bound("partition.p1.lambda_n_lower", sum_ratio,
                             lambda_n, "sum e_1(V_r)/vol(V)", tol));
    out.push_back(make_bound("partition.p1.lambda_1_upper", lambda1,
                             sum_ratio, "sum e_1(V_r)/vol(V)", tol));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hyperedge-side partition bounds.

/// Per-block sandwich mu_1 <= eta_p(H_i) <= mu_m plus the aggregated k-cut
/// chain for one hyperedge partition.
inline std::vector<BoundReport> hyperedge_cut_bounds(
    const OrientedHypergraph& g, double p, const Partition& hpart,
    double mu1, double mu_m, double tol = 1e-8) {
  detail::validate_partition(g.hyperedge_count(), hpart);
  const int k = static_cast<int>(hpart.blocks.size());
  std::vector<BoundReport> out;
  std::vector<double> etas, es;
  for (const auto& b : hpart.blocks) {
    HyperedgeSubset s(g.hyperedge_count(), false);
    for (int h : b) s[h] = true;
    const double eta = eta_p(g, s, p);
    etas.push_back(eta);
    es.push_back(e_p_hyperedges(g, s, p));
    out.push_back(make_bound("eta.lower", mu1, eta, "block eta_p", tol));
    out.push_back(make_bound("eta.upper", eta, mu_m, "block eta_p", tol));
  }
  const double avg_eta = pairwise_sum(etas) / k;
  const double avg_e = pairwise_sum(es) / (k * g.hyperedge_count());
  out.push_back(
      make_bound("hyperedge_cut.avg_eta.upper", avg_eta, mu_m, "", tol));
  out.push_back(
      make_bound("hyperedge_cut.avg_eta.lower", mu1, avg_eta, "", tol));
  out.push_back(
      make_bound("hyperedge_cut.chain", avg_e, avg_eta, "", tol));
  return out;
}

/// A hyperedge subset is bipartite when some reorientation makes every
/// vertex always-input or always-output; equivalently the flip variables
/// admit a consistent parity assignment.
inline bool is_bipartite_subhypergraph(const OrientedHypergraph& g,
                                       const HyperedgeSubset& hs) {
  detail::ParityDsu dsu(g.hyperedge_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    const auto& inc = g.incident(i);
    int first = -1, first_sign = 0;
    for (auto [h, sgn] : inc) {
      if (!hs[h]) continue;
      if (first < 0) {
        first = h;
        first_sign = sgn;
        continue;
      }
      if (!dsu.unite(first, h, sgn != first_sign ? 1 : 0)) return false;
    }
  }
  return true;
}

struct EtaMaxResult {
  double value = 0.0;
  HyperedgeSubset subset;
  bool heuristic = false;
};

namespace detail {

/// eta_p of a bipartite subset in its canonical reorientation (every vertex
/// single-signed): sum_i deg_restricted(i)^p / deg(i), divided by the
/// subset size. Maximal over reorientations, and what the spectral bound
/// compares against.
inline double bipartite_eta(const OrientedHypergraph& g,
                            const HyperedgeSubset& hs, double p, int count) {
  std::vector<double> terms;
  for (int i = 0; i < g.vertex_count(); ++i) {
    int d = 0;
    for (auto [h, sgn] : g.incident(i))
      if (hs[h]) ++d;
    if (d != 0) terms.push_back(pow_abs(d, p) / g.degree(i));
  }
  return pairwise_sum(terms) / count;
}

}  // namespace detail

/// Maximum of eta_p over bipartite sub-hypergraphs. Exhaustive over all
/// nonempty subsets up to exact_limit hyperedges; greedy growth above.
inline EtaMaxResult bipartite_eta_max(const OrientedHypergraph& g, double p,
                                      bool allow_heuristic = false,
                                      int exact_limit = 15) {
  require_p_ge1(p);
  const int m = g.hyperedge_count();
  EtaMaxResult best;
  best.value = -std::numeric_limits<double>::infinity();

  if (m <= exact_limit) {
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
      HyperedgeSubset s(m, false);
      int count = 0;
      for (int h = 0; h < m; ++h)
        if (mask >> h & 1u) {
          s[h] = true;
          ++count;
        }
      if (!is_bipartite_subhypergraph(g, s)) continue;
      const double v = detail::bipartite_eta(g, s, p, count);
      if (v > best.value) {
        best.value = v;
        best.subset = s;
      }
    }
    return best;
  }

  if (!allow_heuristic)
    throw SizeLimitError("bipartite_eta_max: exact mode limited to m <= " +
                         std::to_string(exact_limit));

  // Greedy: best singleton, then grow while bipartite and improving.
  HyperedgeSubset s(m, false);
  int seed = 0;
  double seed_val = -std::numeric_limits<double>::infinity();
  for (int h = 0; h < m; ++h) {
    HyperedgeSubset t(m, false);
    t[h] = true;
    const double v = detail::bipartite_eta(g, t, p, 1);
    if (v > seed_val) {
      seed_val = v;
      seed = h;
    }
  }
  s[seed] = true;
  int count = 1;
  double cur = seed_val;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int h = 0; h < m; ++h) {
      if (s[h]) continue;
      s[h] = true;
      if (is_bipartite_subhypergraph(g, s)) {
        const double v = detail::bipartite_eta(g, s, p, count + 1);
        if (v > cur) {
          cur = v;
          ++count;
          improved = true;
          continue;
        }
      }
      s[h] = false;
    }
  }
  best.value = cur;
  best.subset = s;
  best.heuristic = true;
  return best;
}

}  // namespace hyplap
