// Oriented-hypergraph data model: incidence structure, degrees, volumes,
// restriction to vertex subsets, connectivity, and structure-preserving
// transforms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hyplap/common.hpp"

namespace hyplap {

/// One oriented hyperedge: a pair of disjoint vertex-index sets. Either side
/// may be empty, but not both.
struct Hyperedge {
  std::vector<int> in;
  std::vector<int> out;
};

/// Immutable oriented hypergraph on n vertices. Hyperedges are an ordered
/// list and duplicates are allowed; every vertex must be incident to at
/// least one hyperedge.
class OrientedHypergraph {
 public:
  OrientedHypergraph(int n, std::vector<Hyperedge> hyperedges,
                     std::vector<std::string> labels = {})
      : n_(n), hs_(std::move(hyperedges)), labels_(std::move(labels)) {
    if (n_ <= 0) throw IndexError("vertex count must be positive");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
      throw DimensionError("label count does not match vertex count");
    for (auto& h : hs_) {
      normalize(h.in);
      normalize(h.out);
    }
    validate();
    build_index();
  }

  int vertex_count() const { return n_; }
  int hyperedge_count() const { return static_cast<int>(hs_.size()); }

  const Hyperedge& hyperedge(int h) const {
    check_hyperedge(h);
    return hs_[h];
  }
  const std::vector<Hyperedge>& hyperedges() const { return hs_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Number of hyperedges incident to vertex i. Inputs and outputs of a
  /// hyperedge are disjoint, so plain incidence counting suffices.
  int degree(int i) const {
    check_vertex(i);
    return degree_[i];
  }

  /// |h_in| + |h_out|.
  int cardinality(int h) const {
    check_hyperedge(h);
    return static_cast<int>(hs_[h].in.size() + hs_[h].out.size());
  }

  /// +1 if i is an input of h, -1 if an output, 0 otherwise.
  int incidence_sign(int i, int h) const {
    check_vertex(i);
    check_hyperedge(h);
    return sign_[static_cast<std::size_t>(i) * hs_.size() + h];
  }

  /// Incident hyperedges of a vertex as (hyperedge index, incidence sign).
  const std::vector<std::pair<int, int>>& incident(int i) const {
    check_vertex(i);
    return incident_[i];
  }

  /// Sum of degrees over S; volume of the empty set is 0.
  double volume(const VertexSubset& S) const {
    if (static_cast<int>(S.size()) != n_)
      throw DimensionError("subset size does not match vertex count");
    double v = 0.0;
    for (int i = 0; i < n_; ++i)
      if (S[i]) v += degree_[i];
    return v;
  }

  double volume() const {
    return std::accumulate(degree_.begin(), degree_.end(), 0.0);
  }

  /// True when every hyperedge has an empty output set.
  bool inputs_only() const {
    for (const auto& h : hs_)
      if (!h.out.empty()) return false;
    return true;
  }

 private:
  static void normalize(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  void check_vertex(int i) const {
    if (i < 0 || i >= n_) throw IndexError("vertex index out of range");
  }
  void check_hyperedge(int h) const {
    if (h < 0 || h >= static_cast<int>(hs_.size()))
      throw IndexError("hyperedge index out of range");
  }

  void validate() const {
    for (std::size_t h = 0; h < hs_.size(); ++h) {
      const auto& e = hs_[h];
      if (e.in.empty() && e.out.empty())
        throw IndexError("hyperedge " + std::to_string(h) + " is empty");
      for (int i : e.in)
        if (i < 0 || i >= n_)
          throw IndexError("hyperedge " + std::to_string(h) +
                           " has a vertex index out of range");
      for (int i : e.out)
        if (i < 0 || i >= n_)
          throw IndexError("hyperedge " + std::to_string(h) +
                           " has a vertex index out of range");
      std::vector<int> both;
      std::set_intersection(e.in.begin(), e.in.end(), e.out.begin(),
                            e.out.end(), std::back_inserter(both));
      if (!both.empty())
        throw OverlapError("hyperedge " + std::to_string(h) +
                           " has overlapping input and output sets");
    }
  }

  void build_index() {
    degree_.assign(n_, 0);
    incident_.assign(n_, {});
    sign_.assign(static_cast<std::size_t>(n_) * hs_.size(), 0);
    for (std::size_t h = 0; h < hs_.size(); ++h) {
      for (int i : hs_[h].in) {
        ++degree_[i];
        incident_[i].emplace_back(static_cast<int>(h), +1);
        sign_[static_cast<std::size_t>(i) * hs_.size() + h] = +1;
      }
      for (int i : hs_[h].out) {
        ++degree_[i];
        incident_[i].emplace_back(static_cast<int>(h), -1);
        sign_[static_cast<std::size_t>(i) * hs_.size() + h] = -1;
      }
    }
    for (int i = 0; i < n_; ++i)
      if (degree_[i] == 0)
        throw IsolatedVertexError("vertex " + std::to_string(i) +
                                  " has degree zero");
  }

  int n_;
  std::vector<Hyperedge> hs_;
  std::vector<std::string> labels_;
  std::vector<int> degree_;
  std::vector<std::vector<std::pair<int, int>>> incident_;
  std::vector<std::int8_t> sign_;
};

/// n x m matrix with entry(i,h) in {+1,-1,0}; column h is the incidence
/// function of hyperedge h, row i the incidence function of vertex i.
struct IncidenceMatrix {
  int n = 0;
  int m = 0;
  std::vector<std::int8_t> entries;  // row-major

  int entry(int i, int h) const {
    return entries[static_cast<std::size_t>(i) * m + h];
  }
  int row_nonzeros(int i) const {
    int c = 0;
    for (int h = 0; h < m; ++h)
      if (entry(i, h) != 0) ++c;
    return c;
  }
  int col_nonzeros(int h) const {
    int c = 0;
    for (int i = 0; i < n; ++i)
      if (entry(i, h) != 0) ++c;
    return c;
  }
};

inline IncidenceMatrix incidence_matrix(const OrientedHypergraph& g) {
  IncidenceMatrix M;
  M.n = g.vertex_count();
  M.m = g.hyperedge_count();
  M.entries.assign(static_cast<std::size_t>(M.n) * M.m, 0);
  for (int h = 0; h < M.m; ++h) {
    for (int i : g.hyperedge(h).in)
      M.entries[static_cast<std::size_t>(i) * M.m + h] = +1;
    for (int i : g.hyperedge(h).out)
      M.entries[static_cast<std::size_t>(i) * M.m + h] = -1;
  }
  return M;
}

inline VertexSubset subset_of(int n, std::initializer_list<int> idx) {
  VertexSubset s(n, false);
  for (int i : idx) s[i] = true;
  return s;
}

inline VertexSubset subset_from_mask(int n, std::uint64_t mask) {
  VertexSubset s(n, false);
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) s[i] = true;
  return s;
}

inline VertexSubset full_subset(int n) { return VertexSubset(n, true); }

inline int subset_size(const VertexSubset& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), true));
}

/// Hyperedges restricted to S: (h_in ∩ S, h_out ∩ S), dropping hyperedges
/// that become empty. Used for nodal domains and sub-hypergraph bounds.
inline std::vector<Hyperedge> restrict_to(const OrientedHypergraph& g,
                                          const VertexSubset& S) {
  if (static_cast<int>(S.size()) != g.vertex_count())
    throw DimensionError("subset size does not match vertex count");
  std::vector<Hyperedge> out;
  for (const auto& h : g.hyperedges()) {
    Hyperedge r;
    for (int i : h.in)
      if (S[i]) r.in.push_back(i);
    for (int i : h.out)
      if (S[i]) r.out.push_back(i);
    if (!r.in.empty() || !r.out.empty()) out.push_back(std::move(r));
  }
  return out;
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Connected components of the vertices covered by a hyperedge collection.
/// Two vertices are connected iff linked by a chain of hyperedges; the
/// orientation plays no role. Components are sorted vertex lists, ordered
/// by smallest member.
inline std::vector<std::vector<int>> connected_components(
    int n, const std::vector<Hyperedge>& edges) {
  detail::UnionFind uf(n);
  std::vector<bool> covered(n, false);
  for (const auto& h : edges) {
    int anchor = -1;
    auto touch = [&](int i) {
      covered[i] = true;
      if (anchor < 0)
        anchor = i;
      else
        uf.unite(anchor, i);
    };
    for (int i : h.in) touch(i);
    for (int i : h.out) touch(i);
  }
  std::vector<std::vector<int>> by_root(n);
  for (int i = 0; i < n; ++i)
    if (covered[i]) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> comps;
  for (auto& c : by_root)
    if (!c.empty()) comps.push_back(std::move(c));
  return comps;
}

/// Swap input and output sets of the selected hyperedges (all by default).
/// Every spectral quantity is invariant under this transform.
inline OrientedHypergraph reverse_orientation(
    const OrientedHypergraph& g, const HyperedgeSubset* which = nullptr) {
  std::vector<Hyperedge> hs = g.hyperedges();
  for (std::size_t h = 0; h < hs.size(); ++h)
    if (which == nullptr || (*which)[h]) std::swap(hs[h].in, hs[h].out);
  return OrientedHypergraph(g.vertex_count(), std::move(hs), g.labels());
}

/// Rename vertices: perm[i] is the new index of old vertex i.
inline OrientedHypergraph relabel(const OrientedHypergraph& g,
                                  const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw DimensionError("permutation size does not match vertex count");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw IndexError("not a permutation");
    seen[p] = true;
  }
  std::vector<Hyperedge> hs = g.hyperedges();
  for (auto& h : hs) {
    for (int& i : h.in) i = perm[i];
    for (int& i : h.out) i = perm[i];
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[perm[i]] = g.labels()[i];
  }
  return OrientedHypergraph(n, std::move(hs), std::move(labels));
}

/// Append a second copy of the whole hyperedge list. Degrees double, so the
/// vertex-side Rayleigh quotients are unchanged.
inline OrientedHypergraph duplicate_hyperedges(const OrientedHypergraph& g) {
  std::vector<Hyperedge> hs = g.hyperedges();
  auto copy = g.hyperedges();
  hs.insert(hs.end(), copy.begin(), copy.end());
  return OrientedHypergraph(g.vertex_count(), std::move(hs), g.labels());
}

}  // namespace hyplap
