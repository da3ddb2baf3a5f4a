// Shared basics: error types, scalar helpers, deterministic summation.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyplap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverlapError : public Error { public: using Error::Error; };
class IsolatedVertexError : public Error { public: using Error::Error; };
class IndexError : public Error { public: using Error::Error; };
class DimensionError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class ZeroFunctionError : public Error { public: using Error::Error; };
class SizeLimitError : public Error { public: using Error::Error; };
class NotInputsOnlyError : public Error { public: using Error::Error; };
class InvalidColoringError : public Error { public: using Error::Error; };
class InvalidFamilyError : public Error { public: using Error::Error; };
class DegenerateError : public Error { public: using Error::Error; };
class EmptySubsetError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

/// Real-valued function on the vertex set, indexed 0..n-1.
using VertexFunction = std::vector<double>;
/// Real-valued function on the hyperedge set, indexed 0..m-1.
using HyperedgeFunction = std::vector<double>;

using VertexSubset = std::vector<bool>;
using HyperedgeSubset = std::vector<bool>;

enum class Side { vertex, hyperedge };

inline const char* side_name(Side s) {
  return s == Side::vertex ? "vertex" : "hyperedge";
}

/// |t|^p with exact fast paths for p = 1 and p = 2.
inline double pow_abs(double t, double p) {
  if (p == 1.0) return std::fabs(t);
  if (p == 2.0) return t * t;
  return std::pow(std::fabs(t), p);
}

/// |t|^{p-2} t, defined as 0 at t = 0 for every p. Computed as
/// |t|^{p-1} sign(t) so no intermediate overflows for p < 2.
inline double signed_pow(double t, double p) {
  if (t == 0.0) return 0.0;
  if (p == 2.0) return t;
  if (p == 1.0) return t > 0 ? 1.0 : -1.0;
  const double m = std::pow(std::fabs(t), p - 1.0);
  return t > 0 ? m : -m;
}

inline int sign_of(double t) { return t > 0 ? 1 : (t < 0 ? -1 : 0); }

/// Pairwise summation: deterministic, order-fixed, and accurate enough that
/// results are reproducible to ~1e-12 independently of chunking.
inline double pairwise_sum(const double* a, std::size_t k) {
  if (k <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += a[i];
    return s;
  }
  const std::size_t half = k / 2;
  return pairwise_sum(a, half) + pairwise_sum(a + half, k - half);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v.data(), v.size());
}

inline double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

inline bool is_zero_function(const std::vector<double>& v) {
  return inf_norm(v) == 0.0;
}

inline void require_p_ge1(double p) {
  if (!(p >= 1.0)) throw DomainError("p must satisfy p >= 1");
}

inline void require_p_gt1(double p) {
  if (!(p > 1.0)) throw DomainError("p must satisfy p > 1");
}

/// FNV-1a 64-bit content hash, used for input digests in reports.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  return fnv1a64(s.data(), s.size());
}

}  // namespace hyplap
