#pragma once

#include <string>

namespace hyplap {

/// One checked inequality: holds iff lhs <= rhs + tolerance.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string witness;
  bool holds = false;
  double tolerance = 1e-8;
  bool informational = false;  // reported but not asserted (e.g. p != 2
                               // multiplicities are only lower bounds)
};

inline BoundReport make_bound(std::string name, double lhs, double rhs,
                              std::string witness, double tolerance = 1e-8) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.witness = std::move(witness);
  r.tolerance = tolerance;
  r.holds = lhs <= rhs + tolerance;
  return r;
}

}  // namespace hyplap
