#pragma once

// The bijection between M-angulations and m-Dyck vectors.  phi reads the
// exponent vector of LM(P_Q); psi builds a dissection fan by fan.

#include <vector>

#include "mang/dissection.hpp"
#include "mang/dyck.hpp"

namespace mang {

/// Exponent vector of the leading monomial of P_Q.  Throws NotDyck if the
/// result fails the Dyck test.
MVector phi(const Dissection& q);

/// One fan added while building psi(v).
struct FanStep {
  int position = 0;       // 1-based entry of v
  int end = 0;            // common ending vertex
  std::vector<int> starts;  // clockwise from the end, i.e. decreasing
  int visible_before_first_start = 0;
};

/// psi(v), optionally recording each fan.  Throws ConstructionStuck when a
/// fan cannot find enough starting vertices (this happens on non-Dyck input),
/// and InvalidArgument when v is not an m-vector.
Dissection psi(const MVector& v, std::vector<FanStep>* trace = nullptr);

}  // namespace mang
