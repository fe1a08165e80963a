// Scalar invariants: the quartic charge invariant Delta, Cayley's
// hyperdeterminant, the 3-tangle, the entropy of the four-charge black
// hole, and the LU invariants J1..J3 (plus the J4 cross-check).
//
// Delta and the hyperdeterminant have exact integer paths; classification
// never relies on floating point.

#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "stuq/charges.hpp"
#include "stuq/schmidt.hpp"
#include "stuq/state.hpp"

namespace stuq {

// Quartic invariant of the eight-charge configuration:
//   Delta = (p0 q0 + p1 q1 + p2 q2 - p3 q3)^2
//           + 4 (p0 q3 - p1 p2)(p3 q0 + q2 q1).
// Exact; throws std::overflow_error if the value exceeds int64.
std::int64_t delta(const FullChargeVector& c);

// Cayley's hyperdeterminant
//   det = (a0 a7 - a1 a6 - a2 a5 + a3 a4)^2 - 4 (a0 a3 - a1 a2)(a4 a7 - a5 a6)
// on exact integer amplitudes (|a| <= 2^30). Throws std::overflow_error if
// the value exceeds int64.
std::int64_t cayley_hyperdet(const std::array<std::int64_t, 8>& a);

// Floating-point hyperdeterminant of an arbitrary state (real for real
// states).
Complex cayley_hyperdet(const PureState3Q& s);

// 3-tangle tau = 4 |det|; requires a normalized state (norm within 1e-9
// of 1), result in [0, 1].
double three_tangle(const PureState3Q& s);

// Entropy of the four-charge black hole,
//   S = (pi/2) sqrt(4 |det(charge state)|) = 2 pi sqrt(|p1 p2 p3 q0|).
double entropy(const ChargeVector& c);

// LU invariants of the canonical form:
//   J1 = |l1 l4 e^{i phi} - l2 l3|^2,  J2 = (l0 l2)^2,  J3 = (l0 l3)^2,
// and the cross-check J4 = (l0 l4)^2 (= |det| of the normalized state).
struct InvariantTriple {
  double j1 = 0.0;
  double j2 = 0.0;
  double j3 = 0.0;
  double j4 = 0.0;
};

InvariantTriple acin_invariants(const SchmidtForm& f);

}  // namespace stuq
