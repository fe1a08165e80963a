// Closed-form Schmidt decomposition of charge states.
//
// A charge vector maps to the three-qubit state
//     -p1|001> - p2|010> - p3|100> + q0|111>
// which is carried to the canonical form
//     l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>
// by one explicit 2x2 unitary per qubit followed by diagonal phase
// unitaries. Both sign branches (p1*p2*p3*q0 < 0 and > 0) are covered
// by closed forms; all zero-pattern decisions are exact integer tests.

#pragma once

#include <array>
#include <cstdint>

#include "stuq/charges.hpp"
#include "stuq/state.hpp"

namespace stuq {

// Canonical (Acin) form of a normalized three-qubit state.
//
// lambda are the five non-negative coefficients, phi in [0, 2pi) the phase
// on the |100> component, norm_factor the original state's norm (1/mu), so
// the unnormalized coefficients are lambda[j] * norm_factor.
//
// The *_zero flags record the exact integer zero pattern of lambda1..3 for
// charge-derived forms; j1_zero records whether the LU invariant
// J1 = |l1 l4 e^{i phi} - l2 l3|^2 vanishes exactly.
struct SchmidtForm {
  std::array<double, 5> lambda{};
  double phi = 0.0;
  double norm_factor = 1.0;

  bool lambda1_zero = false;
  bool lambda2_zero = false;
  bool lambda3_zero = false;
  bool j1_zero = false;
};

// Scratch state of the decomposition: branch data, the pre-phase
// coefficients eta_0..eta_4 (rho_0..rho_4 on the BPS branch) with their
// phases theta_1..theta_4 (omega_j), and the diagonal phase angles that
// finish the canonicalization.
//
// Phases are exact quarter-turn multiples of pi/2 derived from integer
// signs; theta()/phase_angles() expose them as radians.
struct SdIntermediates {
  bool bps = false;  // branch: p1*p2*p3*q0 > 0

  Complex t;   // real (non-BPS) or purely imaginary (BPS)
  Complex k;   // t*p2/p3
  double a = 0.0;
  Complex b;
  double chi = 0.0;

  std::array<Complex, 5> eta{};         // eta_0 real > 0
  std::array<int, 4> theta_quarters{};  // theta_1..theta_4 in units of pi/2

  bool eta1_zero = false;  // (p1)^2+(p2)^2-(p3)^2-(q0)^2 == 0
  bool eta2_zero = false;  // |p1*p3| == |p2*q0|
  bool eta3_zero = false;  // |p2*p3| == |p1*q0|
  bool j1_zero = false;

  std::array<int, 3> phase_quarters{};  // final diagonal angles (A,B,C) in pi/2 units

  double theta(int j) const;                  // j = 1..4, radians
  std::array<double, 3> phase_angles() const;  // radians
};

// Unitary triple from the closed-form construction plus its scratch data.
struct SdStep {
  LocalUnitary uA, uB, uC;
  SdIntermediates inter;
};

// Charge state  -p1|001> - p2|010> - p3|100> + q0|111>.
PureState3Q charges_to_state(const ChargeVector& c);

// Exact integer amplitudes of the eight-charge state under the standard
// charge<->coefficient dictionary:
//   a0=p0, a1=-p1, a2=-p2, a3=q3, a4=-p3, a5=q2, a6=q1, a7=q0.
std::array<std::int64_t, 8> charge_amplitudes(const FullChargeVector& c);

// Branch-dispatched closed-form unitaries U^A, U^B, U^C (or W^A..W^C).
// Each is unitary to ~1e-15. Fills t, k, a, b, chi.
SdStep build_sd_unitaries(const ChargeVector& c);

// Fills eta/theta and the exact zero flags, then cross-checks the closed
// forms against direct matrix application of the unitaries; a mismatch
// beyond 1e-10 throws std::logic_error.
void eta_coefficients(const ChargeVector& c, SdStep& step);

// Collapses the eta phases into the canonical form. lambda_j = |eta_j|/norm;
// phi = theta_1 - theta_2 - theta_3 + theta_4 reduced to [0, 2pi), fixed to 0
// whenever any of eta_1..eta_3 vanishes (the phase is then pure convention,
// removable by diagonal unitaries). Also selects the diagonal phase angles
// realizing the step.
SchmidtForm phase_canonicalize(SdIntermediates& inter, double norm);

// Full pipeline with the materialized LU chain: total = D_phase * U per
// qubit carries the charge state exactly onto the canonical amplitudes
// (verified internally to 1e-10 * norm).
struct SchmidtDecomposition {
  SchmidtForm form;
  SdStep step;
  std::array<LocalUnitary, 3> total;
};

SchmidtDecomposition schmidt_decompose_full(const ChargeVector& c);

// Canonical form only. Depends only on the four charge magnitudes.
SchmidtForm schmidt_decompose(const ChargeVector& c);

}  // namespace stuq
