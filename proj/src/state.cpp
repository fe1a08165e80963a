#include "stuq/state.hpp"

#include <string>

namespace stuq {

namespace {

constexpr double kUnitarityGate = 1e-10;

// In-place action of a 2x2 matrix on the qubit selected by bit.
void apply_single(std::array<Complex, 8>& amp, const LocalUnitary& u, unsigned bit) {
  for (unsigned l = 0; l < 8; ++l) {
    if (l & bit) continue;
    const unsigned l0 = l;        // bit clear
    const unsigned l1 = l | bit;  // bit set
    const Complex a0 = amp[l0];
    const Complex a1 = amp[l1];
    amp[l0] = u.m[0][0] * a0 + u.m[0][1] * a1;
    amp[l1] = u.m[1][0] * a0 + u.m[1][1] * a1;
  }
}

void require_unitary(const LocalUnitary& u, Qubit expected) {
  if (u.qubit != expected)
    throw std::invalid_argument(std::string("operator tagged ") + qubit_name(u.qubit) +
                                " passed in the slot of qubit " + qubit_name(expected));
  const double defect = u.unitarity_defect();
  if (defect > kUnitarityGate)
    throw std::invalid_argument(std::string("operator on qubit ") + qubit_name(expected) +
                                " is not unitary (defect " + std::to_string(defect) + ")");
}

}  // namespace

PureState3Q apply_local_unitaries(const PureState3Q& s, const LocalUnitary& uA,
                                  const LocalUnitary& uB, const LocalUnitary& uC) {
  require_unitary(uA, Qubit::A);
  require_unitary(uB, Qubit::B);
  require_unitary(uC, Qubit::C);

  std::array<Complex, 8> amp = s.amplitudes();
  apply_single(amp, uA, 4u);
  apply_single(amp, uB, 2u);
  apply_single(amp, uC, 1u);
  return PureState3Q(amp);
}

}  // namespace stuq
