// Three-qubit pure states and single-qubit unitaries.
//
// Amplitudes are indexed by the basis label l = 4i + 2j + k for |ijk>,
// qubit A leftmost. All types are immutable values; all operations are
// pure functions.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace stuq {

using Complex = std::complex<double>;

enum class Qubit { A, B, C };

inline char qubit_name(Qubit q) {
  switch (q) {
    case Qubit::A: return 'A';
    case Qubit::B: return 'B';
    case Qubit::C: return 'C';
  }
  return '?';
}

// Pure state of three qubits, 8 complex amplitudes a_0..a_7.
class PureState3Q {
 public:
  PureState3Q() : amp_{} {}

  explicit PureState3Q(const std::array<Complex, 8>& amplitudes) : amp_(amplitudes) {}

  explicit PureState3Q(const std::array<std::int64_t, 8>& amplitudes) {
    for (int l = 0; l < 8; ++l) amp_[l] = Complex(static_cast<double>(amplitudes[l]), 0.0);
  }

  static PureState3Q basis(unsigned label) {
    if (label > 7) throw std::out_of_range("basis label must be in 0..7");
    PureState3Q s;
    s.amp_[label] = Complex(1.0, 0.0);
    return s;
  }

  const std::array<Complex, 8>& amplitudes() const { return amp_; }
  const Complex& operator[](std::size_t l) const { return amp_.at(l); }

  double norm() const {
    double n2 = 0.0;
    for (const auto& a : amp_) n2 += std::norm(a);
    return std::sqrt(n2);
  }

  PureState3Q normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw std::invalid_argument("cannot normalize the zero state");
    PureState3Q s(*this);
    for (auto& a : s.amp_) a /= n;
    return s;
  }

 private:
  std::array<Complex, 8> amp_;
};

inline double state_norm(const PureState3Q& s) { return s.norm(); }

// A 2x2 unitary tagged with the qubit it acts on.
struct LocalUnitary {
  std::array<std::array<Complex, 2>, 2> m{};  // m[row][col]
  Qubit qubit = Qubit::A;

  // max-entry deviation of U^dagger U from the identity
  double unitarity_defect() const {
    double worst = 0.0;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        Complex e = std::conj(m[0][r]) * m[0][c] + std::conj(m[1][r]) * m[1][c];
        if (r == c) e -= 1.0;
        worst = std::max(worst, std::abs(e));
      }
    return worst;
  }

  bool is_unitary(double tol) const { return unitarity_defect() <= tol; }

  static LocalUnitary identity(Qubit q) {
    return {{{{Complex(1, 0), Complex(0, 0)}, {Complex(0, 0), Complex(1, 0)}}}, q};
  }

  static LocalUnitary hadamard(Qubit q) {
    const double h = 1.0 / std::sqrt(2.0);
    return {{{{Complex(h, 0), Complex(h, 0)}, {Complex(h, 0), Complex(-h, 0)}}}, q};
  }

  // diag(1, e^{i angle})
  static LocalUnitary phase_diag(Qubit q, double angle) {
    return {{{{Complex(1, 0), Complex(0, 0)}, {Complex(0, 0), std::polar(1.0, angle)}}}, q};
  }

  // this * other (composition on the same qubit)
  LocalUnitary compose(const LocalUnitary& other) const {
    if (qubit != other.qubit)
      throw std::invalid_argument("cannot compose unitaries acting on different qubits");
    LocalUnitary r;
    r.qubit = qubit;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = m[i][0] * other.m[0][j] + m[i][1] * other.m[1][j];
    return r;
  }
};

// (U^A x U^B x U^C)|s>. Operators must be tagged A, B, C in that order and
// pass the unitarity check at 1e-10.
PureState3Q apply_local_unitaries(const PureState3Q& s, const LocalUnitary& uA,
                                  const LocalUnitary& uB, const LocalUnitary& uC);

}  // namespace stuq
