#include "stuq/schmidt.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stuq {

namespace {

constexpr double kCrossCheckTol = 1e-10;

double quarters_to_radians(int q) { return static_cast<double>(q) * (std::numbers::pi / 2.0); }

// Branch-dependent integer factors driving the eta coefficients. Exact:
// charges are capped so products and the balance D never overflow.
struct IntFactors {
  std::int64_t d;   // (p1)^2 + (p2)^2 - (p3)^2 - (q0)^2
  std::int64_t f2;  // p1*p3 +- p2*q0
  std::int64_t f3;  // p2*p3 +- p1*q0
  std::int64_t f4;  // p1*p2 -+ p3*q0   (never 0 within the branch)
};

IntFactors integer_factors(const ChargeVector& c, bool bps) {
  const std::int64_t p1 = c.p1(), p2 = c.p2(), p3 = c.p3(), q0 = c.q0();
  IntFactors f{};
  f.d = p1 * p1 + p2 * p2 - p3 * p3 - q0 * q0;
  if (bps) {
    f.f2 = p1 * p3 - p2 * q0;
    f.f3 = p2 * p3 - p1 * q0;
    f.f4 = p1 * p2 + p3 * q0;
  } else {
    f.f2 = p1 * p3 + p2 * q0;
    f.f3 = p2 * p3 + p1 * q0;
    f.f4 = p1 * p2 - p3 * q0;
  }
  return f;
}

int wrap_quarters(int q) {
  int r = q % 4;
  return r < 0 ? r + 4 : r;
}

}  // namespace

double SdIntermediates::theta(int j) const {
  if (j < 1 || j > 4) throw std::out_of_range("theta index must be 1..4");
  return quarters_to_radians(theta_quarters[j - 1]);
}

std::array<double, 3> SdIntermediates::phase_angles() const {
  return {quarters_to_radians(phase_quarters[0]), quarters_to_radians(phase_quarters[1]),
          quarters_to_radians(phase_quarters[2])};
}

PureState3Q charges_to_state(const ChargeVector& c) {
  std::array<std::int64_t, 8> a{};
  a[1] = -c.p1();
  a[2] = -c.p2();
  a[4] = -c.p3();
  a[7] = c.q0();
  return PureState3Q(a);
}

std::array<std::int64_t, 8> charge_amplitudes(const FullChargeVector& c) {
  std::array<std::int64_t, 8> a{};
  a[0] = c.p(0);
  a[1] = -c.p(1);
  a[2] = -c.p(2);
  a[3] = c.q(3);
  a[4] = -c.p(3);
  a[5] = c.q(2);
  a[6] = c.q(1);
  a[7] = c.q(0);
  return a;
}

SdStep build_sd_unitaries(const ChargeVector& c) {
  SdStep step;
  SdIntermediates& it = step.inter;
  it.bps = c.is_bps();

  const double p1 = static_cast<double>(c.p1());
  const double p3 = static_cast<double>(c.p3());

  // |t|^2 = |p3 q0| / |p1 p2| from exact integer products.
  const std::int64_t g = std::abs(c.p3() * c.q0());
  const std::int64_t m = std::abs(c.p1() * c.p2());
  const double t_abs = std::sqrt(static_cast<double>(g) / static_cast<double>(m));

  // t solves t^2 = -p3 q0 / (p1 p2): real on the non-BPS branch, purely
  // imaginary on the BPS branch.
  it.t = it.bps ? Complex(0.0, t_abs) : Complex(t_abs, 0.0);
  it.k = it.t * (static_cast<double>(c.p2()) / p3);

  const double s = std::sqrt(t_abs * t_abs + 1.0);
  it.a = -p3 / s;
  it.b = -it.t * p1 / s;

  const double ab = std::hypot(it.a, std::abs(it.b));   // sqrt(a^2 + |b|^2)
  const double kk = std::hypot(1.0, std::abs(it.k));    // sqrt(|k|^2 + 1)
  it.chi = 1.0 / (kk * ab * (t_abs * t_abs + 1.0));

  const Complex tc = it.t;
  const Complex kc = it.k;

  step.uA.qubit = Qubit::A;
  step.uA.m = {{{tc / s, Complex(1.0 / s, 0)}, {Complex(1.0 / s, 0), -std::conj(tc) / s}}};

  step.uB.qubit = Qubit::B;
  step.uB.m = {{{Complex(1.0 / kk, 0), std::conj(kc) / kk},
                {kc / kk, Complex(-1.0 / kk, 0)}}};

  // Bottom-right entry is +p3 on the non-BPS branch and -p3 on the BPS one.
  const double cden = ab * s;
  const Complex off = -std::conj(tc) * p1 / cden;
  step.uC.qubit = Qubit::C;
  step.uC.m = {{{Complex(-p3 / cden, 0), off},
                {off, Complex((it.bps ? -p3 : p3) / cden, 0)}}};

  return step;
}

void eta_coefficients(const ChargeVector& c, SdStep& step) {
  SdIntermediates& it = step.inter;
  const IntFactors f = integer_factors(c, it.bps);

  it.eta1_zero = (f.d == 0);
  it.eta2_zero = (f.f2 == 0);
  it.eta3_zero = (f.f3 == 0);

  const double t_abs = std::abs(it.t);
  const double tt1 = t_abs * t_abs + 1.0;
  const double ab = std::hypot(it.a, std::abs(it.b));
  const double kk = std::hypot(1.0, std::abs(it.k));
  const double chi = it.chi;

  it.eta[0] = Complex(ab * kk, 0.0);
  if (it.bps) {
    it.eta[1] = chi * std::conj(it.t) * static_cast<double>(f.d);
    it.eta[2] = Complex(chi * tt1 * static_cast<double>(f.f2), 0.0);
    it.eta[3] = Complex(-chi * tt1 * static_cast<double>(f.f3), 0.0);
    it.eta[4] = 2.0 * chi * it.t * static_cast<double>(f.f4);

    // omega_1, omega_4 = +-pi/2; omega_2, omega_3 = 0 or pi.
    it.theta_quarters[0] = f.d > 0 ? -1 : (f.d < 0 ? 1 : 0);
    it.theta_quarters[1] = f.f2 < 0 ? 2 : 0;
    it.theta_quarters[2] = -f.f3 < 0 ? 2 : 0;
    it.theta_quarters[3] = f.f4 > 0 ? 1 : -1;
  } else {
    it.eta[1] = Complex(chi * t_abs * static_cast<double>(f.d), 0.0);
    it.eta[2] = Complex(-chi * tt1 * static_cast<double>(f.f2), 0.0);
    it.eta[3] = Complex(-chi * tt1 * static_cast<double>(f.f3), 0.0);
    it.eta[4] = Complex(-2.0 * chi * t_abs * static_cast<double>(f.f4), 0.0);

    // All eta real: theta_j = 0 or pi from the exact integer signs.
    it.theta_quarters[0] = f.d < 0 ? 2 : 0;
    it.theta_quarters[1] = -f.f2 < 0 ? 2 : 0;
    it.theta_quarters[2] = -f.f3 < 0 ? 2 : 0;
    it.theta_quarters[3] = -f.f4 < 0 ? 2 : 0;
  }

  // J1 = |l1 l4 e^{i phi} - l2 l3|^2 vanishes iff either l1 and one of
  // l2, l3 vanish, or e^{i phi} = +1 and |eta1 eta4| = |eta2 eta3|. The
  // latter reduces to the integer identity
  //   2 |p1 p2| |p3 q0| |D| == (|p1 p2| + |p3 q0|) |X| |Y|
  // with X = |p1 p3| - |p2 q0|, Y = |p2 p3| - |p1 q0|, and for the strict
  // case e^{i phi} = -sign(D) sign(X) sign(Y).
  {
    const std::int64_t m = std::abs(c.p1() * c.p2());
    const std::int64_t g = std::abs(c.p3() * c.q0());
    const std::int64_t xs = std::abs(c.p1() * c.p3()) - std::abs(c.p2() * c.q0());
    const std::int64_t ys = std::abs(c.p2() * c.p3()) - std::abs(c.p1() * c.q0());
    if (it.eta1_zero) {
      it.j1_zero = it.eta2_zero || it.eta3_zero;
    } else if (it.eta2_zero || it.eta3_zero) {
      it.j1_zero = false;  // l1 l4 != 0 while l2 l3 = 0
    } else if (-sign_of(f.d) * sign_of(xs) * sign_of(ys) != 1) {
      it.j1_zero = false;  // e^{i phi} = -1 adds two positive products
    } else {
      using I128 = __int128;
      const I128 lhs = I128(2) * m * g * std::abs(f.d);
      const I128 rhs = (I128(m) + g) * std::abs(xs) * std::abs(ys);
      it.j1_zero = (lhs == rhs);
    }
  }

  // Cross-check the closed forms against direct matrix application.
  const PureState3Q transformed =
      apply_local_unitaries(charges_to_state(c), step.uA, step.uB, step.uC);
  const double scale = transformed.norm();
  const std::array<Complex, 5> expected = {it.eta[0], it.eta[1], it.eta[2], it.eta[3], it.eta[4]};
  const unsigned support[5] = {0, 4, 5, 6, 7};
  for (int j = 0; j < 5; ++j) {
    if (std::abs(transformed[support[j]] - expected[j]) > kCrossCheckTol * scale)
      throw std::logic_error("closed-form eta_" + std::to_string(j) +
                             " disagrees with matrix application");
  }
  for (unsigned l : {1u, 2u, 3u}) {
    if (std::abs(transformed[l]) > kCrossCheckTol * scale)
      throw std::logic_error("transformed state has support outside the canonical pattern");
  }
}

SchmidtForm phase_canonicalize(SdIntermediates& it, double norm) {
  if (!(norm > 0.0)) throw std::invalid_argument("norm must be positive");
  if (!(it.eta[0].real() > 0.0) || std::abs(it.eta[0].imag()) > 1e-12)
    throw std::invalid_argument("eta_0 must be real and positive");

  SchmidtForm f;
  f.norm_factor = norm;
  f.lambda[0] = std::abs(it.eta[0]) / norm;
  f.lambda[1] = it.eta1_zero ? 0.0 : std::abs(it.eta[1]) / norm;
  f.lambda[2] = it.eta2_zero ? 0.0 : std::abs(it.eta[2]) / norm;
  f.lambda[3] = it.eta3_zero ? 0.0 : std::abs(it.eta[3]) / norm;
  f.lambda[4] = std::abs(it.eta[4]) / norm;
  f.lambda1_zero = it.eta1_zero;
  f.lambda2_zero = it.eta2_zero;
  f.lambda3_zero = it.eta3_zero;
  f.j1_zero = it.j1_zero;

  const int q1 = it.theta_quarters[0], q2 = it.theta_quarters[1], q3 = it.theta_quarters[2],
            q4 = it.theta_quarters[3];

  // diag(1, e^{i alpha}) x diag(1, e^{i beta}) x diag(1, e^{i gamma}) with
  // alpha = th4 - th3 - th2, beta = -th3 - alpha, gamma = -th2 - alpha
  // clears the phases of |101>, |110>, |111> and leaves
  // phi = th1 - th2 - th3 + th4 on |100>.
  int alpha = q4 - q3 - q2;
  int beta = -q3 - alpha;
  int gamma = -q2 - alpha;
  int phi_q = wrap_quarters(q1 - q2 - q3 + q4);

  // When any of eta_1..eta_3 vanishes the canonical phase is convention:
  // a remaining phase on |100> can be pushed onto a zero amplitude by a
  // further diagonal triple. Fix phi = 0 there (and only there), so equal
  // charge magnitudes always give identical canonical forms.
  if (phi_q != 0 && (it.eta1_zero || it.eta2_zero || it.eta3_zero)) {
    if (it.eta1_zero) {
      // |100> amplitude is zero; nothing to realign.
    } else if (it.eta2_zero) {
      alpha += 2;
      beta -= 2;
    } else {
      alpha += 2;
      gamma -= 2;
    }
    phi_q = 0;
  }

  it.phase_quarters = {alpha, beta, gamma};
  f.phi = quarters_to_radians(phi_q);
  return f;
}

SchmidtDecomposition schmidt_decompose_full(const ChargeVector& c) {
  SchmidtDecomposition d;
  d.step = build_sd_unitaries(c);
  eta_coefficients(c, d.step);

  const PureState3Q psi = charges_to_state(c);
  const double norm = psi.norm();
  d.form = phase_canonicalize(d.step.inter, norm);

  const auto angles = d.step.inter.phase_angles();
  d.total[0] = LocalUnitary::phase_diag(Qubit::A, angles[0]).compose(d.step.uA);
  d.total[1] = LocalUnitary::phase_diag(Qubit::B, angles[1]).compose(d.step.uB);
  d.total[2] = LocalUnitary::phase_diag(Qubit::C, angles[2]).compose(d.step.uC);

  // The materialized chain must land exactly on the canonical amplitudes.
  const PureState3Q out = apply_local_unitaries(psi, d.total[0], d.total[1], d.total[2]);
  const SchmidtForm& f = d.form;
  const std::array<Complex, 8> want = {
      Complex(f.lambda[0] * norm, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0),
      std::polar(f.lambda[1] * norm, f.phi), Complex(f.lambda[2] * norm, 0),
      Complex(f.lambda[3] * norm, 0), Complex(f.lambda[4] * norm, 0)};
  for (unsigned l = 0; l < 8; ++l) {
    if (std::abs(out[l] - want[l]) > kCrossCheckTol * norm)
      throw std::logic_error("phase canonicalization failed to materialize");
  }
  return d;
}

SchmidtForm schmidt_decompose(const ChargeVector& c) { return schmidt_decompose_full(c).form; }

}  // namespace stuq
