#include "stuq/invariants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stuq {

namespace {

using I128 = __int128;

std::int64_t narrow_or_throw(I128 v, const char* what) {
  if (v > I128(INT64_MAX) || v < I128(INT64_MIN))
    throw std::overflow_error(std::string(what) + " exceeds the 64-bit integer range");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t delta(const FullChargeVector& c) {
  // Inputs are capped at 2^30, so every intermediate fits in 128 bits.
  const I128 p0 = c.p(0), p1 = c.p(1), p2 = c.p(2), p3 = c.p(3);
  const I128 q0 = c.q(0), q1 = c.q(1), q2 = c.q(2), q3 = c.q(3);
  const I128 s = p0 * q0 + p1 * q1 + p2 * q2 - p3 * q3;
  const I128 v = s * s + 4 * (p0 * q3 - p1 * p2) * (p3 * q0 + q2 * q1);
  return narrow_or_throw(v, "Delta");
}

std::int64_t cayley_hyperdet(const std::array<std::int64_t, 8>& a) {
  for (std::int64_t x : a) {
    if (x > kMaxFullCharge || x < -kMaxFullCharge)
      throw std::invalid_argument("amplitude exceeds the exact-arithmetic range");
  }
  const I128 s = I128(a[0]) * a[7] - I128(a[1]) * a[6] - I128(a[2]) * a[5] + I128(a[3]) * a[4];
  const I128 v =
      s * s - 4 * (I128(a[0]) * a[3] - I128(a[1]) * a[2]) * (I128(a[4]) * a[7] - I128(a[5]) * a[6]);
  return narrow_or_throw(v, "hyperdeterminant");
}

Complex cayley_hyperdet(const PureState3Q& s) {
  const auto& a = s.amplitudes();
  const Complex first = a[0] * a[7] - a[1] * a[6] - a[2] * a[5] + a[3] * a[4];
  return first * first - 4.0 * (a[0] * a[3] - a[1] * a[2]) * (a[4] * a[7] - a[5] * a[6]);
}

double three_tangle(const PureState3Q& s) {
  const double n = s.norm();
  if (std::abs(n - 1.0) > 1e-9)
    throw std::invalid_argument("three_tangle requires a normalized state (norm = " +
                                std::to_string(n) + ")");
  return 4.0 * std::abs(cayley_hyperdet(s));
}

double entropy(const ChargeVector& c) {
  const std::int64_t prod = std::abs(c.p1() * c.p2() * c.p3() * c.q0());
  return 2.0 * std::numbers::pi * std::sqrt(static_cast<double>(prod));
}

InvariantTriple acin_invariants(const SchmidtForm& f) {
  InvariantTriple r;
  const auto& l = f.lambda;
  const Complex d = l[1] * l[4] * std::polar(1.0, f.phi) - l[2] * l[3];
  r.j1 = std::norm(d);
  r.j2 = (l[0] * l[2]) * (l[0] * l[2]);
  r.j3 = (l[0] * l[3]) * (l[0] * l[3]);
  r.j4 = (l[0] * l[4]) * (l[0] * l[4]);
  return r;
}

}  // namespace stuq
