// Integer charge vectors of extremal STU black holes.
//
// ChargeVector is the four-charge configuration (q0; p1, p2, p3) with all
// entries non-zero ("large" black holes). FullChargeVector is the general
// eight-charge configuration where zeros are allowed.

#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace stuq {

// Magnitude cap keeping every derived integer quantity (squares, pairwise
// products, the quartic invariant, the J1 cancellation test) exact in
// 64/128-bit arithmetic. 4*M^4 must fit in int64.
inline constexpr std::int64_t kMaxCharge = 32768;

// Cap for the general eight-charge solution; the quartic invariant is then
// exact in 128-bit intermediates (result may still exceed int64 and is
// reported as overflow).
inline constexpr std::int64_t kMaxFullCharge = std::int64_t{1} << 30;

inline int sign_of(std::int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Four non-vanishing integer charges of a "large" STU black hole.
// q0 counts D0 branes (nD0); p1, p2, p3 count D4 branes (kD4, mD4, lD4).
// Negative counts are anti-branes.
class ChargeVector {
 public:
  ChargeVector(std::int64_t q0, std::int64_t p1, std::int64_t p2, std::int64_t p3)
      : q0_(q0), p1_(p1), p2_(p2), p3_(p3) {
    check("q0", q0);
    check("p1", p1);
    check("p2", p2);
    check("p3", p3);
  }

  std::int64_t q0() const { return q0_; }
  std::int64_t p1() const { return p1_; }
  std::int64_t p2() const { return p2_; }
  std::int64_t p3() const { return p3_; }

  // sign(p1*p2*p3*q0); never 0 for a valid vector.
  int product_sign() const {
    return sign_of(p1_) * sign_of(p2_) * sign_of(p3_) * sign_of(q0_);
  }

  // BPS branch has p1*p2*p3*q0 > 0, non-BPS < 0.
  bool is_bps() const { return product_sign() > 0; }

  // (|p1|, |p2|, |p3|, |q0|)
  std::array<std::int64_t, 4> magnitudes() const {
    return {std::abs(p1_), std::abs(p2_), std::abs(p3_), std::abs(q0_)};
  }

  friend bool operator==(const ChargeVector&, const ChargeVector&) = default;

 private:
  static void check(const char* name, std::int64_t v) {
    if (v == 0)
      throw std::invalid_argument(std::string(name) + " must be non-zero");
    if (v > kMaxCharge || v < -kMaxCharge)
      throw std::invalid_argument(std::string(name) + " exceeds the supported magnitude " +
                                  std::to_string(kMaxCharge));
  }

  std::int64_t q0_, p1_, p2_, p3_;
};

// General static black-hole solution: four magnetic charges p0..p3 and four
// electric charges q0..q3, zeros allowed.
class FullChargeVector {
 public:
  FullChargeVector(std::int64_t p0, std::int64_t p1, std::int64_t p2, std::int64_t p3,
                   std::int64_t q0, std::int64_t q1, std::int64_t q2, std::int64_t q3)
      : p_{p0, p1, p2, p3}, q_{q0, q1, q2, q3} {
    static const char* names[8] = {"p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3"};
    for (int i = 0; i < 4; ++i) check(names[i], p_[i]);
    for (int i = 0; i < 4; ++i) check(names[4 + i], q_[i]);
  }

  explicit FullChargeVector(const ChargeVector& c)
      : FullChargeVector(0, c.p1(), c.p2(), c.p3(), c.q0(), 0, 0, 0) {}

  std::int64_t p(int i) const { return p_.at(i); }
  std::int64_t q(int i) const { return q_.at(i); }

  friend bool operator==(const FullChargeVector&, const FullChargeVector&) = default;

 private:
  static void check(const char* name, std::int64_t v) {
    if (v > kMaxFullCharge || v < -kMaxFullCharge)
      throw std::invalid_argument(std::string(name) + " exceeds the supported magnitude " +
                                  std::to_string(kMaxFullCharge));
  }

  std::array<std::int64_t, 4> p_;
  std::array<std::int64_t, 4> q_;
};

}  // namespace stuq
