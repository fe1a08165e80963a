#include "stuq/polynomial.hpp"

#include <cstdlib>
#include <stdexcept>

namespace stuq {

namespace {

using I128 = __int128;

constexpr std::int64_t kEvalCap = std::int64_t{1} << 30;

std::int64_t checked_narrow(I128 v, const char* what) {
  if (v > I128(INT64_MAX) || v < I128(INT64_MIN))
    throw std::overflow_error(std::string(what) + ": coefficient overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

IntPolynomial IntPolynomial::constant(std::int64_t c) {
  IntPolynomial p;
  if (c != 0) p.terms_[Expo{}] = c;
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t index) {
  if (index >= kVars) throw std::out_of_range("variable index out of range");
  IntPolynomial p;
  Expo e{};
  e[index] = 1;
  p.terms_[e] = 1;
  return p;
}

void IntPolynomial::add_term(const Expo& e, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [iter, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    iter->second = checked_narrow(I128(iter->second) + coeff, "add_term");
    if (iter->second == 0) terms_.erase(iter);
  }
}

unsigned IntPolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (auto x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

bool IntPolynomial::is_homogeneous(unsigned d) const {
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (auto x : e) t += x;
    if (t != d) return false;
  }
  return true;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, checked_narrow(-I128(c), "operator-"));
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Expo e{};
      for (std::size_t i = 0; i < kVars; ++i) {
        const unsigned s = unsigned(ea[i]) + unsigned(eb[i]);
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      r.add_term(e, checked_narrow(I128(ca) * cb, "operator*"));
    }
  }
  return r;
}

std::int64_t IntPolynomial::evaluate(std::span<const std::int64_t, kVars> point) const {
  for (auto x : point) {
    if (x > kEvalCap || x < -kEvalCap)
      throw std::overflow_error("evaluation point exceeds the exact range");
  }
  I128 acc = 0;
  for (const auto& [e, c] : terms_) {
    I128 term = c;
    for (std::size_t i = 0; i < kVars; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) {
        term *= point[i];
        // total degree <= 4 and |x| <= 2^30 keep |term| < 2^184 away;
        // guard anyway to stay honest on hostile polynomials.
        if (term > (I128(1) << 126) || term < -(I128(1) << 126))
          throw std::overflow_error("evaluation overflow");
      }
    }
    acc += term;
    if (acc > (I128(1) << 126) || acc < -(I128(1) << 126))
      throw std::overflow_error("evaluation overflow");
  }
  return checked_narrow(acc, "evaluate");
}

IntPolynomial IntPolynomial::substitute_signed_vars(
    const std::array<int, kVars>& sign, const std::array<std::size_t, kVars>& target) const {
  for (std::size_t i = 0; i < kVars; ++i) {
    if (sign[i] != 1 && sign[i] != -1) throw std::invalid_argument("signs must be +1 or -1");
    if (target[i] >= kVars) throw std::out_of_range("substitution target out of range");
  }
  IntPolynomial r;
  for (const auto& [e, c] : terms_) {
    Expo e2{};
    int s = 1;
    for (std::size_t i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      const unsigned sum = unsigned(e2[target[i]]) + unsigned(e[i]);
      if (sum > 255) throw std::overflow_error("exponent overflow");
      e2[target[i]] = static_cast<std::uint8_t>(sum);
      if (sign[i] < 0 && (e[i] & 1u)) s = -s;
    }
    r.add_term(e2, s < 0 ? -c : c);
  }
  return r;
}

std::string IntPolynomial::to_string(const std::array<std::string, kVars>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += c >= 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const std::int64_t mag = std::abs(c);
    bool printed = false;
    if (mag != 1) {
      out += std::to_string(mag);
      printed = true;
    }
    for (std::size_t i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      if (printed) out += "*";
      out += names[i];
      if (e[i] > 1) out += "^" + std::to_string(int(e[i]));
      printed = true;
    }
    if (!printed) out += "1";
  }
  return out;
}

}  // namespace stuq
