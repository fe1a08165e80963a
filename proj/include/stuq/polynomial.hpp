// Exact sparse multivariate polynomials with integer coefficients over a
// fixed set of 8 named variables. Canonical form: term map keyed by
// exponent vector, zero coefficients never stored, so equality is map
// equality. Degrees stay <= 4 here; coefficient arithmetic is checked.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>

namespace stuq {

class IntPolynomial {
 public:
  static constexpr std::size_t kVars = 8;
  using Expo = std::array<std::uint8_t, kVars>;
  using TermMap = std::map<Expo, std::int64_t>;

  IntPolynomial() = default;

  static IntPolynomial constant(std::int64_t c);
  static IntPolynomial variable(std::size_t index);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  unsigned degree() const;  // total degree; 0 for the zero polynomial
  bool is_homogeneous(unsigned d) const;

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;

  bool operator==(const IntPolynomial& o) const { return terms_ == o.terms_; }

  // Exact evaluation at integer points (|x| <= 2^30); throws
  // std::overflow_error if anything leaves int64.
  std::int64_t evaluate(std::span<const std::int64_t, kVars> point) const;

  // Substitute each variable i by sign[i] * variable(target[i]).
  // Signs must be +1 or -1.
  IntPolynomial substitute_signed_vars(const std::array<int, kVars>& sign,
                                       const std::array<std::size_t, kVars>& target) const;

  std::string to_string(const std::array<std::string, kVars>& names) const;

 private:
  void add_term(const Expo& e, std::int64_t coeff);

  TermMap terms_;
};

}  // namespace stuq
