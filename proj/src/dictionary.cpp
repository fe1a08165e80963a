#include "stuq/dictionary.hpp"

#include <algorithm>
#include <stdexcept>

namespace stuq {

namespace {

// Charge variable indices: p0..p3 -> 0..3, q0..q3 -> 4..7.
enum : std::size_t { P0, P1, P2, P3, Q0, Q1, Q2, Q3 };

IntPolynomial v(std::size_t i) { return IntPolynomial::variable(i); }

}  // namespace

IntPolynomial delta_poly() {
  const IntPolynomial s = v(P0) * v(Q0) + v(P1) * v(Q1) + v(P2) * v(Q2) - v(P3) * v(Q3);
  return s * s +
         IntPolynomial::constant(4) * (v(P0) * v(Q3) - v(P1) * v(P2)) *
             (v(P3) * v(Q0) + v(Q2) * v(Q1));
}

IntPolynomial cayley_poly() {
  // Variables are the amplitudes a0..a7 (indices 0..7).
  const IntPolynomial s = v(0) * v(7) - v(1) * v(6) - v(2) * v(5) + v(3) * v(4);
  return s * s -
         IntPolynomial::constant(4) * (v(0) * v(3) - v(1) * v(2)) * (v(4) * v(7) - v(5) * v(6));
}

std::array<unsigned, 8> standard_charge_labels() {
  // index: charge (P0..Q3), value: basis label.
  return {0, 1, 2, 4, 7, 6, 5, 3};
}

IntPolynomial substituted_cayley(const SignVector& signs) {
  // a_l -> delta_l * (charge at label l): invert the standard label map.
  const auto labels = standard_charge_labels();
  std::array<std::size_t, 8> target{};
  for (std::size_t charge = 0; charge < 8; ++charge) target[labels[charge]] = charge;
  return cayley_poly().substitute_signed_vars(signs.delta, target);
}

std::vector<SignVector> enumerate_dictionaries() {
  const IntPolynomial want = delta_poly();
  std::vector<SignVector> found;
  for (unsigned mask = 0; mask < 256; ++mask) {
    SignVector sv;
    for (int i = 0; i < 8; ++i) sv.delta[i] = (mask >> i) & 1u ? 1 : -1;
    if (substituted_cayley(sv) == want) found.push_back(sv);
  }
  std::sort(found.begin(), found.end());

  if (found.size() != 16)
    throw std::logic_error("dictionary enumeration produced " + std::to_string(found.size()) +
                           " sign vectors instead of 16");
  for (const auto& sv : found) {
    if (!std::binary_search(found.begin(), found.end(), sv.negated()))
      throw std::logic_error("dictionary solution set is not closed under global negation");
  }
  return found;
}

std::array<SignVector, 8> dictionary_columns() {
  // Column sign rows in charge order (p0, p1, p2, p3, q0, q1, q2, q3),
  // re-indexed onto delta_0..delta_7 through the standard label map.
  constexpr int rows[8][8] = {
      {-1, -1, -1, +1, -1, +1, +1, -1},  // C1
      {+1, -1, -1, -1, +1, +1, +1, +1},  // C2
      {+1, +1, +1, +1, -1, +1, +1, +1},  // C3
      {+1, -1, +1, +1, +1, +1, -1, -1},  // C4
      {+1, +1, -1, +1, +1, -1, +1, -1},  // C5
      {-1, +1, +1, -1, +1, +1, +1, -1},  // C6
      {-1, -1, +1, +1, +1, -1, +1, +1},  // C7
      {-1, +1, -1, +1, +1, +1, -1, +1},  // C8
  };
  const auto labels = standard_charge_labels();
  std::array<SignVector, 8> cols{};
  for (int c = 0; c < 8; ++c)
    for (std::size_t charge = 0; charge < 8; ++charge)
      cols[c].delta[labels[charge]] = rows[c][charge];
  return cols;
}

std::optional<std::size_t> match_column(const SignVector& sv) {
  const auto cols = dictionary_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (sv == cols[i] || sv == cols[i].negated()) return i;
  }
  return std::nullopt;
}

Correspondence Correspondence::standard() {
  Correspondence c;
  const auto labels = standard_charge_labels();
  for (int i = 0; i < 4; ++i) c.magnetic_label[i] = labels[i];
  c.signs = dictionary_columns()[1];  // C2, the pattern the charge state uses
  return c;
}

Correspondence Correspondence::with_magnetic_swap(int i, int j) const {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j)
    throw std::invalid_argument("swap indices must be distinct and in 0..3");
  Correspondence c(*this);
  std::swap(c.magnetic_label[i], c.magnetic_label[j]);
  return c;
}

namespace {

// magnetic labels must pick exactly one element of every complement pair
// {l, 7-l}; otherwise electric charges would collide with magnetic ones.
void require_complement_rule(const Correspondence& corr) {
  std::array<bool, 8> used{};
  for (unsigned l : corr.magnetic_label) {
    if (l > 7) throw std::invalid_argument("basis label out of range");
    if (used[l] || used[7 - l])
      throw std::invalid_argument("assignment violates the complement rule");
    used[l] = used[7 - l] = true;
  }
}

}  // namespace

IntPolynomial correspondence_residual(const Correspondence& corr) {
  require_complement_rule(corr);
  std::array<std::size_t, 8> target{};
  for (std::size_t i = 0; i < 4; ++i) {
    target[corr.magnetic_label[i]] = i;            // p_i
    target[7 - corr.magnetic_label[i]] = 4 + i;    // q_i on the complement
  }
  const IntPolynomial sub = cayley_poly().substitute_signed_vars(corr.signs.delta, target);
  return sub - delta_poly();
}

bool verify_correspondence(const Correspondence& corr) {
  return correspondence_residual(corr).is_zero();
}

}  // namespace stuq
