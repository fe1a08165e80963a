// Exact re-derivation of the charge <-> coefficient dictionaries.
//
// A dictionary assigns each of the 8 charges a signed state amplitude so
// that the quartic charge invariant equals Cayley's hyperdeterminant as a
// polynomial identity. For the standard assignment (magnetic charges on
// the basis labels 0,1,2,4 and electric charges on the complementary
// labels) exactly 16 sign vectors work; they come in 8 global-sign pairs.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "stuq/polynomial.hpp"

namespace stuq {

// Signs delta_0..delta_7 attached to the amplitudes a_0..a_7.
struct SignVector {
  std::array<int, 8> delta{};  // each +1 or -1

  friend bool operator==(const SignVector&, const SignVector&) = default;
  bool operator<(const SignVector& o) const { return delta < o.delta; }
  SignVector negated() const {
    SignVector n;
    for (int i = 0; i < 8; ++i) n.delta[i] = -delta[i];
    return n;
  }
};

// Variable order p0,p1,p2,p3,q0,q1,q2,q3 (indices 0..7).
IntPolynomial delta_poly();

// Variable order a0..a7 (indices 0..7).
IntPolynomial cayley_poly();

// Basis label carried by each charge in the standard assignment:
// p0->0, p1->1, p2->2, p3->4, q0->7, q1->6, q2->5, q3->3.
std::array<unsigned, 8> standard_charge_labels();

// Substitute a_l := delta_l * (charge at label l) into the
// hyperdeterminant, giving a polynomial over the charge variables.
IntPolynomial substituted_cayley(const SignVector& signs);

// All sign vectors making the substitution equal delta_poly() exactly, in
// lexicographic order (-1 before +1). The set must have cardinality 16 and
// be closed under global negation; anything else throws std::logic_error.
std::vector<SignVector> enumerate_dictionaries();

// The eight published dictionary columns C1..C8 (one representative per
// global-sign pair), as sign vectors delta_0..delta_7.
std::array<SignVector, 8> dictionary_columns();

// Index of the column (0-based) such that v == C_i or v == -C_i.
std::optional<std::size_t> match_column(const SignVector& v);

// A correspondence maps each magnetic charge p_i to a basis label; each
// electric charge q_i is forced to the bitwise-complement label 7 - l.
// The four magnetic labels must cover each complement pair {l, 7-l} once.
// Signs are attached to labels.
struct Correspondence {
  std::array<unsigned, 4> magnetic_label{};  // label of p0..p3
  SignVector signs;

  // Standard assignment with the sign pattern of column C2 (the dictionary
  // used by the charge-state construction).
  static Correspondence standard();

  // Standard assignment with two magnetic charges (and, via the complement
  // rule, their electric partners) exchanged. Indices in 0..3.
  Correspondence with_magnetic_swap(int i, int j) const;
};

// Checks the complement-rule precondition (violations throw
// std::invalid_argument), then tests the identity exactly.
bool verify_correspondence(const Correspondence& corr);

// Substituted hyperdeterminant minus delta_poly(); the zero polynomial iff
// the correspondence verifies.
IntPolynomial correspondence_residual(const Correspondence& corr);

}  // namespace stuq
