// Partition of four-charge black holes into the seven LU-inequivalent
// families, the group signature of the LU invariants, and sign-equivalence.
//
// All criteria are exact integer (in)equalities on squares and absolute
// pairwise products; ratio conditions are cross-multiplied so no division
// ever occurs.

#pragma once

#include <string>
#include <vector>

#include "stuq/charges.hpp"
#include "stuq/schmidt.hpp"

namespace stuq {

struct FamilyId {
  int id = 0;  // 1..7
  std::vector<std::string> criteria;  // the exact (in)equalities that fired
};

// Evaluates all seven family criteria and returns the unique match.
// A partition violation (no match / several matches) would falsify the
// underlying theorem and throws std::logic_error with diagnostics.
FamilyId classify_family(const ChargeVector& c);

enum class ZeroFlag { Zero, NonZero, Either };

struct GroupSignature {
  ZeroFlag j1 = ZeroFlag::Either;
  ZeroFlag j2 = ZeroFlag::Either;
  ZeroFlag j3 = ZeroFlag::Either;
};

// Expected zero pattern of (J1, J2, J3) for each group; group 7 carries
// Either for J1.
GroupSignature table_signature(int family_id);

// Actual exact zero pattern of a charge-derived canonical form.
GroupSignature group_signature(const SchmidtForm& f);

// True when the computed signature is admitted by the family's column.
bool signature_consistent(int family_id, const GroupSignature& actual);

// True iff the two vectors agree in componentwise absolute value. When
// true, the canonical forms are additionally verified to coincide within
// 1e-12 (a failure throws std::logic_error).
bool sign_equivalent(const ChargeVector& c1, const ChargeVector& c2);

// Strict-inequality case of the pair (|p2 p3| vs |p1 q0|, |p1 p3| vs |p2 q0|),
// or Boundary when either equality holds.
enum class CaseLabel { A, B, C, D, Boundary };

CaseLabel case_label(const ChargeVector& c);

const char* case_label_name(CaseLabel l);

}  // namespace stuq
