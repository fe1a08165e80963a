#include "stuq/classify.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace stuq {

namespace {

// Absolute charges and their exact pairwise products. Everything the seven
// criteria need; all values fit comfortably in int64 under the charge cap.
struct AbsProducts {
  std::int64_t x, y, z, w;      // |p1|, |p2|, |p3|, |q0|
  std::int64_t x2, y2, z2, w2;  // squares
  std::int64_t xz, yw, yz, xw;  // |p1 p3|, |p2 q0|, |p2 p3|, |p1 q0|
};

AbsProducts abs_products(const ChargeVector& c) {
  AbsProducts a{};
  a.x = std::abs(c.p1());
  a.y = std::abs(c.p2());
  a.z = std::abs(c.p3());
  a.w = std::abs(c.q0());
  a.x2 = a.x * a.x;
  a.y2 = a.y * a.y;
  a.z2 = a.z * a.z;
  a.w2 = a.w * a.w;
  a.xz = a.x * a.z;
  a.yw = a.y * a.w;
  a.yz = a.y * a.z;
  a.xw = a.x * a.w;
  return a;
}

std::string rel(const char* lhs, bool eq, const char* rhs) {
  return std::string(lhs) + (eq ? " == " : " != ") + rhs;
}

}  // namespace

FamilyId classify_family(const ChargeVector& c) {
  const AbsProducts a = abs_products(c);

  const bool cond[8] = {
      false,
      // 1: (p1)^2 = (p2)^2 = (p3)^2 = (q0)^2
      a.x2 == a.y2 && a.y2 == a.z2 && a.z2 == a.w2,
      // 2: (p1)^2 = (p3)^2, (p2)^2 = (q0)^2, (p1)^2 != (p2)^2
      a.x2 == a.z2 && a.y2 == a.w2 && a.x2 != a.y2,
      // 3: (p2)^2 = (p3)^2, (p1)^2 = (q0)^2, (p1)^2 != (p2)^2
      a.y2 == a.z2 && a.x2 == a.w2 && a.x2 != a.y2,
      // 4: (p1)^2 = (p2)^2, (p3)^2 = (q0)^2, (p1)^2 != (p3)^2
      a.x2 == a.y2 && a.z2 == a.w2 && a.x2 != a.z2,
      // 5: (p1)^2 != (q0)^2, (p2)^2 != (p3)^2, (p3)^2 != (q0)^2, |p1 p3| = |p2 q0|
      a.x2 != a.w2 && a.y2 != a.z2 && a.z2 != a.w2 && a.xz == a.yw,
      // 6: (p2)^2 != (q0)^2, (p1)^2 != (p3)^2, (p3)^2 != (q0)^2, |p2 p3| = |p1 q0|
      a.y2 != a.w2 && a.x2 != a.z2 && a.z2 != a.w2 && a.yz == a.xw,
      // 7: |p1 p3| != |p2 q0|, |p2 p3| != |p1 q0|
      a.xz != a.yw && a.yz != a.xw,
  };

  int matched = 0;
  int id = 0;
  for (int i = 1; i <= 7; ++i) {
    if (cond[i]) {
      ++matched;
      if (id == 0) id = i;
    }
  }
  if (matched != 1) {
    std::string diag = "family criteria matched " + std::to_string(matched) +
                       " times for charges (q0=" + std::to_string(c.q0()) +
                       ", p1=" + std::to_string(c.p1()) + ", p2=" + std::to_string(c.p2()) +
                       ", p3=" + std::to_string(c.p3()) + "):";
    for (int i = 1; i <= 7; ++i)
      if (cond[i]) diag += " F" + std::to_string(i);
    throw std::logic_error(diag);
  }

  FamilyId fam;
  fam.id = id;
  switch (id) {
    case 1:
      fam.criteria = {"(p1)^2 == (p2)^2 == (p3)^2 == (q0)^2"};
      break;
    case 2:
      fam.criteria = {rel("(p1)^2", true, "(p3)^2"), rel("(p2)^2", true, "(q0)^2"),
                      rel("(p1)^2", false, "(p2)^2")};
      break;
    case 3:
      fam.criteria = {rel("(p2)^2", true, "(p3)^2"), rel("(p1)^2", true, "(q0)^2"),
                      rel("(p1)^2", false, "(p2)^2")};
      break;
    case 4:
      fam.criteria = {rel("(p1)^2", true, "(p2)^2"), rel("(p3)^2", true, "(q0)^2"),
                      rel("(p1)^2", false, "(p3)^2")};
      break;
    case 5:
      fam.criteria = {rel("(p1)^2", false, "(q0)^2"), rel("(p2)^2", false, "(p3)^2"),
                      rel("(p3)^2", false, "(q0)^2"), rel("|p1*p3|", true, "|p2*q0|")};
      break;
    case 6:
      fam.criteria = {rel("(p2)^2", false, "(q0)^2"), rel("(p1)^2", false, "(p3)^2"),
                      rel("(p3)^2", false, "(q0)^2"), rel("|p2*p3|", true, "|p1*q0|")};
      break;
    case 7:
      fam.criteria = {rel("|p1*p3|", false, "|p2*q0|"), rel("|p2*p3|", false, "|p1*q0|")};
      break;
  }
  return fam;
}

GroupSignature table_signature(int family_id) {
  switch (family_id) {
    case 1: return {ZeroFlag::Zero, ZeroFlag::Zero, ZeroFlag::Zero};
    case 2: return {ZeroFlag::Zero, ZeroFlag::NonZero, ZeroFlag::Zero};
    case 3: return {ZeroFlag::Zero, ZeroFlag::Zero, ZeroFlag::NonZero};
    case 4: return {ZeroFlag::NonZero, ZeroFlag::Zero, ZeroFlag::Zero};
    case 5: return {ZeroFlag::NonZero, ZeroFlag::Zero, ZeroFlag::NonZero};
    case 6: return {ZeroFlag::NonZero, ZeroFlag::NonZero, ZeroFlag::Zero};
    case 7: return {ZeroFlag::Either, ZeroFlag::NonZero, ZeroFlag::NonZero};
    default: throw std::out_of_range("family id must be 1..7");
  }
}

GroupSignature group_signature(const SchmidtForm& f) {
  GroupSignature s;
  s.j1 = f.j1_zero ? ZeroFlag::Zero : ZeroFlag::NonZero;
  s.j2 = f.lambda2_zero ? ZeroFlag::Zero : ZeroFlag::NonZero;
  s.j3 = f.lambda3_zero ? ZeroFlag::Zero : ZeroFlag::NonZero;
  return s;
}

bool signature_consistent(int family_id, const GroupSignature& actual) {
  const GroupSignature want = table_signature(family_id);
  auto ok = [](ZeroFlag want, ZeroFlag got) {
    return want == ZeroFlag::Either || want == got;
  };
  return ok(want.j1, actual.j1) && ok(want.j2, actual.j2) && ok(want.j3, actual.j3);
}

bool sign_equivalent(const ChargeVector& c1, const ChargeVector& c2) {
  if (c1.magnitudes() != c2.magnitudes()) return false;

  const SchmidtForm f1 = schmidt_decompose(c1);
  const SchmidtForm f2 = schmidt_decompose(c2);
  for (int i = 0; i < 5; ++i) {
    if (std::abs(f1.lambda[i] - f2.lambda[i]) > 1e-12)
      throw std::logic_error("sign-equivalent charges produced different canonical forms");
  }
  if (std::abs(f1.phi - f2.phi) > 1e-12 ||
      std::abs(f1.norm_factor - f2.norm_factor) > 1e-12 * f1.norm_factor)
    throw std::logic_error("sign-equivalent charges produced different canonical forms");
  return true;
}

CaseLabel case_label(const ChargeVector& c) {
  const AbsProducts a = abs_products(c);
  if (a.yz == a.xw || a.xz == a.yw) return CaseLabel::Boundary;
  if (a.yz > a.xw) return a.xz > a.yw ? CaseLabel::A : CaseLabel::B;
  return a.xz > a.yw ? CaseLabel::C : CaseLabel::D;
}

const char* case_label_name(CaseLabel l) {
  switch (l) {
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::C: return "C";
    case CaseLabel::D: return "D";
    case CaseLabel::Boundary: return "boundary";
  }
  return "?";
}

}  // namespace stuq
