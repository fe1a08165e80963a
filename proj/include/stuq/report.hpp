// Aggregated analysis of one charge vector and its serializations.
//
// The JSON rendering has a fixed field order and renders floats with 17
// significant digits, so identical inputs always produce identical bytes.
// The schema is documented in docs/report.schema.json.

#pragma once

#include <cstdint>
#include <string>

#include "stuq/charges.hpp"
#include "stuq/classify.hpp"
#include "stuq/invariants.hpp"
#include "stuq/schmidt.hpp"

namespace stuq {

struct AnalysisReport {
  explicit AnalysisReport(const ChargeVector& c) : charges(c) {}

  ChargeVector charges;
  bool bps = false;
  FamilyId family;
  CaseLabel case_lab = CaseLabel::Boundary;
  SchmidtForm schmidt;
  std::array<double, 5> eta_magnitudes{};  // unnormalized coefficients
  std::int64_t delta = 0;
  std::int64_t det_psi = 0;
  double tangle = 0.0;
  double entropy = 0.0;
  InvariantTriple invariants;
  GroupSignature signature;
};

// Runs the full pipeline (classification, Schmidt decomposition,
// invariants) and cross-checks the group signature against the family's
// column (mismatch throws std::logic_error).
AnalysisReport analyze(const ChargeVector& c);

// One-line JSON object, deterministic byte-for-byte.
std::string to_json_line(const AnalysisReport& r);

// Human-readable block; precision = significant digits for floats.
std::string to_text(const AnalysisReport& r, int precision = 12);

// %.17g rendering used by the JSON writer (exposed for tests).
std::string format_double(double v);

}  // namespace stuq
