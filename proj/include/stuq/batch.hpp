// Batch analysis of charge-vector datasets.
//
// Input is JSON-lines ({"q0":..,"p1":..,"p2":..,"p3":..}) or CSV with the
// header q0,p1,p2,p3 (auto-detected). Output is one JSON report per input
// record, in input order regardless of parallelism, followed by a summary
// record with per-family counts. Malformed records produce per-record
// error objects and processing continues.

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>

namespace stuq {

struct BatchResult {
  std::size_t records = 0;
  std::size_t errors = 0;
  std::array<std::size_t, 7> family_counts{};  // index 0 = family 1
};

// workers <= 1 means serial. Output is byte-identical for identical input
// at any worker count.
BatchResult run_batch(std::istream& in, std::ostream& out, int workers = 1);

}  // namespace stuq
