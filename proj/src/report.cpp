#include "stuq/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace stuq {

namespace {

const char* zero_flag_name(ZeroFlag f) {
  switch (f) {
    case ZeroFlag::Zero: return "zero";
    case ZeroFlag::NonZero: return "nonzero";
    case ZeroFlag::Either: return "either";
  }
  return "?";
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

std::string format_array(const std::array<double, 5>& a) {
  std::string out = "[";
  for (int i = 0; i < 5; ++i) {
    if (i) out += ",";
    out += format_double(a[i]);
  }
  return out + "]";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

AnalysisReport analyze(const ChargeVector& c) {
  AnalysisReport r{c};
  r.bps = c.is_bps();
  r.family = classify_family(c);
  r.case_lab = case_label(c);

  const SchmidtDecomposition d = schmidt_decompose_full(c);
  r.schmidt = d.form;
  for (int j = 0; j < 5; ++j) r.eta_magnitudes[j] = r.schmidt.lambda[j] * r.schmidt.norm_factor;

  r.delta = delta(FullChargeVector(c));
  r.det_psi = cayley_hyperdet(charge_amplitudes(FullChargeVector(c)));

  // tau of the normalized state = 4 |det psi| / (norm^2)^2, all exact inputs.
  const std::int64_t norm2 =
      c.p1() * c.p1() + c.p2() * c.p2() + c.p3() * c.p3() + c.q0() * c.q0();
  r.tangle = 4.0 * static_cast<double>(std::abs(r.det_psi)) /
             (static_cast<double>(norm2) * static_cast<double>(norm2));
  r.entropy = entropy(c);
  r.invariants = acin_invariants(r.schmidt);

  r.signature = group_signature(r.schmidt);
  if (!signature_consistent(r.family.id, r.signature))
    throw std::logic_error("invariant signature contradicts family " +
                           std::to_string(r.family.id));
  return r;
}

std::string to_json_line(const AnalysisReport& r) {
  std::string out = "{";
  out += "\"charges\":{\"q0\":" + std::to_string(r.charges.q0()) +
         ",\"p1\":" + std::to_string(r.charges.p1()) +
         ",\"p2\":" + std::to_string(r.charges.p2()) +
         ",\"p3\":" + std::to_string(r.charges.p3()) + "}";
  out += std::string(",\"bps\":\"") + (r.bps ? "BPS" : "non-BPS") + "\"";
  out += ",\"family\":{\"id\":" + std::to_string(r.family.id) + ",\"criteria\":[";
  for (std::size_t i = 0; i < r.family.criteria.size(); ++i) {
    if (i) out += ",";
    out += "\"" + escape(r.family.criteria[i]) + "\"";
  }
  out += "]}";
  out += std::string(",\"case\":\"") + case_label_name(r.case_lab) + "\"";
  out += ",\"schmidt\":{\"lambda\":" + format_array(r.schmidt.lambda) +
         ",\"phi\":" + format_double(r.schmidt.phi) +
         ",\"norm_factor\":" + format_double(r.schmidt.norm_factor) +
         ",\"eta\":" + format_array(r.eta_magnitudes) + "}";
  out += ",\"invariants\":{\"delta\":" + std::to_string(r.delta) +
         ",\"det_psi\":" + std::to_string(r.det_psi) +
         ",\"three_tangle\":" + format_double(r.tangle) +
         ",\"entropy\":" + format_double(r.entropy) +
         ",\"j1\":" + format_double(r.invariants.j1) +
         ",\"j2\":" + format_double(r.invariants.j2) +
         ",\"j3\":" + format_double(r.invariants.j3) +
         ",\"j4\":" + format_double(r.invariants.j4) + "}";
  out += std::string(",\"signature\":{\"j1\":\"") + zero_flag_name(r.signature.j1) +
         "\",\"j2\":\"" + zero_flag_name(r.signature.j2) + "\",\"j3\":\"" +
         zero_flag_name(r.signature.j3) + "\"}";
  out += "}";
  return out;
}

std::string to_text(const AnalysisReport& r, int precision) {
  if (precision < 1 || precision > 17) precision = 12;
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return std::string(buf);
  };

  std::ostringstream os;
  os << "charges: q0=" << r.charges.q0() << " p1=" << r.charges.p1() << " p2=" << r.charges.p2()
     << " p3=" << r.charges.p3() << "   [" << (r.bps ? "BPS" : "non-BPS") << "]\n";
  os << "family:  " << r.family.id << "   (";
  for (std::size_t i = 0; i < r.family.criteria.size(); ++i) {
    if (i) os << ", ";
    os << r.family.criteria[i];
  }
  os << ")\n";
  os << "case:    " << case_label_name(r.case_lab) << "\n";
  os << "schmidt: lambda = (";
  for (int i = 0; i < 5; ++i) os << (i ? ", " : "") << fmt(r.schmidt.lambda[i]);
  os << ")\n";
  os << "         phi = " << fmt(r.schmidt.phi) << "\n";
  os << "         norm = " << fmt(r.schmidt.norm_factor) << ", eta = (";
  for (int i = 0; i < 5; ++i) os << (i ? ", " : "") << fmt(r.eta_magnitudes[i]);
  os << ")\n";
  os << "invariants:\n";
  os << "  delta = " << r.delta << "   det_psi = " << r.det_psi << "\n";
  os << "  three_tangle = " << fmt(r.tangle) << "\n";
  os << "  entropy = " << fmt(r.entropy) << "  (" << fmt(r.entropy / std::numbers::pi)
     << " * pi)\n";
  os << "  J1 = " << fmt(r.invariants.j1) << "  J2 = " << fmt(r.invariants.j2)
     << "  J3 = " << fmt(r.invariants.j3) << "  J4 = " << fmt(r.invariants.j4) << "\n";
  os << "signature: J1=" << zero_flag_name(r.signature.j1)
     << " J2=" << zero_flag_name(r.signature.j2) << " J3=" << zero_flag_name(r.signature.j3)
     << "\n";
  return os.str();
}

}  // namespace stuq
