// stuq — classify extremal four-charge STU black holes through their
// three-qubit states: canonical Schmidt form, LU invariants, family
// partition, and exact charge<->coefficient dictionary checks.

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stuq/batch.hpp"
#include "stuq/dictionary.hpp"
#include "stuq/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;

int output_precision() {
  if (const char* env = std::getenv("STUQ_PRECISION")) {
    const int p = std::atoi(env);
    if (p >= 1 && p <= 17) return p;
  }
  return 12;
}

int parallel_cap() {
  if (const char* env = std::getenv("STUQ_MAX_PARALLEL")) {
    const int p = std::atoi(env);
    if (p >= 1) return p;
  }
  return 64;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t want,
                                         const std::string& what) {
  std::vector<std::int64_t> vals;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stoll(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "invalid integer '" + field + "'");
    }
  }
  if (vals.size() != want)
    throw CLI::ValidationError(what, "expected " + std::to_string(want) + " comma-separated integers");
  return vals;
}

struct ChargeArgs {
  std::string charges;  // "q0,p1,p2,p3"
  std::optional<std::int64_t> nD0, kD4, mD4, lD4;

  void attach(CLI::App* cmd) {
    cmd->add_option("--charges", charges, "charges as q0,p1,p2,p3 (q0 first)");
    auto* n = cmd->add_option("--nD0", nD0, "D0-brane count (q0)");
    auto* k = cmd->add_option("--kD4", kD4, "D4-brane count (p1)");
    auto* m = cmd->add_option("--mD4", mD4, "D4-brane count (p2)");
    auto* l = cmd->add_option("--lD4", lD4, "D4-brane count (p3)");
    n->needs(k)->needs(m)->needs(l);
  }

  stuq::ChargeVector resolve() const {
    if (!charges.empty()) {
      const auto v = parse_int_list(charges, 4, "--charges");
      return stuq::ChargeVector(v[0], v[1], v[2], v[3]);
    }
    if (nD0 && kD4 && mD4 && lD4) return stuq::ChargeVector(*nD0, *kD4, *mD4, *lD4);
    throw CLI::ValidationError("charges", "provide --charges or the brane aliases --nD0/--kD4/--mD4/--lD4");
  }
};

std::string format_complex(stuq::Complex z, int precision) {
  char buf[80];
  z += stuq::Complex(0.0, 0.0);  // drop negative zeros
  if (std::abs(z.imag()) < 1e-14) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, z.real());
    return buf;
  }
  if (std::abs(z.real()) < 1e-14) {
    std::snprintf(buf, sizeof buf, "%.*gi", precision, z.imag());
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.*g%+.*gi", precision, z.real(), precision, z.imag());
  return buf;
}

void print_matrix(std::ostream& os, const char* name, const stuq::LocalUnitary& u, int prec) {
  os << name << " = [[" << format_complex(u.m[0][0], prec) << ", " << format_complex(u.m[0][1], prec)
     << "], [" << format_complex(u.m[1][0], prec) << ", " << format_complex(u.m[1][1], prec)
     << "]]\n";
}

int cmd_classify(const ChargeArgs& args, bool json) {
  const stuq::AnalysisReport r = stuq::analyze(args.resolve());
  if (json)
    std::cout << stuq::to_json_line(r) << "\n";
  else
    std::cout << stuq::to_text(r, output_precision());
  return kExitOk;
}

int cmd_sd(const ChargeArgs& args, bool json) {
  const stuq::ChargeVector c = args.resolve();
  const stuq::SchmidtDecomposition d = stuq::schmidt_decompose_full(c);
  const int prec = output_precision();
  if (json) {
    const stuq::AnalysisReport r = stuq::analyze(c);
    std::cout << stuq::to_json_line(r) << "\n";
    return kExitOk;
  }
  const auto& it = d.step.inter;
  std::cout << "charges: q0=" << c.q0() << " p1=" << c.p1() << " p2=" << c.p2()
            << " p3=" << c.p3() << "\n";
  std::cout << "branch: " << (it.bps ? "BPS (p1*p2*p3*q0 > 0)" : "non-BPS (p1*p2*p3*q0 < 0)")
            << "\n";
  std::cout << "t = " << format_complex(it.t, prec) << ", k = " << format_complex(it.k, prec)
            << ", a = " << format_complex(stuq::Complex(it.a, 0), prec)
            << ", b = " << format_complex(it.b, prec)
            << ", chi = " << format_complex(stuq::Complex(it.chi, 0), prec) << "\n";
  print_matrix(std::cout, "U^A", d.step.uA, prec);
  print_matrix(std::cout, "U^B", d.step.uB, prec);
  print_matrix(std::cout, "U^C", d.step.uC, prec);
  char buf[64];
  auto fmt = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    return std::string(buf);
  };
  std::cout << "eta = (";
  for (int j = 0; j < 5; ++j) std::cout << (j ? ", " : "") << format_complex(it.eta[j], prec);
  std::cout << ")\n";
  std::cout << "theta = (";
  for (int j = 1; j <= 4; ++j) std::cout << (j > 1 ? ", " : "") << fmt(it.theta(j));
  std::cout << ")\n";
  const auto ang = it.phase_angles();
  std::cout << "phase diagonals: alpha=" << fmt(ang[0]) << ", beta=" << fmt(ang[1])
            << ", gamma=" << fmt(ang[2]) << "\n";
  std::cout << "lambda = (";
  for (int j = 0; j < 5; ++j) std::cout << (j ? ", " : "") << fmt(d.form.lambda[j]);
  std::cout << "), phi = " << fmt(d.form.phi) << ", norm = " << fmt(d.form.norm_factor) << "\n";
  return kExitOk;
}

int cmd_invariants(const std::string& full_charges, const ChargeArgs& args, bool json) {
  if (!full_charges.empty()) {
    const auto v = parse_int_list(full_charges, 8, "--full-charges");
    const stuq::FullChargeVector c(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]);
    const std::int64_t d = stuq::delta(c);
    const std::int64_t det = stuq::cayley_hyperdet(stuq::charge_amplitudes(c));
    if (json) {
      std::cout << "{\"delta\":" << d << ",\"det_psi\":" << det << "}\n";
    } else {
      std::cout << "delta = " << d << "\n";
      std::cout << "det_psi = " << det << "  (charge state under the standard dictionary)\n";
    }
    return kExitOk;
  }
  const stuq::AnalysisReport r = stuq::analyze(args.resolve());
  if (json) {
    std::cout << stuq::to_json_line(r) << "\n";
    return kExitOk;
  }
  const int prec = output_precision();
  char buf[64];
  auto fmt = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    return std::string(buf);
  };
  std::cout << "delta = " << r.delta << "\n";
  std::cout << "det_psi = " << r.det_psi << "\n";
  std::cout << "three_tangle = " << fmt(r.tangle) << "\n";
  std::cout << "entropy = " << fmt(r.entropy) << "\n";
  std::cout << "J1 = " << fmt(r.invariants.j1) << "  J2 = " << fmt(r.invariants.j2)
            << "  J3 = " << fmt(r.invariants.j3) << "  J4 = " << fmt(r.invariants.j4) << "\n";
  return kExitOk;
}

int cmd_batch(const std::string& input, const std::string& output, int parallel) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "cannot open input file: " << input << "\n";
    return kExitUsage;
  }
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!output.empty() && output != "-") {
    file.open(output, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open output file: " << output << "\n";
      return kExitUsage;
    }
    out = &file;
  }
  const int workers = std::min(std::max(1, parallel), parallel_cap());
  const stuq::BatchResult r = stuq::run_batch(in, *out, workers);
  return r.errors == 0 ? kExitOk : kExitPartial;
}

int cmd_dict_enumerate() {
  const auto dicts = stuq::enumerate_dictionaries();
  const auto cols = stuq::dictionary_columns();
  std::cout << "16 sign vectors (delta_0..delta_7) satisfying Delta == det Psi:\n";
  for (const auto& sv : dicts) {
    std::cout << "  (";
    for (int i = 0; i < 8; ++i) std::cout << (i ? "," : "") << (sv.delta[i] > 0 ? "+1" : "-1");
    std::cout << ")";
    if (const auto col = stuq::match_column(sv)) {
      const bool positive = sv == cols[*col];
      std::cout << "   " << (positive ? "C" : "-C") << (*col + 1);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_dict_verify(const std::string& swap) {
  stuq::Correspondence corr = stuq::Correspondence::standard();
  if (!swap.empty() && swap != "none") {
    static const std::map<std::string, int> names = {{"p0", 0}, {"p1", 1}, {"p2", 2}, {"p3", 3}};
    const auto comma = swap.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--swap", "expected two charge names, e.g. p1,p2");
    const std::string a = swap.substr(0, comma);
    const std::string b = swap.substr(comma + 1);
    if (!names.count(a) || !names.count(b) || a == b)
      throw CLI::ValidationError("--swap", "expected two distinct magnetic charges from p0..p3");
    corr = corr.with_magnetic_swap(names.at(a), names.at(b));
  }
  const stuq::IntPolynomial residual = stuq::correspondence_residual(corr);
  const bool ok = residual.is_zero();
  static const std::array<std::string, 8> charge_names = {"p0", "p1", "p2", "p3",
                                                          "q0", "q1", "q2", "q3"};
  std::cout << (ok ? "true" : "false") << "\n";
  std::cout << "residual = " << residual.to_string(charge_names) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "stuq — three-qubit analysis of four-charge extremal black holes\n"
      "Charge order is q0,p1,p2,p3 everywhere (q0 = nD0 first).\n"
      "Environment: STUQ_PRECISION (significant digits of human-readable\n"
      "floats, default 12; JSON always uses 17), STUQ_MAX_PARALLEL (cap for\n"
      "batch --parallel, default 64)."};
  app.require_subcommand(1);

  bool json = false;

  auto* classify = app.add_subcommand("classify", "full analysis of one charge vector");
  ChargeArgs classify_args;
  classify_args.attach(classify);
  classify->add_flag("--json", json, "emit a single JSON object");

  auto* sd = app.add_subcommand("sd", "Schmidt decomposition with the explicit LU chain");
  ChargeArgs sd_args;
  sd_args.attach(sd);
  sd->add_flag("--json", json, "emit a single JSON object");

  auto* inv = app.add_subcommand("invariants", "charge invariants");
  ChargeArgs inv_args;
  inv_args.attach(inv);
  std::string full_charges;
  inv->add_option("--full-charges", full_charges,
                  "eight charges as p0,p1,p2,p3,q0,q1,q2,q3 (zeros allowed)");
  inv->add_flag("--json", json, "emit a single JSON object");

  auto* batch = app.add_subcommand("batch", "analyze a dataset (JSON lines or CSV)");
  std::string input, output;
  int parallel = 1;
  batch->add_option("--input", input, "input path")->required();
  batch->add_option("--output", output, "output path (default stdout)");
  batch->add_option("--parallel", parallel, "worker count (default 1)");

  auto* dict = app.add_subcommand("dictionaries", "charge<->coefficient dictionary lab");
  dict->require_subcommand(1);
  auto* dict_enum = dict->add_subcommand("enumerate", "all 16 sign dictionaries");
  auto* dict_verify = dict->add_subcommand("verify", "verify a correspondence exactly");
  std::string swap = "none";
  dict_verify->add_option("--swap", swap,
                          "exchange two magnetic charges (e.g. p1,p2) or 'none'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(classify_args, json);
    if (sd->parsed()) return cmd_sd(sd_args, json);
    if (inv->parsed()) return cmd_invariants(full_charges, inv_args, json);
    if (batch->parsed()) return cmd_batch(input, output, parallel);
    if (dict->parsed()) {
      if (dict_enum->parsed()) return cmd_dict_enumerate();
      if (dict_verify->parsed()) return cmd_dict_verify(swap);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kExitUsage;
}
