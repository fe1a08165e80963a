// Acceptance suite: every release-gating check, one pass/fail line each.
// Exits non-zero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stuq/classify.hpp"
#include "stuq/dictionary.hpp"
#include "stuq/invariants.hpp"
#include "stuq/schmidt.hpp"
#include "stuq/state.hpp"

using namespace stuq;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
  std::string name;
  double time_limit_ms;
  std::function<bool(std::string&)> check;
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool near_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// --- 1. worked degenerate decomposition --------------------------------

bool check_degenerate_sd(std::string& why) {
  const SchmidtForm f = schmidt_decompose(ChargeVector(-1, 1, 1, 1));
  const double r2 = std::sqrt(2.0);
  const double want[5] = {r2, 0, 0, 0, r2};
  for (int i = 0; i < 5; ++i) {
    const double got = f.lambda[i] * f.norm_factor;
    if (!near(got, want[i], 1e-12)) {
      why = "eta_" + std::to_string(i) + " = " + std::to_string(got);
      return false;
    }
  }
  return true;
}

// --- 2. worked generic decomposition, both branches --------------------

bool check_generic_sd(std::string& why) {
  const double r5 = std::sqrt(5.0);
  const double want[5] = {r5, 6.0 / 5 * r5, 3.0 / 5 * r5, 3.0 / 5 * r5, 4.0 / 5 * r5};

  const SchmidtForm neg = schmidt_decompose(ChargeVector(-4, 1, 1, 1));
  for (int i = 0; i < 5; ++i) {
    if (!near(neg.lambda[i] * neg.norm_factor, want[i], 1e-12)) {
      why = "non-BPS eta_" + std::to_string(i) + " off";
      return false;
    }
  }
  if (!near(std::cos(neg.phi), 1.0, 1e-12)) {
    why = "e^{i phi} != +1 (phi = " + std::to_string(neg.phi) + ")";
    return false;
  }

  const SchmidtForm pos = schmidt_decompose(ChargeVector(4, 1, 1, 1));
  for (int i = 0; i < 5; ++i) {
    if (!near(pos.lambda[i], neg.lambda[i], 1e-12)) {
      why = "branches disagree at lambda_" + std::to_string(i);
      return false;
    }
  }
  if (!near(pos.phi, neg.phi, 1e-12)) {
    why = "branches disagree in phi";
    return false;
  }
  return true;
}

// --- 3. sign-orbit sweep ------------------------------------------------

bool check_sign_orbits(std::string& why) {
  std::mt19937_64 g(101);
  std::uniform_int_distribution<std::int64_t> mag(1, 50);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t p1 = mag(g), p2 = mag(g), p3 = mag(g), q0 = mag(g);
    SchmidtForm ref;
    int ref_family = 0;
    for (int mask = 0; mask < 16; ++mask) {
      const ChargeVector c((mask & 8) ? -q0 : q0, (mask & 1) ? -p1 : p1, (mask & 2) ? -p2 : p2,
                           (mask & 4) ? -p3 : p3);
      const SchmidtForm f = schmidt_decompose(c);
      const int family = classify_family(c).id;
      if (mask == 0) {
        ref = f;
        ref_family = family;
        continue;
      }
      for (int i = 0; i < 5; ++i) {
        if (!near(f.lambda[i], ref.lambda[i], 1e-10)) {
          why = "lambda mismatch in orbit of (" + std::to_string(p1) + "," + std::to_string(p2) +
                "," + std::to_string(p3) + "," + std::to_string(q0) + ")";
          return false;
        }
      }
      if (!near(f.phi, ref.phi, 1e-10)) {
        why = "phi mismatch in orbit";
        return false;
      }
      if (family != ref_family) {
        why = "family not constant on orbit";
        return false;
      }
    }
  }
  return true;
}

// --- 4. partition exhaustiveness ----------------------------------------

bool check_partition(std::string& why) {
  int total = 0;
  for (int p1 = -6; p1 <= 6; ++p1) {
    if (p1 == 0) continue;
    for (int p2 = -6; p2 <= 6; ++p2) {
      if (p2 == 0) continue;
      for (int p3 = -6; p3 <= 6; ++p3) {
        if (p3 == 0) continue;
        for (int q0 = -6; q0 <= 6; ++q0) {
          if (q0 == 0) continue;
          try {
            const int id = classify_family(ChargeVector(q0, p1, p2, p3)).id;
            if (id < 1 || id > 7) {
              why = "family out of range";
              return false;
            }
          } catch (const std::exception& e) {
            why = e.what();
            return false;
          }
          ++total;
        }
      }
    }
  }
  if (total != 20736) {
    why = "sweep covered " + std::to_string(total) + " vectors";
    return false;
  }
  return true;
}

// --- 5. invariant table consistency --------------------------------------

ChargeVector random_family_member(int family, std::mt19937_64& g) {
  std::uniform_int_distribution<std::int64_t> mag(1, 50);
  std::uniform_int_distribution<std::int64_t> small(1, 7);
  auto sgn = [&](std::int64_t v) { return std::bernoulli_distribution(0.5)(g) ? -v : v; };
  for (;;) {
    std::int64_t x = 0, y = 0, z = 0, w = 0;
    switch (family) {
      case 1: x = y = z = w = mag(g); break;
      case 2:
        x = z = mag(g);
        y = w = mag(g);
        if (x == y) continue;
        break;
      case 3:
        y = z = mag(g);
        x = w = mag(g);
        if (x == y) continue;
        break;
      case 4:
        x = y = mag(g);
        z = w = mag(g);
        if (x == z) continue;
        break;
      case 5: {
        const std::int64_t a = small(g), b = small(g), c = small(g), d = small(g);
        if (a == d || b == c) continue;
        x = a * b; z = c * d; y = a * c; w = b * d;
        break;
      }
      case 6: {
        const std::int64_t a = small(g), b = small(g), c = small(g), d = small(g);
        if (a == d || b == c) continue;
        y = a * b; z = c * d; x = a * c; w = b * d;
        break;
      }
      case 7:
        x = mag(g); y = mag(g); z = mag(g); w = mag(g);
        if (x * z == y * w || y * z == x * w) continue;
        break;
    }
    return ChargeVector(sgn(w), sgn(x), sgn(y), sgn(z));
  }
}

bool check_signature_table(std::string& why) {
  std::mt19937_64 g(102);
  for (int family = 1; family <= 7; ++family) {
    for (int i = 0; i < 1000; ++i) {
      const ChargeVector c = random_family_member(family, g);
      if (classify_family(c).id != family) {
        why = "generator left family " + std::to_string(family);
        return false;
      }
      const GroupSignature sig = group_signature(schmidt_decompose(c));
      if (!signature_consistent(family, sig)) {
        why = "signature mismatch in family " + std::to_string(family);
        return false;
      }
    }
  }
  return true;
}

// --- 6. dictionary contract ----------------------------------------------

bool check_dictionary_contract(std::string& why) {
  std::mt19937_64 g(103);
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  for (int i = 0; i < 10000; ++i) {
    const FullChargeVector c(dist(g), dist(g), dist(g), dist(g), dist(g), dist(g), dist(g),
                             dist(g));
    if (delta(c) != cayley_hyperdet(charge_amplitudes(c))) {
      why = "Delta != det Psi at sample " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// --- 7. sixteen dictionaries ---------------------------------------------

bool check_sixteen_dictionaries(std::string& why) {
  std::vector<SignVector> dicts;
  try {
    dicts = enumerate_dictionaries();
  } catch (const std::exception& e) {
    why = e.what();
    return false;
  }
  if (dicts.size() != 16) {
    why = std::to_string(dicts.size()) + " dictionaries";
    return false;
  }
  const std::set<SignVector> all(dicts.begin(), dicts.end());
  for (const auto& sv : dicts) {
    if (!all.count(sv.negated())) {
      why = "not closed under negation";
      return false;
    }
  }
  std::set<SignVector> expected;
  for (const auto& col : dictionary_columns()) {
    expected.insert(col);
    expected.insert(col.negated());
  }
  if (expected != all) {
    why = "solution set differs from the published columns";
    return false;
  }
  if (!verify_correspondence(Correspondence::standard().with_magnetic_swap(1, 2))) {
    why = "p1<->p2 swap does not verify";
    return false;
  }
  return true;
}

// --- 8. Hadamard fixture ---------------------------------------------------

bool check_hadamard_fixture(std::string& why) {
  std::array<Complex, 8> a{};
  a[0] = a[5] = a[6] = a[7] = 0.5;
  const PureState3Q out = apply_local_unitaries(
      PureState3Q(a), LocalUnitary::hadamard(Qubit::A), LocalUnitary::hadamard(Qubit::B),
      LocalUnitary::hadamard(Qubit::C));
  const double r2 = std::sqrt(2.0);
  std::array<Complex, 8> want{};
  want[0] = r2 / 2;
  want[4] = -r2 / 4;
  want[5] = want[6] = want[7] = r2 / 4;
  for (int l = 0; l < 8; ++l) {
    if (std::abs(out[l] - want[l]) > 1e-12) {
      why = "amplitude " + std::to_string(l) + " off by " +
            std::to_string(std::abs(out[l] - want[l]));
      return false;
    }
  }
  return true;
}

// --- 9. |det| transport and support pattern -------------------------------

bool check_lu_transport(std::string& why) {
  std::mt19937_64 g(104);
  std::uniform_int_distribution<std::int64_t> mag(1, 50);
  auto sgn = [&](std::int64_t v) { return std::bernoulli_distribution(0.5)(g) ? -v : v; };
  for (int i = 0; i < 1000; ++i) {
    const ChargeVector c(sgn(mag(g)), sgn(mag(g)), sgn(mag(g)), sgn(mag(g)));
    SdStep step = build_sd_unitaries(c);
    eta_coefficients(c, step);
    const auto& it = step.inter;

    const double transported = std::pow(it.eta[0].real() * std::abs(it.eta[4]), 2);
    const double expected = 4.0 * double(std::abs(c.p1() * c.p2() * c.p3() * c.q0()));
    if (!near_rel(transported, expected, 1e-10)) {
      why = "(eta0 |eta4|)^2 != 4|p1 p2 p3 q0|";
      return false;
    }

    const PureState3Q out = apply_local_unitaries(charges_to_state(c), step.uA, step.uB, step.uC);
    const double norm = out.norm();
    for (unsigned l : {1u, 2u, 3u}) {
      if (std::abs(out[l]) > 1e-11 * norm) {
        why = "support leaked onto basis label " + std::to_string(l);
        return false;
      }
    }
  }
  return true;
}

// --- 10. entropy values -----------------------------------------------------

bool check_entropy(std::string& why) {
  struct Case {
    ChargeVector c;
    double want;
  };
  const Case cases[] = {{ChargeVector(-1, 1, 1, 1), 2 * kPi},
                        {ChargeVector(4, 1, 1, 1), 4 * kPi},
                        {ChargeVector(-8, 2, 1, 4), 16 * kPi}};
  for (const auto& [c, want] : cases) {
    const double got = entropy(c);
    if (!near_rel(got, want, 1e-12)) {
      why = "entropy = " + std::to_string(got) + ", want " + std::to_string(want);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  // Warm-up so the <1 ms single-decomposition criteria measure steady state.
  (void)schmidt_decompose(ChargeVector(-1, 1, 1, 1));

  const std::vector<Criterion> criteria = {
      {"1. degenerate worked decomposition (1,1,1,-1) -> sqrt2(|000>+|111>)", 1.0,
       check_degenerate_sd},
      {"2. generic worked decomposition (1,1,1,-/+4), identical branches", 1.0, check_generic_sd},
      {"3. sign-orbit sweep: 200 magnitude tuples x 16 sign patterns", 5000.0, check_sign_orbits},
      {"4. partition exhaustiveness over ([-6,6]\\{0})^4", 1000.0, check_partition},
      {"5. invariant zero-pattern table, 1000 vectors per family", 10000.0,
       check_signature_table},
      {"6. dictionary contract Delta == det Psi on 10000 random 8-tuples", 1000.0,
       check_dictionary_contract},
      {"7. sixteen sign dictionaries == published columns, swap verifies", 1000.0,
       check_sixteen_dictionaries},
      {"8. Hadamard fixture H x H x H", 100.0, check_hadamard_fixture},
      {"9. |det| transport and canonical support on 1000 vectors", 5000.0, check_lu_transport},
      {"10. entropy worked values 2pi, 4pi, 16pi", 100.0, check_entropy},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    std::string why;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = cr.check(why);
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && ms > cr.time_limit_ms) {
      ok = false;
      why = "exceeded " + std::to_string(cr.time_limit_ms) + " ms";
    }
    std::printf("[%s] %s (%.2f ms)%s%s\n", ok ? "PASS" : "FAIL", cr.name.c_str(), ms,
                why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
