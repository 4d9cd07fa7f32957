// Acceptance suite: every criterion prints one pass/fail line; the exit code
// is the number of failed criteria.  All comparisons are exact integer
// equalities on p-exponents.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "tdlc/duality.hpp"
#include "tdlc/errors.hpp"
#include "tdlc/props.hpp"
#include "tdlc/report.hpp"
#include "tdlc/scale.hpp"

using namespace tdlc;

namespace {

constexpr std::uint64_t kSeed = 0x5ca1ef00d;

int g_failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << what
            << "\n";
  if (!ok) ++g_failures;
}

QMat swap_matrix(long p) {
  return QMat{{Rat(0), Rat(p)}, {Rat(1, p), Rat(0)}};
}

// Criterion 1: the worked 2x2 involution.  s(phi) = 1 although the standard
// lattice gives p; the diagonalized form has the standard lattice minimizing,
// and conjugation does not change the scale.
void criterion_1() {
  bool ok = true;
  std::string note;
  try {
    for (long p : {2L, 3L, 5L}) {
      QMat m = swap_matrix(p);
      Lattice zp2 = Lattice::standard(p, 2);
      ok = ok && scale_exponent(m, p) == PExp(0);
      ok = ok && local_scale_exponent(m, zp2) == PExp(1);
      TidyTrace t = tidy_iterate(m, zp2);
      ok = ok && t.terminal_exponent == PExp(0) && t.terminal_n >= 1 &&
           t.steps.front().s_exponent == PExp(1);

      QMat xi{{Rat(p), Rat(-p)}, {Rat(1), Rat(1)}};
      QMat psi = QMat::diagonal({Rat(1), Rat(-1)});
      ok = ok && xi * psi * xi.inverse() == m;
      ok = ok && local_scale_exponent(psi, zp2) == PExp(0);
      ok = ok && scale_exponent(psi, p) == PExp(0) &&
           scale_exponent(xi * psi * xi.inverse(), p) == scale_exponent(psi, p);
    }
    note = "worked involution: scale 1, standard lattice not minimizing, "
           "diagonal form minimized, conjugation invariant";
  } catch (const error& e) {
    ok = false;
    note = e.what();
  }
  report(1, ok, note);
}

std::vector<std::pair<long, QMat>> sample_matrices(unsigned count) {
  std::mt19937_64 rng(kSeed);
  std::vector<long> primes{2, 3, 5};
  std::vector<std::size_t> dims{1, 2, 3};
  std::vector<std::pair<long, QMat>> out;
  out.reserve(count);
  for (unsigned t = 0; t < count; ++t) {
    long p = primes[t % primes.size()];
    std::size_t n = dims[(t / primes.size()) % dims.size()];
    out.emplace_back(p, random_matrix(rng, n, p));
  }
  return out;
}

// Criterion 2 + the Q_p^n half of criterion 6: for 200 sampled
// automorphisms the Newton exponent, the tidying terminal exponent and the
// stabilized entropy increment agree, within the 64-step cap.
void criteria_2_and_6qp(const std::vector<std::pair<long, QMat>>& sample,
                        bool& equality_everywhere) {
  unsigned failures = 0;
  unsigned max_terminal = 0;
  equality_everywhere = true;
  for (const auto& [p, m] : sample) {
    try {
      ScaleReport r = scale(m, p);  // throws on any engine disagreement
      max_terminal = std::max(max_terminal, r.witness.terminal_n);
      if (r.scale_exp != r.entropy_exp) equality_everywhere = false;
    } catch (const error&) {
      ++failures;
      equality_everywhere = false;
    }
  }
  report(2, failures == 0,
         "engine agreement on " + std::to_string(sample.size()) +
             " automorphisms (max tidy length " + std::to_string(max_terminal) +
             ")");
}

// Criterion 3: the scale exponent is the minimum over lattices; strictness
// must show up somewhere.
void criterion_3(const std::vector<std::pair<long, QMat>>& sample) {
  std::mt19937_64 rng(kSeed + 3);
  unsigned violations = 0;
  bool strict_seen = false;
  try {
    for (const auto& [p, m] : sample) {
      PExp target = scale_exponent(m, p);
      for (unsigned t = 0; t < 50; ++t) {
        PExp e = local_scale_exponent(m, random_lattice(rng, m.rows(), p));
        if (e < target) ++violations;
        if (e > target) strict_seen = true;
      }
    }
    // the worked involution witnesses strictness deterministically
    strict_seen = strict_seen ||
                  local_scale_exponent(swap_matrix(2), Lattice::standard(2, 2)) >
                      scale_exponent(swap_matrix(2), 2);
  } catch (const error&) {
    ++violations;
  }
  report(3, violations == 0 && strict_seen,
         "local scale exponents dominate the minimum over " +
             std::to_string(sample.size()) + "x50 lattices, strict witness seen");
}

void criterion_4() {
  SuiteResult laws = laws_suite(kSeed + 4, 100, {2, 3, 5}, {1, 2, 3});
  report(4, laws.ok(),
         "power, conjugation, product and extension laws: 100 trials, " +
             std::to_string(laws.failures) + " failures");
}

void criterion_5() {
  bool ok = true;
  std::string note;
  try {
    json gallery = shift_gallery();
    std::ifstream f(std::string(TDLC_GOLDEN_DIR) + "/shift_gallery.json");
    std::stringstream buf;
    buf << f.rdbuf();
    ok = f.good() && gallery.dump(2) + "\n" == buf.str();
    note = ok ? "gallery matches the golden fixture"
              : "gallery differs from the golden fixture";

    // pinned verdicts, independent of the fixture file
    for (const json& entry : gallery["entries"]) {
      const std::string mode = entry["system"]["mode"].get<std::string>();
      const json& cyls = entry["cylinders"];
      if (mode == "FULL_COMPACT") {
        ok = ok && entry["nub"]["is_whole_group"].get<bool>() &&
             entry["scale_exponent"] == 0 && entry["h_top_exponent"] == 1;
      } else if (mode == "RIGHT_OPEN") {
        ok = ok && entry["nub"]["is_trivial"].get<bool>() &&
             entry["scale_exponent"] == 1 && entry["h_top_exponent"] == 1;
      } else {
        ok = ok && !entry["nub"]["is_whole_group"].get<bool>() &&
             !entry["nub"]["is_trivial"].get<bool>() &&
             entry["scale_exponent"] == 0 && entry["h_top_exponent"] == 1;
        // designated open subgroup first, the half-pinned V second
        ok = ok && cyls[0]["H_exponent"] == 0 && cyls[1]["H_exponent"] == 1 &&
             cyls[1]["tidy_above"].get<bool>() &&
             !cyls[1]["tidy_below"].get<bool>() &&
             !cyls[1]["forward_union_closed"].get<bool>();
      }
    }
    if (!ok && note == "gallery matches the golden fixture")
      note = "pinned gallery verdicts violated";
  } catch (const error& e) {
    ok = false;
    note = e.what();
  }
  report(5, ok, note);
}

void criterion_6(bool qp_equality_everywhere) {
  bool ok = qp_equality_everywhere;
  try {
    for (long p : {2L, 3L, 5L}) {
      ShiftSystem compact(p, 1, ShiftMode::FullCompact);
      ShiftSystem right(p, 1, ShiftMode::RightOpen);
      ShiftSystem height(p, 2, ShiftMode::HeightOpen);
      auto trivial = [](const ShiftSystem& s) {
        return nub(s) == Cylinder::constant(s.height, s.height);
      };
      ok = ok && !trivial(compact) &&
           scale_exponent(compact).exponent < h_top_exponent(compact);
      ok = ok && trivial(right) &&
           scale_exponent(right).exponent == h_top_exponent(right);
      ok = ok && !trivial(height) &&
           scale_exponent(height).exponent < h_top_exponent(height);
    }
  } catch (const error&) {
    ok = false;
  }
  report(6, ok,
         "log s = h_top exactly when the nub is trivial: strict, equal, strict "
         "across the shift modes; equality on every sampled automorphism");
}

void criterion_7() {
  std::mt19937_64 rng(kSeed + 7);
  unsigned failures = 0;
  for (unsigned t = 0; t < 100; ++t) {
    long p = t % 2 ? 3 : 2;
    std::size_t n = 1 + t % 3;
    try {
      QMat m = random_matrix(rng, n, p);
      Lattice l = random_lattice(rng, n, p);
      check_bridge(m, l);
      Lattice big = random_lattice(rng, n, p);
      Lattice small = intersect(big, random_lattice(rng, n, p));
      if (index_exponent(small, big) !=
          index_exponent(dual_lattice(big), dual_lattice(small)))
        ++failures;
    } catch (const error&) {
      ++failures;
    }
  }
  report(7, failures == 0,
         "duality bridge, involution and index preservation: 100 trials, " +
             std::to_string(failures) + " failures");
}

void criterion_8() {
  SuiteResult oracle = index_oracle_suite(kSeed + 8, 50, {2, 3}, 3);
  report(8, oracle.ok(),
         "determinant index equals coset enumeration: 50 trials, " +
             std::to_string(oracle.failures) + " mismatches");
}

void criterion_9() {
  SuiteResult cyl = cylinder_property_suite(kSeed + 9, 40, {2, 3});
  report(9, cyl.ok(),
         "general-statement evidence is property-based: tidy cylinders "
         "minimize, tidy-below cylinders contain the nub, engines agree (" +
             std::to_string(cyl.trials) + " checks, " +
             std::to_string(cyl.failures) + " failures)");
}

}  // namespace

int main() {
  criterion_1();
  auto sample = sample_matrices(200);
  bool qp_equality = false;
  criteria_2_and_6qp(sample, qp_equality);
  criterion_3(sample);
  criterion_4();
  criterion_5();
  criterion_6(qp_equality);
  criterion_7();
  criterion_8();
  criterion_9();
  std::cout << (g_failures == 0 ? "all criteria passed\n"
                                : std::to_string(g_failures) +
                                      " criteria failed\n");
  return g_failures;
}
