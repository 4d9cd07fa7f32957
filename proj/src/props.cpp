#include "tdlc/props.hpp"

#include <random>

#include "tdlc/duality.hpp"
#include "tdlc/errors.hpp"
#include "tdlc/scale.hpp"
#include "tdlc/shift.hpp"

namespace tdlc {

namespace {

json fail_note(const std::string& what, long p, std::size_t n, unsigned trial) {
  json j;
  j["trial"] = trial;
  j["p"] = p;
  j["n"] = n;
  j["error"] = what;
  return j;
}

}  // namespace

SuiteResult engine_agreement_suite(std::uint64_t seed, unsigned trials,
                                   const std::vector<long>& primes,
                                   const std::vector<std::size_t>& dims,
                                   unsigned window, unsigned cap) {
  std::mt19937_64 rng(seed);
  SuiteResult res{"engine_agreement"};
  res.detail["seed"] = seed;
  res.detail["failures"] = json::array();
  unsigned max_terminal = 0, max_stable = 0;
  for (unsigned t = 0; t < trials; ++t) {
    long p = primes[t % primes.size()];
    std::size_t n = dims[(t / primes.size()) % dims.size()];
    QMat m = random_matrix(rng, n, p);
    ++res.trials;
    try {
      ScaleReport r = scale(m, p, window, cap);
      max_terminal = std::max(max_terminal, r.witness.terminal_n);
      max_stable = std::max(max_stable, r.entropy_stabilized_at);
    } catch (const error& e) {
      ++res.failures;
      res.detail["failures"].push_back(fail_note(e.what(), p, n, t));
    }
  }
  res.detail["max_tidy_terminal_n"] = max_terminal;
  res.detail["max_entropy_stabilization_n"] = max_stable;
  return res;
}

SuiteResult inequality_suite(std::uint64_t seed, unsigned matrices,
                             unsigned lattices_per_matrix,
                             const std::vector<long>& primes,
                             const std::vector<std::size_t>& dims) {
  std::mt19937_64 rng(seed);
  SuiteResult res{"scale_inequality"};
  res.detail["seed"] = seed;
  res.detail["failures"] = json::array();
  bool strict_seen = false;
  for (unsigned t = 0; t < matrices; ++t) {
    long p = primes[t % primes.size()];
    std::size_t n = dims[(t / primes.size()) % dims.size()];
    QMat m = random_matrix(rng, n, p);
    ++res.trials;
    try {
      InequalityReport r = check_inequality(m, p, lattices_per_matrix, rng);
      if (r.violations) {
        ++res.failures;
        res.detail["failures"].push_back(
            fail_note("local scale below the minimum", p, n, t));
      }
      strict_seen = strict_seen || r.strict_seen;
    } catch (const error& e) {
      ++res.failures;
      res.detail["failures"].push_back(fail_note(e.what(), p, n, t));
    }
  }
  res.detail["strict_seen"] = strict_seen;
  return res;
}

SuiteResult laws_suite(std::uint64_t seed, unsigned trials,
                       const std::vector<long>& primes,
                       const std::vector<std::size_t>& dims,
                       unsigned max_power) {
  std::mt19937_64 rng(seed);
  SuiteResult res{"exponent_laws"};
  res.detail["seed"] = seed;
  res.detail["failures"] = json::array();
  for (unsigned t = 0; t < trials; ++t) {
    long p = primes[t % primes.size()];
    std::size_t n1 = dims[rng() % dims.size()];
    std::size_t n2 = dims[rng() % dims.size()];
    QMat m = random_matrix(rng, n1, p);
    QMat nmat = random_matrix(rng, n2, p);
    QMat q = random_matrix(rng, n1, p);
    QMat r(n1, n2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) r.at(i, j) = random_scaled_unit(rng, p);
    unsigned k = t % (max_power + 1);  // every power 0..max gets covered
    ++res.trials;
    try {
      LawReport rep = check_laws(m, nmat, q, k, p, r);
      if (!rep.all()) {
        ++res.failures;
        json note = fail_note("law violated", p, n1, t);
        note["power_ok"] = rep.power_ok;
        note["conj_ok"] = rep.conj_ok;
        note["block_diag_ok"] = rep.block_diag_ok;
        note["block_tri_ok"] = rep.block_tri_ok;
        res.detail["failures"].push_back(std::move(note));
      }
    } catch (const error& e) {
      ++res.failures;
      res.detail["failures"].push_back(fail_note(e.what(), p, n1, t));
    }
  }
  return res;
}

SuiteResult bridge_suite(std::uint64_t seed, unsigned trials,
                         const std::vector<long>& primes,
                         const std::vector<std::size_t>& dims) {
  std::mt19937_64 rng(seed);
  SuiteResult res{"duality_bridge"};
  res.detail["seed"] = seed;
  res.detail["failures"] = json::array();
  for (unsigned t = 0; t < trials; ++t) {
    long p = primes[t % primes.size()];
    std::size_t n = dims[(t / primes.size()) % dims.size()];
    ++res.trials;
    try {
      QMat m = random_matrix(rng, n, p);
      Lattice l = random_lattice(rng, n, p);
      check_bridge(m, l);

      // order reversal with index preservation on a nested pair
      Lattice big = random_lattice(rng, n, p);
      Lattice small = intersect(big, random_lattice(rng, n, p));
      PExp direct = index_exponent(small, big);
      PExp dualized = index_exponent(dual_lattice(big), dual_lattice(small));
      if (direct != dualized)
        throw verification_error("index not preserved under the annihilator");
    } catch (const error& e) {
      ++res.failures;
      res.detail["failures"].push_back(fail_note(e.what(), p, n, t));
    }
  }
  return res;
}

SuiteResult index_oracle_suite(std::uint64_t seed, unsigned trials,
                               const std::vector<long>& primes,
                               unsigned max_quotient_exp) {
  std::mt19937_64 rng(seed);
  SuiteResult res{"index_oracle"};
  res.detail["seed"] = seed;
  res.detail["failures"] = json::array();
  const std::size_t n = 2;
  for (unsigned t = 0; t < trials; ++t) {
    long p = primes[t % primes.size()];
    ++res.trials;
    try {
      Lattice big = random_lattice(rng, n, p);
      unsigned a = static_cast<unsigned>(rng() % (max_quotient_exp + 1));
      unsigned b = static_cast<unsigned>(rng() % (max_quotient_exp + 1 - a));
      QMat u1 = random_unimodular_matrix(rng, n, p);
      QMat u2 = random_unimodular_matrix(rng, n, p);
      QMat d = QMat::diagonal({p_power(p, a), p_power(p, b)});
      Lattice small =
          Lattice::from_generators(p, big.basis() * (u1 * d * u2));
      unsigned k = std::max(a, b);
      PExp fast = index_exponent(small, big);
      PExp slow = enumerated_index(small, big, k);
      if (fast != slow || fast != PExp(static_cast<long long>(a + b)))
        throw verification_error("index mismatch: det " + fast.str() +
                                 ", enumerated " + slow.str() + ", expected " +
                                 std::to_string(a + b));
    } catch (const error& e) {
      ++res.failures;
      res.detail["failures"].push_back(fail_note(e.what(), p, n, t));
    }
  }
  return res;
}

namespace {

Cylinder random_admissible_cylinder(std::mt19937_64& rng,
                                    const ShiftSystem& sys) {
  int k = sys.height;
  int left, right;
  switch (sys.mode) {
    case ShiftMode::FullCompact: left = 0; right = 0; break;
    case ShiftMode::RightOpen: left = k; right = 0; break;
    case ShiftMode::HeightOpen: left = k - 1; right = k - 1; break;
    default: throw error("bad mode");
  }
  long lo = static_cast<long>(rng() % 7) - 3;
  std::size_t len = rng() % 6;
  std::vector<int> window(len);
  for (auto& e : window) e = static_cast<int>(rng() % (k + 1));
  return Cylinder::make(k, lo, left, std::move(window), right);
}

}  // namespace

SuiteResult cylinder_property_suite(std::uint64_t seed, unsigned trials,
                                    const std::vector<long>& primes) {
  std::mt19937_64 rng(seed);
  SuiteResult res{"cylinder_properties"};
  res.detail["seed"] = seed;
  res.detail["failures"] = json::array();

  std::vector<std::pair<ShiftMode, int>> shapes = {
      {ShiftMode::FullCompact, 1}, {ShiftMode::FullCompact, 2},
      {ShiftMode::RightOpen, 1},   {ShiftMode::RightOpen, 2},
      {ShiftMode::HeightOpen, 2},  {ShiftMode::HeightOpen, 3}};

  for (long p : primes) {
    for (auto [mode, k] : shapes) {
      ShiftSystem sys(p, k, mode);
      Cylinder nb = nub(sys);
      ShiftScaleResult sc = scale_exponent(sys);
      PExp h = h_top_exponent(sys);
      auto record = [&](const std::string& what) {
        ++res.failures;
        json note;
        note["system"] = system_json(sys);
        note["error"] = what;
        res.detail["failures"].push_back(std::move(note));
      };

      ++res.trials;
      // nub is shift-stable and the equality criterion holds per mode
      if (!(shift_image(nb, 1) == nb)) record("nub is not shift-stable");
      bool nub_trivial = nb == Cylinder::constant(k, k);
      if ((sc.exponent == h) != nub_trivial)
        record("log s = h_top does not match nub triviality");

      for (unsigned t = 0; t < trials; ++t) {
        ++res.trials;
        Cylinder v = random_admissible_cylinder(rng, sys);
        try {
          PExp s = local_scale_exponent(v);
          PExp hv = local_entropy_exponent(v);
          if (!(s >= hv && hv >= sc.exponent))
            record("s >= H >= scale violated");
          TidyVerdict verdict = tidy_check(sys, v);
          if (verdict.tidy_above && verdict.tidy_below && s != sc.exponent)
            record("tidy cylinder is not minimizing");
          if (verdict.tidy_below && !cyl_contains(v, nb))
            record("tidy-below cylinder does not contain the nub");
        } catch (const error& e) {
          record(e.what());
        }
      }
    }
  }
  return res;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, unsigned trials,
                                        const std::vector<long>& primes,
                                        const std::vector<std::size_t>& dims) {
  std::vector<SuiteResult> all;
  all.push_back(engine_agreement_suite(seed, trials, primes, dims));
  all.push_back(inequality_suite(seed + 1, trials, 10, primes, dims));
  all.push_back(laws_suite(seed + 2, trials, primes, dims));
  all.push_back(bridge_suite(seed + 3, trials, primes, dims));
  all.push_back(index_oracle_suite(seed + 4, trials, {2, 3}));
  all.push_back(cylinder_property_suite(seed + 5, trials, primes));
  return all;
}

}  // namespace tdlc
