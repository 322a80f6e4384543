#pragma once

#include <string>
#include <vector>

#include "sympharm/json_io.hpp"
#include "sympharm/structures.hpp"
#include "sympharm/symplectic.hpp"

namespace sympharm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure or for informational checks
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Deterministic pseudo-random polynomials for round-trip suites.
std::vector<Poly> random_polynomials(const Context& ctx, unsigned long seed, int count,
                                     int max_degree, int max_terms);

/// Exact Fischer-orthogonalized projector onto a fixed span; the
/// Gram-solve oracle amortized over many inputs.
class SummandProjector {
 public:
  explicit SummandProjector(std::vector<Poly> basis);
  Poly project(const Poly& f) const;

 private:
  std::vector<Poly> ortho_;
  std::vector<GaussianRational> norms_;
};

// Suite runners. degree caps are clamped to each suite's natural range.
SuiteReport run_commutator_suite(int p_max, int degree_cap);
SuiteReport run_adjoint_suite(int p, int degree_cap);
SuiteReport run_branching_suite(int p_max, int degree_cap);
SuiteReport run_dims_discrepancy_suite(int p_max, int degree_cap);
SuiteReport run_isomorphism_suite(int p, int degree_cap);
SuiteReport run_example_suite();
SuiteReport run_harmonic_suite(int p, int degree_cap);
SuiteReport run_roundtrip_suite(int p, int count);
SuiteReport run_structures_suite();

/// Dispatch by suite name ("all" runs every suite).
std::vector<SuiteReport> run_suites(const std::string& suite, int p, int degree_cap);

std::vector<std::string> suite_names();

}  // namespace sympharm
