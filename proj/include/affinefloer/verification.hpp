#pragma once

// Cross-module invariant sweeps. Each check runs an exhaustive comparison
// against an independent oracle and records how many cases it covered.

#include "affinefloer/wrapped_floer.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace affinefloer {

struct Check {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  double seconds = 0;
  nlohmann::json detail = nlohmann::json::object();  // first failure, measured errors
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
};

// Counting
Check check_hilbert(std::int64_t max_d);
Check check_dp6_counts(std::int64_t max_d);

// Ring structure
Check check_ring_iso(std::int64_t n_max);
Check check_associativity(std::int64_t max_total_degree);

// Homotopy words
Check check_homotopy_enumeration(std::int64_t max_k);
Check check_homotopy_counts(std::int64_t max_k);
Check check_homotopy_vs_mu2(std::int64_t n_max);

// Tropical triangles
Check check_tropical_vs_mu2(std::int64_t n_max);
Check check_tropical_balancing(std::int64_t n_max);
Check check_position_invariance(std::int64_t max_k);
Check check_doubled_triangle();
Check check_partition_identity(std::int64_t max_total_k);
Check check_dp6_partition(std::int64_t n_max);

// Wrapped Floer
Check check_wrapped_localized(std::int64_t max_degree, const Window& window);
Check check_continuation(std::int64_t max_r, std::int64_t max_degree, const Window& window);
Check check_directed_system(std::int64_t max_r, std::int64_t max_degree, const Window& window);

// Numerics
Check check_coordinate_relations(double tol);
Check check_log_integral(double tol);
Check check_critical_values(const std::vector<double>& lambdas);
Check check_hessian(double tol);

struct VerifyBounds {
  std::int64_t max_degree = 6;  // ring isomorphism, homotopy cross-check
  std::int64_t max_total_degree = 9;
  std::int64_t max_k = 8;
  std::int64_t max = 4;         // tropical n, m
  std::int64_t max_r = 6;
  std::int64_t wrapped_degree = 4;
  double tol = 1e-8;
};

/// suite in {points, ring, homotopy, tropical, wrapped, numeric}; throws
/// std::invalid_argument for unknown names or bounds beyond desk scale.
SuiteResult run_suite(const std::string& suite, const VerifyBounds& bounds);
std::vector<std::string> suite_names();

nlohmann::json to_json(const Check& check);
nlohmann::json to_json(const SuiteResult& result);

}  // namespace affinefloer
