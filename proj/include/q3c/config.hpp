#pragma once

/* Run-wide tunables.  Loaded from a plain-text key=value file (one pair per
 * line, '#' comments); command-line flags override file values.  All bounds
 * must stay positive.
 */

#include <cstdint>
#include <string>

#include "q3c/bigint.hpp"

namespace q3c {

struct RunConfig {
  // Thue solving
  long window = 200;              // unit-orbit zero-scan half-width
  long k_assoc = 400;             // associate exponent window
  BigInt box = 0;                 // coefficient box; 0 = automatic
  std::string solver = "factor";  // "factor" | "box"
  std::uint64_t mt_prime_limit = 10'000;  // split primes tried for certificates
  std::uint64_t rho_budget = 40'000'000;  // factoring effort
  // Graph exploration
  std::size_t max_vertices = 500;
  unsigned max_bits = 256;
  // Batch scans
  std::uint64_t scan_kmax = 1'000'000;
  std::uint64_t n_max = 1'000'000;  // concrete horizon for period reports
  // Output / execution
  std::string format = "json";  // "json" | "dot" (graph commands)
  unsigned parallelism = 0;     // worker threads; 0 = hardware default
};

/* Parse one key=value assignment; throws domain_error on unknown keys or
 * non-positive bounds. */
void apply_config_kv(RunConfig& cfg, const std::string& key,
                     const std::string& value);

/* Load a config file; missing file -> domain_error. */
RunConfig load_config_file(const std::string& path);

std::string config_to_string(const RunConfig& cfg);

}  // namespace q3c
