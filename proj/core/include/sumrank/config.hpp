#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumrank {

/// Thrown when a requested computation would exceed a configured
/// enumeration ceiling. The message carries the estimated cost and the
/// knob that raises the limit.
class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global enumeration ceilings and worker count. All exhaustive sweeps
/// check these before running so a typo in parameters fails fast instead
/// of spinning for hours.
struct Config {
  uint64_t max_field_size = 1ull << 20;     // largest allowed q^m
  uint64_t max_sweep = 1ull << 21;          // codeword / ambient sweep size
  uint64_t max_block_vectors = 1ull << 10;  // q^{n_i} per-block subspace universe
  uint64_t max_supports = 10'000'000;       // total support-lattice size
  uint64_t max_gl_product = 2'000'000;      // GL-product size for minor tests
  int workers = 1;
};

Config& config();

/// Applies SUMRANK_CEILING (sweep ceiling) and SUMRANK_WORKERS from the
/// environment, if set.
void apply_env_config();

inline void require_ceiling(uint64_t cost, uint64_t limit, const std::string& what,
                            const std::string& knob) {
  if (cost > limit) {
    throw CeilingExceeded(what + " needs " + std::to_string(cost) +
                          " steps, ceiling is " + std::to_string(limit) +
                          " (raise with " + knob + ")");
  }
}

}  // namespace sumrank
