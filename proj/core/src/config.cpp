#include "sumrank/config.hpp"

#include <cstdlib>

namespace sumrank {

Config& config() {
  static Config cfg;
  return cfg;
}

void apply_env_config() {
  if (const char* s = std::getenv("SUMRANK_CEILING")) {
    config().max_sweep = std::strtoull(s, nullptr, 10);
  }
  if (const char* s = std::getenv("SUMRANK_WORKERS")) {
    config().workers = static_cast<int>(std::strtol(s, nullptr, 10));
    if (config().workers < 1) config().workers = 1;
  }
}

}  // namespace sumrank
