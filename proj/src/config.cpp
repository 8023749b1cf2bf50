#include "delooping/config.hpp"

namespace dl {

Config& config() {
  static Config c;
  return c;
}

std::atomic<long>& monte_carlo_negatives() {
  static std::atomic<long> n{0};
  return n;
}

}  // namespace dl
