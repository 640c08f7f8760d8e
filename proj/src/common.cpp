#include "qwitness/common.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwitness {

double omega(int d) {
  if (d < 2) throw std::invalid_argument("omega: dimension must be >= 2");
  return 2.0 * std::numbers::pi / d;
}

Complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

namespace {
std::atomic<std::size_t> g_max_dim{4096};
}

std::size_t max_dim() { return g_max_dim.load(std::memory_order_relaxed); }

void set_max_dim(std::size_t cap) {
  if (cap < 2) throw std::invalid_argument("set_max_dim: cap must be >= 2");
  g_max_dim.store(cap, std::memory_order_relaxed);
}

}  // namespace qwitness
