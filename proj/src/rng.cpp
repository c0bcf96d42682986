#include "shiftcode/rng.h"

#include <cmath>
#include <numbers>

namespace shiftcode {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed) ^ mix64(stream * 0xD1B54A32D192ED03ull + 0x632BE59BD9B4E019ull)) {}

CounterRng::result_type CounterRng::operator()() {
  return mix64(key_ + 0x9E3779B97F4A7C15ull * ++counter_);
}

double CounterRng::uniform() {
  // 53 random bits, shifted off zero
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller rather than std::normal_distribution so that streams agree
// across standard library implementations.
double CounterRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double t = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

}  // namespace shiftcode
