#pragma once

#include <cstdint>
#include <limits>

namespace shiftcode {

// Counter-based generator. Output k of stream s under seed m is a pure
// function of (m, s, k), so worker w of a parallel run uses stream w and the
// master seed plus worker index fixes every draw.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  result_type operator()();
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  // Uniform in the open interval (0, 1).
  double uniform();
  double normal();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t mix64(std::uint64_t x);

}  // namespace shiftcode
