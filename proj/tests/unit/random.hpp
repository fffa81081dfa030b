#pragma once

#include <cstdint>
#include <random>

// Seeded generator for property tests; every suite fixes its own seed.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  double log_uniform(double a, double b);
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

 private:
  std::mt19937_64 rng_;
};

#include <cmath>
inline double Draw::log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
