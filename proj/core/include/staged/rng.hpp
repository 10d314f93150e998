#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace staged {

// splitmix64, used to derive per-chain sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// mt19937_64 with explicit draw routines. std::*_distribution output is
// implementation defined, so everything that must be byte-reproducible
// (samplers, simulators, golden CLI outputs) goes through this wrapper.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_chain(std::uint64_t master_seed, std::uint64_t stream) {
    return Rng(splitmix64(master_seed ^ splitmix64(stream + 1)));
  }

  // uniform on [0,1) with 53 random bits
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // uniform integer in {0,...,n-1}, rejection sampled (unbiased)
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // index draw from unnormalized log-weights (log-sum-exp with max shift)
  std::size_t categorical_from_log(std::span<const double> log_weights) {
    double mx = log_weights[0];
    for (double w : log_weights) mx = std::max(mx, w);
    double total = 0.0;
    for (double w : log_weights) total += std::exp(w - mx);
    double u = uniform() * total;
    for (std::size_t k = 0; k + 1 < log_weights.size(); ++k) {
      u -= std::exp(log_weights[k] - mx);
      if (u < 0.0) return k;
    }
    return log_weights.size() - 1;
  }

  double normal() {  // Box-Muller, one spare kept
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do { u1 = uniform(); } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Marsaglia-Tsang; shape < 1 handled with the u^(1/shape) boost
  double gamma(double shape) {
    if (shape < 1.0) {
      double u = 0.0;
      do { u = uniform(); } while (u <= 0.0);
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = 0.0, v = 0.0;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
        return d * v;
      }
    }
  }

  std::vector<double> dirichlet(std::span<const double> alpha) {
    std::vector<double> out(alpha.size());
    double total = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      out[i] = gamma(alpha[i]);
      total += out[i];
    }
    for (double& v : out) v /= total;
    return out;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace staged
