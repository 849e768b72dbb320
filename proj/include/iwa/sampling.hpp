#pragma once

#include <cstdint>
#include <vector>

#include "iwa/poly.hpp"

namespace iwa {

// splitmix64: tiny, platform-independent, reproducible bit-for-bit.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound).
    uint64_t below(uint64_t bound) { return next() % bound; }

  private:
    uint64_t state_;
};

struct SamplerConfig {
    uint64_t seed = 2024;
    int max_numerator = 2;   // numerators drawn from [-max, max]
    int min_denominator = 5; // denominators from [min, max]
    int max_denominator = 8;
};

// One small Gaussian rational a/b + (c/d) i.
GScalar sample_scalar(Rng& rng, const SamplerConfig& cfg);

// Points of the essential slice (t31 = t32 = 0) with an invertible frame,
// sigma_12 != 0 and omega_t^{1,1} positive; `klass` restricts the Nakamura
// class when non-negative (2 -> class (ii), 3 -> class (iii)).
std::vector<ParamPoint> sample_essential_points(size_t count, const SamplerConfig& cfg,
                                                int klass = -1);
// Points of the full parameter space (all six coordinates).
std::vector<ParamPoint> sample_full_points(size_t count, const SamplerConfig& cfg);

}  // namespace iwa
