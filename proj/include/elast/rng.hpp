#pragma once

#include <cstdint>
#include <cmath>

#include "elast/linalg.hpp"

namespace elast {

/// Counter-based pseudorandom generator: a stateless splitmix-style mix of
/// (seed, counter). Each output is fully determined by the pair, so draws can
/// be replayed or partitioned without shared state.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const {
        std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in the open interval (0, 1).
    double uniform01(std::uint64_t counter) const {
        return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform01(counter);
    }

    /// Standard normal via Box-Muller; consumes counters c and c+1.
    double normal(std::uint64_t counter) const {
        const double u1 = uniform01(counter * 2);
        const double u2 = uniform01(counter * 2 + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    /// Unit vector from three independent normals; stream index selects the draw.
    Vec3 unit_vec3(std::uint64_t stream) const {
        Vec3 v;
        for (;;) {
            v = {normal(stream * 4), normal(stream * 4 + 1), normal(stream * 4 + 2)};
            const double n = norm(v);
            if (n > 1e-8) return scaled(v, 1.0 / n);
            stream += 0x1000000000000ULL;  // practically unreachable
        }
    }

    /// Uniformly random rotation from a normalized quaternion of four normals.
    Mat3 rotation(std::uint64_t stream) const {
        double q[4];
        double n2 = 0.0;
        for (int i = 0; i < 4; ++i) {
            q[i] = normal(stream * 8 + i);
            n2 += q[i] * q[i];
        }
        const double inv = 1.0 / std::sqrt(n2);
        const double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;
        return Mat3{{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                     {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                     {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace elast
