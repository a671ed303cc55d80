#ifndef NCHYDRO_MONTE_CARLO_HPP
#define NCHYDRO_MONTE_CARLO_HPP

#include <cstdint>
#include <functional>

namespace nchydro {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample std / sqrt(samples)
    long long samples = 0;
    std::uint64_t seed = 0;
};

/// splitmix64: the output of the 64-bit state increment 0x9E3779B97F4A7C15
/// passed through the murmur-style finalizer
///   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///   z ^= z >> 27; z *= 0x94D049BB133111EB;
///   z ^= z >> 31;
/// The algorithm is spelled out so seeds are portable across
/// implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform double in (0,1], 53-bit resolution.
    double next_uniform_pos();

    /// Uniform double in [0,1), 53-bit resolution.
    double next_uniform();

    /// Standard normal pair via Box-Muller on two uniforms.
    void next_normal_pair(double& z0, double& z1);

private:
    std::uint64_t state_;
};

/// Monte Carlo expectation of g(a', b') where each component of the two
/// 3-vectors is drawn from the oscillator ground-state density, i.e. a
/// centered normal with variance 1/2 per component. Deterministic under a
/// fixed seed (samples are accumulated in fixed batches in a fixed order).
/// Requires samples >= 10^3.
McEstimate mc_gaussian_expectation(
    const std::function<double(const Vec3&, const Vec3&)>& g,
    long long samples, std::uint64_t seed);

}  // namespace nchydro

#endif
