#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace risamb {

// splitmix64 step, used to derive independent seeds from a master seed
// and an entry key so that parallel and sequential sweeps agree.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

// Seeded generator for Monte Carlo runs. Uniform doubles are built from the
// top 53 bits of the mt19937_64 output and normals via Box-Muller, so the
// stream does not depend on the standard library's distribution internals.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    bool coin_flip() { return uniform01() < 0.5; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // Pair of independent standard normals (Box-Muller).
    std::pair<double, double> normal_pair() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * 3.14159265358979323846 * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    // Circularly-symmetric complex Gaussian with total variance `variance`.
    std::complex<double> complex_normal(double variance) {
        const auto [n1, n2] = normal_pair();
        const double s = std::sqrt(variance / 2.0);
        return {s * n1, s * n2};
    }

private:
    std::mt19937_64 gen_;
};

} // namespace risamb
