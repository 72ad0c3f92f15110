#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace gafdpp {

// splitmix64; used to derive independent per-sample streams from a master
// seed so that serial and parallel runs produce identical results.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x51AF3B76D29C04E1ULL));
}

// Deterministic uniform and complex-Gaussian draws on top of mt19937_64.  The
// standard
// library distributions are implementation-defined, so we build our own from
// raw 64-bit words to keep results reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in (0,1]
    double uniform_pos() {
        return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    }
    // uniform in [0,1)
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t raw() { return eng_(); }

    // index in [0, n)
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    // standard complex Gaussian: E a = 0, E|a|^2 = 1 (each component variance 1/2)
    std::complex<double> complex_gaussian() {
        const double r = std::sqrt(-std::log(uniform_pos()));
        const double t = 2.0 * 3.14159265358979323846 * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace gafdpp
