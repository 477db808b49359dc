#ifndef TRICOVER_RNG_HPP
#define TRICOVER_RNG_HPP

// SplitMix64: the one seedable generator used everywhere randomness appears.
// A fixed 64-bit counter walk keeps every sampled suite reproducible from its
// seed alone.

#include <cmath>
#include <complex>
#include <cstdint>

namespace tricover {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // uniform in (0,1]
    double uniform_pos() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double gaussian() {
        double u = uniform_pos();
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
    }

    std::complex<double> complex_gaussian() {
        double u = uniform_pos();
        double v = uniform();
        double r = std::sqrt(-std::log(u));
        double t = 6.283185307179586476925286766559 * v;
        return {r * std::cos(t), r * std::sin(t)};
    }

    // integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace tricover

#endif
