#ifndef POLSYM_RNG_HPP
#define POLSYM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace polsym {

// Self-contained generator (splitmix64-seeded xoshiro256**) so that streams
// are reproducible bit-for-bit regardless of standard library version.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Standard real Gaussian via Box-Muller (no cached spare, to keep the
    // stream position independent of call history).
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Standard complex Gaussian: E|z|^2 = 1.
    std::complex<double> cnormal() {
        const double re = normal();
        const double im = normal();
        return {re * 0.7071067811865475244, im * 0.7071067811865475244};
    }

    // Uniform phase on the unit circle.
    std::complex<double> unit_phase() {
        const double theta = 6.283185307179586476925286766559 * uniform01();
        return {std::cos(theta), std::sin(theta)};
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
};

// Child seed for a numbered stream; parallel and serial schedules that use
// the same (master, stream) pairs see identical randomness.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t x = master ^ (0x9e3779b97f4a7c15ULL + stream * 0xd1b54a32d192ed03ULL);
    return Rng::splitmix64(x);
}

}  // namespace polsym

#endif
