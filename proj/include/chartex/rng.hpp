#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace chartex {

// Deterministic splitmix64 generator. Every random choice in the project
// flows through this so that identical seeds reproduce identical bytes on
// every platform; std::random distributions are implementation-defined and
// are deliberately avoided.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Inclusive on both ends.
    int uniform_int(int lo, int hi) {
        if (hi <= lo) return lo;
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

    bool bernoulli(double p) { return next_double() < p; }

    size_t pick_index(size_t n) { return n == 0 ? 0 : static_cast<size_t>(next() % n); }

    double normal(double mu, double sigma) {
        // Box-Muller; the second variate is discarded to keep calls stateless.
        double u1 = next_double();
        double u2 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        double r = std::sqrt(-2.0 * std::log(u1));
        return mu + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    int poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        // Knuth's method; lambdas here are small (spurious detection counts).
        double limit = std::exp(-lambda);
        int k = 0;
        double prod = next_double();
        while (prod > limit) {
            ++k;
            prod *= next_double();
        }
        return k;
    }

private:
    uint64_t state_;
};

// Documented seed derivation: children of a run seed are obtained by mixing
// in a stream tag and an index, so independent charts (and independent
// purposes within one chart) never share a generator state.
inline uint64_t derive_seed(uint64_t base, uint64_t stream, uint64_t index = 0) {
    SplitMix64 mix(base ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    uint64_t s = mix.next();
    SplitMix64 mix2(s + index * 0xd1342543de82ef95ULL);
    return mix2.next();
}

}  // namespace chartex
