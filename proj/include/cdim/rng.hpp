#pragma once

#include <cstdint>
#include <vector>

#include "cdim/scalar.hpp"

namespace cdim {

// splitmix64; fixed algorithm so seeded experiments are reproducible across
// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    long range(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // a small rational drawn from a fixed pool of numerators/denominators
    Scalar rational(long num_bound = 9, long den_bound = 4) {
        long n = range(-num_bound, num_bound);
        long d = range(1, den_bound);
        Scalar q(n, d);
        q.canonicalize();
        return q;
    }

    Scalar nonzero_rational(long num_bound = 9, long den_bound = 4) {
        for (;;) {
            Scalar q = rational(num_bound, den_bound);
            if (q != 0) return q;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace cdim
