#pragma once

// splitmix64: tiny deterministic generator for seeded sampling in scans and
// tests. Not for cryptography; chosen for cross-platform reproducibility.

#include <cstdint>

namespace ccx {

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return next() & 1ull; }

private:
    uint64_t state_;
};

} // namespace ccx
