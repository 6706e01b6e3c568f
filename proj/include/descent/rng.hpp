#pragma once

// Deterministic seeded RNG for the property suites.  The standard
// distributions are implementation-defined, so draws are derived from the
// raw mt19937_64 stream directly to keep reports byte-identical everywhere.

#include <cstdint>
#include <random>

namespace descent {

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    // uniform integer in [lo, hi], inclusive
    long uniform(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    uint64_t next() { return gen_(); }

    bool chance(int percent) { return uniform(0, 99) < percent; }

private:
    std::mt19937_64 gen_;
};

}  // namespace descent
