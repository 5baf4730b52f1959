#pragma once

#include <cstdint>

namespace modray {

/// Counter-based deterministic random stream: output i is a pure integer mix
/// of (seed, stream, i), identical on every platform.  Substreams with
/// distinct ids are independent for our purposes and can be consumed in
/// parallel shards.
class RngStream {
public:
    explicit RngStream(uint64_t seed, uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull))) {}

    uint64_t next_u64() { return mix(key_ + (counter_++) * 0x9E3779B97F4A7C15ull); }

    /// Unbiased uniform draw in [0, n); rejection sampling.
    uint64_t uniform_below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            uint64_t u = next_u64();
            if (u < limit) return u % n;
        }
    }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    uint64_t draws() const { return counter_; }

private:
    static uint64_t mix(uint64_t z) {  // splitmix64 finalizer
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace modray
