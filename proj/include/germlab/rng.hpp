#pragma once

#include <cstdint>
#include <string>

namespace germlab {

/// Deterministic splittable RNG (splitmix64). Self-contained so reports are
/// reproducible byte-for-byte across platforms and standard library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], inclusive. Rejection sampling keeps the
    /// distribution exact and platform-independent.
    long int_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    /// Nonzero uniform integer in [-bound, bound].
    long nonzero_in(long bound) {
        long v;
        do {
            v = int_in(-bound, bound);
        } while (v == 0);
        return v;
    }

private:
    std::uint64_t state_;
};

/// Derives an independent sub-seed from (seed, task name, index). Independent
/// invariant computations use disjoint streams regardless of call order.
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& task, std::uint64_t index = 0) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (char c : task) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    h ^= seed + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    return h;
}

} // namespace germlab
