#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace driftqa {

/// Seeded generator with platform-stable draws. std::mt19937_64 output is
/// specified bit-exactly; bounded draws use rejection sampling instead of
/// std::uniform_int_distribution (whose mapping is implementation-defined),
/// so equal seeds give byte-identical artifacts everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t value;
        do {
            value = engine_();
        } while (value >= limit);
        return value % n;
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[below(items.size())];
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace driftqa
