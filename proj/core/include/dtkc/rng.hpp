#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dtkc {

// Deterministic 64-bit generator. All sampling goes through this wrapper so
// results do not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound). bound == 0 returns 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        // Rejection-free modulo; bias is negligible for bound << 2^64.
        return engine_() % bound;
    }

    // Uniform in [0, 1).
    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        long double t = static_cast<long double>(p) * 18446744073709551616.0L;
        std::uint64_t threshold =
            t >= 18446744073709551615.0L ? UINT64_MAX : static_cast<std::uint64_t>(t);
        return engine_() < threshold;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64, used to derive independent stream seeds from one master seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix_seed(master ^ mix_seed(stream + 0x517cc1b727220a95ULL));
}

} // namespace dtkc
