#ifndef P2PFL_RNG_HPP_
#define P2PFL_RNG_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace p2pfl {

// splitmix64 finalizer; full-avalanche 64-bit mixer.
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent child seed from a base seed and up to two stream ids.
// Every RNG stream in the simulator is keyed this way so that results do not
// depend on scheduling (thread count, node evaluation order).
inline uint64_t derive_seed(uint64_t base, uint64_t stream, uint64_t step = 0) {
    uint64_t h = mix64(base + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (stream + 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ (step + 0x9e3779b97f4a7c15ULL));
    return h;
}

// Deterministic RNG: mt19937_64 engine (output sequence fixed by the standard)
// with hand-rolled bounded/real draws. std::uniform_*_distribution is
// implementation-defined and must not be used where reproducibility matters.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound), rejection sampled to avoid modulo bias.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = eng_();
            if (r >= threshold) return r % bound;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

    // Uniform in [0, 1) with 53 bits of randomness.
    double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values from [0, n), in selection order (partial Fisher-Yates).
    std::vector<int> sample_without_replacement(int n, int k) {
        if (k > n) throw std::invalid_argument("Rng::sample_without_replacement: k > n");
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        std::vector<int> out;
        out.reserve(k);
        for (int i = 0; i < k; ++i) {
            int j = i + below_int(n - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace p2pfl

#endif  // P2PFL_RNG_HPP_
