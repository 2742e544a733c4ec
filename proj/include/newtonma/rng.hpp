#pragma once

/* Counter-based pseudorandom generator.  The i-th output is a fixed hash
 * of (seed, stream, i), so any output can be produced without generating
 * its predecessors: sampling loops partitioned across workers produce the
 * same values in the same places for a fixed seed, whatever the partition
 * count.  The hash is the 64-bit finalizer of the splitmix construction.
 */

#include <cstdint>

namespace newtonma {

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), key_(mix(seed + GOLDEN * (stream + 1))) {}

    std::uint64_t seed() const { return seed_; }

    /* Independent generator for a named substream of the same seed. */
    CounterRng split(std::uint64_t stream) const {
        CounterRng r(seed_, 0);
        r.key_ = mix(key_ + GOLDEN * (stream + 1));
        return r;
    }

    std::uint64_t word_at(std::uint64_t i) const { return mix(key_ + GOLDEN * i); }

    /* Uniform double in [0, 1), 53 significant bits. */
    double uniform_at(std::uint64_t i) const {
        return static_cast<double>(word_at(i) >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_word() { return word_at(counter_++); }
    double next_uniform() { return uniform_at(counter_++); }

private:
    static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t seed_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace newtonma
