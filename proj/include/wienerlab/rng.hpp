// Counter-based random number generation (Philox 4x64-10).
//
// Every source of randomness in the library is a (master_seed, stream_index)
// pair. Distinct pairs give statistically independent streams, identical
// pairs give bit-identical output, and a stream never depends on how many
// other streams exist. That is what makes replication fan-out deterministic
// under any worker count.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace wienerlab {

/// Identifies one reproducible random stream.
struct SeedStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    friend bool operator==(const SeedStream&, const SeedStream&) = default;
};

namespace detail {

inline std::uint64_t mulhilo64(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    return static_cast<std::uint64_t>(p);
}

} // namespace detail

/// Philox 4x64 with 10 rounds. The key is the (master_seed, stream_index)
/// pair; the 256-bit counter enumerates blocks within the stream.
class Philox {
public:
    using Block = std::array<std::uint64_t, 4>;

    Philox() = default;
    explicit Philox(SeedStream seed) : key_{seed.master_seed, seed.stream_index} {}

    /// One keyed permutation of a 256-bit counter. Pure; exposed for the
    /// known-answer tests.
    static Block block(const Block& counter, std::uint64_t key0, std::uint64_t key1) {
        constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
        constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
        constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
        constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

        Block c = counter;
        std::uint64_t k0 = key0;
        std::uint64_t k1 = key1;
        for (int round = 0; round < 10; ++round) {
            std::uint64_t hi0, hi1;
            const std::uint64_t lo0 = detail::mulhilo64(kMul0, c[0], hi0);
            const std::uint64_t lo1 = detail::mulhilo64(kMul1, c[2], hi1);
            c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        return c;
    }

    std::uint64_t next_u64() {
        if (index_ == 4) {
            buffer_ = block(counter_, key_[0], key_[1]);
            index_ = 0;
            if (++counter_[0] == 0 && ++counter_[1] == 0 && ++counter_[2] == 0) ++counter_[3];
        }
        return buffer_[index_++];
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::array<std::uint64_t, 2> key_{0, 0};
    Block counter_{0, 0, 0, 0};
    Block buffer_{};
    int index_ = 4;
};

/// Standard normal variates over a Philox stream (Box-Muller, both values
/// used). One sampler per stream; not shared across threads.
class NormalSampler {
public:
    NormalSampler() = default;
    explicit NormalSampler(SeedStream seed) : engine_(seed) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] keeps the log finite.
        const double u1 = 1.0 - engine_.next_double();
        const double u2 = engine_.next_double();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Uniform in [0, 1) from the same stream (used by the crossing test).
    double uniform() { return engine_.next_double(); }

private:
    Philox engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace wienerlab
