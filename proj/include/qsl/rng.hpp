#pragma once

#include <bit>
#include <cstdint>

#include <boost/random/poisson_distribution.hpp>

namespace qsl::rng {

inline uint64_t splitmix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct ThreefryBlock {
    uint64_t x0, x1;
};

// Threefry-2x64, 20 rounds (Salmon et al. rotation constants).
inline ThreefryBlock threefry2x64(uint64_t k0, uint64_t k1, uint64_t c0, uint64_t c1) {
    constexpr int rot[8] = {16, 42, 12, 31, 16, 32, 24, 21};
    const uint64_t ks[3] = {k0, k1, 0x1BD11BDAA9FC1A22ull ^ k0 ^ k1};
    uint64_t x0 = c0 + ks[0];
    uint64_t x1 = c1 + ks[1];
    for (int r = 0; r < 20; ++r) {
        x0 += x1;
        x1 = std::rotl(x1, rot[r % 8]);
        x1 ^= x0;
        if (r % 4 == 3) {
            const int j = r / 4 + 1;
            x0 += ks[j % 3];
            x1 += ks[(j + 1) % 3] + static_cast<uint64_t>(j);
        }
    }
    return {x0, x1};
}

// Counter-based stream addressed by (seed, purpose, l, resample, setting).
// Every draw is a pure function of the address, so results are independent
// of evaluation order and thread count.
class Stream {
  public:
    using result_type = uint64_t;

    Stream(uint64_t master_seed, uint64_t purpose, double l, uint64_t resample, uint64_t setting)
        : k0_(master_seed),
          k1_(purpose * 0x9E3779B97F4A7C15ull ^ splitmix64(std::bit_cast<uint64_t>(l))),
          c0_((resample << 20) | (setting & 0xFFFFFull)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ull; }

    result_type operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const ThreefryBlock b = threefry2x64(k0_, k1_, c0_, iter_++);
        spare_ = b.x1;
        have_spare_ = true;
        return b.x0;
    }

    // Uniform on the open interval (0,1).
    double uniform01() {
        return static_cast<double>(operator()() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

  private:
    uint64_t k0_, k1_, c0_;
    uint64_t iter_ = 0;
    uint64_t spare_ = 0;
    bool have_spare_ = false;
};

inline long long poisson(Stream& s, double mean) {
    if (mean <= 0.0) return 0;
    boost::random::poisson_distribution<long long, double> dist(mean);
    return dist(s);
}

inline constexpr uint64_t kPurposeCounts = 0x636f756e7473ull;
inline constexpr uint64_t kPurposeResample = 0x726573616d70ull;

}  // namespace qsl::rng
