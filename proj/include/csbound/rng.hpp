#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace csbound {

// SplitMix64 (Steele, Lea, Flood / Vigna). Used for seed expansion only.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ (Blackman, Vigna). Fixed algorithm so streams are identical
// across platforms and standard library versions.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

// Deterministic random stream with explicit substream derivation.
//
// Substream contract: substream(master, id) seeds a fresh generator from
// splitmix64(master + (id + 1) * 0x9E3779B97F4A7C15). Streams with distinct
// ids are independent for practical purposes, and the derivation is pure,
// so parallel and serial runs that agree on ids produce identical draws.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static Rng substream(std::uint64_t master, std::uint64_t id) {
        std::uint64_t s = master + (id + 1) * 0x9E3779B97F4A7C15ULL;
        return Rng(splitmix64(s));
    }

    std::uint64_t next_u64() { return gen_.next(); }

    // uniform on [0, 1)
    double uniform() {
        return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53;
    }

    // uniform on (0, 1]; used where log(u) must stay finite
    double uniform_pos() {
        return static_cast<double>((gen_.next() >> 11) + 1) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; pairs are cached
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    bool bernoulli(double prob) {
        if (prob < 0.0 || prob > 1.0)
            throw std::invalid_argument("bernoulli probability outside [0,1]");
        return uniform() < prob;
    }

  private:
    Xoshiro256pp gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace csbound
