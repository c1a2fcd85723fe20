#pragma once

#include <cstdint>

#include "fairgame/game.hpp"
#include "fairgame/strategy.hpp"

namespace fairgame {

// Monte-Carlo evaluation of a strategy pair. Estimates are bit-reproducible:
// the generator algorithm is pinned (not delegated to the standard library,
// whose distributions vary across implementations) and each episode draws
// from its own stream derived only from (seed, episode index).

// splitmix64, the canonical 64-bit seed expander.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256** with splitmix-expanded seeding.
class Xoshiro256StarStar {
  public:
    explicit Xoshiro256StarStar(uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : s_) word = sm.next();
    }

    uint64_t next() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53 mantissa bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

struct EpisodeResult {
    double total_reward = 0.0;
    long steps = 0;
    bool terminated = false;
};

struct Estimate {
    double mean = 0.0;
    double standard_error = 0.0;  // sample std / sqrt(episodes)
    long episodes = 0;
    double termination_rate = 0.0;
};

inline constexpr long kDefaultStepCap = 1'000'000;

// One walk from the initial vertex. Rewards of visited vertices accumulate
// until a terminal absorbs the play (terminals contribute 0); an episode that
// exhausts step_cap reports terminated=false.
EpisodeResult simulate_episode(const GameGraph& game, const MemorylessPolicy& sigma1,
                               const MemorylessPolicy& sigma2, Xoshiro256StarStar& rng,
                               long step_cap = kDefaultStepCap);

// Mean over terminated episodes; episode i draws from a generator seeded with
// seed XOR i. Truncated episodes are excluded from the mean but lower the
// termination rate. Deterministic given (seed, episodes, strategies).
Estimate estimate_value(const GameGraph& game, const MemorylessPolicy& sigma1,
                        const MemorylessPolicy& sigma2, long episodes, uint64_t seed,
                        long step_cap = kDefaultStepCap);

}  // namespace fairgame
