#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace polar {

// sigma^2 = 1 / (2 R 10^(ebn0/10)) for BPSK with unit symbol energy.
inline double noise_variance(double ebn0_db, double rate) {
    return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

struct ChannelConfig {
    double ebn0_db = 0.0;
    double rate_for_noise = 0.5;   // R = K/N, CRC included
    uint64_t seed = 0;

    double sigma2() const { return noise_variance(ebn0_db, rate_for_noise); }
};

// BPSK map s = 1 - 2x, AWGN with variance sigma2, LLR = 2y/sigma^2.
void channel_transmit(std::span<const uint8_t> codeword, double sigma2,
                      std::mt19937_64& rng, std::span<double> llr_out);

// splitmix64 finalizer; stable across platforms.
uint64_t mix64(uint64_t x);
// Per-frame stream: every frame draws from its own generator so results do
// not depend on worker scheduling.
uint64_t frame_seed(uint64_t master_seed, uint64_t frame_index);
// Per-(decoder, Eb/N0) cell seed for sweeps.
uint64_t cell_seed(uint64_t master_seed, std::string_view decoder, double ebn0_db);

} // namespace polar
