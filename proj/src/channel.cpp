#include "polar/channel.hpp"

#include <stdexcept>

namespace polar {

void channel_transmit(std::span<const uint8_t> codeword, double sigma2,
                      std::mt19937_64& rng, std::span<double> llr_out) {
    if (llr_out.size() != codeword.size())
        throw std::invalid_argument("output length mismatch");
    if (!(sigma2 > 0))
        throw std::invalid_argument("sigma2 must be positive");
    std::normal_distribution<double> noise(0.0, std::sqrt(sigma2));
    const double scale = 2.0 / sigma2;
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        const double s = codeword[i] ? -1.0 : 1.0;
        llr_out[i] = scale * (s + noise(rng));
    }
}

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint64_t frame_seed(uint64_t master_seed, uint64_t frame_index) {
    return mix64(master_seed ^ mix64(frame_index + 0x51ed270b7a1c2865ull));
}

uint64_t cell_seed(uint64_t master_seed, std::string_view decoder, double ebn0_db) {
    // FNV-1a over the cell coordinates, then mixed with the master seed.
    uint64_t h = 0xcbf29ce484222325ull;
    const auto absorb = [&h](uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    };
    for (char c : decoder) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ull;
    }
    absorb(static_cast<uint64_t>(static_cast<int64_t>(std::llround(ebn0_db * 1000.0))));
    return mix64(master_seed ^ h);
}

} // namespace polar
