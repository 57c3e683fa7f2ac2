#include "polar/crc.hpp"

#include <stdexcept>

namespace polar {

std::vector<uint8_t> crc_compute(std::span<const uint8_t> payload_bits,
                                 uint32_t poly, int crc_len) {
    if (crc_len < 1 || crc_len > 32)
        throw std::invalid_argument("crc_len must be in [1, 32]");
    const uint64_t mask = (crc_len == 32) ? 0xffffffffull : ((1ull << crc_len) - 1);
    uint64_t reg = 0;
    for (uint8_t bit : payload_bits) {
        const uint64_t feedback = ((reg >> (crc_len - 1)) & 1u) ^ (bit & 1u);
        reg = (reg << 1) & mask;
        if (feedback)
            reg ^= poly & mask;
    }
    std::vector<uint8_t> crc(static_cast<std::size_t>(crc_len));
    for (int i = 0; i < crc_len; ++i)
        crc[static_cast<std::size_t>(i)] =
            static_cast<uint8_t>((reg >> (crc_len - 1 - i)) & 1u);
    return crc;
}

bool crc_check(std::span<const uint8_t> bits_with_crc, uint32_t poly, int crc_len) {
    if (static_cast<int>(bits_with_crc.size()) < crc_len)
        throw std::invalid_argument("input shorter than crc_len");
    const std::size_t payload_len = bits_with_crc.size() - static_cast<std::size_t>(crc_len);
    const auto crc = crc_compute(bits_with_crc.first(payload_len), poly, crc_len);
    for (int i = 0; i < crc_len; ++i)
        if (crc[static_cast<std::size_t>(i)] != (bits_with_crc[payload_len + static_cast<std::size_t>(i)] & 1u))
            return false;
    return true;
}

} // namespace polar
