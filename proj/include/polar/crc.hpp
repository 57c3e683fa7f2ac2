#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polar {

// Bit-level CRC over GF(2). poly holds the generator taps without the
// leading x^crc_len term (0x1021 = x^16 + x^12 + x^5 + 1). Register starts
// at zero, message is consumed MSB-first, no final XOR. Returns crc_len
// bits, MSB first.
std::vector<uint8_t> crc_compute(std::span<const uint8_t> payload_bits,
                                 uint32_t poly, int crc_len);

// Checks payload ‖ crc produced by crc_compute.
bool crc_check(std::span<const uint8_t> bits_with_crc, uint32_t poly, int crc_len);

} // namespace polar
