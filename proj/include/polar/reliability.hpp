#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polar {

// 3GPP TS 38.212 polar reliability sequence for N_max = 1024, ascending
// reliability (entry 0 is the least reliable index).
std::span<const uint16_t, 1024> reliability_sequence_1024();

// Sequence restricted to indices < block_length, relative order preserved.
// block_length must be a power of two in [4, 1024].
std::vector<uint16_t> reliability_sequence(std::size_t block_length);

} // namespace polar
