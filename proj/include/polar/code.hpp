#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polar {

// Static polar code design: block length N = 2^n, K non-frozen positions
// taken as the most reliable indices of the 5G sequence, optional outer CRC
// occupying the last crc_len of the K non-frozen positions. Immutable after
// construction and safe to share across threads.
class PolarCode {
public:
    PolarCode(int n, int num_nonfrozen, int crc_len = 0, uint32_t crc_poly = 0x1021);

    // Builds a code from an explicit frozen mask (true = frozen). Mask size
    // must be a power of two >= 4.
    static PolarCode from_frozen_mask(std::vector<uint8_t> frozen_mask,
                                      int crc_len = 0, uint32_t crc_poly = 0x1021);

    int n() const { return n_; }
    std::size_t block_length() const { return frozen_mask_.size(); }
    int num_nonfrozen() const { return num_nonfrozen_; }     // K, CRC bits included
    int crc_len() const { return crc_len_; }
    uint32_t crc_poly() const { return crc_poly_; }
    int info_len() const { return num_nonfrozen_ - crc_len_; }
    double rate() const {
        return static_cast<double>(num_nonfrozen_) / static_cast<double>(block_length());
    }

    bool is_frozen(std::size_t i) const { return frozen_mask_[i] != 0; }
    const std::vector<uint8_t>& frozen_mask() const { return frozen_mask_; }
    // Non-frozen positions, ascending. Payload bits occupy the first
    // info_len of these, CRC bits the last crc_len.
    const std::vector<uint32_t>& nonfrozen_indices() const { return nonfrozen_; }

    // In-place polar transform x = u · G^⊗n as XOR butterfly stages.
    // Self-inverse over GF(2).
    static void polar_transform(std::span<uint8_t> bits);

    // Leaf-domain input vector u: payload ‖ CRC(payload) scattered into the
    // non-frozen positions, zeros elsewhere.
    std::vector<uint8_t> make_u(std::span<const uint8_t> payload) const;
    std::vector<uint8_t> encode(std::span<const uint8_t> payload) const;

    std::vector<uint8_t> extract_info(std::span<const uint8_t> u) const;    // K bits
    std::vector<uint8_t> extract_payload(std::span<const uint8_t> u) const; // info_len bits
    bool crc_check_u(std::span<const uint8_t> u) const;

    // {n, K, crc_len, crc_poly_hex, frozen_mask_hex}; frozen_mask packed
    // MSB-first (index 0 is the high bit of the first hex digit).
    std::string descriptor_json() const;

private:
    PolarCode() = default;
    void finish_init();

    int n_ = 0;
    int num_nonfrozen_ = 0;
    int crc_len_ = 0;
    uint32_t crc_poly_ = 0;
    std::vector<uint8_t> frozen_mask_;
    std::vector<uint32_t> nonfrozen_;
};

} // namespace polar
