#include "polar/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "json.hpp"
#include "polar/crc.hpp"
#include "polar/reliability.hpp"

namespace polar {

PolarCode::PolarCode(int n, int num_nonfrozen, int crc_len, uint32_t crc_poly) {
    if (n < 2 || n > 10)
        throw std::invalid_argument("n must be in [2, 10] (5G sequence covers N <= 1024)");
    const std::size_t N = std::size_t{1} << n;
    if (num_nonfrozen <= 0 || static_cast<std::size_t>(num_nonfrozen) > N)
        throw std::invalid_argument("K must satisfy 0 < K <= N");
    if (crc_len < 0 || crc_len >= num_nonfrozen)
        throw std::invalid_argument("crc_len must satisfy 0 <= C < K");

    n_ = n;
    num_nonfrozen_ = num_nonfrozen;
    crc_len_ = crc_len;
    crc_poly_ = crc_poly;

    const auto seq = reliability_sequence(N);
    frozen_mask_.assign(N, 1);
    for (std::size_t i = N - static_cast<std::size_t>(num_nonfrozen); i < N; ++i)
        frozen_mask_[seq[i]] = 0;
    finish_init();
}

PolarCode PolarCode::from_frozen_mask(std::vector<uint8_t> frozen_mask,
                                      int crc_len, uint32_t crc_poly) {
    const std::size_t N = frozen_mask.size();
    if (N < 4 || !std::has_single_bit(N))
        throw std::invalid_argument("mask size must be a power of two >= 4");
    PolarCode code;
    code.n_ = std::countr_zero(N);
    code.frozen_mask_ = std::move(frozen_mask);
    code.num_nonfrozen_ = static_cast<int>(
        std::count(code.frozen_mask_.begin(), code.frozen_mask_.end(), 0));
    if (code.num_nonfrozen_ == 0)
        throw std::invalid_argument("mask freezes every position");
    if (crc_len < 0 || crc_len >= code.num_nonfrozen_)
        throw std::invalid_argument("crc_len must satisfy 0 <= C < K");
    code.crc_len_ = crc_len;
    code.crc_poly_ = crc_poly;
    code.finish_init();
    return code;
}

void PolarCode::finish_init() {
    nonfrozen_.clear();
    nonfrozen_.reserve(static_cast<std::size_t>(num_nonfrozen_));
    for (std::size_t i = 0; i < frozen_mask_.size(); ++i)
        if (!frozen_mask_[i])
            nonfrozen_.push_back(static_cast<uint32_t>(i));
}

void PolarCode::polar_transform(std::span<uint8_t> bits) {
    const std::size_t N = bits.size();
    for (std::size_t step = 1; step < N; step <<= 1)
        for (std::size_t block = 0; block < N; block += 2 * step)
            for (std::size_t i = block; i < block + step; ++i)
                bits[i] ^= bits[i + step];
}

std::vector<uint8_t> PolarCode::make_u(std::span<const uint8_t> payload) const {
    if (static_cast<int>(payload.size()) != info_len())
        throw std::invalid_argument("payload length must equal info_len");
    std::vector<uint8_t> u(block_length(), 0);
    for (int i = 0; i < info_len(); ++i)
        u[nonfrozen_[static_cast<std::size_t>(i)]] = payload[static_cast<std::size_t>(i)] & 1u;
    if (crc_len_ > 0) {
        const auto crc = crc_compute(payload, crc_poly_, crc_len_);
        for (int i = 0; i < crc_len_; ++i)
            u[nonfrozen_[static_cast<std::size_t>(info_len() + i)]] = crc[static_cast<std::size_t>(i)];
    }
    return u;
}

std::vector<uint8_t> PolarCode::encode(std::span<const uint8_t> payload) const {
    auto x = make_u(payload);
    polar_transform(x);
    return x;
}

std::vector<uint8_t> PolarCode::extract_info(std::span<const uint8_t> u) const {
    std::vector<uint8_t> info(static_cast<std::size_t>(num_nonfrozen_));
    for (std::size_t i = 0; i < info.size(); ++i)
        info[i] = u[nonfrozen_[i]] & 1u;
    return info;
}

std::vector<uint8_t> PolarCode::extract_payload(std::span<const uint8_t> u) const {
    std::vector<uint8_t> payload(static_cast<std::size_t>(info_len()));
    for (std::size_t i = 0; i < payload.size(); ++i)
        payload[i] = u[nonfrozen_[i]] & 1u;
    return payload;
}

bool PolarCode::crc_check_u(std::span<const uint8_t> u) const {
    if (crc_len_ == 0)
        throw std::logic_error("code has no CRC");
    const auto info = extract_info(u);
    return crc_check(info, crc_poly_, crc_len_);
}

std::string PolarCode::descriptor_json() const {
    static const char* hex = "0123456789abcdef";
    std::string mask_hex;
    mask_hex.reserve(frozen_mask_.size() / 4);
    for (std::size_t i = 0; i < frozen_mask_.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t b = 0; b < 4; ++b)
            nibble = (nibble << 1) | (frozen_mask_[i + b] & 1u);
        mask_hex.push_back(hex[nibble]);
    }
    char poly_hex[16];
    std::snprintf(poly_hex, sizeof poly_hex, "0x%x", crc_poly_);
    nlohmann::json j{{"n", n_},
                     {"K", num_nonfrozen_},
                     {"crc_len", crc_len_},
                     {"crc_poly_hex", poly_hex},
                     {"frozen_mask_hex", mask_hex}};
    return j.dump();
}

} // namespace polar
