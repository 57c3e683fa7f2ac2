#include "polar/sc.hpp"

#include <algorithm>
#include <stdexcept>

namespace polar {

void combine(std::span<const uint8_t> beta_left, std::span<const uint8_t> beta_right,
             std::span<uint8_t> out) {
    if (beta_left.size() != beta_right.size() || out.size() != 2 * beta_left.size())
        throw std::invalid_argument("combine: size mismatch");
    const std::size_t half = beta_left.size();
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = beta_left[i] ^ beta_right[i];
        out[i + half] = beta_right[i];
    }
}

double LlrFrame::leaf_llr_of(std::size_t i) const {
    if (i >= leaf_llr.size())
        throw std::out_of_range("leaf index out of range");
    return leaf_llr[i];
}

ScDecoder::ScDecoder(const PolarCode& code)
    : code_(&code), n_(code.n()), block_len_(code.block_length()) {
    alpha_buf_.resize(static_cast<std::size_t>(n_));
    beta_left_.resize(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
        alpha_buf_[static_cast<std::size_t>(s)].resize(std::size_t{1} << s);
        beta_left_[static_cast<std::size_t>(s)].resize(std::size_t{1} << s);
    }
    root_beta_.resize(block_len_);
    frame_.channel_llr.resize(block_len_);
    frame_.leaf_llr.resize(block_len_);
    frame_.hard_out.resize(block_len_);
}

const LlrFrame& ScDecoder::decode(std::span<const double> channel_llr) {
    mode_ = Mode::Plain;
    run(channel_llr);
    return frame_;
}

const LlrFrame& ScDecoder::decode_flipped(std::span<const double> channel_llr,
                                          std::span<const uint32_t> flip_set) {
    for (uint32_t i : flip_set)
        if (i >= block_len_ || code_->is_frozen(i))
            throw std::invalid_argument("flip index frozen or out of range");
    mode_ = Mode::Flip;
    flip_set_ = flip_set;
    run(channel_llr);
    return frame_;
}

OracleOutcome ScDecoder::decode_oracle(std::span<const double> channel_llr,
                                       std::span<const uint8_t> true_u) {
    if (true_u.size() != block_len_)
        throw std::invalid_argument("true_u length mismatch");
    mode_ = Mode::Oracle;
    true_u_ = true_u;
    oracle_used_ = false;
    oracle_index_ = 0;
    run(channel_llr);
    OracleOutcome out;
    out.corrected = oracle_used_;
    out.corrected_index = oracle_index_;
    out.success = std::equal(frame_.hard_out.begin(), frame_.hard_out.end(), true_u.begin());
    return out;
}

void ScDecoder::run(std::span<const double> channel_llr) {
    if (channel_llr.size() != block_len_)
        throw std::invalid_argument("channel LLR length mismatch");
    std::copy(channel_llr.begin(), channel_llr.end(), frame_.channel_llr.begin());
    decode_node(n_, 0, frame_.channel_llr.data(), root_beta_.data());
}

uint8_t ScDecoder::decide_leaf(std::size_t index, double alpha) {
    frame_.leaf_llr[index] = alpha;
    uint8_t bit;
    if (code_->is_frozen(index)) {
        bit = 0;
    } else {
        bit = alpha < 0 ? 1 : 0;
        switch (mode_) {
        case Mode::Plain:
            break;
        case Mode::Flip:
            for (uint32_t f : flip_set_)
                if (f == index) {
                    bit ^= 1;
                    break;
                }
            break;
        case Mode::Oracle:
            if (!oracle_used_ && bit != true_u_[index]) {
                bit = true_u_[index];
                oracle_used_ = true;
                oracle_index_ = static_cast<uint32_t>(index);
            }
            break;
        }
    }
    frame_.hard_out[index] = bit;
    return bit;
}

void ScDecoder::decode_node(int stage, std::size_t base, const double* alpha, uint8_t* beta) {
    if (stage == 0) {
        beta[0] = decide_leaf(base, alpha[0]);
        return;
    }
    const std::size_t half = std::size_t{1} << (stage - 1);
    double* child = alpha_buf_[static_cast<std::size_t>(stage - 1)].data();
    uint8_t* bl = beta_left_[static_cast<std::size_t>(stage - 1)].data();

    for (std::size_t i = 0; i < half; ++i)
        child[i] = f_kernel(alpha[i], alpha[i + half]);
    decode_node(stage - 1, base, child, bl);

    for (std::size_t i = 0; i < half; ++i)
        child[i] = g_kernel(alpha[i], alpha[i + half], bl[i]);
    decode_node(stage - 1, base + half, child, beta + half);

    for (std::size_t i = 0; i < half; ++i)
        beta[i] = bl[i] ^ beta[i + half];
}

LlrFrame sc_decode(const PolarCode& code, std::span<const double> channel_llr) {
    ScDecoder dec(code);
    return dec.decode(channel_llr);
}

std::pair<LlrFrame, bool> sc_oracle_decode(const PolarCode& code,
                                           std::span<const double> channel_llr,
                                           std::span<const uint8_t> true_u) {
    ScDecoder dec(code);
    const auto outcome = dec.decode_oracle(channel_llr, true_u);
    return {dec.frame(), outcome.success};
}

} // namespace polar
