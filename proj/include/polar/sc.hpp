#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "polar/code.hpp"

namespace polar {

// Min-sum check-node update: sign(a)·sign(b)·min(|a|,|b|).
inline double f_kernel(double a, double b) {
    const double m = std::min(std::fabs(a), std::fabs(b));
    return (a < 0) == (b < 0) ? m : -m;
}

// Variable-node update under partial sum beta.
inline double g_kernel(double a, double b, uint8_t beta) {
    return beta ? b - a : b + a;
}

// Partial-sum combine: out = [bl ^ br, br].
void combine(std::span<const uint8_t> beta_left, std::span<const uint8_t> beta_right,
             std::span<uint8_t> out);

// Working state of one SC pass. leaf_llr[i] is the decision LLR seen at
// leaf i; hard_out is the leaf-domain estimate û.
struct LlrFrame {
    std::vector<double> channel_llr;
    std::vector<double> leaf_llr;
    std::vector<uint8_t> hard_out;

    double leaf_llr_of(std::size_t i) const;
};

struct OracleOutcome {
    bool success = false;    // hard_out == true_u after at most one correction
    bool corrected = false;
    uint32_t corrected_index = 0;
};

// Depth-first left-first successive cancellation over double LLRs. One
// instance owns its stage buffers; use one instance per thread.
class ScDecoder {
public:
    explicit ScDecoder(const PolarCode& code);

    const LlrFrame& decode(std::span<const double> channel_llr);

    // SC pass where û at every leaf in flip_set is inverted relative to its
    // natural decision; later leaves re-estimated under the flipped partial
    // sums. flip_set must contain only non-frozen indices.
    const LlrFrame& decode_flipped(std::span<const double> channel_llr,
                                   std::span<const uint32_t> flip_set);

    // Genie pass: forces the first wrong non-frozen decision to the true
    // value, at most once, then continues normally.
    OracleOutcome decode_oracle(std::span<const double> channel_llr,
                                std::span<const uint8_t> true_u);

    const LlrFrame& frame() const { return frame_; }
    // Codeword-domain β at the root from the last pass (equals encode(û)).
    std::span<const uint8_t> codeword() const { return root_beta_; }
    const PolarCode& code() const { return *code_; }

private:
    enum class Mode { Plain, Flip, Oracle };

    void run(std::span<const double> channel_llr);
    void decode_node(int stage, std::size_t base, const double* alpha, uint8_t* beta);
    uint8_t decide_leaf(std::size_t index, double alpha);

    const PolarCode* code_;
    int n_;
    std::size_t block_len_;
    std::vector<std::vector<double>> alpha_buf_;   // child LLRs per stage
    std::vector<std::vector<uint8_t>> beta_left_;  // left-child partial sums per stage
    std::vector<uint8_t> root_beta_;
    LlrFrame frame_;

    Mode mode_ = Mode::Plain;
    std::span<const uint32_t> flip_set_;
    std::span<const uint8_t> true_u_;
    bool oracle_used_ = false;
    uint32_t oracle_index_ = 0;
};

// One-shot conveniences.
LlrFrame sc_decode(const PolarCode& code, std::span<const double> channel_llr);
std::pair<LlrFrame, bool> sc_oracle_decode(const PolarCode& code,
                                           std::span<const double> channel_llr,
                                           std::span<const uint8_t> true_u);

} // namespace polar
