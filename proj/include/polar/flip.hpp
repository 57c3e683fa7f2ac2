#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polar/code.hpp"
#include "polar/sc.hpp"

namespace polar {

// Approximated LLR threshold Ω*(x) = 2(x + 3), x = Eb/N0 in dB.
inline double omega_star(double ebn0_db) { return 2.0 * (ebn0_db + 3.0); }

// First leaf index of every maximal all-non-frozen subtree of the decode
// tree (a lone non-frozen leaf counts as a size-1 subtree). Sorted ascending;
// pure function of the frozen mask. An all-frozen mask yields the empty set.
std::vector<uint32_t> build_critical_set(std::span<const uint8_t> frozen_mask);
std::vector<uint32_t> build_critical_set(const PolarCode& code);

// Ordered flip agenda. Targets are leaf-index sets (singletons for the
// leaf-level decoders); cursor marks the next untried candidate.
struct FlipPlan {
    struct Target {
        std::vector<uint32_t> leaves;
        double metric = 0.0;
    };
    std::vector<Target> candidates;
    std::size_t cursor = 0;
    int t_max = 0;
};

// SCF agenda: every non-frozen leaf, |LLR| ascending (ties by index),
// truncated to t_max.
FlipPlan build_scf_plan(const PolarCode& code, const LlrFrame& frame, int t_max);

// TSCF agenda: critical-set leaves with |LLR| <= omega, in order of
// appearance, truncated to t_max. LLRs come from the initial failed pass;
// the plan is fixed before any retry.
FlipPlan build_tscf_plan(const PolarCode& code, const LlrFrame& frame,
                         std::span<const uint32_t> critical_set, double omega,
                         int t_max);

struct FlipResult {
    std::vector<uint8_t> hard_out;
    int iterations = 0;   // SC passes performed, in [1, 1 + t_max]
    bool crc_pass = false;
};

// Leaf-granularity SC-Flip / Thresholded SC-Flip. The code must carry a CRC.
class FlipDecoder {
public:
    FlipDecoder(const PolarCode& code, int t_max);

    FlipResult decode_scf(std::span<const double> channel_llr);
    // omega < 0 selects omega_star at decode time via decode_tscf_auto.
    FlipResult decode_tscf(std::span<const double> channel_llr, double omega);

    const std::vector<uint32_t>& critical_set() const { return critical_set_; }

private:
    FlipResult run(std::span<const double> channel_llr, bool thresholded, double omega);

    const PolarCode* code_;
    int t_max_;
    ScDecoder sc_;
    std::vector<uint32_t> critical_set_;
};

// One-shot conveniences mirroring the decoder methods.
FlipResult scf_decode(const PolarCode& code, std::span<const double> channel_llr, int t_max);
FlipResult tscf_decode(const PolarCode& code, std::span<const double> channel_llr,
                       int t_max, double omega);

// SC pass with the given non-frozen leaves inverted relative to their
// natural decisions; stateless.
LlrFrame flip_and_redecode(const PolarCode& code, std::span<const double> channel_llr,
                           std::span<const uint32_t> flip_set);

} // namespace polar
