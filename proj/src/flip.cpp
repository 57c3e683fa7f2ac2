#include "polar/flip.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polar {

namespace {

void collect_rate1_heads(std::span<const uint8_t> frozen, std::size_t lo,
                         std::size_t hi, std::vector<uint32_t>& out) {
    bool any_frozen = false;
    for (std::size_t i = lo; i < hi; ++i)
        if (frozen[i]) {
            any_frozen = true;
            break;
        }
    if (!any_frozen) {
        out.push_back(static_cast<uint32_t>(lo));
        return;
    }
    if (hi - lo == 1)
        return;
    const std::size_t mid = lo + (hi - lo) / 2;
    collect_rate1_heads(frozen, lo, mid, out);
    collect_rate1_heads(frozen, mid, hi, out);
}

} // namespace

std::vector<uint32_t> build_critical_set(std::span<const uint8_t> frozen_mask) {
    std::vector<uint32_t> cs;
    if (!frozen_mask.empty())
        collect_rate1_heads(frozen_mask, 0, frozen_mask.size(), cs);
    return cs;
}

std::vector<uint32_t> build_critical_set(const PolarCode& code) {
    return build_critical_set(code.frozen_mask());
}

FlipPlan build_scf_plan(const PolarCode& code, const LlrFrame& frame, int t_max) {
    FlipPlan plan;
    plan.t_max = t_max;
    std::vector<std::pair<double, uint32_t>> ranked;
    ranked.reserve(code.nonfrozen_indices().size());
    for (uint32_t i : code.nonfrozen_indices())
        ranked.emplace_back(std::fabs(frame.leaf_llr[i]), i);
    std::sort(ranked.begin(), ranked.end());
    const std::size_t count = std::min<std::size_t>(ranked.size(),
                                                    static_cast<std::size_t>(std::max(t_max, 0)));
    plan.candidates.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        plan.candidates.push_back({{ranked[k].second}, ranked[k].first});
    return plan;
}

FlipPlan build_tscf_plan(const PolarCode& code, const LlrFrame& frame,
                         std::span<const uint32_t> critical_set, double omega,
                         int t_max) {
    FlipPlan plan;
    plan.t_max = t_max;
    for (uint32_t i : critical_set) {
        if (code.is_frozen(i))
            throw std::invalid_argument("critical set contains a frozen index");
        if (static_cast<int>(plan.candidates.size()) >= t_max)
            break;
        const double mag = std::fabs(frame.leaf_llr[i]);
        if (mag <= omega)
            plan.candidates.push_back({{i}, mag});
    }
    return plan;
}

FlipDecoder::FlipDecoder(const PolarCode& code, int t_max)
    : code_(&code), t_max_(t_max), sc_(code), critical_set_(build_critical_set(code)) {
    if (code.crc_len() == 0)
        throw std::invalid_argument("flip decoding requires a CRC");
    if (t_max < 0)
        throw std::invalid_argument("t_max must be >= 0");
}

FlipResult FlipDecoder::decode_scf(std::span<const double> channel_llr) {
    return run(channel_llr, false, 0.0);
}

FlipResult FlipDecoder::decode_tscf(std::span<const double> channel_llr, double omega) {
    return run(channel_llr, true, omega);
}

FlipResult FlipDecoder::run(std::span<const double> channel_llr, bool thresholded,
                            double omega) {
    FlipResult res;
    const LlrFrame& first = sc_.decode(channel_llr);
    res.iterations = 1;
    if (code_->crc_check_u(first.hard_out)) {
        res.hard_out = first.hard_out;
        res.crc_pass = true;
        return res;
    }

    FlipPlan plan = thresholded
                        ? build_tscf_plan(*code_, first, critical_set_, omega, t_max_)
                        : build_scf_plan(*code_, first, t_max_);
    res.hard_out = first.hard_out;

    for (; plan.cursor < plan.candidates.size(); ++plan.cursor) {
        const auto& target = plan.candidates[plan.cursor];
        const LlrFrame& retry = sc_.decode_flipped(channel_llr, target.leaves);
        ++res.iterations;
        if (code_->crc_check_u(retry.hard_out)) {
            res.hard_out = retry.hard_out;
            res.crc_pass = true;
            return res;
        }
    }
    return res;
}

FlipResult scf_decode(const PolarCode& code, std::span<const double> channel_llr, int t_max) {
    FlipDecoder dec(code, t_max);
    return dec.decode_scf(channel_llr);
}

FlipResult tscf_decode(const PolarCode& code, std::span<const double> channel_llr,
                       int t_max, double omega) {
    FlipDecoder dec(code, t_max);
    return dec.decode_tscf(channel_llr, omega);
}

LlrFrame flip_and_redecode(const PolarCode& code, std::span<const double> channel_llr,
                           std::span<const uint32_t> flip_set) {
    ScDecoder dec(code);
    return dec.decode_flipped(channel_llr, flip_set);
}

} // namespace polar
