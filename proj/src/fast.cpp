#include "polar/fast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "polar/sc.hpp"

namespace polar {

void decode_rate1(std::span<const double> alpha, std::span<uint8_t> beta) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        beta[i] = alpha[i] < 0 ? 1 : 0;
}

void decode_rep(std::span<const double> alpha, std::span<uint8_t> beta) {
    double sum = 0.0;
    for (double a : alpha)
        sum += a;
    const uint8_t bit = sum < 0 ? 1 : 0;
    std::fill(beta.begin(), beta.end(), bit);
}

void decode_spc(std::span<const double> alpha, std::span<uint8_t> beta) {
    uint8_t parity = 0;
    std::size_t min_idx = 0;
    double min_mag = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const uint8_t bit = alpha[i] < 0 ? 1 : 0;
        beta[i] = bit;
        parity ^= bit;
        const double mag = std::fabs(alpha[i]);
        if (mag < min_mag) {
            min_mag = mag;
            min_idx = i;
        }
    }
    if (parity)
        beta[min_idx] ^= 1;
}

std::optional<TopFlipCandidate> flip_candidates_rate1(std::span<const double> alpha,
                                                      double omega) {
    std::size_t min_idx = 0;
    double min_mag = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const double mag = std::fabs(alpha[i]);
        if (mag < min_mag) {
            min_mag = mag;
            min_idx = i;
        }
    }
    if (!(min_mag <= omega))
        return std::nullopt;
    TopFlipCandidate c;
    c.eta = {static_cast<uint32_t>(min_idx), 0};
    c.eta_size = 1;
    c.apply = c.eta;
    c.apply_size = 1;
    c.metric = min_mag;
    return c;
}

std::optional<TopFlipCandidate> flip_candidates_rep(std::span<const double> alpha,
                                                    double omega) {
    double sum = 0.0;
    for (double a : alpha)
        sum += a;
    const double mag = std::fabs(sum);
    if (!(mag <= omega))
        return std::nullopt;
    TopFlipCandidate c;
    c.invert_all = true;
    c.metric = mag;
    return c;
}

std::vector<TopFlipCandidate> flip_candidates_spc(std::span<const double> alpha,
                                                  double omega) {
    std::vector<TopFlipCandidate> out;
    if (alpha.size() < 4)
        return out;

    // Three smallest magnitudes, ties resolved by lowest index.
    std::array<std::size_t, 3> idx{0, 0, 0};
    std::array<double, 3> mag{std::numeric_limits<double>::infinity(),
                              std::numeric_limits<double>::infinity(),
                              std::numeric_limits<double>::infinity()};
    uint8_t parity = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        parity ^= alpha[i] < 0 ? 1 : 0;
        const double m = std::fabs(alpha[i]);
        if (m < mag[0]) {
            mag = {m, mag[0], mag[1]};
            idx = {i, idx[0], idx[1]};
        } else if (m < mag[1]) {
            mag = {mag[0], m, mag[1]};
            idx = {idx[0], i, idx[1]};
        } else if (m < mag[2]) {
            mag[2] = m;
            idx[2] = i;
        }
    }

    const auto make = [&](std::size_t j) {
        TopFlipCandidate c;
        if (parity) {
            // Criterion names the j-th minimum alone; applying it moves the
            // flip from the parity-fix position to that index.
            if (!(mag[j] <= omega))
                return false;
            c.eta = {static_cast<uint32_t>(idx[j]), 0};
            c.eta_size = 1;
            c.metric = mag[j];
        } else {
            if (!(mag[0] + mag[j] <= omega))
                return false;
            c.eta = {static_cast<uint32_t>(idx[0]), static_cast<uint32_t>(idx[j])};
            c.eta_size = 2;
            c.metric = mag[0] + mag[j];
        }
        c.apply = {static_cast<uint32_t>(idx[0]), static_cast<uint32_t>(idx[j])};
        c.apply_size = 2;
        out.push_back(c);
        return true;
    };
    make(1);
    make(2);
    return out;
}

FastDecoder::FastDecoder(const PolarCode& code, const DecodeTree& tree)
    : code_(&code), tree_(&tree), n_(code.n()), block_len_(code.block_length()) {
    alpha_buf_.resize(static_cast<std::size_t>(n_));
    beta_left_.resize(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
        alpha_buf_[static_cast<std::size_t>(s)].resize(std::size_t{1} << s);
        beta_left_[static_cast<std::size_t>(s)].resize(std::size_t{1} << s);
    }
    root_beta_.resize(block_len_);
    result_.hard_out.resize(block_len_);
}

const FastResult& FastDecoder::decode(std::span<const double> channel_llr) {
    collecting_ = false;
    flip_node_ = -1;
    flip_candidate_ = nullptr;
    run(channel_llr);
    return result_;
}

std::vector<TopFlipCandidate> FastDecoder::gather_candidates(
    std::span<const double> channel_llr, double omega) {
    collecting_ = true;
    collect_omega_ = omega;
    candidates_.clear();
    flip_node_ = -1;
    flip_candidate_ = nullptr;
    run(channel_llr);
    collecting_ = false;
    return candidates_;
}

FastFlipResult FastDecoder::flip_decode(std::span<const double> channel_llr,
                                        FastFlipMode mode, int t_max, double omega) {
    if (code_->crc_len() == 0)
        throw std::invalid_argument("flip decoding requires a CRC");
    if (t_max < 0)
        throw std::invalid_argument("t_max must be >= 0");

    FastFlipResult res;
    collecting_ = true;
    collect_omega_ = mode == FastFlipMode::Scf
                         ? std::numeric_limits<double>::infinity()
                         : omega;
    candidates_.clear();
    flip_node_ = -1;
    flip_candidate_ = nullptr;
    run(channel_llr);
    collecting_ = false;

    res.iterations = 1;
    res.hard_out = result_.hard_out;
    if (code_->crc_check_u(result_.hard_out)) {
        res.crc_pass = true;
        res.steps = res.iterations * tree_->steps_per_iteration();
        return res;
    }

    auto plan = std::move(candidates_);
    if (mode == FastFlipMode::Scf)
        std::stable_sort(plan.begin(), plan.end(),
                         [](const TopFlipCandidate& a, const TopFlipCandidate& b) {
                             return a.metric < b.metric;
                         });
    if (static_cast<int>(plan.size()) > t_max)
        plan.resize(static_cast<std::size_t>(t_max));

    for (const TopFlipCandidate& cand : plan) {
        flip_node_ = cand.node;
        flip_candidate_ = &cand;
        run(channel_llr);
        ++res.iterations;
        if (code_->crc_check_u(result_.hard_out)) {
            res.hard_out = result_.hard_out;
            res.crc_pass = true;
            break;
        }
    }
    flip_node_ = -1;
    flip_candidate_ = nullptr;
    res.steps = res.iterations * tree_->steps_per_iteration();
    return res;
}

void FastDecoder::run(std::span<const double> channel_llr) {
    if (channel_llr.size() != block_len_)
        throw std::invalid_argument("channel LLR length mismatch");
    decode_node(tree_->root(), channel_llr.data(), root_beta_.data());
    // û recovered by re-encoding the codeword-domain β (transform is an
    // involution).
    std::copy(root_beta_.begin(), root_beta_.end(), result_.hard_out.begin());
    PolarCode::polar_transform(result_.hard_out);
    result_.steps = tree_->steps_per_iteration();
}

void FastDecoder::decode_node(int id, const double* alpha, uint8_t* beta) {
    const TreeNode& node = tree_->nodes()[static_cast<std::size_t>(id)];
    if (node.kind != NodeKind::Branch) {
        decode_special(node, id, alpha, beta);
        return;
    }
    const std::size_t half = std::size_t{1} << (node.stage - 1);
    double* child = alpha_buf_[static_cast<std::size_t>(node.stage - 1)].data();
    uint8_t* bl = beta_left_[static_cast<std::size_t>(node.stage - 1)].data();

    for (std::size_t i = 0; i < half; ++i)
        child[i] = f_kernel(alpha[i], alpha[i + half]);
    decode_node(node.left, child, bl);

    for (std::size_t i = 0; i < half; ++i)
        child[i] = g_kernel(alpha[i], alpha[i + half], bl[i]);
    decode_node(node.right, child, beta + half);

    for (std::size_t i = 0; i < half; ++i)
        beta[i] = bl[i] ^ beta[i + half];
}

void FastDecoder::decode_special(const TreeNode& node, int id, const double* alpha,
                                 uint8_t* beta) {
    const std::size_t len = node.hi - node.lo;
    const std::span<const double> a(alpha, len);
    const std::span<uint8_t> b(beta, len);

    switch (node.kind) {
    case NodeKind::Rate0:
        std::fill(b.begin(), b.end(), uint8_t{0});
        return;   // no flip candidates, never a flip target
    case NodeKind::Rate1:
        decode_rate1(a, b);
        if (collecting_)
            if (auto c = flip_candidates_rate1(a, collect_omega_)) {
                c->node = id;
                candidates_.push_back(*c);
            }
        break;
    case NodeKind::Rep:
        decode_rep(a, b);
        if (collecting_)
            if (auto c = flip_candidates_rep(a, collect_omega_)) {
                c->node = id;
                candidates_.push_back(*c);
            }
        break;
    case NodeKind::Spc:
        decode_spc(a, b);
        if (collecting_)
            for (auto c : flip_candidates_spc(a, collect_omega_)) {
                c.node = id;
                candidates_.push_back(c);
            }
        break;
    case NodeKind::Branch:
        break;
    }

    if (id == flip_node_ && flip_candidate_) {
        const TopFlipCandidate& c = *flip_candidate_;
        if (c.invert_all)
            for (uint8_t& bit : b)
                bit ^= 1;
        else
            for (int k = 0; k < c.apply_size; ++k)
                b[c.apply[static_cast<std::size_t>(k)]] ^= 1;
    }
}

} // namespace polar
