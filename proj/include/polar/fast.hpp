#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polar/code.hpp"
#include "polar/tree.hpp"

namespace polar {

// Fast node decoders over the node's top LLR vector. Bit-exact equivalents
// of min-sum SC traversal of the corresponding subtree.
void decode_rate1(std::span<const double> alpha, std::span<uint8_t> beta);
void decode_rep(std::span<const double> alpha, std::span<uint8_t> beta);
void decode_spc(std::span<const double> alpha, std::span<uint8_t> beta);

// One node-level flip hypothesis. eta is the index set named by the flip
// criterion; apply_* is the inversion applied to the node's natural decode
// output when the candidate is tried (for an odd-parity SPC node the
// criterion names a single index but the applied inversion also restores
// the index the parity fix already flipped, keeping parity even).
struct TopFlipCandidate {
    int node = -1;
    bool invert_all = false;                 // Rep: flip the whole node decision
    std::array<uint32_t, 2> eta{};           // node-local indices
    int eta_size = 0;
    std::array<uint32_t, 2> apply{};         // node-local β inversions
    int apply_size = 0;
    double metric = 0.0;
};

// Candidate generators; omega gates admission (inclusive compare).
std::optional<TopFlipCandidate> flip_candidates_rate1(std::span<const double> alpha,
                                                      double omega);
std::optional<TopFlipCandidate> flip_candidates_rep(std::span<const double> alpha,
                                                    double omega);
// Up to two candidates (second/third-minimum forms, in that order); nodes
// shorter than 4 yield none.
std::vector<TopFlipCandidate> flip_candidates_spc(std::span<const double> alpha,
                                                  double omega);

enum class FastFlipMode { Scf, Tscf };

struct FastResult {
    std::vector<uint8_t> hard_out;   // leaf-domain û
    long steps = 0;
};

struct FastFlipResult {
    std::vector<uint8_t> hard_out;
    int iterations = 0;
    long steps = 0;
    bool crc_pass = false;
};

// Pruned-tree SC decoder with node-level bit-flipping. One instance per
// thread; the tree is shared and immutable.
class FastDecoder {
public:
    FastDecoder(const PolarCode& code, const DecodeTree& tree);

    const FastResult& decode(std::span<const double> channel_llr);

    // Initial pass plus up to t_max single-candidate retries. SCF mode uses
    // an unbounded threshold and ascending-metric order; TSCF filters by
    // omega and tries candidates in order of appearance.
    FastFlipResult flip_decode(std::span<const double> channel_llr, FastFlipMode mode,
                               int t_max, double omega);

    // Candidates gathered from a single pass at the given threshold, in
    // order of appearance (no sorting, no truncation).
    std::vector<TopFlipCandidate> gather_candidates(std::span<const double> channel_llr,
                                                    double omega);

    const DecodeTree& tree() const { return *tree_; }

private:
    void run(std::span<const double> channel_llr);
    void decode_node(int id, const double* alpha, uint8_t* beta);
    void decode_special(const TreeNode& node, int id, const double* alpha, uint8_t* beta);

    const PolarCode* code_;
    const DecodeTree* tree_;
    int n_;
    std::size_t block_len_;
    std::vector<std::vector<double>> alpha_buf_;
    std::vector<std::vector<uint8_t>> beta_left_;
    std::vector<uint8_t> root_beta_;
    FastResult result_;

    bool collecting_ = false;
    double collect_omega_ = 0.0;
    std::vector<TopFlipCandidate> candidates_;
    int flip_node_ = -1;
    const TopFlipCandidate* flip_candidate_ = nullptr;
};

} // namespace polar
