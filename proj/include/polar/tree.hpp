#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polar/code.hpp"

namespace polar {

enum class NodeKind { Rate0, Rate1, Rep, Spc, Branch };

const char* node_kind_name(NodeKind kind);

struct TreeNode {
    int stage = 0;          // node length is 2^stage
    uint32_t lo = 0;        // leaf span [lo, hi)
    uint32_t hi = 0;
    NodeKind kind = NodeKind::Branch;
    int left = -1;
    int right = -1;
};

// Pruned decode tree: maximal special nodes become leaves, everything else
// recurses as Branch. Degenerate 2-leaf [frozen, non-frozen] nodes classify
// as Rep. Immutable and shareable.
class DecodeTree {
public:
    explicit DecodeTree(const PolarCode& code);

    const std::vector<TreeNode>& nodes() const { return nodes_; }
    int root() const { return 0; }
    int num_branch() const { return num_branch_; }
    int num_special() const { return num_special_; }

    // Latency units for one full pruned traversal: 2 per Branch node (one
    // f phase, one g phase) plus 1 per special leaf of length >= 2. Leaf
    // decisions at stage 0 are absorbed into the parent phases, so an
    // entirely unpruned tree costs 2N - 2.
    long steps_per_iteration() const { return steps_per_iteration_; }

    // JSON list of {stage, span, kind} in depth-first order.
    std::string to_json() const;

private:
    int build(const std::vector<uint8_t>& frozen, uint32_t lo, uint32_t hi, int stage);

    std::vector<TreeNode> nodes_;
    int num_branch_ = 0;
    int num_special_ = 0;
    long steps_per_iteration_ = 0;
};

} // namespace polar
