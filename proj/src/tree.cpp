#include "polar/tree.hpp"

#include "json.hpp"

namespace polar {

const char* node_kind_name(NodeKind kind) {
    switch (kind) {
    case NodeKind::Rate0: return "Rate0";
    case NodeKind::Rate1: return "Rate1";
    case NodeKind::Rep: return "Rep";
    case NodeKind::Spc: return "SPC";
    case NodeKind::Branch: return "Branch";
    }
    return "?";
}

namespace {

NodeKind classify_span(const std::vector<uint8_t>& frozen, uint32_t lo, uint32_t hi) {
    std::size_t frozen_count = 0;
    for (uint32_t i = lo; i < hi; ++i)
        frozen_count += frozen[i] ? 1u : 0u;
    const std::size_t len = hi - lo;
    if (frozen_count == len)
        return NodeKind::Rate0;
    if (frozen_count == 0)
        return NodeKind::Rate1;
    if (len >= 2 && frozen_count == len - 1 && !frozen[hi - 1])
        return NodeKind::Rep;
    if (len >= 2 && frozen_count == 1 && frozen[lo])
        return NodeKind::Spc;
    return NodeKind::Branch;
}

} // namespace

DecodeTree::DecodeTree(const PolarCode& code) {
    nodes_.reserve(2 * code.block_length());
    build(code.frozen_mask(), 0, static_cast<uint32_t>(code.block_length()), code.n());
    for (const TreeNode& node : nodes_) {
        if (node.kind == NodeKind::Branch) {
            ++num_branch_;
            steps_per_iteration_ += 2;
        } else {
            ++num_special_;
            if (node.stage >= 1)
                steps_per_iteration_ += 1;
        }
    }
}

int DecodeTree::build(const std::vector<uint8_t>& frozen, uint32_t lo, uint32_t hi,
                      int stage) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({stage, lo, hi, classify_span(frozen, lo, hi), -1, -1});
    if (nodes_[static_cast<std::size_t>(id)].kind == NodeKind::Branch) {
        const uint32_t mid = lo + (hi - lo) / 2;
        const int left = build(frozen, lo, mid, stage - 1);
        const int right = build(frozen, mid, hi, stage - 1);
        nodes_[static_cast<std::size_t>(id)].left = left;
        nodes_[static_cast<std::size_t>(id)].right = right;
    }
    return id;
}

std::string DecodeTree::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const TreeNode& node : nodes_)
        arr.push_back({{"stage", node.stage},
                       {"span", {node.lo, node.hi}},
                       {"kind", node_kind_name(node.kind)}});
    return arr.dump();
}

} // namespace polar
