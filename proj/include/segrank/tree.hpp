#pragma once

#include <span>
#include <vector>

namespace segrank {

/// One node of a least-squares regression tree. Leaves have split_var == -1.
struct TreeNode {
    int split_var = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double improvement = 0.0; // SSE(parent) - SSE(left) - SSE(right), on the training subsample
    double prediction = 0.0;  // leaf value (mean of targets in the node)

    bool is_leaf() const { return split_var < 0; }
};

struct RegressionTree {
    std::vector<TreeNode> nodes; // node 0 is the root; empty means predict 0

    /// Routing rule: go left iff features[split_var] < threshold. The same
    /// predicate partitions rows during fitting.
    double predict(std::span<const double> features) const {
        if (nodes.empty()) return 0.0;
        int i = 0;
        while (!nodes[static_cast<std::size_t>(i)].is_leaf()) {
            const TreeNode& nd = nodes[static_cast<std::size_t>(i)];
            i = features[static_cast<std::size_t>(nd.split_var)] < nd.threshold ? nd.left
                                                                                : nd.right;
        }
        return nodes[static_cast<std::size_t>(i)].prediction;
    }
};

} // namespace segrank
