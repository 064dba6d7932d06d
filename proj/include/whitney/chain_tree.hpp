#ifndef WHITNEY_CHAIN_TREE_HPP
#define WHITNEY_CHAIN_TREE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "whitney/poset.hpp"

namespace whitney {

// Every saturated chain that starts at the bottom element, stored as a prefix tree.
// Nodes are numbered breadth-first, so each length occupies a contiguous id range and
// the children of a node are contiguous and sorted by their top element.
class ChainTree {
public:
    using NodeId = std::uint32_t;
    static constexpr NodeId npos = ~NodeId{0};
    static constexpr std::size_t kDefaultCap = 2'000'000;

    // Throws SizeLimit when more than `cap` chains exist.
    static ChainTree build(const Poset& P, std::size_t cap = kDefaultCap);

    std::size_t size() const { return parent_.size(); }
    NodeId parent(NodeId v) const { return parent_[v]; }
    ElementId top(NodeId v) const { return top_[v]; }
    int length(NodeId v) const { return length_[v]; }
    int max_length() const { return static_cast<int>(level_begin_.size()) - 2; }
    NodeId level_begin(int k) const { return level_begin_[k]; }
    NodeId level_end(int k) const { return level_begin_[k + 1]; }
    NodeId child_begin(NodeId v) const { return child_begin_[v]; }
    NodeId child_end(NodeId v) const { return child_begin_[v] + child_count_[v]; }
    NodeId child(NodeId v, ElementId z) const;
    bool is_maximal(NodeId v) const { return child_count_[v] == 0; }

    SaturatedChain chain(NodeId v) const;
    void chain_into(NodeId v, SaturatedChain& out) const;
    std::optional<NodeId> find(std::span<const ElementId> chain) const;
    ElementId bottom() const { return top_[0]; }

    // Ids of all nodes whose chain cannot be extended.
    std::vector<NodeId> maximal_nodes() const;

private:
    std::vector<NodeId> parent_;
    std::vector<ElementId> top_;
    std::vector<int> length_;
    std::vector<NodeId> child_begin_;
    std::vector<std::uint32_t> child_count_;
    std::vector<NodeId> level_begin_;
};

} // namespace whitney

#endif
