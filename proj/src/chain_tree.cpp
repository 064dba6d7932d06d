#include "whitney/chain_tree.hpp"

#include <algorithm>

namespace whitney {

ChainTree ChainTree::build(const Poset& P, std::size_t cap) {
    ChainTree T;
    T.parent_.push_back(npos);
    T.top_.push_back(P.bottom());
    T.length_.push_back(0);
    T.level_begin_.push_back(0);
    int current = 0;
    for (std::size_t v = 0; v < T.parent_.size(); ++v) {
        if (T.length_[v] != current) {
            T.level_begin_.push_back(static_cast<NodeId>(v));
            current = T.length_[v];
        }
        T.child_begin_.push_back(static_cast<NodeId>(T.parent_.size()));
        auto ups = P.up(T.top_[v]);
        T.child_count_.push_back(static_cast<std::uint32_t>(ups.size()));
        if (T.parent_.size() + ups.size() > cap)
            throw WhitneyError(ErrorKind::SizeLimit,
                               "more than " + std::to_string(cap) + " saturated chains from the bottom");
        for (ElementId z : ups) {
            T.parent_.push_back(static_cast<NodeId>(v));
            T.top_.push_back(z);
            T.length_.push_back(T.length_[v] + 1);
        }
    }
    T.level_begin_.push_back(static_cast<NodeId>(T.parent_.size()));
    return T;
}

ChainTree::NodeId ChainTree::child(NodeId v, ElementId z) const {
    auto first = top_.begin() + child_begin(v);
    auto last = top_.begin() + child_end(v);
    auto it = std::lower_bound(first, last, z);
    if (it == last || *it != z) return npos;
    return static_cast<NodeId>(it - top_.begin());
}

void ChainTree::chain_into(NodeId v, SaturatedChain& out) const {
    out.resize(static_cast<std::size_t>(length_[v]) + 1);
    for (NodeId u = v;; u = parent_[u]) {
        out[length_[u]] = top_[u];
        if (u == 0) break;
    }
}

SaturatedChain ChainTree::chain(NodeId v) const {
    SaturatedChain c;
    chain_into(v, c);
    return c;
}

std::optional<ChainTree::NodeId> ChainTree::find(std::span<const ElementId> chain) const {
    if (chain.empty() || chain[0] != top_[0]) return std::nullopt;
    NodeId v = 0;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        v = child(v, chain[i]);
        if (v == npos) return std::nullopt;
    }
    return v;
}

std::vector<ChainTree::NodeId> ChainTree::maximal_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < size(); ++v)
        if (child_count_[v] == 0) out.push_back(v);
    return out;
}

} // namespace whitney
