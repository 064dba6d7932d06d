#ifndef WHITNEY_DUAL_HPP
#define WHITNEY_DUAL_HPP

#include <memory>
#include <vector>

#include "whitney/chain_tree.hpp"
#include "whitney/labeling.hpp"
#include "whitney/verify.hpp"

namespace whitney {

// Saturated chains from the bottom ordered by extension. Element ids are tree node ids.
struct ChainPoset {
    Poset poset;
    std::shared_ptr<const ChainTree> tree;
};

// Throws SizeLimit above `chain_cap` chains.
ChainPoset chain_poset(const Poset& P, std::size_t chain_cap = ChainTree::kDefaultCap);

enum class ClassStrategy { NormalForm, UnionFind, CrossCheck };

// Partition of bottom chains into connected components of the exchange graph.
struct ExchangeClasses {
    std::shared_ptr<const ChainTree> tree;
    std::vector<std::uint32_t> class_of;  // per tree node; npos above the requested length
    std::size_t count = 0;
    std::vector<ChainTree::NodeId> first_member;  // per class, smallest node id
    static constexpr std::uint32_t npos = ~std::uint32_t{0};
};

// Classes are numbered by their smallest member node, so both strategies give identical vectors.
// Throws ClassMismatch when CrossCheck finds a disagreement.
ExchangeClasses exchange_classes(const Poset& P, const Labeling& lab, int up_to_length = -1,
                                 ClassStrategy strategy = ClassStrategy::NormalForm,
                                 std::size_t chain_cap = ChainTree::kDefaultCap);
ExchangeClasses exchange_classes(const Poset& P, const Labeling& lab, std::shared_ptr<const ChainTree> tree,
                                 int up_to_length, ClassStrategy strategy);

namespace kernels {
// Sink (ascent-free normal form) node of every tree node in [begin, end).
std::vector<ChainTree::NodeId> sink_nodes_serial(const Poset& P, const Labeling& lab, const ChainTree& T,
                                                 ChainTree::NodeId begin, ChainTree::NodeId end);
std::vector<ChainTree::NodeId> sink_nodes_omp(const Poset& P, const Labeling& lab, const ChainTree& T,
                                              ChainTree::NodeId begin, ChainTree::NodeId end);
} // namespace kernels

struct DualOptions {
    bool assume_verified = false;
    bool cross_check = false;
    std::size_t chain_cap = ChainTree::kDefaultCap;
    CancellativeOptions cancellative{};
};

struct QuotientPoset {
    Poset poset;
    std::shared_ptr<EdgeLabeling> dual_labeling;
    std::shared_ptr<const ChainTree> tree;
    std::vector<ElementId> node_class;               // tree node -> element of the quotient
    std::vector<ElementId> endpoint;                 // element -> endpoint in P
    std::vector<LabelWord> canonical_word;           // element -> sorted word of its members
    std::vector<ChainTree::NodeId> representative;   // element -> ascent-free member (first member if none)
    std::vector<std::size_t> class_size;
    std::vector<std::size_t> ascent_free_members;
    WhitneyVerdict verdict;
};

QuotientPoset build_Q(const Poset& P, const Labeling& lab, const DualOptions& opt = {});

struct RPoset {
    Poset poset;
    std::vector<ElementId> element;
    std::vector<LabelWord> word;
    std::vector<SaturatedChain> chain;  // the ascent-free chain realising (element, word)
};

RPoset build_R(const Poset& P, const Labeling& lab, const DualOptions& opt = {});

// Checks that (x,w) -> [ascent-free chain with word w] is a cover-preserving bijection R -> Q.
VerificationReport verify_R_iso_Q(const Poset& P, const Labeling& lab, const DualOptions& opt = {});
VerificationReport verify_R_iso_Q(const Poset& P, const Labeling& lab, const RPoset& R, const QuotientPoset& Q);

// Every Möbius value of Q against the increasing-chain criterion.
VerificationReport mobius_Q_check(const Poset& P, const Labeling& lab, const QuotientPoset& Q);

// Saturated chains of Q from the bottom map bijectively, word-preservingly, onto those of P.
VerificationReport chain_bijection_check(const Poset& P, const Labeling& lab, const QuotientPoset& Q);

} // namespace whitney

#endif
