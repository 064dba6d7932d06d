#ifndef WHITNEY_FAMILIES_HPP
#define WHITNEY_FAMILIES_HPP

#include <compare>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "whitney/labeling.hpp"
#include "whitney/poset.hpp"

namespace whitney {

constexpr int kPartitionCap = 7;
constexpr int kNoncrossingCap = 7;
constexpr int kWeightedCap = 5;
constexpr int kForestCap = 5;
constexpr int kIncreasingForestCap = 7;
constexpr int kDyckCap = 6;

// Blocks sorted by their minimum, each block sorted.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
    std::string str() const;
    auto operator<=>(const SetPartition&) const = default;
};

std::vector<SetPartition> all_set_partitions(int n);
bool is_noncrossing(const SetPartition& p);
bool sets_cross(const std::vector<int>& a, const std::vector<int>& b);

struct PartitionFamily {
    Poset poset;
    std::vector<SetPartition> elements;
    std::shared_ptr<EdgeLabeling> labeling;
};

// The partition lattice with labels (min A, min B).
PartitionFamily partition_lattice(int n, int max_n = kPartitionCap);
// Noncrossing partitions with labels max{a in A : a < min B}.
PartitionFamily noncrossing_lattice(int n, int max_n = kNoncrossingCap);

// Label of x<.y is the 1-based position in `atom_order` of the first atom a with x v a = y.
// Throws NotGeometric unless the input is an atomic, semimodular lattice.
std::shared_ptr<EdgeLabeling> minimum_labeling(const Poset& L, const std::vector<ElementId>& atom_order);

struct WeightedPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> weights;
    std::string str() const;
    auto operator<=>(const WeightedPartition&) const = default;
};

struct WeightedPartitionFamily {
    int n = 0;
    Poset poset;
    std::shared_ptr<const std::vector<WeightedPartition>> elements;
    std::map<WeightedPartition, ElementId> index;
};

WeightedPartitionFamily weighted_partition_poset(int n, int max_n = kWeightedCap);
std::shared_ptr<EdgeLabeling> lambda_E(const WeightedPartitionFamily& fam);
std::shared_ptr<ChainEdgeLabeling> lambda_C(const WeightedPartitionFamily& fam);

// parent[v] for v in 1..n, 0 marks a root; parent[0] is unused.
struct RootedForest {
    int n = 0;
    std::vector<int> parent;

    static RootedForest empty(int n);
    std::vector<int> roots() const;
    int root_of(int v) const;
    int depth(int v) const;
    std::vector<int> tree_of(int root) const;  // sorted vertices
    std::vector<int> children(int v) const;
    int edges() const;
    std::string str() const;
    auto operator<=>(const RootedForest&) const = default;
};

// Sum of distances to the root over the tree containing `root`.
int tree_cost(const RootedForest& F, int root);
// Edges whose parent has the larger label.
int descent_count(const RootedForest& F, int root);
// Trees become blocks weighted by their descent counts.
WeightedPartition pi_of_forest(const RootedForest& F);
// (-cost of attached tree, new root, attached root) for the cover adding attached -> new_root.
Label forest_cover_label(const RootedForest& lower, int new_root, int attached_root);

struct ForestFamily {
    int n = 0;
    Poset poset;
    std::vector<RootedForest> elements;
    std::map<RootedForest, ElementId> index;
    std::shared_ptr<EdgeLabeling> labeling;
};

ForestFamily rooted_forest_poset(int n, int max_n = kForestCap);
ForestFamily increasing_forest_poset(int n, int max_n = kIncreasingForestCap);

// The forest attached to a bottom chain of the weighted partition poset.
RootedForest forest_map(const WeightedPartitionFamily& fam, std::span<const ElementId> chain);

struct LabeledDyckPath {
    std::vector<int> labels;     // increasing
    std::vector<int> exponents;  // north steps in each label's column
    bool satisfies_ballot() const;
    std::string str() const;
    auto operator<=>(const LabeledDyckPath&) const = default;
};

LabeledDyckPath dyck_merge(const LabeledDyckPath& a, const LabeledDyckPath& b);
// Label of the merge: the column in `a` that receives the extra north step.
int dyck_anchor(const LabeledDyckPath& a, const LabeledDyckPath& b);

struct DyckFamily {
    int n = 0;
    Poset poset;
    std::vector<std::vector<LabeledDyckPath>> elements;
    std::shared_ptr<EdgeLabeling> labeling;  // merge anchors
};

DyckFamily ncdyck_poset(int n, int max_n = kDyckCap);

bool is_parking_function(const std::vector<int>& w);
// Weakly decreasing parking function of length n-1 to a labeled path on [n].
LabeledDyckPath decreasing_pf_to_dyck(const std::vector<int>& w);

// Named family + labeling, for the CLI and tests.
struct LabeledPoset {
    std::string family;
    int n = 0;
    Poset poset;
    std::shared_ptr<const Labeling> labeling;
};

std::string default_labeling(const std::string& family);
// Throws InvalidInput on unknown names, SizeLimit above `max_n` (family default when negative).
LabeledPoset make_family(const std::string& family, int n, const std::string& labeling = "", int max_n = -1);

} // namespace whitney

#endif
