#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "whitney/dual.hpp"
#include "whitney/families.hpp"

using namespace whitney;

TEST_CASE("sorting integer words") {
    auto lex = LabelOrder::lex();
    LabelWord w{Label{8}, Label{5}, Label{3}, Label{2}, Label{4}};
    CHECK(sort_word(w, lex) == LabelWord{Label{8}, Label{5}, Label{4}, Label{3}, Label{2}});
    LabelWord af{Label{3}, Label{3}, Label{1}};
    CHECK(sort_word(af, lex) == af);
    CHECK(sort_word({Label{1, 2}, Label{1, 3}}, lex) == LabelWord{Label{1, 3}, Label{1, 2}});
}

TEST_CASE("small family shapes") {
    CHECK(partition_lattice(1).poset.size() == 1);
    auto pi4 = partition_lattice(4);
    CHECK(pi4.poset.size() == 15);
    CHECK(saturated_chains(pi4.poset, pi4.poset.bottom(), pi4.poset.top().value()).size() == 18);
    CHECK(noncrossing_lattice(3).poset.size() == partition_lattice(3).poset.size());
    CHECK(are_isomorphic(noncrossing_lattice(3).poset, partition_lattice(3).poset).isomorphic);
    auto w3 = weighted_partition_poset(3);
    CHECK(w3.poset.size() == 10);
    CHECK(w3.poset.maximal_elements().size() == 3);
    CHECK(increasing_forest_poset(2).poset.size() == 2);
    auto isf3 = increasing_forest_poset(3);
    CHECK(whitney_second(isf3.poset) == WhitneyVector{1, 3, 2});
    for (int n = 2; n <= 5; ++n)
        CHECK(is_whitney_dual_pair(partition_lattice(n).poset, increasing_forest_poset(n).poset));
    CHECK(is_whitney_dual_pair(noncrossing_lattice(4).poset, ncdyck_poset(4).poset));
    auto sf = rooted_forest_poset(4);
    for (ElementId x = 0; x < sf.poset.size(); ++x) CHECK(sf.poset.rank(x) == sf.elements[x].edges());
    auto dyck = ncdyck_poset(4);
    CHECK(dyck.poset.level(3).size() == 5);
    CHECK(dyck.poset.name(dyck.poset.bottom()) == "1^0/2^0/3^0/4^0");
}

TEST_CASE("boolean lattice under every atom order") {
    Poset B = boolean_lattice(3);
    std::vector<ElementId> atoms(B.level(1).begin(), B.level(1).end());
    std::sort(atoms.begin(), atoms.end());
    do {
        auto lab = minimum_labeling(B, atoms);
        CHECK(verify_EW(B, *lab).verdict == Verdict::EW);
    } while (std::next_permutation(atoms.begin(), atoms.end()));
}

TEST_CASE("top rank of the pair-based dual of NC_4") {
    auto nc = noncrossing_lattice(4);
    RPoset R = build_R(nc.poset, *nc.labeling);
    std::set<std::vector<int>> tops;
    for (ElementId x : R.poset.level(3)) {
        std::vector<int> w;
        for (const auto& l : R.word[x]) w.push_back(l[0]);
        tops.insert(w);
    }
    CHECK(tops == std::set<std::vector<int>>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 2, 1}});
    CHECK(R.word[R.poset.bottom()].empty());
    CHECK(R.element[R.poset.bottom()] == nc.poset.bottom());
}

TEST_CASE("partition image of the example forest") {
    RootedForest F = RootedForest::empty(14);
    F.parent[3] = 2;
    F.parent[1] = 6;
    F.parent[14] = 6;
    F.parent[11] = 6;
    F.parent[8] = 14;
    F.parent[9] = 11;
    F.parent[10] = 12;
    F.parent[7] = 13;
    WeightedPartition w = pi_of_forest(F);
    std::set<std::pair<std::vector<int>, int>> got, expected{{{1, 6, 8, 9, 11, 14}, 3}, {{2, 3}, 0}, {{4}, 0},
                                                             {{5}, 0}, {{10, 12}, 1}, {{7, 13}, 1}};
    for (std::size_t i = 0; i < w.blocks.size(); ++i) got.emplace(w.blocks[i], w.weights[i]);
    CHECK(got == expected);
}

TEST_CASE("forest map and tree cost edge cases") {
    auto fam = weighted_partition_poset(3);
    std::vector<ElementId> bottom{fam.poset.bottom()};
    CHECK(forest_map(fam, bottom) == RootedForest::empty(3));
    RootedForest F = RootedForest::empty(4);
    CHECK(tree_cost(F, 1) == 0);
    F.parent[2] = 1;
    F.parent[3] = 1;
    F.parent[4] = 1;
    CHECK(tree_cost(F, 1) == 3);
    RootedForest path = RootedForest::empty(3);
    path.parent[2] = 1;
    path.parent[3] = 2;
    CHECK(tree_cost(path, 1) == 3);
    CHECK(dyck_merge(LabeledDyckPath{{2}, {0}}, LabeledDyckPath{{5}, {0}}).str() == "2^15^0");
    CHECK(is_parking_function({3, 1, 1}));
    auto trees = oracle::rooted_trees_by_descents(3);
    auto w = weighted_partition_poset(3);
    for (int i = 0; i < 3; ++i)
        CHECK(mobius(w.poset, w.poset.bottom(), w.index.at(WeightedPartition{{{1, 2, 3}}, {i}})) == trees[i]);
}
