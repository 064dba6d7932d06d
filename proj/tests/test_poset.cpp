#include "doctest.h"
#include "oracles.hpp"
#include "whitney/families.hpp"
#include "whitney/kernels.hpp"
#include "whitney/poset.hpp"

using namespace whitney;

namespace {

ErrorKind kind_of(const std::vector<Cover>& covers, std::size_t n) {
    try {
        build_poset(covers, n);
    } catch (const WhitneyError& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidInput;
}

// Two-element antichain on top of a bottom, then a top: the diamond.
Poset diamond() { return build_poset({{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 4); }

} // namespace

TEST_CASE("build_poset rejects malformed cover relations") {
    CHECK(kind_of({{0, 1}, {1, 0}}, 2) == ErrorKind::CycleDetected);
    CHECK(kind_of({{0, 0}}, 1) == ErrorKind::CycleDetected);
    CHECK(kind_of({{0, 1}, {1, 2}, {0, 2}}, 3) == ErrorKind::NotTransitivelyReduced);
    CHECK(kind_of({{0, 2}, {1, 2}}, 3) == ErrorKind::NoUniqueMinimum);
    CHECK(kind_of({{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, 5) == ErrorKind::NotGraded);
    CHECK(kind_of({{0, 5}}, 2) == ErrorKind::InvalidInput);
}

TEST_CASE("duplicate covers are merged") {
    Poset P = build_poset({{0, 1}, {0, 1}, {1, 2}}, 3);
    CHECK(P.num_covers() == 2);
    CHECK(P.height() == 2);
}

TEST_CASE("ranks, levels and order queries on the diamond") {
    Poset P = diamond();
    CHECK(P.bottom() == 0);
    CHECK(P.rank(3) == 2);
    CHECK(P.level(1).size() == 2);
    CHECK(P.leq(0, 3));
    CHECK_FALSE(P.leq(1, 2));
    CHECK(P.top().value() == 3);
    CHECK(P.maximal_elements() == std::vector<ElementId>{3});
    CHECK(P.covers(1, 3));
    CHECK_FALSE(P.covers(0, 3));
}

TEST_CASE("Möbius values on chains and boolean lattices") {
    Poset C = chain_poset_of_length(3);
    CHECK(mobius(C, 0, 0) == 1);
    CHECK(mobius(C, 0, 1) == -1);
    CHECK(mobius(C, 0, 2) == 0);
    CHECK(mobius(C, 0, 3) == 0);
    for (int n = 1; n <= 4; ++n) {
        Poset B = boolean_lattice(n);
        for (ElementId x = 0; x < B.size(); ++x)
            CHECK(mobius(B, B.bottom(), x) == ((B.rank(x) % 2) ? -1 : 1));
        CHECK(is_eulerian(B));
    }
    CHECK_THROWS_AS(mobius(diamond(), 1, 2), WhitneyError);
}

TEST_CASE("Whitney numbers of small partition and forest posets") {
    auto pi3 = partition_lattice(3);
    CHECK(whitney_first(pi3.poset) == WhitneyVector{1, -3, 2});
    CHECK(whitney_second(pi3.poset) == WhitneyVector{1, 3, 1});
    auto isf3 = increasing_forest_poset(3);
    CHECK(whitney_first(isf3.poset) == WhitneyVector{1, -3, 1});
    CHECK(whitney_second(isf3.poset) == WhitneyVector{1, 3, 2});
    CHECK(is_whitney_dual_pair(pi3.poset, isf3.poset));
    CHECK(is_whitney_dual_pair(isf3.poset, pi3.poset));
    Poset c3 = chain_poset_of_length(2);
    CHECK(whitney_first(c3) == WhitneyVector{1, -1, 0});
    CHECK(whitney_second(c3) == WhitneyVector{1, 1, 1});
    CHECK_FALSE(is_whitney_dual_pair(c3, c3));
}

TEST_CASE("lattice and bowtie probes") {
    CHECK(is_lattice(diamond()));
    CHECK(is_bowtie_free(diamond()));
    // Two elements sharing two lower covers.
    Poset bow = build_poset({{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}, 5);
    CHECK_FALSE(is_bowtie_free(bow));
    CHECK_FALSE(is_lattice(bow));
    CHECK(is_lattice(partition_lattice(4).poset));
    CHECK_THROWS_AS(join_table(bow), WhitneyError);
}

TEST_CASE("saturated chains and intervals") {
    Poset B = boolean_lattice(3);
    auto top = B.top().value();
    CHECK(saturated_chains(B, B.bottom(), top).size() == 6);
    std::vector<ElementId> members;
    Poset I = interval(B, B.level(1)[0], top, &members);
    CHECK(I.size() == 4);
    CHECK(members.size() == 4);
    CHECK(is_lattice(I));
}

TEST_CASE("isomorphism search with witness") {
    Poset B = boolean_lattice(3);
    // Same lattice with ids reversed inside each rank.
    std::vector<ElementId> perm(B.size());
    for (ElementId x = 0; x < B.size(); ++x) perm[x] = static_cast<ElementId>(B.size() - 1 - x);
    std::vector<Cover> covers;
    for (auto [a, b] : B.cover_pairs()) covers.emplace_back(perm[a], perm[b]);
    // Reversal maps the bottom to the largest id; rebuild on the dual order so the bottom stays minimal.
    std::vector<Cover> flipped;
    for (auto [a, b] : covers) flipped.emplace_back(b, a);
    Poset B2 = build_poset(flipped, B.size());
    auto res = are_isomorphic(B, B2);
    CHECK(res.isomorphic);
    CHECK(is_isomorphism(B, B2, res.witness));

    auto pi3 = partition_lattice(3);
    auto isf3 = increasing_forest_poset(3);
    CHECK_FALSE(are_isomorphic(pi3.poset, isf3.poset).isomorphic);
    CHECK_FALSE(are_isomorphic(chain_poset_of_length(2), diamond()).isomorphic);
}

TEST_CASE("serial and OpenMP kernels agree") {
    for (auto* fam : {"pi", "nc", "sf"}) {
        LabeledPoset lp = make_family(fam, 4);
        const Poset& P = lp.poset;
        CHECK(kernels::mobius_matrix_serial(P) == kernels::mobius_matrix_omp(P));
        for (ElementId x = 0; x < P.size(); ++x) {
            auto row = kernels::mobius_row(P, x);
            CHECK(row == P.mobius_row(x));
        }
    }
    std::vector<std::uint32_t> masks;
    for (std::uint32_t i = 0; i < 1000; ++i) masks.push_back((i * 2654435761u) % 16);
    CHECK(kernels::mask_tally_serial(masks, 4) == kernels::mask_tally_omp(masks, 4));
    long long total = 0;
    for (long long v : kernels::mask_tally_serial(masks, 4)) total += v;
    CHECK(total == 1000);
}

TEST_CASE("upset closure kernels agree on a generated poset") {
    LabeledPoset lp = make_family("piw", 3);
    const Poset& P = lp.poset;
    std::vector<std::uint32_t> offsets{0};
    std::vector<ElementId> targets, topo;
    for (ElementId x = 0; x < P.size(); ++x) {
        for (ElementId y : P.up(x)) targets.push_back(y);
        offsets.push_back(static_cast<std::uint32_t>(targets.size()));
    }
    for (int k = 0; k <= P.height(); ++k)
        for (ElementId x : P.level(k)) topo.push_back(x);
    BitMatrix a = kernels::upset_closure_serial(P.size(), offsets, targets, topo);
    BitMatrix b = kernels::upset_closure_omp(P.size(), offsets, targets, topo);
    CHECK(a == b);
    CHECK(a == P.upsets());
}
