#ifndef WHITNEY_POSET_HPP
#define WHITNEY_POSET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "whitney/error.hpp"

namespace whitney {

using ElementId = std::uint32_t;
using Cover = std::pair<ElementId, ElementId>;
using SaturatedChain = std::vector<ElementId>;
using WhitneyVector = std::vector<long long>;

// Row-major bit matrix; row x holds the principal upset of x.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }
    bool test(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u; }
    void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
    std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct MobiusCache;

class Poset {
public:
    Poset() = default;

    std::size_t size() const { return rank_.size(); }
    ElementId bottom() const { return bottom_; }
    int rank(ElementId x) const { return rank_[x]; }
    int height() const { return height_; }
    std::span<const ElementId> up(ElementId x) const;
    std::span<const ElementId> down(ElementId x) const;
    std::span<const ElementId> level(int k) const;
    bool covers(ElementId lo, ElementId hi) const;
    bool leq(ElementId x, ElementId y) const { return upset_.test(x, y); }
    const BitMatrix& upsets() const { return upset_; }
    std::size_t num_covers() const { return up_targets_.size(); }
    std::vector<Cover> cover_pairs() const;
    std::vector<ElementId> maximal_elements() const;
    std::optional<ElementId> top() const;
    bool has_names() const { return !names_.empty(); }
    std::string name(ElementId x) const;
    const std::vector<std::string>& names() const { return names_; }

    // Memoized row of Möbius values mu(x, .), zero outside the upset of x.
    const std::vector<long long>& mobius_row(ElementId x) const;

private:
    friend Poset build_poset(const std::vector<Cover>&, std::size_t, std::vector<std::string>);

    ElementId bottom_ = 0;
    int height_ = 0;
    std::vector<int> rank_;
    std::vector<std::uint32_t> up_offsets_, down_offsets_;
    std::vector<ElementId> up_targets_, down_targets_;
    std::vector<std::uint32_t> level_offsets_;
    std::vector<ElementId> by_rank_;
    BitMatrix upset_;
    std::vector<std::string> names_;
    std::shared_ptr<MobiusCache> mobius_;
};

// Validates a cover list and builds the graded poset. Duplicate pairs are merged.
Poset build_poset(const std::vector<Cover>& covers, std::size_t n, std::vector<std::string> names = {});

long long mobius(const Poset& P, ElementId x, ElementId y);
WhitneyVector whitney_first(const Poset& P);
WhitneyVector whitney_second(const Poset& P);
bool is_whitney_dual_pair(const Poset& P, const Poset& Q);
bool is_eulerian(const Poset& P);
bool is_bowtie_free(const Poset& P);
bool is_lattice(const Poset& P);

// Join table of a lattice; join(x,y) = result[x * n + y]. Throws InvalidInput if some join is missing.
std::vector<ElementId> join_table(const Poset& P);

// All maximal chains of [x,y], lexicographic by element ids.
std::vector<SaturatedChain> saturated_chains(const Poset& P, ElementId x, ElementId y);

// The interval [x,y] as a standalone poset; `members` receives the original ids in new-id order.
Poset interval(const Poset& P, ElementId x, ElementId y, std::vector<ElementId>* members = nullptr);

struct IsomorphismResult {
    bool isomorphic = false;
    std::vector<ElementId> witness;  // witness[p] = image in Q
};
IsomorphismResult are_isomorphic(const Poset& P, const Poset& Q);

// True iff `map` is a bijection that sends covers to covers in both directions.
bool is_isomorphism(const Poset& P, const Poset& Q, const std::vector<ElementId>& map);

// Convenience constructors for small test posets.
Poset chain_poset_of_length(int length);
Poset boolean_lattice(int n);

} // namespace whitney

#endif
