#ifndef WHITNEY_LABEL_HPP
#define WHITNEY_LABEL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace whitney {

// Small integer tuple. Its built-in ordering is structural (for use as a map key);
// the mathematical order lives in LabelOrder.
struct Label {
    static constexpr std::size_t kCapacity = 4;
    std::array<int, kCapacity> parts{};
    std::uint8_t length = 0;

    Label() = default;
    Label(std::initializer_list<int> values);
    static Label of(const std::vector<int>& values);

    int operator[](std::size_t i) const { return parts[i]; }
    std::size_t size() const { return length; }
    std::vector<int> to_vector() const { return {parts.begin(), parts.begin() + length}; }
    std::string str() const;

    auto operator<=>(const Label&) const = default;
};

using LabelWord = std::vector<Label>;

std::string word_str(const LabelWord& w);

class LabelOrder {
public:
    enum class Mode { LexTotal, OrdinalSumGamma, CustomPartial };

    static LabelOrder lex();
    // Lambda_n: ordinal sum of the Gamma_a, each compared componentwise on (second, exponent).
    static LabelOrder ordinal_sum_gamma(int n);
    // Strict partial order generated by the given pairs; throws InvalidLabelOrder on a cycle.
    static LabelOrder custom(const std::vector<std::pair<Label, Label>>& less_pairs);

    bool less(const Label& a, const Label& b) const;
    bool comparable(const Label& a, const Label& b) const { return a == b || less(a, b) || less(b, a); }
    Mode mode() const { return mode_; }
    int gamma_n() const { return gamma_n_; }
    const std::set<std::pair<Label, Label>>& custom_pairs() const { return custom_; }

    // Checks irreflexivity and transitivity on the supplied labels; throws InvalidLabelOrder.
    void validate_on(const std::vector<Label>& used) const;

private:
    Mode mode_ = Mode::LexTotal;
    int gamma_n_ = 0;
    std::set<std::pair<Label, Label>> custom_;
};

enum class WordClass { Increasing, AscentFree, Mixed };

WordClass classify_word(const LabelWord& w, const LabelOrder& order);
bool is_increasing(const LabelWord& w, const LabelOrder& order);
bool is_ascent_free(const LabelWord& w, const LabelOrder& order);

// Bit i-1 is set when rank i is a descent, i.e. w[i-1] is not below w[i].
std::uint32_t descent_mask(const LabelWord& w, const LabelOrder& order);
std::uint32_t ascent_mask(const LabelWord& w, const LabelOrder& order);
std::vector<int> mask_to_ranks(std::uint32_t mask);

// Repeatedly transposes the lowest ascent until none is left.
LabelWord sort_word(const LabelWord& w, const LabelOrder& order);

// Multiset of letters in structural order.
LabelWord letter_multiset(const LabelWord& w);

} // namespace whitney

#endif
