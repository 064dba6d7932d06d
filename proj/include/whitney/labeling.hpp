#ifndef WHITNEY_LABELING_HPP
#define WHITNEY_LABELING_HPP

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>

#include "whitney/label.hpp"
#include "whitney/poset.hpp"

namespace whitney {

// Common interface for edge and chain-edge labelings. `label(prefix)` is the label of
// the last step of `prefix`; for chain-edge labelings the prefix must start at the bottom.
class Labeling {
public:
    Labeling(LabelOrder order, std::string name) : order_(std::move(order)), name_(std::move(name)) {}
    virtual ~Labeling() = default;

    virtual bool is_chain_edge() const = 0;
    virtual Label label(std::span<const ElementId> prefix) const = 0;
    virtual LabelWord word(std::span<const ElementId> chain) const;

    const LabelOrder& order() const { return order_; }
    const std::string& name() const { return name_; }

private:
    LabelOrder order_;
    std::string name_;
};

class EdgeLabeling : public Labeling {
public:
    EdgeLabeling(LabelOrder order, std::string name = "edge") : Labeling(std::move(order), std::move(name)) {}

    void set(ElementId lo, ElementId hi, Label l) { labels_[key(lo, hi)] = l; }
    bool has(ElementId lo, ElementId hi) const { return labels_.count(key(lo, hi)) > 0; }
    Label at(ElementId lo, ElementId hi) const;
    std::size_t size() const { return labels_.size(); }
    std::vector<Label> used_labels() const;

    bool is_chain_edge() const override { return false; }
    Label label(std::span<const ElementId> prefix) const override;
    LabelWord word(std::span<const ElementId> chain) const override;

    // Throws MissingLabel if some cover of P has no label.
    void check_total(const Poset& P) const;

private:
    static std::uint64_t key(ElementId lo, ElementId hi) { return (std::uint64_t{lo} << 32) | hi; }
    std::unordered_map<std::uint64_t, Label> labels_;
};

class ChainEdgeLabeling : public Labeling {
public:
    using LabelFn = std::function<Label(std::span<const ElementId>)>;
    using WordFn = std::function<LabelWord(std::span<const ElementId>)>;

    // `word_fn` is an optional fast path and must agree with repeated `label_fn` calls.
    ChainEdgeLabeling(LabelOrder order, std::string name, LabelFn label_fn, WordFn word_fn = {})
        : Labeling(std::move(order), std::move(name)), label_fn_(std::move(label_fn)), word_fn_(std::move(word_fn)) {}

    bool is_chain_edge() const override { return true; }
    Label label(std::span<const ElementId> prefix) const override { return label_fn_(prefix); }
    LabelWord word(std::span<const ElementId> chain) const override;

private:
    LabelFn label_fn_;
    WordFn word_fn_;
};

// Alias used by the public API for readability.
inline LabelWord word_of_labels(const Labeling& lab, std::span<const ElementId> chain) { return lab.word(chain); }

// Ranks i with label i not below label i+1, and ranks with label i below label i+1.
std::vector<int> descent_set(const Labeling& lab, std::span<const ElementId> chain);
std::vector<int> ascent_set(const Labeling& lab, std::span<const ElementId> chain);

} // namespace whitney

#endif
