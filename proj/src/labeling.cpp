#include "whitney/labeling.hpp"

namespace whitney {

LabelWord Labeling::word(std::span<const ElementId> chain) const {
    LabelWord w;
    if (chain.size() < 2) return w;
    w.reserve(chain.size() - 1);
    for (std::size_t k = 2; k <= chain.size(); ++k) w.push_back(label(chain.first(k)));
    return w;
}

Label EdgeLabeling::at(ElementId lo, ElementId hi) const {
    auto it = labels_.find(key(lo, hi));
    if (it == labels_.end())
        throw WhitneyError(ErrorKind::MissingLabel, "no label on " + std::to_string(lo) + "<." + std::to_string(hi));
    return it->second;
}

std::vector<Label> EdgeLabeling::used_labels() const {
    std::vector<Label> out;
    out.reserve(labels_.size());
    for (const auto& [k, l] : labels_) out.push_back(l);
    return out;
}

Label EdgeLabeling::label(std::span<const ElementId> prefix) const {
    if (prefix.size() < 2) throw WhitneyError(ErrorKind::InvalidInput, "label needs a chain step");
    return at(prefix[prefix.size() - 2], prefix[prefix.size() - 1]);
}

LabelWord EdgeLabeling::word(std::span<const ElementId> chain) const {
    LabelWord w;
    if (chain.size() < 2) return w;
    w.reserve(chain.size() - 1);
    for (std::size_t i = 1; i < chain.size(); ++i) w.push_back(at(chain[i - 1], chain[i]));
    return w;
}

void EdgeLabeling::check_total(const Poset& P) const {
    for (auto [a, b] : P.cover_pairs())
        if (!has(a, b)) throw WhitneyError(ErrorKind::MissingLabel, "no label on " + P.name(a) + "<." + P.name(b));
}

LabelWord ChainEdgeLabeling::word(std::span<const ElementId> chain) const {
    if (word_fn_) return word_fn_(chain);
    return Labeling::word(chain);
}

std::vector<int> descent_set(const Labeling& lab, std::span<const ElementId> chain) {
    return mask_to_ranks(descent_mask(lab.word(chain), lab.order()));
}

std::vector<int> ascent_set(const Labeling& lab, std::span<const ElementId> chain) {
    return mask_to_ranks(ascent_mask(lab.word(chain), lab.order()));
}

} // namespace whitney
