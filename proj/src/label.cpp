#include "whitney/label.hpp"

#include <algorithm>
#include <map>

#include "whitney/error.hpp"

namespace whitney {

Label::Label(std::initializer_list<int> values) {
    if (values.size() > kCapacity) throw WhitneyError(ErrorKind::InvalidInput, "label too long");
    std::copy(values.begin(), values.end(), parts.begin());
    length = static_cast<std::uint8_t>(values.size());
}

Label Label::of(const std::vector<int>& values) {
    if (values.size() > kCapacity) throw WhitneyError(ErrorKind::InvalidInput, "label too long");
    Label l;
    std::copy(values.begin(), values.end(), l.parts.begin());
    l.length = static_cast<std::uint8_t>(values.size());
    return l;
}

std::string Label::str() const {
    if (length == 1) return std::to_string(parts[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < length; ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::string word_str(const LabelWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && w[i].size() == 1) s += ",";
        s += w[i].str();
    }
    return s;
}

LabelOrder LabelOrder::lex() { return LabelOrder{}; }

LabelOrder LabelOrder::ordinal_sum_gamma(int n) {
    LabelOrder o;
    o.mode_ = Mode::OrdinalSumGamma;
    o.gamma_n_ = n;
    return o;
}

LabelOrder LabelOrder::custom(const std::vector<std::pair<Label, Label>>& less_pairs) {
    LabelOrder o;
    o.mode_ = Mode::CustomPartial;
    std::set<Label> labels;
    for (auto& [a, b] : less_pairs) {
        labels.insert(a);
        labels.insert(b);
    }
    std::vector<Label> idx(labels.begin(), labels.end());
    std::map<Label, std::size_t> pos;
    for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
    const std::size_t m = idx.size();
    std::vector<std::vector<char>> rel(m, std::vector<char>(m, 0));
    for (auto& [a, b] : less_pairs) rel[pos[a]][pos[b]] = 1;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            if (rel[i][k])
                for (std::size_t j = 0; j < m; ++j)
                    if (rel[k][j]) rel[i][j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (rel[i][i]) throw WhitneyError(ErrorKind::InvalidLabelOrder, "cycle through label " + idx[i].str());
        for (std::size_t j = 0; j < m; ++j)
            if (rel[i][j]) o.custom_.emplace(idx[i], idx[j]);
    }
    return o;
}

bool LabelOrder::less(const Label& a, const Label& b) const {
    switch (mode_) {
    case Mode::LexTotal: {
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return a.size() < b.size();
    }
    case Mode::OrdinalSumGamma:
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] <= b[1] && a[2] <= b[2] && !(a[1] == b[1] && a[2] == b[2]);
    case Mode::CustomPartial: return custom_.count({a, b}) > 0;
    }
    return false;
}

void LabelOrder::validate_on(const std::vector<Label>& used) const {
    std::set<Label> s(used.begin(), used.end());
    std::vector<Label> v(s.begin(), s.end());
    if (mode_ == Mode::OrdinalSumGamma)
        for (const auto& l : v)
            if (l.size() != 3 || l[0] < 1 || l[0] > gamma_n_ || l[1] <= l[0] || l[1] > gamma_n_)
                throw WhitneyError(ErrorKind::InvalidLabelOrder, "label " + l.str() + " outside Lambda_n");
    for (const auto& a : v) {
        if (less(a, a)) throw WhitneyError(ErrorKind::InvalidLabelOrder, "reflexive at " + a.str());
        for (const auto& b : v) {
            if (!less(a, b)) continue;
            if (less(b, a)) throw WhitneyError(ErrorKind::InvalidLabelOrder, "asymmetry fails at " + a.str());
            for (const auto& c : v)
                if (less(b, c) && !less(a, c))
                    throw WhitneyError(ErrorKind::InvalidLabelOrder,
                                       "not transitive on " + a.str() + " < " + b.str() + " < " + c.str());
        }
    }
}

bool is_increasing(const LabelWord& w, const LabelOrder& order) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!order.less(w[i - 1], w[i])) return false;
    return true;
}

bool is_ascent_free(const LabelWord& w, const LabelOrder& order) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (order.less(w[i - 1], w[i])) return false;
    return true;
}

WordClass classify_word(const LabelWord& w, const LabelOrder& order) {
    if (is_increasing(w, order)) return WordClass::Increasing;
    if (is_ascent_free(w, order)) return WordClass::AscentFree;
    return WordClass::Mixed;
}

std::uint32_t descent_mask(const LabelWord& w, const LabelOrder& order) {
    std::uint32_t m = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!order.less(w[i - 1], w[i])) m |= 1u << (i - 1);
    return m;
}

std::uint32_t ascent_mask(const LabelWord& w, const LabelOrder& order) {
    std::uint32_t m = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (order.less(w[i - 1], w[i])) m |= 1u << (i - 1);
    return m;
}

std::vector<int> mask_to_ranks(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1) out.push_back(i + 1);
    return out;
}

LabelWord sort_word(const LabelWord& w, const LabelOrder& order) {
    LabelWord out = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i < out.size(); ++i)
            if (order.less(out[i - 1], out[i])) {
                std::swap(out[i - 1], out[i]);
                changed = true;
                break;
            }
    }
    return out;
}

LabelWord letter_multiset(const LabelWord& w) {
    LabelWord s = w;
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace whitney
