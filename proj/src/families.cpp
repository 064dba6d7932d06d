#include "whitney/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace whitney {

namespace {

void check_n(int n, int max_n, const char* what) {
    if (n < 1) throw WhitneyError(ErrorKind::InvalidInput, std::string(what) + " needs n >= 1");
    if (n > max_n)
        throw WhitneyError(ErrorKind::SizeLimit,
                           std::string(what) + " with n = " + std::to_string(n) + " exceeds the cap " +
                               std::to_string(max_n));
}

std::string vertex_str(int v) { return v < 10 ? std::to_string(v) : "(" + std::to_string(v) + ")"; }

std::string block_str(const std::vector<int>& b) {
    std::string s;
    for (int v : b) s += vertex_str(v);
    return s;
}

std::vector<std::vector<int>> merge_blocks(const std::vector<std::vector<int>>& blocks, std::size_t i, std::size_t j) {
    std::vector<std::vector<int>> out;
    std::vector<int> merged = blocks[i];
    merged.insert(merged.end(), blocks[j].begin(), blocks[j].end());
    std::sort(merged.begin(), merged.end());
    for (std::size_t k = 0; k < blocks.size(); ++k)
        if (k != i && k != j) out.push_back(blocks[k]);
    out.push_back(std::move(merged));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

template <class T, class Rank>
void sort_by_rank(std::vector<T>& v, Rank rank) {
    std::sort(v.begin(), v.end(), [&](const T& a, const T& b) {
        int ra = rank(a), rb = rank(b);
        if (ra != rb) return ra < rb;
        return a < b;
    });
}

} // namespace

std::string SetPartition::str() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += "/";
        s += block_str(blocks[i]);
    }
    return s;
}

std::vector<SetPartition> all_set_partitions(int n) {
    std::vector<SetPartition> out;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int maxv) {
        if (pos == n) {
            SetPartition p;
            p.blocks.resize(maxv + 1);
            for (int v = 0; v < n; ++v) p.blocks[rgs[v]].push_back(v + 1);
            out.push_back(std::move(p));
            return;
        }
        for (int b = 0; b <= maxv + 1; ++b) {
            rgs[pos] = b;
            rec(pos + 1, std::max(maxv, b));
        }
    };
    if (n == 0) return out;
    rec(1, 0);
    return out;
}

bool sets_cross(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            int lo = std::min(a[i], a[j]), hi = std::max(a[i], a[j]);
            bool inside = false, outside = false;
            for (int x : b) {
                if (x > lo && x < hi) inside = true;
                if (x < lo || x > hi) outside = true;
            }
            if (inside && outside) return true;
        }
    return false;
}

bool is_noncrossing(const SetPartition& p) {
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < p.blocks.size(); ++j)
            if (sets_cross(p.blocks[i], p.blocks[j])) return false;
    return true;
}

namespace {

enum class PartitionKind { All, Noncrossing };

PartitionFamily partition_family(int n, PartitionKind kind) {
    PartitionFamily fam;
    for (auto& p : all_set_partitions(n))
        if (kind == PartitionKind::All || is_noncrossing(p)) fam.elements.push_back(std::move(p));
    sort_by_rank(fam.elements, [n](const SetPartition& p) { return n - static_cast<int>(p.blocks.size()); });
    std::map<SetPartition, ElementId> index;
    for (std::size_t i = 0; i < fam.elements.size(); ++i) index[fam.elements[i]] = static_cast<ElementId>(i);
    std::vector<Cover> covers;
    std::vector<Label> labels;
    for (std::size_t x = 0; x < fam.elements.size(); ++x) {
        const auto& blocks = fam.elements[x].blocks;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                SetPartition q{merge_blocks(blocks, i, j)};
                auto it = index.find(q);
                if (it == index.end()) continue;
                covers.emplace_back(static_cast<ElementId>(x), it->second);
                if (kind == PartitionKind::All) {
                    labels.push_back(Label{blocks[i][0], blocks[j][0]});
                } else {
                    int best = 0;
                    for (int a : blocks[i])
                        if (a < blocks[j][0]) best = a;
                    labels.push_back(Label{best});
                }
            }
    }
    std::vector<std::string> names;
    for (const auto& p : fam.elements) names.push_back(p.str());
    fam.poset = build_poset(covers, fam.elements.size(), std::move(names));
    fam.labeling = std::make_shared<EdgeLabeling>(LabelOrder::lex(), kind == PartitionKind::All ? "min" : "nc");
    for (std::size_t k = 0; k < covers.size(); ++k) fam.labeling->set(covers[k].first, covers[k].second, labels[k]);
    return fam;
}

} // namespace

PartitionFamily partition_lattice(int n, int max_n) {
    check_n(n, max_n, "partition lattice");
    return partition_family(n, PartitionKind::All);
}

PartitionFamily noncrossing_lattice(int n, int max_n) {
    check_n(n, max_n, "noncrossing partition lattice");
    return partition_family(n, PartitionKind::Noncrossing);
}

std::shared_ptr<EdgeLabeling> minimum_labeling(const Poset& L, const std::vector<ElementId>& atom_order) {
    if (!L.top()) throw WhitneyError(ErrorKind::NotGeometric, "no unique maximum");
    std::vector<ElementId> join;
    try {
        join = join_table(L);
    } catch (const WhitneyError& e) {
        throw WhitneyError(ErrorKind::NotGeometric, std::string("not a lattice: ") + e.what());
    }
    const std::size_t n = L.size();
    auto atoms = L.level(1);
    std::vector<ElementId> sorted_atoms(atoms.begin(), atoms.end()), given(atom_order);
    std::sort(sorted_atoms.begin(), sorted_atoms.end());
    std::sort(given.begin(), given.end());
    if (sorted_atoms != given) throw WhitneyError(ErrorKind::InvalidInput, "atom order must list every atom once");
    for (ElementId x = 0; x < n; ++x) {
        if (x == L.bottom()) continue;
        ElementId j = L.bottom();
        for (ElementId a : atoms)
            if (L.leq(a, x)) j = join[j * n + a];
        if (j != x) throw WhitneyError(ErrorKind::NotGeometric, "not atomic at " + L.name(x));
    }
    for (ElementId z = 0; z < n; ++z) {
        auto ups = L.up(z);
        for (std::size_t i = 0; i < ups.size(); ++i)
            for (std::size_t k = i + 1; k < ups.size(); ++k) {
                ElementId j = join[ups[i] * n + ups[k]];
                if (!L.covers(ups[i], j) || !L.covers(ups[k], j))
                    throw WhitneyError(ErrorKind::NotGeometric, "not semimodular above " + L.name(z));
            }
    }
    auto lab = std::make_shared<EdgeLabeling>(LabelOrder::lex(), "min");
    for (auto [x, y] : L.cover_pairs()) {
        for (std::size_t pos = 0; pos < atom_order.size(); ++pos)
            if (join[x * n + atom_order[pos]] == y) {
                lab->set(x, y, Label{static_cast<int>(pos) + 1});
                break;
            }
    }
    lab->check_total(L);
    return lab;
}

std::string WeightedPartition::str() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += "/";
        s += block_str(blocks[i]) + "^" + std::to_string(weights[i]);
    }
    return s;
}

namespace {

struct WeightedMerge {
    std::vector<int> a, b;  // merged blocks, min a < min b
    int wa = 0, wb = 0, wc = 0;
};

WeightedMerge weighted_diff(const WeightedPartition& lo, const WeightedPartition& hi) {
    std::set<std::pair<std::vector<int>, int>> up;
    for (std::size_t i = 0; i < hi.blocks.size(); ++i) up.emplace(hi.blocks[i], hi.weights[i]);
    std::vector<std::pair<std::vector<int>, int>> gone;
    for (std::size_t i = 0; i < lo.blocks.size(); ++i) {
        auto key = std::make_pair(lo.blocks[i], lo.weights[i]);
        if (!up.erase(key)) gone.push_back(std::move(key));
    }
    if (gone.size() != 2 || up.size() != 1)
        throw WhitneyError(ErrorKind::InvalidInput, lo.str() + " -> " + hi.str() + " is not a merge of two blocks");
    WeightedMerge m;
    m.a = gone[0].first;
    m.wa = gone[0].second;
    m.b = gone[1].first;
    m.wb = gone[1].second;
    if (m.a[0] > m.b[0]) {
        std::swap(m.a, m.b);
        std::swap(m.wa, m.wb);
    }
    m.wc = up.begin()->second;
    return m;
}

// Grows the forest of a bottom chain one merge at a time.
struct ForestGrower {
    RootedForest forest;
    Label step(const WeightedPartition& lo, const WeightedPartition& hi) {
        WeightedMerge m = weighted_diff(lo, hi);
        const int u = m.wc - m.wa - m.wb;
        const int ra = forest.root_of(m.a[0]), rb = forest.root_of(m.b[0]);
        const int keep = u == 0 ? std::min(ra, rb) : std::max(ra, rb);
        const int attach = keep == ra ? rb : ra;
        Label l = forest_cover_label(forest, keep, attach);
        forest.parent[attach] = keep;
        return l;
    }
};

} // namespace

WeightedPartitionFamily weighted_partition_poset(int n, int max_n) {
    check_n(n, max_n, "weighted partition poset");
    WeightedPartitionFamily fam;
    fam.n = n;
    std::vector<WeightedPartition> elems;
    for (const auto& p : all_set_partitions(n)) {
        WeightedPartition w{p.blocks, std::vector<int>(p.blocks.size(), 0)};
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == w.blocks.size()) {
                elems.push_back(w);
                return;
            }
            for (int v = 0; v < static_cast<int>(w.blocks[i].size()); ++v) {
                w.weights[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    sort_by_rank(elems, [n](const WeightedPartition& p) { return n - static_cast<int>(p.blocks.size()); });
    for (std::size_t i = 0; i < elems.size(); ++i) fam.index[elems[i]] = static_cast<ElementId>(i);
    std::vector<Cover> covers;
    for (std::size_t x = 0; x < elems.size(); ++x) {
        const auto& e = elems[x];
        for (std::size_t i = 0; i < e.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < e.blocks.size(); ++j)
                for (int u = 0; u <= 1; ++u) {
                    WeightedPartition q;
                    auto merged = merge_blocks(e.blocks, i, j);
                    for (const auto& b : merged) {
                        q.blocks.push_back(b);
                        int w = -1;
                        for (std::size_t k = 0; k < e.blocks.size(); ++k)
                            if (e.blocks[k] == b) w = e.weights[k];
                        q.weights.push_back(w >= 0 ? w : e.weights[i] + e.weights[j] + u);
                    }
                    covers.emplace_back(static_cast<ElementId>(x), fam.index.at(q));
                }
    }
    std::vector<std::string> names;
    for (const auto& e : elems) names.push_back(e.str());
    fam.poset = build_poset(covers, elems.size(), std::move(names));
    fam.elements = std::make_shared<const std::vector<WeightedPartition>>(std::move(elems));
    return fam;
}

std::shared_ptr<EdgeLabeling> lambda_E(const WeightedPartitionFamily& fam) {
    auto lab = std::make_shared<EdgeLabeling>(LabelOrder::ordinal_sum_gamma(fam.n), "lambda_e");
    const auto& el = *fam.elements;
    for (auto [x, y] : fam.poset.cover_pairs()) {
        WeightedMerge m = weighted_diff(el[x], el[y]);
        lab->set(x, y, Label{m.a[0], m.b[0], m.wc - m.wa - m.wb});
    }
    return lab;
}

std::shared_ptr<ChainEdgeLabeling> lambda_C(const WeightedPartitionFamily& fam) {
    auto elems = fam.elements;
    const int n = fam.n;
    auto word_fn = [elems, n](std::span<const ElementId> chain) {
        ForestGrower g{RootedForest::empty(n)};
        LabelWord w;
        for (std::size_t i = 1; i < chain.size(); ++i) w.push_back(g.step((*elems)[chain[i - 1]], (*elems)[chain[i]]));
        return w;
    };
    auto label_fn = [word_fn](std::span<const ElementId> prefix) {
        if (prefix.size() < 2) throw WhitneyError(ErrorKind::InvalidInput, "label needs a chain step");
        return word_fn(prefix).back();
    };
    return std::make_shared<ChainEdgeLabeling>(LabelOrder::lex(), "lambda_c", label_fn, word_fn);
}

RootedForest RootedForest::empty(int n) {
    RootedForest F;
    F.n = n;
    F.parent.assign(n + 1, 0);
    return F;
}

std::vector<int> RootedForest::roots() const {
    std::vector<int> r;
    for (int v = 1; v <= n; ++v)
        if (parent[v] == 0) r.push_back(v);
    return r;
}

int RootedForest::root_of(int v) const {
    while (parent[v] != 0) v = parent[v];
    return v;
}

int RootedForest::depth(int v) const {
    int d = 0;
    while (parent[v] != 0) {
        v = parent[v];
        ++d;
    }
    return d;
}

std::vector<int> RootedForest::tree_of(int root) const {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (root_of(v) == root) out.push_back(v);
    return out;
}

std::vector<int> RootedForest::children(int v) const {
    std::vector<int> out;
    for (int c = 1; c <= n; ++c)
        if (parent[c] == v) out.push_back(c);
    return out;
}

int RootedForest::edges() const {
    int e = 0;
    for (int v = 1; v <= n; ++v) e += parent[v] != 0;
    return e;
}

std::string RootedForest::str() const {
    std::function<std::string(int)> tree = [&](int v) {
        std::string s = std::to_string(v);
        auto ch = children(v);
        if (ch.empty()) return s;
        s += "(";
        for (std::size_t i = 0; i < ch.size(); ++i) {
            if (i) s += ",";
            s += tree(ch[i]);
        }
        return s + ")";
    };
    std::string s;
    for (int r : roots()) {
        if (!s.empty()) s += "/";
        s += tree(r);
    }
    return s;
}

int tree_cost(const RootedForest& F, int root) {
    int total = 0;
    for (int v : F.tree_of(root)) total += F.depth(v);
    return total;
}

int descent_count(const RootedForest& F, int root) {
    int d = 0;
    for (int v : F.tree_of(root))
        if (F.parent[v] > v) ++d;
    return d;
}

WeightedPartition pi_of_forest(const RootedForest& F) {
    std::vector<std::pair<std::vector<int>, int>> trees;
    for (int r : F.roots()) trees.emplace_back(F.tree_of(r), descent_count(F, r));
    std::sort(trees.begin(), trees.end());
    WeightedPartition w;
    for (auto& [b, d] : trees) {
        w.blocks.push_back(b);
        w.weights.push_back(d);
    }
    return w;
}

Label forest_cover_label(const RootedForest& lower, int new_root, int attached_root) {
    return Label{-tree_cost(lower, attached_root), new_root, attached_root};
}

ForestFamily rooted_forest_poset(int n, int max_n) {
    check_n(n, max_n, "rooted forest poset");
    ForestFamily fam;
    fam.n = n;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= (n + 1);
    for (long code = 0; code < total; ++code) {
        RootedForest F = RootedForest::empty(n);
        long c = code;
        bool ok = true;
        for (int v = 1; v <= n; ++v) {
            F.parent[v] = static_cast<int>(c % (n + 1));
            c /= (n + 1);
            if (F.parent[v] == v) ok = false;
        }
        for (int v = 1; v <= n && ok; ++v) {
            int u = v, steps = 0;
            while (F.parent[u] != 0 && steps <= n) {
                u = F.parent[u];
                ++steps;
            }
            if (steps > n) ok = false;
        }
        if (ok) fam.elements.push_back(std::move(F));
    }
    sort_by_rank(fam.elements, [](const RootedForest& F) { return F.edges(); });
    for (std::size_t i = 0; i < fam.elements.size(); ++i) fam.index[fam.elements[i]] = static_cast<ElementId>(i);
    std::vector<Cover> covers;
    std::vector<Label> labels;
    for (std::size_t x = 0; x < fam.elements.size(); ++x) {
        const auto& F = fam.elements[x];
        auto roots = F.roots();
        for (int keep : roots)
            for (int attach : roots) {
                if (keep == attach) continue;
                RootedForest G = F;
                G.parent[attach] = keep;
                covers.emplace_back(static_cast<ElementId>(x), fam.index.at(G));
                labels.push_back(forest_cover_label(F, keep, attach));
            }
    }
    std::vector<std::string> names;
    for (const auto& F : fam.elements) names.push_back(F.str());
    fam.poset = build_poset(covers, fam.elements.size(), std::move(names));
    fam.labeling = std::make_shared<EdgeLabeling>(LabelOrder::lex(), "lambda_sf");
    for (std::size_t k = 0; k < covers.size(); ++k) fam.labeling->set(covers[k].first, covers[k].second, labels[k]);
    return fam;
}

ForestFamily increasing_forest_poset(int n, int max_n) {
    check_n(n, max_n, "increasing forest poset");
    ForestFamily fam;
    fam.n = n;
    RootedForest F = RootedForest::empty(n);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            fam.elements.push_back(F);
            return;
        }
        for (int p = 0; p < v; ++p) {
            F.parent[v] = p;
            rec(v + 1);
        }
        F.parent[v] = 0;
    };
    rec(2);
    sort_by_rank(fam.elements, [](const RootedForest& G) { return G.edges(); });
    for (std::size_t i = 0; i < fam.elements.size(); ++i) fam.index[fam.elements[i]] = static_cast<ElementId>(i);
    std::vector<Cover> covers;
    std::vector<Label> labels;
    for (std::size_t x = 0; x < fam.elements.size(); ++x) {
        const auto& G = fam.elements[x];
        auto roots = G.roots();
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                RootedForest H = G;
                H.parent[roots[j]] = roots[i];
                covers.emplace_back(static_cast<ElementId>(x), fam.index.at(H));
                labels.push_back(Label{roots[i], roots[j]});
            }
    }
    std::vector<std::string> names;
    for (const auto& G : fam.elements) names.push_back(G.str());
    fam.poset = build_poset(covers, fam.elements.size(), std::move(names));
    fam.labeling = std::make_shared<EdgeLabeling>(LabelOrder::lex(), "isf_star");
    for (std::size_t k = 0; k < covers.size(); ++k) fam.labeling->set(covers[k].first, covers[k].second, labels[k]);
    return fam;
}

RootedForest forest_map(const WeightedPartitionFamily& fam, std::span<const ElementId> chain) {
    ForestGrower g{RootedForest::empty(fam.n)};
    for (std::size_t i = 1; i < chain.size(); ++i) g.step((*fam.elements)[chain[i - 1]], (*fam.elements)[chain[i]]);
    return g.forest;
}

bool LabeledDyckPath::satisfies_ballot() const {
    if (labels.size() != exponents.size() || labels.empty()) return false;
    const int m = static_cast<int>(labels.size());
    int sum = 0;
    for (int j = 0; j < m; ++j) {
        if (exponents[j] < 0) return false;
        sum += exponents[j];
        if (j + 1 < m && sum < j + 1) return false;
    }
    return sum == m - 1;
}

std::string LabeledDyckPath::str() const {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) s += vertex_str(labels[i]) + "^" + std::to_string(exponents[i]);
    return s;
}

int dyck_anchor(const LabeledDyckPath& a, const LabeledDyckPath& b) {
    int anchor = 0;
    for (int l : a.labels)
        if (l < b.labels.front()) anchor = l;
    return anchor;
}

LabeledDyckPath dyck_merge(const LabeledDyckPath& a, const LabeledDyckPath& b) {
    for (int x : a.labels)
        if (std::binary_search(b.labels.begin(), b.labels.end(), x))
            throw WhitneyError(ErrorKind::NonDisjoint, "label " + std::to_string(x) + " appears in both paths");
    if (sets_cross(a.labels, b.labels) || sets_cross(b.labels, a.labels))
        throw WhitneyError(ErrorKind::CrossingLabelSets, a.str() + " and " + b.str() + " have crossing label sets");
    if (a.labels.front() > b.labels.front()) return dyck_merge(b, a);
    const int anchor = dyck_anchor(a, b);
    std::vector<std::pair<int, int>> cols;
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        cols.emplace_back(a.labels[i], a.exponents[i] + (a.labels[i] == anchor ? 1 : 0));
    for (std::size_t i = 0; i < b.labels.size(); ++i) cols.emplace_back(b.labels[i], b.exponents[i]);
    std::sort(cols.begin(), cols.end());
    LabeledDyckPath out;
    for (auto [l, e] : cols) {
        out.labels.push_back(l);
        out.exponents.push_back(e);
    }
    return out;
}

DyckFamily ncdyck_poset(int n, int max_n) {
    check_n(n, max_n, "labeled Dyck path poset");
    using Element = std::vector<LabeledDyckPath>;
    DyckFamily fam;
    fam.n = n;
    Element start;
    for (int v = 1; v <= n; ++v) start.push_back({{v}, {0}});
    std::map<Element, int> seen{{start, 0}};
    std::vector<Element> frontier{start};
    struct Edge {
        Element lo, hi;
        int anchor;
    };
    std::vector<Edge> edges;
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (const auto& e : frontier)
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j) {
                    bool ok = true;
                    std::vector<int> merged = e[i].labels;
                    merged.insert(merged.end(), e[j].labels.begin(), e[j].labels.end());
                    std::sort(merged.begin(), merged.end());
                    for (std::size_t k = 0; k < e.size() && ok; ++k)
                        if (k != i && k != j && sets_cross(merged, e[k].labels)) ok = false;
                    if (!ok) continue;
                    Element f;
                    for (std::size_t k = 0; k < e.size(); ++k)
                        if (k != i && k != j) f.push_back(e[k]);
                    f.push_back(dyck_merge(e[i], e[j]));
                    std::sort(f.begin(), f.end(),
                              [](const auto& a, const auto& b) { return a.labels.front() < b.labels.front(); });
                    edges.push_back({e, f, dyck_anchor(e[i], e[j])});
                    if (seen.emplace(f, 0).second) next.push_back(f);
                }
        frontier = std::move(next);
    }
    std::vector<Element> elems;
    for (auto& [e, _] : seen) elems.push_back(e);
    sort_by_rank(elems, [n](const Element& e) { return n - static_cast<int>(e.size()); });
    std::map<Element, ElementId> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<ElementId>(i);
    std::vector<Cover> covers;
    fam.labeling = std::make_shared<EdgeLabeling>(LabelOrder::lex(), "ncdyck_star");
    for (const auto& ed : edges) {
        ElementId a = index.at(ed.lo), b = index.at(ed.hi);
        covers.emplace_back(a, b);
        fam.labeling->set(a, b, Label{ed.anchor});
    }
    std::vector<std::string> names;
    for (const auto& e : elems) {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "/" : "") + e[i].str();
        names.push_back(s);
    }
    fam.poset = build_poset(covers, elems.size(), std::move(names));
    fam.elements = std::move(elems);
    return fam;
}

bool is_parking_function(const std::vector<int>& w) {
    std::vector<int> s(w);
    std::sort(s.begin(), s.end());
    for (std::size_t j = 0; j < s.size(); ++j)
        if (s[j] < 1 || s[j] > static_cast<int>(j) + 1) return false;
    return true;
}

LabeledDyckPath decreasing_pf_to_dyck(const std::vector<int>& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[i - 1]) throw WhitneyError(ErrorKind::NotDecreasing, "word is not weakly decreasing");
    if (!is_parking_function(w)) throw WhitneyError(ErrorKind::InvalidInput, "word is not a parking function");
    const int n = static_cast<int>(w.size()) + 1;
    LabeledDyckPath d;
    for (int v = 1; v <= n; ++v) {
        d.labels.push_back(v);
        d.exponents.push_back(static_cast<int>(std::count(w.begin(), w.end(), v)));
    }
    return d;
}

std::string default_labeling(const std::string& family) {
    static const std::map<std::string, std::string> defaults{{"pi", "min"},        {"nc", "nc"},
                                                             {"piw", "lambda_c"},  {"sf", "lambda_sf"},
                                                             {"isf", "isf_star"},  {"ncdyck", "ncdyck_star"}};
    auto it = defaults.find(family);
    if (it == defaults.end()) throw WhitneyError(ErrorKind::InvalidInput, "unknown family '" + family + "'");
    return it->second;
}

LabeledPoset make_family(const std::string& family, int n, const std::string& labeling, int max_n) {
    const std::string lab = labeling.empty() ? default_labeling(family) : labeling;
    auto cap = [&](int dflt) { return max_n < 0 ? dflt : max_n; };
    auto bad = [&]() {
        return WhitneyError(ErrorKind::InvalidInput, "labeling '" + lab + "' does not apply to family '" + family + "'");
    };
    LabeledPoset out;
    out.family = family;
    out.n = n;
    if (family == "pi") {
        if (lab != "min") throw bad();
        auto f = partition_lattice(n, cap(kPartitionCap));
        out.poset = std::move(f.poset);
        out.labeling = f.labeling;
    } else if (family == "nc") {
        if (lab != "nc") throw bad();
        auto f = noncrossing_lattice(n, cap(kNoncrossingCap));
        out.poset = std::move(f.poset);
        out.labeling = f.labeling;
    } else if (family == "piw") {
        auto f = weighted_partition_poset(n, cap(kWeightedCap));
        if (lab == "lambda_e")
            out.labeling = lambda_E(f);
        else if (lab == "lambda_c")
            out.labeling = lambda_C(f);
        else
            throw bad();
        out.poset = std::move(f.poset);
    } else if (family == "sf") {
        if (lab != "lambda_sf") throw bad();
        auto f = rooted_forest_poset(n, cap(kForestCap));
        out.poset = std::move(f.poset);
        out.labeling = f.labeling;
    } else if (family == "isf") {
        if (lab != "isf_star") throw bad();
        auto f = increasing_forest_poset(n, cap(kIncreasingForestCap));
        out.poset = std::move(f.poset);
        out.labeling = f.labeling;
    } else if (family == "ncdyck") {
        if (lab != "ncdyck_star") throw bad();
        auto f = ncdyck_poset(n, cap(kDyckCap));
        out.poset = std::move(f.poset);
        out.labeling = f.labeling;
    } else {
        throw WhitneyError(ErrorKind::InvalidInput, "unknown family '" + family + "'");
    }
    return out;
}

} // namespace whitney
