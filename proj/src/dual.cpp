#include "whitney/dual.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace whitney {

namespace kernels {

std::vector<ChainTree::NodeId> sink_nodes_serial(const Poset& P, const Labeling& lab, const ChainTree& T,
                                                 ChainTree::NodeId begin, ChainTree::NodeId end) {
    std::vector<ChainTree::NodeId> out(end - begin);
    SaturatedChain c;
    for (ChainTree::NodeId v = begin; v < end; ++v) {
        T.chain_into(v, c);
        LabelWord w = lab.word(c);
        exchange_to_sink(P, lab, c, w);
        out[v - begin] = *T.find(c);
    }
    return out;
}

std::vector<ChainTree::NodeId> sink_nodes_omp(const Poset& P, const Labeling& lab, const ChainTree& T,
                                              ChainTree::NodeId begin, ChainTree::NodeId end) {
    std::vector<ChainTree::NodeId> out(end - begin);
    const long count = static_cast<long>(end - begin);
    std::string error;
#pragma omp parallel
    {
        SaturatedChain c;
#pragma omp for schedule(dynamic, 64)
        for (long k = 0; k < count; ++k) {
            try {
                T.chain_into(begin + static_cast<ChainTree::NodeId>(k), c);
                LabelWord w = lab.word(c);
                exchange_to_sink(P, lab, c, w);
                out[k] = *T.find(c);
            } catch (const std::exception& e) {
#pragma omp critical
                if (error.empty()) error = e.what();
            }
        }
    }
    if (!error.empty()) throw WhitneyError(ErrorKind::SwitchingViolation, error);
    return out;
}

} // namespace kernels

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::vector<ChainTree::NodeId> union_find_roots(const Poset& P, const Labeling& lab, const ChainTree& T,
                                                ChainTree::NodeId end) {
    const long count = static_cast<long>(end);
    std::vector<std::vector<ChainTree::NodeId>> links(count);
    std::string error;
#pragma omp parallel for schedule(dynamic, 64)
    for (long v = 0; v < count; ++v) {
        try {
            const SaturatedChain c = T.chain(static_cast<ChainTree::NodeId>(v));
            const LabelWord w = lab.word(c);
            for (std::size_t i = 1; i < w.size(); ++i) {
                SaturatedChain c2 = c;
                LabelWord w2 = w;
                if (exchange_in_place(P, lab, c2, w2, static_cast<int>(i))) links[v].push_back(*T.find(c2));
            }
        } catch (const std::exception& e) {
#pragma omp critical
            if (error.empty()) error = e.what();
        }
    }
    if (!error.empty()) throw WhitneyError(ErrorKind::SwitchingViolation, error);
    UnionFind uf(end);
    for (long v = 0; v < count; ++v)
        for (auto u : links[v]) uf.unite(static_cast<std::uint32_t>(v), u);
    std::vector<ChainTree::NodeId> roots(end);
    for (ChainTree::NodeId v = 0; v < end; ++v) roots[v] = uf.find(v);
    return roots;
}

void number_classes(const std::vector<ChainTree::NodeId>& key, ExchangeClasses& out) {
    std::unordered_map<ChainTree::NodeId, std::uint32_t> ids;
    for (std::size_t v = 0; v < key.size(); ++v) {
        auto [it, fresh] = ids.emplace(key[v], static_cast<std::uint32_t>(out.first_member.size()));
        if (fresh) out.first_member.push_back(static_cast<ChainTree::NodeId>(v));
        out.class_of[v] = it->second;
    }
    out.count = out.first_member.size();
}

} // namespace

ExchangeClasses exchange_classes(const Poset& P, const Labeling& lab, std::shared_ptr<const ChainTree> tree,
                                 int up_to_length, ClassStrategy strategy) {
    ExchangeClasses out;
    const ChainTree& T = *tree;
    int L = up_to_length < 0 ? T.max_length() : std::min(up_to_length, T.max_length());
    const ChainTree::NodeId end = T.level_end(L);
    out.tree = std::move(tree);
    out.class_of.assign(T.size(), ExchangeClasses::npos);

    if (strategy == ClassStrategy::NormalForm) {
        number_classes(kernels::sink_nodes_omp(P, lab, T, 0, end), out);
    } else if (strategy == ClassStrategy::UnionFind) {
        number_classes(union_find_roots(P, lab, T, end), out);
    } else {
        ExchangeClasses other;
        other.class_of.assign(T.size(), ExchangeClasses::npos);
        number_classes(kernels::sink_nodes_omp(P, lab, T, 0, end), out);
        number_classes(union_find_roots(P, lab, T, end), other);
        if (other.class_of != out.class_of) {
            std::size_t v = 0;
            while (other.class_of[v] == out.class_of[v]) ++v;
            throw WhitneyError(ErrorKind::ClassMismatch,
                               "normal-form and union-find classes differ at chain node " + std::to_string(v) + " (" +
                                   std::to_string(out.count) + " vs " + std::to_string(other.count) + " classes)");
        }
    }
    return out;
}

ExchangeClasses exchange_classes(const Poset& P, const Labeling& lab, int up_to_length, ClassStrategy strategy,
                                 std::size_t chain_cap) {
    auto tree = std::make_shared<const ChainTree>(ChainTree::build(P, chain_cap));
    return exchange_classes(P, lab, std::move(tree), up_to_length, strategy);
}

namespace {

// Multiset difference big \ small of sorted letter lists; empty optional unless exactly one letter remains.
std::optional<Label> single_difference(const LabelWord& small, const LabelWord& big) {
    LabelWord a = letter_multiset(small), b = letter_multiset(big), diff;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff));
    if (diff.size() != 1 || b.size() != a.size() + 1) return std::nullopt;
    return diff[0];
}

} // namespace

QuotientPoset build_Q(const Poset& P, const Labeling& lab, const DualOptions& opt) {
    QuotientPoset Q;
    if (!opt.assume_verified) {
        Q.verdict = verify_whitney(P, lab, opt.cancellative);
        if (!Q.verdict.ok()) throw WhitneyError(ErrorKind::NotWhitneyLabeling, Q.verdict.reason);
    }
    ClassStrategy strategy = ClassStrategy::UnionFind;
    if (opt.cross_check)
        strategy = ClassStrategy::CrossCheck;
    else if (!opt.assume_verified && Q.verdict.strict())
        strategy = ClassStrategy::NormalForm;

    auto tree = std::make_shared<const ChainTree>(ChainTree::build(P, opt.chain_cap));
    const ChainTree& T = *tree;
    ExchangeClasses cls = exchange_classes(P, lab, tree, -1, strategy);
    Q.tree = tree;

    const long nodes = static_cast<long>(T.size());
    std::vector<LabelWord> letters(nodes);
    std::vector<Label> last(nodes);
    std::vector<char> ascent_free(nodes);
#pragma omp parallel
    {
        SaturatedChain c;
#pragma omp for schedule(dynamic, 64)
        for (long v = 0; v < nodes; ++v) {
            T.chain_into(static_cast<ChainTree::NodeId>(v), c);
            LabelWord w = lab.word(c);
            ascent_free[v] = is_ascent_free(w, lab.order());
            if (!w.empty()) last[v] = w.back();
            letters[v] = letter_multiset(w);
        }
    }

    const std::size_t k = cls.count;
    std::vector<ChainTree::NodeId> rep(k, ChainTree::npos);
    std::vector<std::size_t> size(k, 0), af(k, 0);
    for (ChainTree::NodeId v = 0; v < T.size(); ++v) {
        const auto c = cls.class_of[v];
        const auto f = cls.first_member[c];
        if (T.top(v) != T.top(f) || letters[v] != letters[f])
            throw WhitneyError(ErrorKind::ClassMismatch, "class members disagree on endpoint or letters");
        ++size[c];
        if (ascent_free[v]) {
            ++af[c];
            if (rep[c] == ChainTree::npos) rep[c] = v;
        }
    }
    std::vector<LabelWord> canon(k);
    for (std::size_t c = 0; c < k; ++c) {
        if (rep[c] == ChainTree::npos) rep[c] = cls.first_member[c];
        canon[c] = sort_word(lab.word(T.chain(rep[c])), lab.order());
    }

    std::vector<std::uint32_t> order(k);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        auto ka = std::make_tuple(T.length(rep[a]), T.top(rep[a]));
        auto kb = std::make_tuple(T.length(rep[b]), T.top(rep[b]));
        if (ka != kb) return ka < kb;
        if (canon[a] != canon[b]) return canon[a] < canon[b];
        return cls.first_member[a] < cls.first_member[b];
    });
    std::vector<ElementId> elem_of_class(k);
    for (std::size_t i = 0; i < k; ++i) elem_of_class[order[i]] = static_cast<ElementId>(i);

    Q.node_class.resize(T.size());
    for (ChainTree::NodeId v = 0; v < T.size(); ++v) Q.node_class[v] = elem_of_class[cls.class_of[v]];
    Q.endpoint.resize(k);
    Q.canonical_word.resize(k);
    Q.representative.resize(k);
    Q.class_size.resize(k);
    Q.ascent_free_members.resize(k);
    std::vector<std::string> names(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto c = order[i];
        Q.endpoint[i] = T.top(rep[c]);
        Q.canonical_word[i] = canon[c];
        Q.representative[i] = rep[c];
        Q.class_size[i] = size[c];
        Q.ascent_free_members[i] = af[c];
        names[i] = P.name(Q.endpoint[i]) + "[" + word_str(canon[c]) + "]";
    }

    std::vector<Cover> covers;
    covers.reserve(T.size());
    for (ChainTree::NodeId v = 1; v < T.size(); ++v) covers.emplace_back(Q.node_class[T.parent(v)], Q.node_class[v]);
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    Q.poset = build_poset(covers, k, std::move(names));

    Q.dual_labeling = std::make_shared<EdgeLabeling>(lab.order(), "dual");
    for (auto [X, Y] : covers) {
        auto l = single_difference(Q.canonical_word[X], Q.canonical_word[Y]);
        if (!l)
            throw WhitneyError(ErrorKind::NotWhitneyLabeling, "letter multisets of " + Q.poset.name(X) + " and " +
                                                                  Q.poset.name(Y) + " do not differ by one label");
        Q.dual_labeling->set(X, Y, *l);
    }
    for (ChainTree::NodeId v = 1; v < T.size(); ++v)
        if (Q.dual_labeling->at(Q.node_class[T.parent(v)], Q.node_class[v]) != last[v])
            throw WhitneyError(ErrorKind::NotWhitneyLabeling, "induced label disagrees with the last chain label");
    return Q;
}

RPoset build_R(const Poset& P, const Labeling& lab, const DualOptions& opt) {
    if (!opt.assume_verified) {
        auto v = verify_whitney(P, lab, opt.cancellative);
        if (!v.strict()) throw WhitneyError(ErrorKind::NotCW, v.ok() ? "only the generalized verdict holds" : v.reason);
    }
    struct Item {
        ElementId x;
        LabelWord w;
        SaturatedChain c;
    };
    std::vector<Item> items;
    SaturatedChain path{P.bottom()};
    LabelWord word;
    auto rec = [&](auto& self) -> void {
        items.push_back({path.back(), word, path});
        if (items.size() > opt.chain_cap) throw WhitneyError(ErrorKind::SizeLimit, "too many ascent-free chains");
        for (ElementId z : P.up(path.back())) {
            path.push_back(z);
            Label l = lab.label(path);
            if (word.empty() || !lab.order().less(word.back(), l)) {
                word.push_back(l);
                self(self);
                word.pop_back();
            }
            path.pop_back();
        }
    };
    rec(rec);
    std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        auto ka = std::make_tuple(P.rank(a.x), a.x);
        auto kb = std::make_tuple(P.rank(b.x), b.x);
        if (ka != kb) return ka < kb;
        return a.w < b.w;
    });
    std::map<std::pair<ElementId, LabelWord>, ElementId> index;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (!index.emplace(std::make_pair(items[i].x, items[i].w), static_cast<ElementId>(i)).second)
            throw WhitneyError(ErrorKind::NotCW, "two ascent-free chains to " + P.name(items[i].x) + " share the word " +
                                                     word_str(items[i].w));
    RPoset R;
    std::vector<Cover> covers;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& it = items[i];
        for (ElementId y : P.up(it.x)) {
            SaturatedChain c = it.c;
            c.push_back(y);
            LabelWord u = it.w;
            u.push_back(lab.label(c));
            u = sort_word(u, lab.order());
            auto f = index.find({y, u});
            if (f == index.end())
                throw WhitneyError(ErrorKind::NotCW, "no ascent-free chain to " + P.name(y) + " with word " + word_str(u));
            covers.emplace_back(static_cast<ElementId>(i), f->second);
        }
        names.push_back(P.name(it.x) + "[" + word_str(it.w) + "]");
        R.element.push_back(it.x);
        R.word.push_back(it.w);
        R.chain.push_back(it.c);
    }
    R.poset = build_poset(covers, items.size(), std::move(names));
    return R;
}

VerificationReport verify_R_iso_Q(const Poset& P, const Labeling& lab, const RPoset& R, const QuotientPoset& Q) {
    (void)P;
    (void)lab;
    VerificationReport rep;
    rep.property = "R isomorphic to Q";
    auto fail = [&](const std::string& why) {
        rep.pass = false;
        Counterexample ce;
        ce.reason = why;
        rep.counterexample = ce;
        return rep;
    };
    if (R.poset.size() != Q.poset.size())
        return fail("sizes differ: " + std::to_string(R.poset.size()) + " vs " + std::to_string(Q.poset.size()));
    std::vector<ElementId> phi(R.poset.size());
    std::vector<char> used(Q.poset.size(), 0);
    for (ElementId r = 0; r < R.poset.size(); ++r) {
        auto node = Q.tree->find(R.chain[r]);
        if (!node) return fail("chain of " + R.poset.name(r) + " is not a bottom chain");
        phi[r] = Q.node_class[*node];
        if (used[phi[r]]) return fail("two pairs map to " + Q.poset.name(phi[r]));
        used[phi[r]] = 1;
        ++rep.checked;
    }
    if (!is_isomorphism(R.poset, Q.poset, phi)) return fail("the explicit map does not preserve covers");
    return rep;
}

VerificationReport verify_R_iso_Q(const Poset& P, const Labeling& lab, const DualOptions& opt) {
    RPoset R = build_R(P, lab, opt);
    DualOptions o = opt;
    o.assume_verified = true;
    QuotientPoset Q = build_Q(P, lab, o);
    return verify_R_iso_Q(P, lab, R, Q);
}

VerificationReport mobius_Q_check(const Poset& P, const Labeling& lab, const QuotientPoset& Q) {
    VerificationReport rep;
    rep.property = "Moebius criterion on the quotient";
    const ChainTree& T = *Q.tree;
    const long k = static_cast<long>(Q.poset.size());
    std::vector<std::string> bad(k);
    std::size_t checked = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : checked)
    for (long X = 0; X < k; ++X) {
        SaturatedChain path = T.chain(Q.representative[X]);
        const std::size_t base = path.size() - 1;
        std::vector<char> hit(k, 0);
        std::vector<int> per_top(P.size(), 0);
        LabelWord word;
        auto rec = [&](auto& self) -> void {
            ++per_top[path.back()];
            hit[Q.node_class[*T.find(path)]] = 1;
            for (ElementId z : P.up(path.back())) {
                path.push_back(z);
                Label l = lab.label(path);
                if (word.empty() || lab.order().less(word.back(), l)) {
                    word.push_back(l);
                    self(self);
                    word.pop_back();
                }
                path.pop_back();
            }
        };
        rec(rec);
        const ElementId ex = path[base];
        for (ElementId y = 0; y < P.size() && bad[X].empty(); ++y)
            if (P.leq(ex, y) && per_top[y] != 1)
                bad[X] = "rooted interval [" + P.name(ex) + "," + P.name(y) + "] has " + std::to_string(per_top[y]) +
                         " increasing chains";
        const auto& row = Q.poset.mobius_row(static_cast<ElementId>(X));
        for (ElementId Y = 0; Y < Q.poset.size() && bad[X].empty(); ++Y) {
            if (!Q.poset.leq(static_cast<ElementId>(X), Y)) continue;
            ++checked;
            long long expect = 0;
            if (hit[Y]) expect = ((Q.poset.rank(Y) - Q.poset.rank(static_cast<ElementId>(X))) % 2 == 0) ? 1 : -1;
            if (row[Y] != expect)
                bad[X] = "mu(" + Q.poset.name(static_cast<ElementId>(X)) + "," + Q.poset.name(Y) + ") = " +
                         std::to_string(row[Y]) + ", criterion gives " + std::to_string(expect);
        }
    }
    rep.checked = checked;
    for (long X = 0; X < k; ++X)
        if (!bad[X].empty()) {
            rep.pass = false;
            Counterexample ce;
            ce.reason = bad[X];
            rep.counterexample = ce;
            break;
        }
    return rep;
}

VerificationReport chain_bijection_check(const Poset&, const Labeling& lab, const QuotientPoset& Q) {
    VerificationReport rep;
    rep.property = "chain bijection";
    const ChainTree& T = *Q.tree;
    ChainTree QT = ChainTree::build(Q.poset, T.size() + 1);
    auto fail = [&](const std::string& why) {
        rep.pass = false;
        Counterexample ce;
        ce.reason = why;
        rep.counterexample = ce;
        return rep;
    };
    if (QT.size() != T.size())
        return fail("chain counts differ: " + std::to_string(QT.size()) + " vs " + std::to_string(T.size()));
    std::vector<char> used(T.size(), 0);
    SaturatedChain D, d;
    for (ChainTree::NodeId v = 0; v < QT.size(); ++v) {
        QT.chain_into(v, D);
        d.resize(D.size());
        for (std::size_t i = 0; i < D.size(); ++i) d[i] = Q.endpoint[D[i]];
        auto node = T.find(d);
        if (!node) return fail("image of a quotient chain is not a chain of P");
        if (used[*node]) return fail("two quotient chains share an image");
        used[*node] = 1;
        if (Q.dual_labeling->word(D) != lab.word(d)) return fail("words differ along a chain");
        ++rep.checked;
    }
    return rep;
}

ChainPoset chain_poset(const Poset& P, std::size_t chain_cap) {
    auto tree = std::make_shared<const ChainTree>(ChainTree::build(P, chain_cap));
    std::vector<Cover> covers;
    std::vector<std::string> names(tree->size());
    SaturatedChain c;
    for (ChainTree::NodeId v = 0; v < tree->size(); ++v) {
        if (v != 0) covers.emplace_back(tree->parent(v), v);
        tree->chain_into(v, c);
        for (std::size_t k = 0; k < c.size(); ++k) names[v] += (k ? "<" : "") + P.name(c[k]);
    }
    return {build_poset(covers, tree->size(), std::move(names)), tree};
}

} // namespace whitney
