#include "whitney/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace whitney {

namespace {

enum class Step { Any, Ascent, NonAscent };

bool step_allowed(Step mode, const LabelOrder& order, const LabelWord& word, const Label& next) {
    if (word.empty() || mode == Step::Any) return true;
    bool asc = order.less(word.back(), next);
    return mode == Step::Ascent ? asc : !asc;
}

// Depth-first walk over chains leaving path.back(), calling visit(path, word) at every reached element
// (the start included). `word` only holds labels above the starting element.
template <class Visit>
void walk(const Poset& P, const Labeling& lab, SaturatedChain& path, LabelWord& word, Step mode, Visit& visit,
          ElementId bound = ~ElementId{0}) {
    visit(path, word);
    const ElementId t = path.back();
    for (ElementId z : P.up(t)) {
        if (bound != ~ElementId{0} && !P.leq(z, bound)) continue;
        path.push_back(z);
        Label l = lab.label(path);
        if (step_allowed(mode, lab.order(), word, l)) {
            word.push_back(l);
            walk(P, lab, path, word, mode, visit, bound);
            word.pop_back();
        }
        path.pop_back();
    }
}

// Rooted contexts: one per element for edge labelings, one per bottom chain otherwise.
class Contexts {
public:
    Contexts(const Poset& P, const Labeling& lab) : P_(P), edge_(!lab.is_chain_edge()) {
        if (!edge_) tree_ = ChainTree::build(P);
    }
    std::size_t size() const { return edge_ ? P_.size() : tree_->size(); }
    void get(std::size_t i, SaturatedChain& out) const {
        if (edge_) {
            out.assign(1, static_cast<ElementId>(i));
        } else {
            tree_->chain_into(static_cast<ChainTree::NodeId>(i), out);
        }
    }

private:
    const Poset& P_;
    bool edge_;
    std::optional<ChainTree> tree_;
};

VerificationReport unique_chain_check(const Poset& P, const Labeling& lab, Step mode, const std::string& property,
                                      const std::string& what) {
    VerificationReport rep;
    rep.property = property;
    Contexts ctx(P, lab);
    const long count = static_cast<long>(ctx.size());
    std::vector<std::optional<std::pair<ElementId, int>>> bad(count);
    std::size_t checked = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : checked)
    for (long i = 0; i < count; ++i) {
        SaturatedChain path;
        ctx.get(static_cast<std::size_t>(i), path);
        std::vector<int> hits(P.size(), 0);
        LabelWord word;
        auto visit = [&](const SaturatedChain& p, const LabelWord&) { ++hits[p.back()]; };
        walk(P, lab, path, word, mode, visit);
        const ElementId x = path.back();
        for (ElementId y = 0; y < P.size(); ++y) {
            if (y == x || !P.leq(x, y)) continue;
            ++checked;
            if (hits[y] != 1) {
                bad[i] = std::make_pair(y, hits[y]);
                break;
            }
        }
    }
    rep.checked = checked;
    for (long i = 0; i < count; ++i) {
        if (!bad[i]) continue;
        Counterexample ce;
        ctx.get(static_cast<std::size_t>(i), ce.root);
        ce.lo = ce.root.back();
        ce.hi = bad[i]->first;
        ce.reason = std::to_string(bad[i]->second) + " " + what + " maximal chains";
        rooted_interval_chains(P, lab, ce.root, ce.hi, ce.chains, ce.words);
        rep.pass = false;
        rep.counterexample = std::move(ce);
        break;
    }
    return rep;
}

std::string chain_str(const Poset& P, const SaturatedChain& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += " < ";
        s += P.name(c[i]);
    }
    return s;
}

} // namespace

void rooted_interval_chains(const Poset& P, const Labeling& lab, const SaturatedChain& root, ElementId y,
                            std::vector<SaturatedChain>& chains, std::vector<LabelWord>& words, std::size_t limit) {
    SaturatedChain path = root;
    LabelWord word;
    const std::size_t base = root.size() - 1;
    auto visit = [&](const SaturatedChain& p, const LabelWord& w) {
        if (p.back() != y || chains.size() >= limit) return;
        chains.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(base), p.end());
        words.push_back(w);
    };
    walk(P, lab, path, word, Step::Any, visit, y);
}

std::string Counterexample::describe(const Poset& P) const {
    std::ostringstream os;
    os << reason << " in [" << P.name(lo) << ", " << P.name(hi) << "]";
    if (root.size() > 1) os << " rooted at " << chain_str(P, root);
    for (std::size_t i = 0; i < chains.size(); ++i)
        os << "\n    " << chain_str(P, chains[i]) << "  word " << word_str(words[i]);
    return os.str();
}

std::string VerificationReport::summary(const Poset& P) const {
    std::string s = property + ": " + (skipped ? "skipped" : pass ? "pass" : "fail");
    if (counterexample) s += "\n  " + counterexample->describe(P);
    return s;
}

VerificationReport verify_ER(const Poset& P, const Labeling& lab) {
    return unique_chain_check(P, lab, Step::Ascent, lab.is_chain_edge() ? "CR" : "ER", "increasing");
}

VerificationReport verify_ER_star(const Poset& P, const Labeling& lab) {
    if (lab.is_chain_edge())
        throw WhitneyError(ErrorKind::InvalidInput, "ER* is only checked for edge labelings");
    return unique_chain_check(P, lab, Step::NonAscent, "ER*", "ascent-free");
}

std::vector<ElementId> exchange_candidates(const Poset& P, const Labeling& lab, const SaturatedChain& chain, int i,
                                           const LabelWord& word) {
    std::vector<ElementId> out;
    const ElementId lo = chain[i - 1], mid = chain[i], hi = chain[i + 1];
    const Label first = word[i], second = word[i - 1];
    if (!lab.is_chain_edge()) {
        const auto& el = static_cast<const EdgeLabeling&>(lab);
        for (ElementId z : P.up(lo))
            if (z != mid && P.covers(z, hi) && el.at(lo, z) == first && el.at(z, hi) == second) out.push_back(z);
        return out;
    }
    // The switching condition is stated on maximal chains, so extend a prefix along first covers.
    SaturatedChain alt = chain;
    while (!P.up(alt.back()).empty()) alt.push_back(P.up(alt.back())[0]);
    LabelWord target = alt.size() == chain.size() ? word : lab.word(alt);
    std::swap(target[i - 1], target[i]);
    for (ElementId z : P.up(lo)) {
        if (z == mid || !P.covers(z, hi)) continue;
        alt[i] = z;
        if (lab.word(alt) == target) out.push_back(z);
    }
    return out;
}

bool exchange_in_place(const Poset& P, const Labeling& lab, SaturatedChain& chain, LabelWord& word, int i) {
    if (!lab.order().less(word[i - 1], word[i])) return false;
    auto cand = exchange_candidates(P, lab, chain, i, word);
    if (cand.size() != 1)
        throw WhitneyError(ErrorKind::SwitchingViolation, std::to_string(cand.size()) + " exchange partners at rank " +
                                                              std::to_string(i) + " of " + chain_str(P, chain));
    chain[i] = cand[0];
    std::swap(word[i - 1], word[i]);
    return true;
}

SaturatedChain quadratic_exchange(const Poset& P, const Labeling& lab, const SaturatedChain& chain, int i) {
    if (i < 1 || static_cast<std::size_t>(i) + 1 >= chain.size())
        throw WhitneyError(ErrorKind::InvalidInput, "rank " + std::to_string(i) + " is not interior to the chain");
    SaturatedChain c = chain;
    LabelWord w = lab.word(c);
    exchange_in_place(P, lab, c, w, i);
    return c;
}

void exchange_to_sink(const Poset& P, const Labeling& lab, SaturatedChain& chain, LabelWord& word) {
    for (;;) {
        int asc = 0;
        for (std::size_t k = 1; k < word.size(); ++k)
            if (lab.order().less(word[k - 1], word[k])) {
                asc = static_cast<int>(k);
                break;
            }
        if (asc == 0) return;
        exchange_in_place(P, lab, chain, word, asc);
    }
}

namespace {

VerificationReport switching_edge(const Poset& P, const EdgeLabeling& lab) {
    VerificationReport rep;
    rep.property = "rank-two switching";
    const long n = static_cast<long>(P.size());
    std::vector<std::optional<Counterexample>> bad(n);
    std::size_t checked = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : checked)
    for (long xi = 0; xi < n; ++xi) {
        const ElementId x = static_cast<ElementId>(xi);
        std::map<ElementId, std::vector<ElementId>> middles;
        for (ElementId z : P.up(x))
            for (ElementId y : P.up(z)) middles[y].push_back(z);
        for (auto& [y, zs] : middles) {
            ++checked;
            std::vector<ElementId> inc;
            for (ElementId z : zs)
                if (lab.order().less(lab.at(x, z), lab.at(z, y))) inc.push_back(z);
            std::string reason;
            if (inc.size() != 1) {
                reason = std::to_string(inc.size()) + " increasing chains in a rank-two interval";
            } else {
                const Label a = lab.at(x, inc[0]), b = lab.at(inc[0], y);
                int partners = 0;
                for (ElementId z : zs)
                    if (lab.at(x, z) == b && lab.at(z, y) == a) ++partners;
                if (partners != 1) reason = std::to_string(partners) + " chains carry the transposed word";
            }
            if (!reason.empty()) {
                Counterexample ce;
                ce.reason = reason;
                ce.root = {x};
                ce.lo = x;
                ce.hi = y;
                for (ElementId z : zs) {
                    ce.chains.push_back({x, z, y});
                    ce.words.push_back({lab.at(x, z), lab.at(z, y)});
                }
                bad[xi] = std::move(ce);
                break;
            }
        }
    }
    rep.checked = checked;
    for (auto& b : bad)
        if (b) {
            rep.pass = false;
            rep.counterexample = std::move(b);
            break;
        }
    return rep;
}

VerificationReport switching_chain_edge(const Poset& P, const Labeling& lab) {
    VerificationReport rep;
    rep.property = "rank-two switching";
    ChainTree T = ChainTree::build(P);
    auto maxes = T.maximal_nodes();
    const long count = static_cast<long>(maxes.size());
    struct Found {
        int rank;
        std::vector<ElementId> cand;
    };
    std::vector<std::vector<Found>> found(count);
    std::vector<LabelWord> words(count);
#pragma omp parallel for schedule(dynamic, 8)
    for (long k = 0; k < count; ++k) {
        SaturatedChain c = T.chain(maxes[k]);
        words[k] = lab.word(c);
        for (std::size_t i = 1; i < words[k].size(); ++i)
            if (lab.order().less(words[k][i - 1], words[k][i]))
                found[k].push_back({static_cast<int>(i), exchange_candidates(P, lab, c, static_cast<int>(i), words[k])});
    }
    // Consistency: chains sharing their bottom i+1 steps must choose the same replacement.
    std::unordered_map<ChainTree::NodeId, std::pair<ElementId, long>> choice;
    for (long k = 0; k < count && rep.pass; ++k) {
        SaturatedChain c = T.chain(maxes[k]);
        for (const auto& f : found[k]) {
            ++rep.checked;
            Counterexample ce;
            if (f.cand.size() != 1) {
                ce.reason = std::to_string(f.cand.size()) + " exchange partners at rank " + std::to_string(f.rank);
            } else {
                auto key = *T.find(std::span<const ElementId>(c).first(f.rank + 2));
                auto [it, fresh] = choice.emplace(key, std::make_pair(f.cand[0], k));
                if (!fresh && it->second.first != f.cand[0]) {
                    ce.reason = "inconsistent exchange choice at rank " + std::to_string(f.rank) +
                                " for chains sharing their bottom";
                    SaturatedChain other = T.chain(maxes[it->second.second]);
                    ce.chains.push_back(other);
                    ce.words.push_back(words[it->second.second]);
                }
            }
            if (!ce.reason.empty()) {
                ce.root = {c[0]};
                ce.lo = c[0];
                ce.hi = c.back();
                ce.chains.insert(ce.chains.begin(), c);
                ce.words.insert(ce.words.begin(), words[k]);
                rep.pass = false;
                rep.counterexample = std::move(ce);
                break;
            }
        }
    }
    return rep;
}

} // namespace

VerificationReport verify_rank_two_switching(const Poset& P, const Labeling& lab) {
    if (!lab.is_chain_edge()) return switching_edge(P, static_cast<const EdgeLabeling&>(lab));
    return switching_chain_edge(P, lab);
}

VerificationReport verify_braid(const Poset& P, const Labeling& lab) {
    VerificationReport rep;
    rep.property = "braid";
    ChainTree T = ChainTree::build(P);
    auto maxes = T.maximal_nodes();
    const long count = static_cast<long>(maxes.size());
    std::vector<std::optional<Counterexample>> bad(count);
    std::size_t checked = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : checked)
    for (long k = 0; k < count; ++k) {
        const SaturatedChain c = T.chain(maxes[k]);
        const LabelWord w = lab.word(c);
        for (std::size_t i = 1; i + 1 < w.size(); ++i) {
            if (!(lab.order().less(w[i - 1], w[i]) && lab.order().less(w[i], w[i + 1]))) continue;
            ++checked;
            const int r = static_cast<int>(i);
            SaturatedChain a = c, b = c;
            LabelWord wa = w, wb = w;
            std::string reason;
            try {
                exchange_in_place(P, lab, a, wa, r);
                exchange_in_place(P, lab, a, wa, r + 1);
                exchange_in_place(P, lab, a, wa, r);
                exchange_in_place(P, lab, b, wb, r + 1);
                exchange_in_place(P, lab, b, wb, r);
                exchange_in_place(P, lab, b, wb, r + 1);
                if (a != b) reason = "braid relation fails at rank " + std::to_string(r);
            } catch (const WhitneyError& e) {
                reason = e.what();
            }
            if (!reason.empty()) {
                Counterexample ce;
                ce.reason = reason;
                ce.root = {c[0]};
                ce.lo = c[0];
                ce.hi = c.back();
                ce.chains = {c, a, b};
                ce.words = {w, wa, wb};
                bad[k] = std::move(ce);
                break;
            }
        }
    }
    rep.checked = checked;
    for (auto& b : bad)
        if (b) {
            rep.pass = false;
            rep.counterexample = std::move(b);
            break;
        }
    return rep;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Exchange-graph components among maximal chains of the rooted interval [root.back(), y].
void interval_components(const Poset& P, const Labeling& lab, const SaturatedChain& root, ElementId y,
                         std::vector<SaturatedChain>& chains, std::vector<std::size_t>& comp) {
    std::vector<LabelWord> words;
    chains.clear();
    rooted_interval_chains(P, lab, root, y, chains, words, ~std::size_t{0});
    std::map<SaturatedChain, std::size_t> index;
    for (std::size_t k = 0; k < chains.size(); ++k) index[chains[k]] = k;
    UnionFind uf(chains.size());
    const std::size_t base = root.size() - 1;
    for (std::size_t k = 0; k < chains.size(); ++k) {
        SaturatedChain full(root.begin(), root.end() - 1);
        full.insert(full.end(), chains[k].begin(), chains[k].end());
        const LabelWord fw = lab.word(full);
        for (std::size_t i = base + 1; i + 1 < full.size(); ++i) {
            SaturatedChain c = full;
            LabelWord w = fw;
            if (!exchange_in_place(P, lab, c, w, static_cast<int>(i))) continue;
            SaturatedChain tail(c.begin() + static_cast<std::ptrdiff_t>(base), c.end());
            uf.unite(k, index.at(tail));
        }
    }
    comp.resize(chains.size());
    for (std::size_t k = 0; k < chains.size(); ++k) comp[k] = uf.find(k);
}

} // namespace

VerificationReport verify_cancellative(const Poset& P, const Labeling& lab, const CancellativeOptions& opt) {
    VerificationReport rep;
    rep.property = "cancellative";
    std::optional<ChainTree> tree;
    try {
        tree = ChainTree::build(P, opt.force ? ChainTree::kDefaultCap : opt.max_chains);
    } catch (const WhitneyError&) {
        if (!opt.force) {
            rep.skipped = true;
            return rep;
        }
        throw;
    }
    if (!opt.force && P.height() > opt.max_ranks) {
        rep.skipped = true;
        return rep;
    }
    std::vector<SaturatedChain> roots;
    if (!lab.is_chain_edge()) {
        for (ElementId z = 0; z < P.size(); ++z) roots.push_back({z});
    } else {
        for (ChainTree::NodeId v = 0; v < tree->size(); ++v) roots.push_back(tree->chain(v));
    }
    const long count = static_cast<long>(roots.size());
    std::vector<std::optional<Counterexample>> bad(count);
    std::size_t checked = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : checked)
    for (long ri = 0; ri < count; ++ri) {
        const SaturatedChain& root = roots[ri];
        const ElementId z = root.back();
        try {
            for (ElementId y = 0; y < P.size() && !bad[ri]; ++y) {
                if (!P.leq(z, y) || P.rank(y) - P.rank(z) < 2) continue;
                std::vector<SaturatedChain> M;
                std::vector<std::size_t> comp;
                interval_components(P, lab, root, y, M, comp);
                for (ElementId x = 0; x < P.size() && !bad[ri]; ++x) {
                    if (x == z || x == y || !P.leq(z, x) || !P.leq(x, y)) continue;
                    const std::size_t d = static_cast<std::size_t>(P.rank(x) - P.rank(z));
                    std::map<SaturatedChain, std::vector<std::size_t>> groups;
                    for (std::size_t k = 0; k < M.size(); ++k)
                        if (M[k][d] == x) groups[SaturatedChain(M[k].begin(), M[k].begin() + d + 1)].push_back(k);
                    for (auto& [prefix, members] : groups) {
                        SaturatedChain sub = root;
                        sub.insert(sub.end(), prefix.begin() + 1, prefix.end());
                        std::vector<SaturatedChain> M2;
                        std::vector<std::size_t> comp2;
                        interval_components(P, lab, sub, y, M2, comp2);
                        std::map<SaturatedChain, std::size_t> idx2;
                        for (std::size_t k = 0; k < M2.size(); ++k) idx2[M2[k]] = comp2[k];
                        std::map<std::size_t, std::pair<std::size_t, std::size_t>> seen;
                        for (std::size_t k : members) {
                            ++checked;
                            SaturatedChain tail(M[k].begin() + static_cast<std::ptrdiff_t>(d), M[k].end());
                            std::size_t c2 = idx2.at(tail);
                            auto [it, fresh] = seen.emplace(comp[k], std::make_pair(c2, k));
                            if (!fresh && it->second.first != c2) {
                                Counterexample ce;
                                ce.reason = "chains joined through [" + P.name(z) + "," + P.name(y) +
                                            "] but separated above " + P.name(x);
                                ce.root = root;
                                ce.lo = z;
                                ce.hi = y;
                                ce.chains = {M[it->second.second], M[k]};
                                bad[ri] = std::move(ce);
                                break;
                            }
                        }
                        if (bad[ri]) break;
                    }
                }
            }
        } catch (const WhitneyError& e) {
            Counterexample ce;
            ce.reason = e.what();
            ce.root = root;
            ce.lo = ce.hi = z;
            bad[ri] = std::move(ce);
        }
    }
    rep.checked = checked;
    for (auto& b : bad)
        if (b) {
            for (const auto& c : b->chains) {
                SaturatedChain full = b->root;
                full.insert(full.end(), c.begin() + 1, c.end());
                LabelWord w = lab.word(full);
                b->words.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(b->root.size() - 1), w.end());
            }
            rep.pass = false;
            rep.counterexample = std::move(b);
            break;
        }
    return rep;
}

namespace {

VerificationReport word_uniqueness(const Poset& P, const Labeling& lab, Step mode, const std::string& property) {
    VerificationReport rep;
    rep.property = property;
    Contexts ctx(P, lab);
    const long count = static_cast<long>(ctx.size());
    std::vector<std::optional<Counterexample>> bad(count);
    std::size_t checked = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : checked)
    for (long i = 0; i < count; ++i) {
        SaturatedChain path;
        ctx.get(static_cast<std::size_t>(i), path);
        const std::size_t base = path.size() - 1;
        std::map<std::pair<ElementId, LabelWord>, SaturatedChain> seen;
        std::optional<Counterexample> found;
        auto visit = [&](const SaturatedChain& p, const LabelWord& w) {
            if (found) return;
            SaturatedChain tail(p.begin() + static_cast<std::ptrdiff_t>(base), p.end());
            ++checked;
            auto [it, fresh] = seen.emplace(std::make_pair(p.back(), w), tail);
            if (!fresh) {
                Counterexample ce;
                ce.reason = "two chains share the word " + word_str(w);
                ce.root = SaturatedChain(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(base) + 1);
                ce.lo = p[base];
                ce.hi = p.back();
                ce.chains = {it->second, tail};
                ce.words = {w, w};
                found = std::move(ce);
            }
        };
        LabelWord word;
        walk(P, lab, path, word, mode, visit);
        bad[i] = std::move(found);
    }
    rep.checked = checked;
    for (auto& b : bad)
        if (b) {
            rep.pass = false;
            rep.counterexample = std::move(b);
            break;
        }
    return rep;
}

} // namespace

VerificationReport verify_word_uniqueness(const Poset& P, const Labeling& lab) {
    if (lab.is_chain_edge()) return word_uniqueness(P, lab, Step::NonAscent, "ascent-free word uniqueness");
    return word_uniqueness(P, lab, Step::Any, "word uniqueness");
}

VerificationReport verify_ascent_free_word_uniqueness(const Poset& P, const Labeling& lab) {
    return word_uniqueness(P, lab, Step::NonAscent, "ascent-free word uniqueness");
}

VerificationReport verify_bottom_consistency(const Poset& P, const Labeling& lab) {
    VerificationReport rep;
    rep.property = "bottom consistency";
    ChainTree T = ChainTree::build(P);
    auto maxes = T.maximal_nodes();
    for (auto v : maxes) {
        SaturatedChain c = T.chain(v);
        LabelWord w = lab.word(c);
        LabelWord step = lab.Labeling::word(c);
        ++rep.checked;
        if (w != step) {
            Counterexample ce;
            ce.reason = "whole-chain word disagrees with per-edge labels";
            ce.root = {c[0]};
            ce.lo = c[0];
            ce.hi = c.back();
            ce.chains = {c, c};
            ce.words = {w, step};
            rep.pass = false;
            rep.counterexample = std::move(ce);
            break;
        }
    }
    return rep;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::EW: return "EW";
    case Verdict::GeneralizedEWOnly: return "generalized-EW";
    case Verdict::CW: return "CW";
    case Verdict::GeneralizedCWOnly: return "generalized-CW";
    case Verdict::Fail: return "fail";
    }
    return "fail";
}

namespace {

WhitneyVerdict composite(const Poset& P, const Labeling& lab, const CancellativeOptions& opt, bool edge_mode) {
    WhitneyVerdict out;
    auto fail = [&](const VerificationReport& r) {
        out.verdict = Verdict::Fail;
        out.reason = r.property + " fails";
        if (r.counterexample) out.reason += ": " + r.counterexample->describe(P);
        return out;
    };
    if (lab.is_chain_edge()) {
        out.reports.push_back(verify_bottom_consistency(P, lab));
        if (!out.reports.back().pass) return fail(out.reports.back());
    }
    out.reports.push_back(verify_ER(P, lab));
    if (!out.reports.back().pass) return fail(out.reports.back());
    out.reports.push_back(verify_rank_two_switching(P, lab));
    if (!out.reports.back().pass) return fail(out.reports.back());
    out.reports.push_back(edge_mode ? verify_word_uniqueness(P, lab) : verify_ascent_free_word_uniqueness(P, lab));
    if (out.reports.back().pass) {
        out.verdict = edge_mode ? Verdict::EW : Verdict::CW;
        return out;
    }
    out.reports.push_back(verify_braid(P, lab));
    if (!out.reports.back().pass) return fail(out.reports.back());
    out.reports.push_back(verify_cancellative(P, lab, opt));
    const auto& canc = out.reports.back();
    if (canc.skipped) {
        out.verdict = Verdict::Fail;
        out.reason = "word uniqueness fails and the cancellative check was skipped by the size gate";
        return out;
    }
    if (!canc.pass) return fail(canc);
    out.verdict = edge_mode ? Verdict::GeneralizedEWOnly : Verdict::GeneralizedCWOnly;
    return out;
}

} // namespace

WhitneyVerdict verify_EW(const Poset& P, const Labeling& lab, const CancellativeOptions& opt) {
    if (lab.is_chain_edge()) {
        WhitneyVerdict v;
        v.reason = "EW needs an edge labeling";
        return v;
    }
    return composite(P, lab, opt, true);
}

WhitneyVerdict verify_CW(const Poset& P, const Labeling& lab, const CancellativeOptions& opt) {
    return composite(P, lab, opt, false);
}

WhitneyVerdict verify_whitney(const Poset& P, const Labeling& lab, const CancellativeOptions& opt) {
    return lab.is_chain_edge() ? verify_CW(P, lab, opt) : verify_EW(P, lab, opt);
}

} // namespace whitney
