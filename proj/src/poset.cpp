#include "whitney/poset.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "whitney/kernels.hpp"

namespace whitney {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NoUniqueMinimum: return "NoUniqueMinimum";
    case ErrorKind::NoUniqueMaximum: return "NoUniqueMaximum";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotTransitivelyReduced: return "NotTransitivelyReduced";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::InvalidLabelOrder: return "InvalidLabelOrder";
    case ErrorKind::SwitchingViolation: return "SwitchingViolation";
    case ErrorKind::NotWhitneyLabeling: return "NotWhitneyLabeling";
    case ErrorKind::NotCW: return "NotCW";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotGeometric: return "NotGeometric";
    case ErrorKind::CrossingLabelSets: return "CrossingLabelSets";
    case ErrorKind::NonDisjoint: return "NonDisjoint";
    case ErrorKind::NotDecreasing: return "NotDecreasing";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

struct MobiusCache {
    std::mutex mutex;
    std::vector<std::unique_ptr<std::vector<long long>>> rows;
};

std::span<const ElementId> Poset::up(ElementId x) const {
    return {up_targets_.data() + up_offsets_[x], up_offsets_[x + 1] - up_offsets_[x]};
}

std::span<const ElementId> Poset::down(ElementId x) const {
    return {down_targets_.data() + down_offsets_[x], down_offsets_[x + 1] - down_offsets_[x]};
}

std::span<const ElementId> Poset::level(int k) const {
    if (k < 0 || k > height_) return {};
    return {by_rank_.data() + level_offsets_[k], level_offsets_[k + 1] - level_offsets_[k]};
}

bool Poset::covers(ElementId lo, ElementId hi) const {
    auto u = up(lo);
    return std::binary_search(u.begin(), u.end(), hi);
}

std::vector<Cover> Poset::cover_pairs() const {
    std::vector<Cover> out;
    out.reserve(num_covers());
    for (ElementId x = 0; x < size(); ++x)
        for (ElementId y : up(x)) out.emplace_back(x, y);
    return out;
}

std::vector<ElementId> Poset::maximal_elements() const {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < size(); ++x)
        if (up(x).empty()) out.push_back(x);
    return out;
}

std::optional<ElementId> Poset::top() const {
    auto m = maximal_elements();
    if (m.size() == 1) return m[0];
    return std::nullopt;
}

std::string Poset::name(ElementId x) const {
    if (!names_.empty()) return names_[x];
    return std::to_string(x);
}

const std::vector<long long>& Poset::mobius_row(ElementId x) const {
    {
        std::lock_guard<std::mutex> lock(mobius_->mutex);
        if (mobius_->rows[x]) return *mobius_->rows[x];
    }
    auto row = std::make_unique<std::vector<long long>>(kernels::mobius_row(*this, x));
    std::lock_guard<std::mutex> lock(mobius_->mutex);
    if (!mobius_->rows[x]) mobius_->rows[x] = std::move(row);
    return *mobius_->rows[x];
}

Poset build_poset(const std::vector<Cover>& covers_in, std::size_t n, std::vector<std::string> names) {
    if (n == 0) throw WhitneyError(ErrorKind::NoUniqueMinimum, "empty poset");
    if (!names.empty() && names.size() != n)
        throw WhitneyError(ErrorKind::InvalidInput, "names must cover every element");
    std::vector<Cover> covers(covers_in);
    for (auto [a, b] : covers) {
        if (a >= n || b >= n)
            throw WhitneyError(ErrorKind::InvalidInput,
                               "cover (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        if (a == b) throw WhitneyError(ErrorKind::CycleDetected, "self-cover at " + std::to_string(a));
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

    Poset P;
    P.up_offsets_.assign(n + 1, 0);
    P.down_offsets_.assign(n + 1, 0);
    for (auto [a, b] : covers) {
        ++P.up_offsets_[a + 1];
        ++P.down_offsets_[b + 1];
    }
    std::partial_sum(P.up_offsets_.begin(), P.up_offsets_.end(), P.up_offsets_.begin());
    std::partial_sum(P.down_offsets_.begin(), P.down_offsets_.end(), P.down_offsets_.begin());
    P.up_targets_.resize(covers.size());
    P.down_targets_.resize(covers.size());
    {
        auto up_fill = P.up_offsets_;
        auto down_fill = P.down_offsets_;
        for (auto [a, b] : covers) {
            P.up_targets_[up_fill[a]++] = b;
            P.down_targets_[down_fill[b]++] = a;
        }
        for (std::size_t x = 0; x < n; ++x)
            std::sort(P.down_targets_.begin() + P.down_offsets_[x], P.down_targets_.begin() + P.down_offsets_[x + 1]);
    }

    // Kahn's algorithm: a leftover element means a directed cycle.
    std::vector<std::uint32_t> indeg(n);
    for (std::size_t x = 0; x < n; ++x) indeg[x] = P.down_offsets_[x + 1] - P.down_offsets_[x];
    std::vector<ElementId> topo;
    topo.reserve(n);
    for (ElementId x = 0; x < n; ++x)
        if (indeg[x] == 0) topo.push_back(x);
    std::size_t sources = topo.size();
    for (std::size_t i = 0; i < topo.size(); ++i)
        for (ElementId y : P.up(topo[i]))
            if (--indeg[y] == 0) topo.push_back(y);
    if (topo.size() != n) throw WhitneyError(ErrorKind::CycleDetected, "cover relation contains a directed cycle");

    P.upset_ = kernels::upset_closure_omp(n, P.up_offsets_, P.up_targets_, topo);

    for (auto [a, b] : covers)
        for (ElementId c : P.up(a))
            if (c != b && P.upset_.test(c, b))
                throw WhitneyError(ErrorKind::NotTransitivelyReduced,
                                   "pair (" + std::to_string(a) + "," + std::to_string(b) + ") is implied through " +
                                       std::to_string(c));

    if (sources != 1)
        throw WhitneyError(ErrorKind::NoUniqueMinimum, std::to_string(sources) + " minimal elements");
    P.bottom_ = topo[0];

    P.rank_.assign(n, 0);
    for (ElementId x : topo)
        for (ElementId y : P.up(x)) P.rank_[y] = std::max(P.rank_[y], P.rank_[x] + 1);
    for (auto [a, b] : covers)
        if (P.rank_[b] != P.rank_[a] + 1)
            throw WhitneyError(ErrorKind::NotGraded, "cover (" + std::to_string(a) + "," + std::to_string(b) +
                                                         ") skips from rank " + std::to_string(P.rank_[a]) + " to " +
                                                         std::to_string(P.rank_[b]));
    P.height_ = *std::max_element(P.rank_.begin(), P.rank_.end());

    P.by_rank_.resize(n);
    std::iota(P.by_rank_.begin(), P.by_rank_.end(), 0);
    std::stable_sort(P.by_rank_.begin(), P.by_rank_.end(),
                     [&](ElementId a, ElementId b) { return P.rank_[a] < P.rank_[b]; });
    P.level_offsets_.assign(P.height_ + 2, 0);
    for (int r : P.rank_) ++P.level_offsets_[r + 1];
    std::partial_sum(P.level_offsets_.begin(), P.level_offsets_.end(), P.level_offsets_.begin());

    P.names_ = std::move(names);
    P.mobius_ = std::make_shared<MobiusCache>();
    P.mobius_->rows.resize(n);
    return P;
}

long long mobius(const Poset& P, ElementId x, ElementId y) {
    if (x >= P.size() || y >= P.size() || !P.leq(x, y))
        throw WhitneyError(ErrorKind::NotComparable, P.name(x) + " is not below " + P.name(y));
    return P.mobius_row(x)[y];
}

WhitneyVector whitney_first(const Poset& P) {
    WhitneyVector w(P.height() + 1, 0);
    const auto& row = P.mobius_row(P.bottom());
    for (ElementId x = 0; x < P.size(); ++x) w[P.rank(x)] += row[x];
    return w;
}

WhitneyVector whitney_second(const Poset& P) {
    WhitneyVector W(P.height() + 1, 0);
    for (ElementId x = 0; x < P.size(); ++x) ++W[P.rank(x)];
    return W;
}

bool is_whitney_dual_pair(const Poset& P, const Poset& Q) {
    auto wp = whitney_first(P), Wp = whitney_second(P);
    auto wq = whitney_first(Q), Wq = whitney_second(Q);
    std::size_t len = std::max(wp.size(), wq.size());
    auto at = [](const WhitneyVector& v, std::size_t k) { return k < v.size() ? v[k] : 0LL; };
    for (std::size_t k = 0; k < len; ++k) {
        if (std::llabs(at(wp, k)) != at(Wq, k)) return false;
        if (std::llabs(at(wq, k)) != at(Wp, k)) return false;
    }
    return true;
}

bool is_eulerian(const Poset& P) {
    if (!P.top()) return false;
    for (ElementId x = 0; x < P.size(); ++x) {
        const auto& row = P.mobius_row(x);
        for (ElementId y = 0; y < P.size(); ++y) {
            if (!P.leq(x, y)) continue;
            long long expect = ((P.rank(y) - P.rank(x)) % 2 == 0) ? 1 : -1;
            if (row[y] != expect) return false;
        }
    }
    return true;
}

bool is_bowtie_free(const Poset& P) {
    std::set<std::pair<ElementId, ElementId>> seen;
    for (ElementId a = 0; a < P.size(); ++a) {
        auto d = P.down(a);
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                if (!seen.emplace(d[i], d[j]).second) return false;
    }
    return true;
}

std::vector<ElementId> join_table(const Poset& P) {
    const std::size_t n = P.size();
    const std::size_t words = P.upsets().words_per_row();
    std::vector<ElementId> table(n * n);
    std::vector<std::uint64_t> common(words);
    for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = x; y < n; ++y) {
            const auto* rx = P.upsets().row(x);
            const auto* ry = P.upsets().row(y);
            for (std::size_t w = 0; w < words; ++w) common[w] = rx[w] & ry[w];
            // A join, if it exists, is the unique common upper bound of least rank.
            std::optional<ElementId> best;
            int best_rank = -1;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t bits = common[w];
                while (bits) {
                    ElementId z = static_cast<ElementId>(w * 64 + __builtin_ctzll(bits));
                    bits &= bits - 1;
                    if (best_rank < 0 || P.rank(z) < best_rank) {
                        best_rank = P.rank(z);
                        best = z;
                    }
                }
            }
            if (!best)
                throw WhitneyError(ErrorKind::InvalidInput, "no upper bound for " + P.name(x) + ", " + P.name(y));
            const auto* rb = P.upsets().row(*best);
            for (std::size_t w = 0; w < words; ++w)
                if ((common[w] & ~rb[w]) != 0)
                    throw WhitneyError(ErrorKind::InvalidInput,
                                       "no least upper bound for " + P.name(x) + ", " + P.name(y));
            table[x * n + y] = table[y * n + x] = *best;
        }
    }
    return table;
}

bool is_lattice(const Poset& P) {
    if (!P.top()) return false;
    try {
        join_table(P);
    } catch (const WhitneyError&) {
        return false;
    }
    return true;
}

namespace {

void chains_dfs(const Poset& P, ElementId y, SaturatedChain& cur, std::vector<SaturatedChain>& out) {
    ElementId t = cur.back();
    if (t == y) {
        out.push_back(cur);
        return;
    }
    for (ElementId z : P.up(t)) {
        if (!P.leq(z, y)) continue;
        cur.push_back(z);
        chains_dfs(P, y, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<SaturatedChain> saturated_chains(const Poset& P, ElementId x, ElementId y) {
    if (x >= P.size() || y >= P.size() || !P.leq(x, y))
        throw WhitneyError(ErrorKind::NotComparable, "saturated_chains needs x <= y");
    std::vector<SaturatedChain> out;
    SaturatedChain cur{x};
    chains_dfs(P, y, cur, out);
    return out;
}

Poset interval(const Poset& P, ElementId x, ElementId y, std::vector<ElementId>* members) {
    if (x >= P.size() || y >= P.size() || !P.leq(x, y))
        throw WhitneyError(ErrorKind::NotComparable, "interval needs x <= y");
    std::vector<ElementId> mem;
    std::vector<ElementId> local(P.size(), ~ElementId{0});
    for (ElementId z = 0; z < P.size(); ++z)
        if (P.leq(x, z) && P.leq(z, y)) {
            local[z] = static_cast<ElementId>(mem.size());
            mem.push_back(z);
        }
    std::vector<Cover> cov;
    for (ElementId z : mem)
        for (ElementId u : P.up(z))
            if (local[u] != ~ElementId{0}) cov.emplace_back(local[z], local[u]);
    std::vector<std::string> names;
    if (P.has_names())
        for (ElementId z : mem) names.push_back(P.name(z));
    Poset I = build_poset(cov, mem.size(), std::move(names));
    if (members) *members = std::move(mem);
    return I;
}

namespace {

// Colour refinement over the disjoint union of two posets.
class Refiner {
public:
    Refiner(const Poset& P, const Poset& Q) : P_(P), Q_(Q), np_(P.size()), total_(P.size() + Q.size()) {}

    std::vector<int> initial() const {
        std::vector<int> c(total_);
        for (std::size_t v = 0; v < total_; ++v) c[v] = rank_of(v);
        return c;
    }

    // Refines in place; returns false if the two halves have different colour histograms.
    bool refine(std::vector<int>& colour) const {
        std::size_t classes = count_classes(colour);
        while (true) {
            std::vector<std::vector<int>> sig(total_);
            for (std::size_t v = 0; v < total_; ++v) {
                auto& s = sig[v];
                s.push_back(colour[v]);
                std::vector<int> ups, downs;
                for (ElementId u : ups_of(v)) ups.push_back(colour[offset(v) + u]);
                for (ElementId d : downs_of(v)) downs.push_back(colour[offset(v) + d]);
                std::sort(ups.begin(), ups.end());
                std::sort(downs.begin(), downs.end());
                s.push_back(static_cast<int>(ups.size()));
                s.insert(s.end(), ups.begin(), ups.end());
                s.push_back(-1);
                s.insert(s.end(), downs.begin(), downs.end());
            }
            std::map<std::vector<int>, int> ids;
            for (const auto& s : sig) ids.emplace(s, 0);
            int next = 0;
            for (auto& [k, v] : ids) v = next++;
            for (std::size_t v = 0; v < total_; ++v) colour[v] = ids[sig[v]];
            std::size_t now = ids.size();
            if (!balanced(colour)) return false;
            if (now == classes) return true;
            classes = now;
        }
    }

    bool balanced(const std::vector<int>& colour) const {
        std::map<int, long> hist;
        for (std::size_t v = 0; v < total_; ++v) hist[colour[v]] += (v < np_) ? 1 : -1;
        for (auto& [c, h] : hist)
            if (h != 0) return false;
        return true;
    }

    std::size_t np() const { return np_; }
    std::size_t total() const { return total_; }

private:
    static std::size_t count_classes(const std::vector<int>& c) {
        return std::set<int>(c.begin(), c.end()).size();
    }
    std::size_t offset(std::size_t v) const { return v < np_ ? 0 : np_; }
    int rank_of(std::size_t v) const { return v < np_ ? P_.rank(v) : Q_.rank(v - np_); }
    std::span<const ElementId> ups_of(std::size_t v) const {
        return v < np_ ? P_.up(v) : Q_.up(static_cast<ElementId>(v - np_));
    }
    std::span<const ElementId> downs_of(std::size_t v) const {
        return v < np_ ? P_.down(v) : Q_.down(static_cast<ElementId>(v - np_));
    }

    const Poset& P_;
    const Poset& Q_;
    std::size_t np_, total_;
};

bool individualize_search(const Refiner& R, const Poset& P, const Poset& Q, std::vector<int> colour,
                          std::vector<ElementId>& witness) {
    if (!R.refine(colour)) return false;
    const std::size_t np = R.np();
    std::map<int, std::vector<std::size_t>> members;
    for (std::size_t v = 0; v < R.total(); ++v) members[colour[v]].push_back(v);
    // Pick the smallest non-singleton class (two per side or more).
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, vs] : members)
        if (vs.size() > 2 && (!target || vs.size() < target->size())) target = &vs;
    if (!target) {
        std::vector<ElementId> map(np);
        for (const auto& [c, vs] : members) map[vs[0]] = static_cast<ElementId>(vs[1] - np);
        if (!is_isomorphism(P, Q, map)) return false;
        witness = std::move(map);
        return true;
    }
    std::size_t p = (*target)[0];
    int fresh = static_cast<int>(R.total()) + 1;
    for (std::size_t q : *target) {
        if (q < np) continue;
        auto next = colour;
        next[p] = fresh;
        next[q] = fresh;
        if (individualize_search(R, P, Q, std::move(next), witness)) return true;
    }
    return false;
}

} // namespace

bool is_isomorphism(const Poset& P, const Poset& Q, const std::vector<ElementId>& map) {
    if (P.size() != Q.size() || map.size() != P.size() || P.num_covers() != Q.num_covers()) return false;
    std::vector<char> used(Q.size(), 0);
    for (ElementId q : map) {
        if (q >= Q.size() || used[q]) return false;
        used[q] = 1;
    }
    for (ElementId x = 0; x < P.size(); ++x)
        for (ElementId y : P.up(x))
            if (!Q.covers(map[x], map[y])) return false;
    return true;
}

IsomorphismResult are_isomorphic(const Poset& P, const Poset& Q) {
    IsomorphismResult res;
    if (P.size() != Q.size() || P.num_covers() != Q.num_covers() || whitney_second(P) != whitney_second(Q))
        return res;
    Refiner R(P, Q);
    std::vector<ElementId> witness;
    if (individualize_search(R, P, Q, R.initial(), witness)) {
        res.isomorphic = true;
        res.witness = std::move(witness);
    }
    return res;
}

Poset chain_poset_of_length(int length) {
    std::vector<Cover> cov;
    for (int i = 0; i < length; ++i) cov.emplace_back(i, i + 1);
    return build_poset(cov, static_cast<std::size_t>(length) + 1);
}

Poset boolean_lattice(int n) {
    std::vector<Cover> cov;
    const std::uint32_t size = 1u << n;
    for (std::uint32_t s = 0; s < size; ++s)
        for (int i = 0; i < n; ++i)
            if (!(s >> i & 1)) cov.emplace_back(s, s | (1u << i));
    return build_poset(cov, size);
}

} // namespace whitney
