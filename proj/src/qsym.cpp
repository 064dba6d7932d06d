#include "whitney/qsym.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "whitney/kernels.hpp"

namespace whitney {

QSymFundamental QSymFundamental::zero(int n) {
    QSymFundamental q;
    q.n = n;
    q.coeffs.assign(std::size_t{1} << (n <= 1 ? 0 : n - 1), 0);
    return q;
}

QSymFundamental& QSymFundamental::operator+=(const QSymFundamental& other) {
    if (other.n != n) throw WhitneyError(ErrorKind::RankMismatch, "adding quasisymmetric functions of different degree");
    for (std::size_t m = 0; m < coeffs.size(); ++m) coeffs[m] += other.coeffs[m];
    return *this;
}

std::string subset_key(std::uint32_t mask) {
    std::string s;
    for (int r : mask_to_ranks(mask)) {
        if (!s.empty()) s += ",";
        s += std::to_string(r);
    }
    return s;
}

std::uint32_t parse_subset_key(const std::string& key) {
    std::uint32_t mask = 0;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t end = key.find(',', pos);
        if (end == std::string::npos) end = key.size();
        int r = 0;
        try {
            r = std::stoi(key.substr(pos, end - pos));
        } catch (const std::exception&) {
            throw WhitneyError(ErrorKind::ParseError, "bad subset key '" + key + "'");
        }
        if (r < 1 || r > 31) throw WhitneyError(ErrorKind::ParseError, "subset element out of range in '" + key + "'");
        mask |= 1u << (r - 1);
        pos = end + 1;
    }
    return mask;
}

std::string QSymFundamental::str() const {
    std::string s;
    for (std::uint32_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m] == 0) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(coeffs[m]) + "*L{" + (m == 0 ? std::string("∅") : subset_key(m)) + "}";
    }
    if (s.empty()) s = "0";
    return s + " [n=" + std::to_string(n) + "]";
}

std::vector<long long> beta_from_alpha(const std::vector<long long>& alpha) {
    std::vector<long long> beta(alpha);
    // Subset Möbius inversion, one coordinate at a time.
    for (std::size_t bit = 1; bit < beta.size(); bit <<= 1)
        for (std::size_t m = 0; m < beta.size(); ++m)
            if (m & bit) beta[m] -= beta[m ^ bit];
    return beta;
}

FlagVectors flag_vectors(const Poset& P, ElementId lo, ElementId hi) {
    if (!P.leq(lo, hi)) throw WhitneyError(ErrorKind::NotComparable, "flag vectors need lo <= hi");
    FlagVectors f;
    f.n = P.rank(hi) - P.rank(lo);
    const std::size_t width = std::size_t{1} << (f.n <= 1 ? 0 : f.n - 1);
    f.alpha.assign(width, 0);
    f.alpha[0] = 1;
    std::vector<ElementId> mid;
    for (int k = P.rank(lo) + 1; k < P.rank(hi); ++k)
        for (ElementId z : P.level(k))
            if (P.leq(lo, z) && P.leq(z, hi)) mid.push_back(z);
    // ends[i][mask]: chains lo < ... < mid[i] with rank set mask.
    std::vector<std::vector<long long>> ends(mid.size(), std::vector<long long>(width, 0));
    for (std::size_t i = 0; i < mid.size(); ++i) {
        const std::uint32_t bit = 1u << (P.rank(mid[i]) - P.rank(lo) - 1);
        ends[i][bit] = 1;
        for (std::size_t j = 0; j < i; ++j) {
            if (P.rank(mid[j]) >= P.rank(mid[i]) || !P.leq(mid[j], mid[i])) continue;
            for (std::size_t m = 0; m < width; ++m) ends[i][m | bit] += ends[j][m];
        }
        for (std::size_t m = 0; m < width; ++m)
            if (m & bit) f.alpha[m] += ends[i][m];
    }
    f.beta = beta_from_alpha(f.alpha);
    return f;
}

FlagVectors flag_vectors(const Poset& P) {
    auto t = P.top();
    if (!t) throw WhitneyError(ErrorKind::NoUniqueMaximum, "flag vectors need a unique maximum");
    return flag_vectors(P, P.bottom(), *t);
}

namespace {

int pure_rank(const Poset& P) {
    for (ElementId m : P.maximal_elements())
        if (P.rank(m) != P.height())
            throw WhitneyError(ErrorKind::RankMismatch,
                               "maximal element " + P.name(m) + " has rank " + std::to_string(P.rank(m)) +
                                   " but the height is " + std::to_string(P.height()));
    return P.height();
}

std::vector<SaturatedChain> maximal_chains(const Poset& P) {
    std::vector<SaturatedChain> out;
    for (ElementId m : P.maximal_elements())
        for (auto& c : saturated_chains(P, P.bottom(), m)) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

QSymFundamental tally(int n, const std::vector<LabelWord>& words, const LabelOrder& order) {
    std::vector<std::uint32_t> masks(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) masks[i] = descent_mask(words[i], order);
    QSymFundamental q = QSymFundamental::zero(n);
    q.coeffs = kernels::mask_tally_omp(masks, n <= 1 ? 0 : n - 1);
    return q;
}

VerificationReport make_report(const char* property) {
    VerificationReport r;
    r.property = property;
    return r;
}

void fail(VerificationReport& r, std::string reason, std::vector<SaturatedChain> chains, std::vector<LabelWord> words) {
    if (!r.pass) return;
    r.pass = false;
    Counterexample ce;
    ce.reason = std::move(reason);
    if (!chains.empty() && !chains[0].empty()) {
        ce.lo = chains[0].front();
        ce.hi = chains[0].back();
    }
    ce.chains = std::move(chains);
    ce.words = std::move(words);
    r.counterexample = std::move(ce);
}

} // namespace

QSymFundamental flag_qsym(const Poset& P) {
    const int n = pure_rank(P);
    QSymFundamental q = QSymFundamental::zero(n);
    for (ElementId m : P.maximal_elements()) {
        FlagVectors f = flag_vectors(P, P.bottom(), m);
        for (std::size_t s = 0; s < f.beta.size(); ++s) q.coeffs[s] += f.beta[s];
    }
    return q;
}

QSymFundamental omega(const QSymFundamental& q) {
    QSymFundamental out = QSymFundamental::zero(q.n);
    const std::uint32_t full = q.full_mask();
    for (std::uint32_t m = 0; m < q.coeffs.size(); ++m) out.coeffs[full & ~m] = q.coeffs[m];
    return out;
}

QSymFundamental descent_tally(const Poset& P, const Labeling& lab) {
    const int n = pure_rank(P);
    auto chains = maximal_chains(P);
    std::vector<LabelWord> words;
    words.reserve(chains.size());
    for (const auto& c : chains) words.push_back(lab.word(c));
    return tally(n, words, lab.order());
}

HeckeOrbitData hecke_action(const Poset& P, const Labeling& lab, bool assume_verified) {
    if (!assume_verified) {
        WhitneyVerdict v = verify_whitney(P, lab);
        if (!v.ok()) throw WhitneyError(ErrorKind::NotWhitneyLabeling, v.reason);
    }
    HeckeOrbitData H;
    H.rank = pure_rank(P);
    H.order = lab.order();
    H.chains = maximal_chains(P);
    std::map<SaturatedChain, std::uint32_t> index;
    for (std::uint32_t c = 0; c < H.chains.size(); ++c) {
        index[H.chains[c]] = c;
        H.words.push_back(lab.word(H.chains[c]));
    }
    H.ops.assign(H.rank <= 1 ? 0 : H.rank - 1, std::vector<std::uint32_t>(H.chains.size()));
    for (int i = 1; i < H.rank; ++i)
        for (std::uint32_t c = 0; c < H.chains.size(); ++c) {
            SaturatedChain d = H.chains[c];
            LabelWord w = H.words[c];
            exchange_in_place(P, lab, d, w, i);
            H.ops[i - 1][c] = index.at(d);
        }
    return H;
}

HeckeOrbitData transport_to_quotient(const HeckeOrbitData& H, const QuotientPoset& Q) {
    HeckeOrbitData out;
    out.rank = H.rank;
    out.order = Q.dual_labeling->order();
    out.ops = H.ops;
    std::map<SaturatedChain, std::uint32_t> seen;
    for (std::uint32_t c = 0; c < H.chains.size(); ++c) {
        const auto& pc = H.chains[c];
        SaturatedChain qc;
        ChainTree::NodeId v = 0;
        qc.push_back(Q.node_class[v]);
        for (std::size_t j = 1; j < pc.size(); ++j) {
            v = Q.tree->child(v, pc[j]);
            if (v == ChainTree::npos)
                throw WhitneyError(ErrorKind::ClassMismatch, "chain missing from the chain tree");
            qc.push_back(Q.node_class[v]);
        }
        if (!seen.emplace(qc, c).second)
            throw WhitneyError(ErrorKind::ClassMismatch, "two maximal chains map to the same quotient chain");
        out.words.push_back(Q.dual_labeling->word(qc));
        out.chains.push_back(std::move(qc));
    }
    std::size_t total = 0;
    for (ElementId m : Q.poset.maximal_elements()) total += saturated_chains(Q.poset, Q.poset.bottom(), m).size();
    if (total != out.chains.size())
        throw WhitneyError(ErrorKind::ClassMismatch, "quotient has " + std::to_string(total) + " maximal chains, expected " +
                                                         std::to_string(out.chains.size()));
    return out;
}

HeckeReport verify_hecke_relations(const HeckeOrbitData& H) {
    HeckeReport R;
    R.local = make_report("locality");
    R.idempotent = make_report("idempotence");
    R.commute = make_report("far commutation");
    R.braid = make_report("braid");
    const std::size_t N = H.chains.size();
    const int g = static_cast<int>(H.ops.size());
    auto U = [&](int i, std::uint32_t c) { return H.ops[i - 1][c]; };
    auto ex = [&](std::initializer_list<std::uint32_t> ids) {
        std::vector<SaturatedChain> cs;
        std::vector<LabelWord> ws;
        for (auto id : ids) {
            cs.push_back(H.chains[id]);
            ws.push_back(H.words[id]);
        }
        return std::make_pair(cs, ws);
    };
    for (int i = 1; i <= g; ++i)
        for (std::uint32_t c = 0; c < N; ++c) {
            const std::uint32_t d = U(i, c);
            ++R.local.checked;
            const auto& a = H.chains[c];
            const auto& b = H.chains[d];
            bool ok = a.size() == b.size();
            for (std::size_t k = 0; ok && k < a.size(); ++k)
                if (static_cast<int>(k) != i && a[k] != b[k]) ok = false;
            if (!ok) {
                auto [cs, ws] = ex({c, d});
                fail(R.local, "U_" + std::to_string(i) + " changes a chain away from rank " + std::to_string(i), cs, ws);
            }
            ++R.idempotent.checked;
            if (U(i, d) != d) {
                auto [cs, ws] = ex({c, d, U(i, d)});
                fail(R.idempotent, "U_" + std::to_string(i) + " is not idempotent", cs, ws);
            }
            for (int j = i + 2; j <= g; ++j) {
                ++R.commute.checked;
                if (U(i, U(j, c)) != U(j, U(i, c))) {
                    auto [cs, ws] = ex({c});
                    fail(R.commute, "U_" + std::to_string(i) + " and U_" + std::to_string(j) + " do not commute", cs,
                         ws);
                }
            }
            if (i < g) {
                ++R.braid.checked;
                if (U(i, U(i + 1, U(i, c))) != U(i + 1, U(i, U(i + 1, c)))) {
                    auto [cs, ws] = ex({c});
                    fail(R.braid, "braid relation fails for U_" + std::to_string(i), cs, ws);
                }
            }
        }
    return R;
}

std::string HeckeReport::summary() const {
    auto one = [](const VerificationReport& r) {
        std::string s = r.property + ": " + (r.pass ? "pass" : "FAIL") + " (" + std::to_string(r.checked) + " checks)";
        if (r.counterexample) s += "\n  " + r.counterexample->reason;
        return s;
    };
    return one(local) + "\n" + one(idempotent) + "\n" + one(commute) + "\n" + one(braid);
}

QSymFundamental characteristic(const HeckeOrbitData& H) { return tally(H.rank, H.words, H.order); }

VerificationReport quotient_characteristic_check(const HeckeOrbitData& HQ, const QuotientPoset& Q) {
    VerificationReport rep = make_report("quotient characteristic");
    std::map<ElementId, std::vector<LabelWord>> by_top;
    for (std::size_t c = 0; c < HQ.chains.size(); ++c) by_top[HQ.chains[c].back()].push_back(HQ.words[c]);
    for (auto& [m, words] : by_top) {
        ++rep.checked;
        QSymFundamental got = tally(HQ.rank, words, HQ.order);
        FlagVectors f = flag_vectors(Q.poset, Q.poset.bottom(), m);
        QSymFundamental flag = QSymFundamental::zero(HQ.rank);
        flag.coeffs = f.beta;
        QSymFundamental want = omega(flag);
        if (got != want) {
            fail(rep, "interval to " + Q.poset.name(m) + ": characteristic " + got.str() + " but omega of flag " + want.str(),
                 {}, words);
            rep.counterexample->hi = m;
        }
    }
    return rep;
}

} // namespace whitney
