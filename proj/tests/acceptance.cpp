// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "whitney/dual.hpp"
#include "whitney/families.hpp"
#include "whitney/qsym.hpp"

using namespace whitney;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes << "\n    failed: " << what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string tag(const std::string& family, int n, const std::string& labeling = "") {
    return family + "(" + std::to_string(n) + (labeling.empty() ? "" : "," + labeling) + ")";
}

// Duals built along the way; later criteria check every one of them.
struct BuiltDual {
    std::string name;
    LabeledPoset base;
    std::shared_ptr<QuotientPoset> Q;
};

std::vector<BuiltDual>& duals() {
    static std::vector<BuiltDual> all;
    return all;
}

BuiltDual& dual_of(const std::string& family, int n, const std::string& labeling = "") {
    const std::string name = tag(family, n, labeling.empty() ? default_labeling(family) : labeling);
    for (auto& d : duals())
        if (d.name == name) return d;
    LabeledPoset lp = make_family(family, n, labeling);
    auto Q = std::make_shared<QuotientPoset>(build_Q(lp.poset, *lp.labeling));
    duals().push_back({name, std::move(lp), Q});
    return duals().back();
}

QSymFundamental fund(int n, std::vector<long long> c) {
    QSymFundamental q = QSymFundamental::zero(n);
    q.coeffs = std::move(c);
    return q;
}

void table_one(Outcome& o) {
    auto t0 = Clock::now();
    auto pi = partition_lattice(3);
    auto isf = increasing_forest_poset(3);
    o.require(whitney_first(pi.poset) == WhitneyVector{1, -3, 2}, "w(Pi_3) = (1,-3,2)");
    o.require(whitney_second(pi.poset) == WhitneyVector{1, 3, 1}, "W(Pi_3) = (1,3,1)");
    o.require(whitney_first(isf.poset) == WhitneyVector{1, -3, 1}, "w(ISF_3) = (1,-3,1)");
    o.require(whitney_second(isf.poset) == WhitneyVector{1, 3, 2}, "W(ISF_3) = (1,3,2)");
    double s = seconds_since(t0);
    o.require(s < 1.0, "under one second");
    o.notes << " (" << s << " s)";
}

void partition_duals(Outcome& o) {
    double last = 0;
    for (int n = 3; n <= 5; ++n) {
        auto t0 = Clock::now();
        BuiltDual& d = dual_of("pi", n);
        o.require(is_whitney_dual_pair(d.base.poset, d.Q->poset), tag("pi", n) + " Whitney dual");
        auto isf = increasing_forest_poset(n);
        o.require(whitney_second(d.Q->poset) == whitney_second(isf.poset), tag("pi", n) + " rank sizes match ISF");
        o.require(are_isomorphic(d.Q->poset, isf.poset).isomorphic, tag("pi", n) + " isomorphic to ISF");
        last = seconds_since(t0);
    }
    o.require(last < 60.0, "n = 5 under one minute");
    o.notes << " (n=5: " << last << " s)";
}

void noncrossing_words(Outcome& o) {
    auto nc = noncrossing_lattice(4);
    const Poset& P = nc.poset;
    std::multiset<std::vector<int>> words;
    for (const auto& c : saturated_chains(P, P.bottom(), P.top().value())) {
        std::vector<int> w;
        for (const auto& l : nc.labeling->word(c)) w.push_back(l[0]);
        words.insert(w);
    }
    // The listed words: 111, permutations of 112, 113, 122 and 123.
    std::multiset<std::vector<int>> listed{{1, 1, 1}};
    for (std::vector<int> base : {std::vector<int>{1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3}}) {
        std::sort(base.begin(), base.end());
        do listed.insert(base);
        while (std::next_permutation(base.begin(), base.end()));
    }
    o.require(words.size() == 16, "NC_4 has 16 maximal chains");
    o.require(words == listed, "NC_4 words equal the listed parking functions");
    auto pfs = oracle::parking_functions(3);
    o.require(words == std::multiset<std::vector<int>>(pfs.begin(), pfs.end()), "NC_4 words equal enumerated parking functions");
    for (int n = 3; n <= 6; ++n) {
        auto f = noncrossing_lattice(n);
        auto chains = saturated_chains(f.poset, f.poset.bottom(), f.poset.top().value());
        o.require(chains.size() == static_cast<std::size_t>(oracle::ipow(n, n - 2)), tag("nc", n) + " has n^(n-2) chains");
        std::set<std::vector<int>> distinct;
        for (const auto& c : chains) {
            std::vector<int> w;
            for (const auto& l : f.labeling->word(c)) w.push_back(l[0]);
            o.require(oracle::parking_by_counts(w), tag("nc", n) + " word is a parking function");
            distinct.insert(w);
        }
        o.require(distinct.size() == chains.size(), tag("nc", n) + " words are distinct");
        o.require(distinct.size() == oracle::parking_functions(n - 1).size(), tag("nc", n) + " words are all parking functions");
    }
}

void noncrossing_duals(Outcome& o) {
    double last = 0;
    for (int n = 3; n <= 5; ++n) {
        auto t0 = Clock::now();
        BuiltDual& d = dual_of("nc", n);
        auto dyck = ncdyck_poset(n);
        o.require(are_isomorphic(d.Q->poset, dyck.poset).isomorphic, tag("nc", n) + " dual isomorphic to NCDyck");
        o.require(d.Q->poset.level(n - 1).size() == static_cast<std::size_t>(oracle::catalan(n - 1)),
                  tag("nc", n) + " top rank has Catalan(n-1) elements");
        last = seconds_since(t0);
    }
    o.require(dual_of("nc", 4).Q->poset.level(3).size() == 5, "top rank of the NC_4 dual has 5 elements");
    o.require(last < 60.0, "n = 5 under one minute");
    o.notes << " (n=5: " << last << " s)";
}

void weighted_duals(Outcome& o) {
    const std::map<int, std::size_t> sizes{{3, 16}, {4, 125}};
    for (auto [n, size] : sizes) {
        BuiltDual& d = dual_of("piw", n, "lambda_c");
        auto sf = rooted_forest_poset(n);
        o.require(d.Q->poset.size() == size, tag("piw", n) + " dual has " + std::to_string(size) + " elements");
        o.require(are_isomorphic(d.Q->poset, sf.poset).isomorphic, tag("piw", n) + " dual isomorphic to SF");
    }
    for (int n = 3; n <= 5; ++n)
        o.require(is_whitney_dual_pair(weighted_partition_poset(n).poset, rooted_forest_poset(n).poset),
                  "Pi^w_" + std::to_string(n) + " and SF_" + std::to_string(n) + " are Whitney duals");
}

void non_unique_duals(Outcome& o) {
    BuiltDual& d = dual_of("piw", 3, "lambda_e");
    o.require(is_whitney_dual_pair(d.base.poset, d.Q->poset), "Q(Pi^w_3, lambda_E) is a Whitney dual");
    o.require(!are_isomorphic(d.Q->poset, rooted_forest_poset(3).poset).isomorphic, "not isomorphic to SF_3");
}

void mobius_structure(Outcome& o) {
    for (int n = 2; n <= 5; ++n) {
        dual_of("pi", n);
        dual_of("nc", n);
        dual_of("piw", n, "lambda_c");
        dual_of("piw", n, "lambda_e");
    }
    std::size_t intervals = 0;
    for (auto& d : duals()) {
        const Poset& Q = d.Q->poset;
        for (ElementId x = 0; x < Q.size(); ++x) {
            const auto& row = Q.mobius_row(x);
            for (ElementId y = 0; y < Q.size(); ++y)
                if (Q.leq(x, y)) {
                    ++intervals;
                    if (row[y] < -1 || row[y] > 1) o.require(false, d.name + " has a Möbius value outside {0,1,-1}");
                }
        }
        VerificationReport r = mobius_Q_check(d.base.poset, *d.base.labeling, *d.Q);
        o.require(r.pass, d.name + " increasing-chain criterion" + (r.pass ? "" : ": " + r.summary(d.base.poset)));
    }
    o.notes << " (" << duals().size() << " duals, " << intervals << " intervals)";
    for (int n = 3; n <= 4; ++n) {
        auto sf = rooted_forest_poset(n);
        for (ElementId x = 0; x < sf.poset.size(); ++x) {
            long long expect =
                oracle::nonroots_are_leaves(sf.elements[x].parent) ? (sf.poset.rank(x) % 2 ? -1 : 1) : 0;
            if (mobius(sf.poset, sf.poset.bottom(), x) != expect)
                o.require(false, "SF_" + std::to_string(n) + " leaf criterion at " + sf.poset.name(x));
        }
        auto w = weighted_partition_poset(n);
        auto trees = oracle::rooted_trees_by_descents(n);
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v + 1;
        for (int i = 0; i < n; ++i) {
            ElementId top = w.index.at(WeightedPartition{{all}, {i}});
            long long expect = ((n - 1) % 2 ? -1 : 1) * trees[i];
            o.require(mobius(w.poset, w.poset.bottom(), top) == expect,
                      "mu(0,[" + std::to_string(n) + "]^" + std::to_string(i) + ") counts trees with " +
                          std::to_string(i) + " descents");
        }
    }
}

void r_iso_q(Outcome& o) {
    auto run = [&](const std::string& family, int n, const std::string& labeling) {
        LabeledPoset lp = make_family(family, n, labeling);
        VerificationReport r = verify_R_iso_Q(lp.poset, *lp.labeling);
        o.require(r.pass, tag(family, n, labeling) + (r.pass ? "" : ": " + r.summary(lp.poset)));
    };
    for (int n = 2; n <= 4; ++n) run("pi", n, "min");
    for (int n = 2; n <= 4; ++n) run("nc", n, "nc");
    for (int n = 2; n <= 3; ++n) run("piw", n, "lambda_e");
}

void quasisymmetric(Outcome& o) {
    o.require(flag_qsym(partition_lattice(3).poset) == fund(2, {1, 2}), "F(Pi_3) = L{} + 2L{1}");
    o.require(flag_qsym(increasing_forest_poset(3).poset) == fund(2, {2, 1}), "F(ISF_3) = 2L{} + L{1}");
    o.require(flag_qsym(noncrossing_lattice(4).poset) == fund(3, {1, 5, 5, 5}), "F(NC_4)");
    o.require(flag_qsym(ncdyck_poset(4).poset) == fund(3, {5, 5, 5, 1}), "F(NCDyck_4)");
    for (int n = 2; n <= 5; ++n) {
        dual_of("pi", n);
        dual_of("nc", n);
        dual_of("piw", n, "lambda_c");
        dual_of("piw", n, "lambda_e");
    }
    std::size_t count = 0;
    for (auto& d : duals()) {
        if (d.base.n > 5) continue;
        ++count;
        o.require(flag_qsym(d.Q->poset) == omega(flag_qsym(d.base.poset)), d.name + ": F(Q) = omega(F(P))");
    }
    o.notes << " (" << count << " duals)";
}

void hecke(Outcome& o) {
    auto run = [&](const std::string& family, int n, const std::string& labeling) {
        const std::string name = tag(family, n, labeling);
        BuiltDual& d = dual_of(family, n, labeling);
        HeckeOrbitData H = hecke_action(d.base.poset, *d.base.labeling);
        HeckeReport p = verify_hecke_relations(H);
        o.require(p.pass(), name + " relations on P-chains" + (p.pass() ? "" : ":\n" + p.summary()));
        o.require(characteristic(H) == flag_qsym(d.base.poset), name + " ch = F_P");
        HeckeOrbitData HQ = transport_to_quotient(H, *d.Q);
        HeckeReport q = verify_hecke_relations(HQ);
        o.require(q.pass(), name + " relations on Q-chains" + (q.pass() ? "" : ":\n" + q.summary()));
        o.require(quotient_characteristic_check(HQ, *d.Q).pass, name + " per-interval characteristic on Q");
    };
    for (int n = 2; n <= 5; ++n) run("pi", n, "min");
    for (int n = 2; n <= 5; ++n) run("nc", n, "nc");
    for (int n = 2; n <= 4; ++n) run("piw", n, "lambda_c");
}

void negative_controls(Outcome& o) {
    LabeledPoset isf = make_family("isf", 3);
    o.require(!verify_rank_two_switching(isf.poset, *isf.labeling).pass, "switching fails on (ISF_3, lambda*)");

    // Graded posets with a bottom and rank sizes (1,a,b) for a, b <= 3, plus chains of other lengths.
    Poset chain = chain_poset_of_length(2);
    std::size_t candidates = 0;
    bool any = false;
    for (int a = 1; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            const int subsets = (1 << a) - 1;  // nonempty down-sets of covers for each rank-2 element
            std::vector<int> choice(b, 1);
            for (;;) {
                std::vector<Cover> covers;
                for (int i = 1; i <= a; ++i) covers.emplace_back(0, i);
                for (int j = 0; j < b; ++j)
                    for (int i = 0; i < a; ++i)
                        if (choice[j] >> i & 1) covers.emplace_back(1 + i, 1 + a + j);
                Poset Q = build_poset(covers, 1 + a + b);
                ++candidates;
                any = any || is_whitney_dual_pair(chain, Q) || is_whitney_dual_pair(Q, chain);
                int k = 0;
                while (k < b && choice[k] == subsets) choice[k++] = 1;
                if (k == b) break;
                ++choice[k];
            }
        }
    for (int len = 0; len <= 4; ++len) {
        ++candidates;
        any = any || is_whitney_dual_pair(chain, chain_poset_of_length(len));
    }
    o.require(!any, "no candidate is a Whitney dual of the 3-chain");
    o.require(whitney_first(chain)[2] == 0 && whitney_second(chain)[2] == 1, "|w_2| = 0 and W_2 = 1 for the 3-chain");
    o.notes << " (" << candidates << " candidates)";

    LabeledPoset pi = make_family("pi", 3);
    EdgeLabeling constant(LabelOrder::lex(), "constant");
    for (auto [x, y] : pi.poset.cover_pairs()) constant.set(x, y, Label{1});
    o.require(!verify_ER(pi.poset, constant).pass, "ER fails on a constant labeling of Pi_3");
}

void oracle_cross_checks(Outcome& o) {
    const std::vector<std::pair<std::string, std::string>> whitney_labeled{
        {"pi", "min"}, {"nc", "nc"}, {"piw", "lambda_c"}, {"piw", "lambda_e"}};
    for (const auto& [family, labeling] : whitney_labeled)
        for (int n = 1; n <= 4; ++n) {
            LabeledPoset lp = make_family(family, n, labeling);
            auto a = exchange_classes(lp.poset, *lp.labeling, -1, ClassStrategy::NormalForm);
            auto b = exchange_classes(lp.poset, *lp.labeling, -1, ClassStrategy::UnionFind);
            o.require(a.class_of == b.class_of && a.count == b.count, tag(family, n, labeling) + " classes agree");
        }
    // ER labelings: beta(S) counts chains with descent set S. ER* labelings: with ascent set S.
    const std::vector<std::pair<std::string, std::string>> er{
        {"pi", "min"}, {"nc", "nc"}, {"piw", "lambda_c"}, {"piw", "lambda_e"}};
    const std::vector<std::string> er_star{"isf", "sf", "ncdyck"};
    std::size_t checked = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& [family, labeling] : er) {
            LabeledPoset lp = make_family(family, n, labeling);
            o.require(flag_qsym(lp.poset) == descent_tally(lp.poset, *lp.labeling),
                      tag(family, n, labeling) + " beta from alpha equals descent tally");
            ++checked;
        }
        for (const auto& family : er_star) {
            LabeledPoset lp = make_family(family, n);
            o.require(flag_qsym(lp.poset) == omega(descent_tally(lp.poset, *lp.labeling)),
                      tag(family, n) + " beta from alpha equals ascent tally");
            ++checked;
        }
    }
    o.notes << " (" << checked << " labeled posets)";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"Whitney numbers of Pi_3 and ISF_3", table_one},
        {"partition lattice duals are increasing forests, n = 3..5", partition_duals},
        {"noncrossing chain words are parking functions", noncrossing_words},
        {"noncrossing duals are labeled Dyck path posets, n = 3..5", noncrossing_duals},
        {"weighted partition duals are rooted forests", weighted_duals},
        {"componentwise labeling gives a non-isomorphic dual", non_unique_duals},
        {"Möbius structure of duals", mobius_structure},
        {"pair-based dual is isomorphic to the quotient", r_iso_q},
        {"quasisymmetric identities and F(Q) = omega(F(P))", quasisymmetric},
        {"0-Hecke relations and characteristic", hecke},
        {"negative controls", negative_controls},
        {"oracle cross-checks", oracle_cross_checks},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t0);
        std::printf("[%s] criterion %zu: %s [%.2f s]%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s,
                    o.notes.str().c_str());
        failed += !o.pass;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
