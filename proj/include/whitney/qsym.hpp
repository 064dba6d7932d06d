#ifndef WHITNEY_QSYM_HPP
#define WHITNEY_QSYM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "whitney/dual.hpp"
#include "whitney/labeling.hpp"
#include "whitney/poset.hpp"
#include "whitney/verify.hpp"

namespace whitney {

// Degree-n quasisymmetric function in the fundamental basis. coeffs[mask] is the
// coefficient of L_S where bit i-1 of mask is set iff i is in S, S a subset of [n-1].
struct QSymFundamental {
    int n = 0;
    std::vector<long long> coeffs;

    static QSymFundamental zero(int n);
    long long at(std::uint32_t mask) const { return coeffs[mask]; }
    long long& at(std::uint32_t mask) { return coeffs[mask]; }
    std::uint32_t full_mask() const { return n <= 1 ? 0u : (1u << (n - 1)) - 1; }
    QSymFundamental& operator+=(const QSymFundamental& other);
    bool operator==(const QSymFundamental&) const = default;
    // "a*L{∅} + b*L{1} [n=2]"; zero terms are omitted.
    std::string str() const;
};

// "1,2" for {1,2}, "" for the empty set.
std::string subset_key(std::uint32_t mask);
std::uint32_t parse_subset_key(const std::string& key);

struct FlagVectors {
    int n = 0;                      // rank of the interval
    std::vector<long long> alpha;   // indexed by rank-set mask over [n-1]
    std::vector<long long> beta;
};

// Flag f- and h-vectors of [lo, hi].
FlagVectors flag_vectors(const Poset& P, ElementId lo, ElementId hi);
// Flag vectors of the whole poset; throws NoUniqueMaximum.
FlagVectors flag_vectors(const Poset& P);
// beta(S) = sum over T in S of (-1)^{|S-T|} alpha(T).
std::vector<long long> beta_from_alpha(const std::vector<long long>& alpha);

// Sum over maximal elements m of the beta-expansion of [bottom, m].
// Throws RankMismatch unless all maximal elements share one rank.
QSymFundamental flag_qsym(const Poset& P);

// L_S -> L_{complement of S}.
QSymFundamental omega(const QSymFundamental& q);

// Sum of L_{D(c)} over maximal chains c from the bottom.
QSymFundamental descent_tally(const Poset& P, const Labeling& lab);

// Local 0-Hecke generators on maximal chains. ops[i-1][c] is the index of U_i(c).
struct HeckeOrbitData {
    int rank = 0;
    LabelOrder order;
    std::vector<SaturatedChain> chains;
    std::vector<LabelWord> words;
    std::vector<std::vector<std::uint32_t>> ops;
};

// Throws NotWhitneyLabeling unless the labeling verifies (generalized verdicts accepted).
HeckeOrbitData hecke_action(const Poset& P, const Labeling& lab, bool assume_verified = false);

// The action carried to maximal chains of the quotient along the chain bijection.
// Chains and words are those of Q with its induced labeling.
HeckeOrbitData transport_to_quotient(const HeckeOrbitData& H, const QuotientPoset& Q);

struct HeckeReport {
    VerificationReport local;
    VerificationReport idempotent;
    VerificationReport commute;
    VerificationReport braid;
    bool pass() const { return local.pass && idempotent.pass && commute.pass && braid.pass; }
    std::string summary() const;
};

HeckeReport verify_hecke_relations(const HeckeOrbitData& H);

// Sum over chains of L_{D(c)}, the characteristic of the permutation representation.
QSymFundamental characteristic(const HeckeOrbitData& H);

// For each maximal element m of Q, the descent characteristic of the transported
// action on chains ending at m equals omega of the flag function of [bottom, m].
VerificationReport quotient_characteristic_check(const HeckeOrbitData& HQ, const QuotientPoset& Q);

} // namespace whitney

#endif
