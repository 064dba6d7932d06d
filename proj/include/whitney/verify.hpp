#ifndef WHITNEY_VERIFY_HPP
#define WHITNEY_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "whitney/chain_tree.hpp"
#include "whitney/labeling.hpp"

namespace whitney {

struct Counterexample {
    std::string reason;
    SaturatedChain root;  // chain from the bottom ending at `lo` (only `lo` for edge labelings)
    ElementId lo = 0;
    ElementId hi = 0;
    std::vector<SaturatedChain> chains;  // chains of the offending interval, starting at `lo`
    std::vector<LabelWord> words;

    std::string describe(const Poset& P) const;
};

struct VerificationReport {
    std::string property;
    bool pass = true;
    bool skipped = false;
    std::size_t checked = 0;
    std::optional<Counterexample> counterexample;

    std::string summary(const Poset& P) const;
};

VerificationReport verify_ER(const Poset& P, const Labeling& lab);
VerificationReport verify_ER_star(const Poset& P, const Labeling& lab);
VerificationReport verify_rank_two_switching(const Poset& P, const Labeling& lab);
VerificationReport verify_braid(const Poset& P, const Labeling& lab);

struct CancellativeOptions {
    int max_ranks = 8;
    std::size_t max_chains = 5000;
    bool force = false;
};
VerificationReport verify_cancellative(const Poset& P, const Labeling& lab, const CancellativeOptions& opt = {});

// Edge labelings: every maximal chain of every interval has its own word.
// Chain-edge labelings: ascent-free chains of every rooted interval have distinct words.
VerificationReport verify_word_uniqueness(const Poset& P, const Labeling& lab);
// Same, restricted to ascent-free chains, for any labeling.
VerificationReport verify_ascent_free_word_uniqueness(const Poset& P, const Labeling& lab);

// Guards chain-edge labelings whose whole-word fast path could disagree with per-edge labels.
VerificationReport verify_bottom_consistency(const Poset& P, const Labeling& lab);

enum class Verdict { EW, GeneralizedEWOnly, CW, GeneralizedCWOnly, Fail };
const char* verdict_name(Verdict v);

struct WhitneyVerdict {
    Verdict verdict = Verdict::Fail;
    std::string reason;
    std::vector<VerificationReport> reports;

    bool ok() const { return verdict != Verdict::Fail; }
    bool strict() const { return verdict == Verdict::EW || verdict == Verdict::CW; }
};

WhitneyVerdict verify_EW(const Poset& P, const Labeling& lab, const CancellativeOptions& opt = {});
WhitneyVerdict verify_CW(const Poset& P, const Labeling& lab, const CancellativeOptions& opt = {});
// EW for edge labelings, CW for chain-edge labelings.
WhitneyVerdict verify_whitney(const Poset& P, const Labeling& lab, const CancellativeOptions& opt = {});

// Elements z != chain[i] that realise the transposed labels at rank i while keeping every other label.
std::vector<ElementId> exchange_candidates(const Poset& P, const Labeling& lab, const SaturatedChain& chain, int i,
                                           const LabelWord& word);

// U_i. Returns the chain itself when rank i is not an ascent; throws SwitchingViolation
// when the exchange partner is missing or ambiguous.
SaturatedChain quadratic_exchange(const Poset& P, const Labeling& lab, const SaturatedChain& chain, int i);

// In-place U_i that also keeps the word in sync; returns false when rank i is not an ascent.
bool exchange_in_place(const Poset& P, const Labeling& lab, SaturatedChain& chain, LabelWord& word, int i);

// Applies the lowest ascent exchange until the chain is ascent-free.
void exchange_to_sink(const Poset& P, const Labeling& lab, SaturatedChain& chain, LabelWord& word);

// Chains of the rooted interval [root.back(), y] (as chains starting at root.back()) with their words.
void rooted_interval_chains(const Poset& P, const Labeling& lab, const SaturatedChain& root, ElementId y,
                            std::vector<SaturatedChain>& chains, std::vector<LabelWord>& words,
                            std::size_t limit = 64);

} // namespace whitney

#endif
