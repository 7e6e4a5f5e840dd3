// Reference baselines: constant noun attachment, the per-preposition
// majority vote, and the supervised restatement of the Hindle-Rooth
// lexical association test.

#ifndef PPATTACH_BASELINES_HPP
#define PPATTACH_BASELINES_HPP

#include <string>
#include <unordered_map>

#include "ppattach/counts.hpp"

namespace ppattach {

// Per-preposition noun/verb attachment counts, taken from the model's
// (P) single entries.
struct PrepositionTable {
    std::unordered_map<std::string, CountModel::LabelCounts> counts;

    static PrepositionTable from_model(const CountModel& m);
};

// Noun attachment regardless of the quadruple.
Attachment baseline_always_noun(const Quadruple& q);

// Majority attachment for q.prep; ties and unseen prepositions fall to
// noun, the majority class.
Attachment baseline_most_likely_prep(const PrepositionTable& t, const Quadruple& q);

enum class HindleRoothOutcome { Noun, Verb, Indefinite };

// Compares f(1,n1,p)/f(1,n1) against f(0,v,p)/f(0,v) as exact
// rationals. Indefinite when either guard denominator is zero or the
// two ratios are equal.
HindleRoothOutcome hindle_rooth_decide(const CountModel& m, const Quadruple& q);

// Pair-stage backed-off decision using only the (V,P) and (N1,P)
// counts: noun iff [f(1,v,p)+f(1,n1,p)] / [f(v,p)+f(n1,p)] >= 0.5.
// Throws UndefinedResultError on a zero denominator.
Attachment backed_off_pair_decide(const CountModel& m, const Quadruple& q);

// Subsequence of `test` on which hindle_rooth_decide is definite.
Corpus restrict_hr_testset(const CountModel& m, const Corpus& test);

}  // namespace ppattach

#endif  // PPATTACH_BASELINES_HPP
