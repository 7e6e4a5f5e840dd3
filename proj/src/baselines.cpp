#include "ppattach/baselines.hpp"

namespace ppattach {

PrepositionTable PrepositionTable::from_model(const CountModel& m) {
    PrepositionTable t;
    for (const auto& [key, counts] : m.entries())
        if (key.kind == kinds::p) t.counts.emplace(key.words.front(), counts);
    return t;
}

Attachment baseline_always_noun(const Quadruple&) { return Attachment::Noun; }

Attachment baseline_most_likely_prep(const PrepositionTable& t, const Quadruple& q) {
    auto it = t.counts.find(q.prep);
    if (it == t.counts.end()) return Attachment::Noun;  // unseen: majority class
    return it->second.noun >= it->second.verb ? Attachment::Noun : Attachment::Verb;
}

HindleRoothOutcome hindle_rooth_decide(const CountModel& m, const Quadruple& q) {
    const Count n1_noun = m.joint(Attachment::Noun, q, kinds::n1);
    const Count v_verb = m.joint(Attachment::Verb, q, kinds::v);
    if (n1_noun == 0 || v_verb == 0) return HindleRoothOutcome::Indefinite;

    // f(1,n1,p)/f(1,n1) vs f(0,v,p)/f(0,v), cross-multiplied
    const Count lhs = m.joint(Attachment::Noun, q, kinds::n1_p) * v_verb;
    const Count rhs = m.joint(Attachment::Verb, q, kinds::v_p) * n1_noun;
    if (lhs > rhs) return HindleRoothOutcome::Noun;
    if (lhs < rhs) return HindleRoothOutcome::Verb;
    return HindleRoothOutcome::Indefinite;
}

Attachment backed_off_pair_decide(const CountModel& m, const Quadruple& q) {
    const Count den = m.total(q, kinds::v_p) + m.total(q, kinds::n1_p);
    if (den == 0)
        throw UndefinedResultError(
            "pair-backoff decision undefined: f(v,p) + f(n1,p) is zero");
    const Count num = m.joint(Attachment::Noun, q, kinds::v_p) +
                      m.joint(Attachment::Noun, q, kinds::n1_p);
    return 2 * num >= den ? Attachment::Noun : Attachment::Verb;
}

Corpus restrict_hr_testset(const CountModel& m, const Corpus& test) {
    Corpus restricted;
    for (const LabeledQuintuple& item : test)
        if (hindle_rooth_decide(m, item.quad) != HindleRoothOutcome::Indefinite)
            restricted.push_back(item);
    return restricted;
}

}  // namespace ppattach
