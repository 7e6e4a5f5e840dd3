// Brute-force reference implementations used only by tests: every count
// is recomputed by scanning the corpus per query, and the staged
// estimator is re-derived from those scans. No code is shared with the
// CountModel table or the production estimator.

#ifndef PPATTACH_TESTS_ORACLE_HPP
#define PPATTACH_TESTS_ORACLE_HPP

#include <array>
#include <cstdint>

#include "ppattach/backoff.hpp"
#include "ppattach/corpus.hpp"
#include "ppattach/counts.hpp"

namespace oracle {

using ppattach::Attachment;
using ppattach::BackoffConfig;
using ppattach::Combination;
using ppattach::Corpus;
using ppattach::Count;
using ppattach::Quadruple;
using ppattach::Slot;
using ppattach::Stage;
using ppattach::TupleKind;

inline bool matches(const Quadruple& item, const Quadruple& query, TupleKind k) {
    constexpr Slot slots[4] = {Slot::V, Slot::N1, Slot::P, Slot::N2};
    for (Slot s : slots)
        if (k.contains(s) && ppattach::slot_word(item, s) != ppattach::slot_word(query, s))
            return false;
    return true;
}

// f(x) by scanning the corpus.
inline Count recount(const Corpus& c, TupleKind k, const Quadruple& q) {
    Count n = 0;
    for (const auto& item : c)
        if (matches(item.quad, q, k)) ++n;
    return n;
}

// f(a,x) by scanning the corpus.
inline Count recount_joint(const Corpus& c, Attachment a, TupleKind k, const Quadruple& q) {
    Count n = 0;
    for (const auto& item : c)
        if (item.label == a && matches(item.quad, q, k)) ++n;
    return n;
}

// Counts as seen through a "zero everything rarer than `zero_below`"
// filter; zero_below = 0 leaves counts untouched.
inline Count cut_total(const Corpus& c, TupleKind k, const Quadruple& q, Count zero_below) {
    Count t = recount(c, k, q);
    return t < zero_below ? 0 : t;
}

inline Count cut_joint(const Corpus& c, Attachment a, TupleKind k, const Quadruple& q,
                       Count zero_below) {
    if (recount(c, k, q) < zero_below) return 0;
    return recount_joint(c, a, k, q);
}

struct Ratio {
    Count num = 1;
    Count den = 1;
};

struct Result {
    Ratio p;
    Stage stage = Stage::Default;
};

// Probability that two estimates agree, as exact fractions may differ
// in representation.
inline bool same_probability(Count n1, Count d1, Count n2, Count d2) {
    return static_cast<unsigned __int128>(n1) * d2 == static_cast<unsigned __int128>(n2) * d1;
}

namespace detail {

struct StageTuples {
    std::array<TupleKind, 3> kinds;
    int count;
};

inline StageTuples tuples_at(Stage s) {
    namespace k = ppattach::kinds;
    switch (s) {
        case Stage::Quadruple: return {{k::quadruple, k::quadruple, k::quadruple}, 1};
        case Stage::Triple:    return {{k::v_n1_p, k::v_p_n2, k::n1_p_n2}, 3};
        case Stage::Pair:      return {{k::v_p, k::n1_p, k::p_n2}, 3};
        default:               return {{k::p, k::p, k::p}, 1};
    }
}

// Candidate at one stage, false if the evidence does not clear the
// cutoff. Out-params keep this readable without std::optional.
inline bool stage_candidate(const Corpus& c, const Quadruple& q, Stage s,
                            const BackoffConfig& cfg, Count zero_below, Ratio* out) {
    StageTuples st = tuples_at(s);
    Count totals[3] = {0, 0, 0};
    Count nouns[3] = {0, 0, 0};
    Count d_sum = 0;
    Count n_sum = 0;
    for (int i = 0; i < st.count; ++i) {
        totals[i] = cut_total(c, st.kinds[i], q, zero_below);
        nouns[i] = cut_joint(c, Attachment::Noun, st.kinds[i], q, zero_below);
        d_sum += totals[i];
        n_sum += nouns[i];
    }
    if (d_sum <= cfg.cutoffs[static_cast<int>(s)]) return false;
    if (cfg.combination == Combination::SimpleAverage) {
        // sum of fractions over nonzero totals, divided by their number
        Count num = 0;
        Count den = 1;
        Count used = 0;
        for (int i = 0; i < st.count; ++i) {
            if (totals[i] == 0) continue;
            num = num * totals[i] + den * nouns[i];
            den *= totals[i];
            ++used;
        }
        *out = Ratio{num, den * used};
    } else {
        *out = Ratio{n_sum, d_sum};
    }
    return true;
}

}  // namespace detail

// The staged backed-off estimate, recomputed from corpus scans.
inline Result estimate(const Corpus& c, const Quadruple& q, const BackoffConfig& cfg = {},
                       Count zero_below = 0) {
    for (int si = 0; si < 4; ++si) {
        Stage s = static_cast<Stage>(si);
        Ratio r;
        if (!detail::stage_candidate(c, q, s, cfg, zero_below, &r)) continue;
        if (2 * r.num == r.den && cfg.neutral_backoff.contains(s)) continue;
        return Result{r, s};
    }
    return Result{Ratio{1, 1}, Stage::Default};
}

// Single-tuple variant: the stage matching t's arity uses only t's
// counts, guarded by a nonzero total.
inline Result estimate_single(const Corpus& c, const Quadruple& q, TupleKind t,
                              const BackoffConfig& cfg, bool* from_modified) {
    Stage modified = t.arity() == 3   ? Stage::Triple
                     : t.arity() == 2 ? Stage::Pair
                                      : Stage::Single;
    *from_modified = false;
    for (int si = 0; si < 4; ++si) {
        Stage s = static_cast<Stage>(si);
        Ratio r;
        bool have = false;
        if (s == modified) {
            Count total = recount(c, t, q);
            if (total > 0) {
                r = Ratio{recount_joint(c, Attachment::Noun, t, q), total};
                have = true;
            }
        } else {
            have = detail::stage_candidate(c, q, s, cfg, 0, &r);
        }
        if (!have) continue;
        if (2 * r.num == r.den && cfg.neutral_backoff.contains(s)) continue;
        *from_modified = (s == modified);
        return Result{r, s};
    }
    return Result{Ratio{1, 1}, Stage::Default};
}

}  // namespace oracle

#endif  // PPATTACH_TESTS_ORACLE_HPP
