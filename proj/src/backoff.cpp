#include "ppattach/backoff.hpp"

#include <limits>
#include <optional>
#include <span>
#include <stdexcept>

namespace ppattach {

std::string_view stage_name(Stage s) {
    switch (s) {
        case Stage::Quadruple: return "quadruple";
        case Stage::Triple:    return "triple";
        case Stage::Pair:      return "pair";
        case Stage::Single:    return "single";
        default:               return "default";
    }
}

std::string_view stage_row_label(Stage s) {
    switch (s) {
        case Stage::Quadruple: return "Quadruples";
        case Stage::Triple:    return "Triples";
        case Stage::Pair:      return "Doubles";
        case Stage::Single:    return "Singles";
        default:               return "Defaults";
    }
}

namespace {

// The preposition-containing kinds combined at each backed-off stage.
constexpr std::array<TupleKind, 1> kQuadKinds{kinds::quadruple};
constexpr std::array<TupleKind, 3> kTripleKinds{kinds::v_n1_p, kinds::v_p_n2, kinds::n1_p_n2};
constexpr std::array<TupleKind, 3> kPairKinds{kinds::v_p, kinds::n1_p, kinds::p_n2};
constexpr std::array<TupleKind, 1> kSingleKinds{kinds::p};

std::span<const TupleKind> stage_kinds(Stage s) {
    switch (s) {
        case Stage::Quadruple: return kQuadKinds;
        case Stage::Triple:    return kTripleKinds;
        case Stage::Pair:      return kPairKinds;
        case Stage::Single:    return kSingleKinds;
        default:               return {};
    }
}

using Wide = unsigned __int128;

Wide wide_gcd(Wide a, Wide b) {
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Mean of the per-tuple ratios with nonzero totals, as an exact
// fraction reduced to lowest terms. At least one total must be nonzero.
Rational simple_average(std::span<const Count> nouns, std::span<const Count> totals) {
    Wide num = 0;
    Wide den = 1;
    Count used = 0;
    for (std::size_t i = 0; i < totals.size(); ++i) {
        if (totals[i] == 0) continue;
        num = num * totals[i] + den * nouns[i];
        den *= totals[i];
        ++used;
    }
    den *= used;
    Wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (den > std::numeric_limits<Count>::max())
        throw std::overflow_error("simple-average denominator exceeds 64 bits");
    return Rational{static_cast<Count>(num), static_cast<Count>(den)};
}

// Candidate estimate for one stage, or nothing when the stage's
// evidence does not clear the cutoff.
std::optional<Rational> stage_candidate(const CountModel& m, const Quadruple& q,
                                        Stage stage, const BackoffConfig& cfg) {
    std::span<const TupleKind> ks = stage_kinds(stage);
    std::array<Count, 3> nouns{};
    std::array<Count, 3> totals{};
    Count denominator = 0;
    Count noun_sum = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        SubTuple x = subtuple(q, ks[i]);
        totals[i] = m.total(x);
        nouns[i] = m.joint(Attachment::Noun, x);
        denominator += totals[i];
        noun_sum += nouns[i];
    }
    if (denominator <= cfg.cutoffs[static_cast<int>(stage)]) return std::nullopt;
    if (cfg.combination == Combination::SimpleAverage)
        return simple_average(std::span(nouns).first(ks.size()),
                              std::span(totals).first(ks.size()));
    return Rational{noun_sum, denominator};
}

Stage stage_for_arity(int arity) {
    switch (arity) {
        case 3: return Stage::Triple;
        case 2: return Stage::Pair;
        default: return Stage::Single;
    }
}

}  // namespace

Estimate estimate(const CountModel& m, const Quadruple& q, const BackoffConfig& cfg) {
    for (int si = 0; si < 4; ++si) {
        Stage stage = static_cast<Stage>(si);
        std::optional<Rational> candidate = stage_candidate(m, q, stage, cfg);
        if (!candidate) continue;
        if (candidate->is_half() && cfg.neutral_backoff.contains(stage)) continue;
        return Estimate{*candidate, stage};
    }
    return Estimate{Rational{1, 1}, Stage::Default};
}

std::pair<Attachment, Estimate> decide(const CountModel& m, const Quadruple& q,
                                       const BackoffConfig& cfg) {
    Estimate e = estimate(m, q, cfg);
    Attachment a = e.p.at_least_half() ? Attachment::Noun : Attachment::Verb;
    return {a, e};
}

SingleTupleEstimate estimate_single_tuple(const CountModel& m, const Quadruple& q,
                                          TupleKind t, const BackoffConfig& cfg) {
    if (t.arity() < 1 || t.arity() > 3)
        throw std::invalid_argument("single-tuple stage requires a triple, pair, or single kind");
    const Stage modified = stage_for_arity(t.arity());

    for (int si = 0; si < 4; ++si) {
        Stage stage = static_cast<Stage>(si);
        std::optional<Rational> candidate;
        if (stage == modified) {
            // replace the stage's tuple set with {t}; the combination rule
            // still applies, so SimpleAverage yields the reduced ratio
            Count total = m.total(q, t);
            if (total > 0) {
                std::array<Count, 1> nouns{m.joint(Attachment::Noun, q, t)};
                std::array<Count, 1> totals{total};
                candidate = cfg.combination == Combination::SimpleAverage
                                ? simple_average(nouns, totals)
                                : Rational{nouns[0], totals[0]};
            }
        } else {
            candidate = stage_candidate(m, q, stage, cfg);
        }
        if (!candidate) continue;
        if (candidate->is_half() && cfg.neutral_backoff.contains(stage)) continue;
        return {Estimate{*candidate, stage}, stage == modified};
    }
    return {Estimate{Rational{1, 1}, Stage::Default}, false};
}

}  // namespace ppattach
