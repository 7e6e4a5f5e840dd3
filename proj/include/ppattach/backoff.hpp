// The backed-off attachment estimator: quadruple, then the three
// preposition triples, then the three preposition pairs, then the
// preposition alone, then a noun-attachment default.

#ifndef PPATTACH_BACKOFF_HPP
#define PPATTACH_BACKOFF_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <utility>

#include "ppattach/counts.hpp"

namespace ppattach {

// Backoff stages in evaluation order.
enum class Stage : int { Quadruple = 0, Triple = 1, Pair = 2, Single = 3, Default = 4 };

inline constexpr int kStageCount = 5;

std::string_view stage_name(Stage s);        // "quadruple", ..., "default"
std::string_view stage_row_label(Stage s);   // "Quadruples", ..., "Defaults"

// Small set of stages, used for the neutral-backoff rule.
class StageSet {
public:
    constexpr StageSet() = default;
    constexpr StageSet(std::initializer_list<Stage> stages) {
        for (Stage s : stages) bits_ |= 1u << static_cast<int>(s);
    }

    constexpr bool contains(Stage s) const {
        return (bits_ >> static_cast<int>(s)) & 1u;
    }

    constexpr void insert(Stage s) { bits_ |= 1u << static_cast<int>(s); }

    friend constexpr bool operator==(StageSet, StageSet) = default;

private:
    unsigned bits_ = 0;
};

// How multi-tuple stages combine their counts.
enum class Combination {
    WeightedSum,    // sum of joint counts over sum of totals
    SimpleAverage,  // mean of the per-tuple ratios with nonzero totals
};

struct BackoffConfig {
    // Per-stage thresholds c1..c4; a stage is considered only when its
    // denominator exceeds the threshold (strict >). 0 means back off
    // only on zero evidence.
    std::array<Count, 4> cutoffs{0, 0, 0, 0};
    Combination combination = Combination::WeightedSum;
    // Stages where an exact 0.5 estimate counts as no evidence and
    // backoff continues.
    StageSet neutral_backoff{Stage::Quadruple, Stage::Triple};
};

// Exact probability as a ratio of counts. den > 0 always; num <= den.
struct Rational {
    Count num = 1;
    Count den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_half() const { return 2 * num == den; }
    bool at_least_half() const { return 2 * num >= den; }
    bool same_value(const Rational& o) const { return num * o.den == o.num * den; }
};

struct Estimate {
    Rational p;  // probability of noun attachment
    Stage stage = Stage::Default;

    double p_noun() const { return p.value(); }
};

// Backed-off estimate of p(noun | quadruple). Total: zero-evidence
// queries land on the default stage with p = 1.
Estimate estimate(const CountModel& m, const Quadruple& q,
                  const BackoffConfig& cfg = {});

// Noun attachment iff the estimate is >= 0.5 (exact rational test).
std::pair<Attachment, Estimate> decide(const CountModel& m, const Quadruple& q,
                                       const BackoffConfig& cfg = {});

struct SingleTupleEstimate {
    Estimate estimate;
    // True when the estimate came from the stage that was replaced by
    // the single tuple's own ratio.
    bool used_modified_stage = false;
};

// Variant of the algorithm where the stage matching `t`'s arity uses
// only f(1, t-instance) / f(t-instance), guarded by f(t-instance) > 0.
// Other stages run unchanged. `t` must be a triple, pair, or single.
SingleTupleEstimate estimate_single_tuple(const CountModel& m, const Quadruple& q,
                                          TupleKind t, const BackoffConfig& cfg = {});

}  // namespace ppattach

#endif  // PPATTACH_BACKOFF_HPP
