// Scoring against gold labels: per-stage accuracy tables, the count
// cutoff ablation, and the per-tuple ablation / ranking experiments.

#ifndef PPATTACH_EVAL_HPP
#define PPATTACH_EVAL_HPP

#include <array>
#include <string>
#include <vector>

#include "ppattach/backoff.hpp"

namespace ppattach {

struct StageRow {
    Stage stage = Stage::Default;
    Count total = 0;    // test items resolved at this stage
    Count correct = 0;

    // Percent correct; only meaningful when total > 0.
    double accuracy_percent() const {
        return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
    }

    bool operator==(const StageRow&) const = default;
};

struct EvalReport {
    std::array<StageRow, kStageCount> rows{};  // stage order

    Count total() const;
    Count correct() const;
    double overall_accuracy_percent() const;  // only meaningful when total() > 0

    bool operator==(const EvalReport&) const = default;
};

// Runs decide() on every test item and buckets by the estimate's stage.
EvalReport evaluate(const CountModel& m, const Corpus& test,
                    const BackoffConfig& cfg = {});

// evaluate() over the model with counts below `threshold` zeroed.
EvalReport ablate_cutoff(const CountModel& m, const Corpus& test,
                         Count threshold, const BackoffConfig& cfg = {});

struct TupleAblation {
    TupleKind kind;
    Count cases = 0;    // items resolved at the modified stage by this tuple
    Count correct = 0;

    double accuracy_percent() const {
        return 100.0 * static_cast<double>(correct) / static_cast<double>(cases);
    }
};

// Accuracy of the single-tuple variant of the algorithm, over the test
// items whose estimate came from the modified stage.
TupleAblation ablate_tuple(const CountModel& m, const Corpus& test,
                           TupleKind t, const BackoffConfig& cfg = {});

// All 14 non-quadruple kinds, sorted by descending accuracy. Kinds with
// no cases sort last; ties fall back to canonical kind order.
std::vector<TupleAblation> rank_tuples(const CountModel& m, const Corpus& dev,
                                       const BackoffConfig& cfg = {});

// Human-readable table in the Stage/Total/Correct/Percent layout.
// Accuracies are printed to one decimal place; empty stages show "-".
std::string format_report(const EvalReport& report);

// Machine-readable one-liner: "total=<n> correct=<n> accuracy=<x.x>".
std::string format_summary(const EvalReport& report);

std::string format_tuple_ablation(const TupleAblation& row);
std::string format_ranking(const std::vector<TupleAblation>& rows);

}  // namespace ppattach

#endif  // PPATTACH_EVAL_HPP
