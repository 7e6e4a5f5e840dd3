#include "ppattach/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ppattach {

namespace {

std::string percent_1dp(Count correct, Count total) {
    if (total == 0) return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f",
                  100.0 * static_cast<double>(correct) / static_cast<double>(total));
    return buf;
}

}  // namespace

Count EvalReport::total() const {
    Count n = 0;
    for (const StageRow& r : rows) n += r.total;
    return n;
}

Count EvalReport::correct() const {
    Count n = 0;
    for (const StageRow& r : rows) n += r.correct;
    return n;
}

double EvalReport::overall_accuracy_percent() const {
    return 100.0 * static_cast<double>(correct()) / static_cast<double>(total());
}

EvalReport evaluate(const CountModel& m, const Corpus& test, const BackoffConfig& cfg) {
    EvalReport report;
    for (int si = 0; si < kStageCount; ++si)
        report.rows[si].stage = static_cast<Stage>(si);
    for (const LabeledQuintuple& item : test) {
        auto [label, est] = decide(m, item.quad, cfg);
        StageRow& row = report.rows[static_cast<int>(est.stage)];
        ++row.total;
        if (label == item.label) ++row.correct;
    }
    return report;
}

EvalReport ablate_cutoff(const CountModel& m, const Corpus& test, Count threshold,
                         const BackoffConfig& cfg) {
    return evaluate(m.with_cutoff(threshold), test, cfg);
}

TupleAblation ablate_tuple(const CountModel& m, const Corpus& test, TupleKind t,
                           const BackoffConfig& cfg) {
    TupleAblation result;
    result.kind = t;
    for (const LabeledQuintuple& item : test) {
        SingleTupleEstimate e = estimate_single_tuple(m, item.quad, t, cfg);
        if (!e.used_modified_stage) continue;
        ++result.cases;
        Attachment label =
            e.estimate.p.at_least_half() ? Attachment::Noun : Attachment::Verb;
        if (label == item.label) ++result.correct;
    }
    return result;
}

std::vector<TupleAblation> rank_tuples(const CountModel& m, const Corpus& dev,
                                       const BackoffConfig& cfg) {
    std::vector<TupleAblation> rows;
    for (TupleKind k : TupleKind::all())
        if (k != kinds::quadruple) rows.push_back(ablate_tuple(m, dev, k, cfg));

    std::sort(rows.begin(), rows.end(), [](const TupleAblation& a, const TupleAblation& b) {
        if ((a.cases > 0) != (b.cases > 0)) return a.cases > 0;  // defined first
        if (a.cases > 0) {
            // a.correct/a.cases vs b.correct/b.cases, cross-multiplied
            const Count lhs = a.correct * b.cases;
            const Count rhs = b.correct * a.cases;
            if (lhs != rhs) return lhs > rhs;
        }
        return canonical_kind_less(a.kind, b.kind);
    });
    return rows;
}

std::string format_report(const EvalReport& report) {
    std::ostringstream out;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-12s %8s %8s %8s\n", "Stage", "Total", "Correct",
                  "Percent");
    out << buf;
    for (const StageRow& row : report.rows) {
        std::snprintf(buf, sizeof(buf), "%-12s %8llu %8llu %8s\n",
                      std::string(stage_row_label(row.stage)).c_str(),
                      static_cast<unsigned long long>(row.total),
                      static_cast<unsigned long long>(row.correct),
                      percent_1dp(row.correct, row.total).c_str());
        out << buf;
    }
    std::snprintf(buf, sizeof(buf), "%-12s %8llu %8llu %8s\n", "Totals",
                  static_cast<unsigned long long>(report.total()),
                  static_cast<unsigned long long>(report.correct()),
                  percent_1dp(report.correct(), report.total()).c_str());
    out << buf;
    return out.str();
}

std::string format_summary(const EvalReport& report) {
    std::ostringstream out;
    out << "total=" << report.total() << " correct=" << report.correct()
        << " accuracy=" << percent_1dp(report.correct(), report.total());
    return out.str();
}

std::string format_tuple_ablation(const TupleAblation& row) {
    std::ostringstream out;
    out << "tuple=" << row.kind.code() << " cases=" << row.cases
        << " correct=" << row.correct
        << " accuracy=" << percent_1dp(row.correct, row.cases);
    return out.str();
}

std::string format_ranking(const std::vector<TupleAblation>& rows) {
    std::ostringstream out;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-6s %8s %8s %8s\n", "Tuple", "Cases", "Correct",
                  "Percent");
    out << buf;
    for (const TupleAblation& row : rows) {
        std::snprintf(buf, sizeof(buf), "%-6s %8llu %8llu %8s\n", row.kind.code().c_str(),
                      static_cast<unsigned long long>(row.cases),
                      static_cast<unsigned long long>(row.correct),
                      percent_1dp(row.correct, row.cases).c_str());
        out << buf;
    }
    return out.str();
}

}  // namespace ppattach
