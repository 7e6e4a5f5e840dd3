// ppattach: train, evaluate, and probe backed-off PP-attachment models
// from the command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppattach/backoff.hpp"
#include "ppattach/baselines.hpp"
#include "ppattach/corpus.hpp"
#include "ppattach/counts.hpp"
#include "ppattach/eval.hpp"
#include "ppattach/normalize.hpp"

namespace {

using namespace ppattach;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDataError = 2;

struct BackoffFlags {
    std::vector<Count> cutoffs{0, 0, 0, 0};
    std::string combination = "weighted";
    std::string neutral = "quadruple,triple";
};

void add_backoff_flags(CLI::App* sub, BackoffFlags& flags) {
    sub->add_option("--c1", flags.cutoffs[0], "Quadruple-stage count cutoff");
    sub->add_option("--c2", flags.cutoffs[1], "Triple-stage count cutoff");
    sub->add_option("--c3", flags.cutoffs[2], "Pair-stage count cutoff");
    sub->add_option("--c4", flags.cutoffs[3], "Single-stage count cutoff");
    sub->add_option("--combination", flags.combination,
                    "Count combination at the triple/pair stages")
        ->check(CLI::IsMember({"weighted", "average"}));
    sub->add_option("--neutral-stages", flags.neutral,
                    "Comma-separated stages where an exact 0.5 backs off "
                    "(quadruple,triple,pair,single or none)");
}

BackoffConfig to_config(const BackoffFlags& flags) {
    BackoffConfig cfg;
    for (int i = 0; i < 4; ++i) cfg.cutoffs[i] = flags.cutoffs[i];
    cfg.combination = flags.combination == "average" ? Combination::SimpleAverage
                                                     : Combination::WeightedSum;
    StageSet neutral;
    if (flags.neutral != "none" && !flags.neutral.empty()) {
        std::stringstream ss(flags.neutral);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (name == "quadruple")
                neutral.insert(Stage::Quadruple);
            else if (name == "triple")
                neutral.insert(Stage::Triple);
            else if (name == "pair")
                neutral.insert(Stage::Pair);
            else if (name == "single")
                neutral.insert(Stage::Single);
            else
                throw std::runtime_error("unknown stage in --neutral-stages: " + name);
        }
    }
    cfg.neutral_backoff = neutral;
    return cfg;
}

CountModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(0, "cannot open model file: " + path);
    return CountModel::load(in);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw FormatError(0, "cannot open output file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Backed-off prepositional-phrase attachment disambiguator"};
    app.require_subcommand(1);

    // preprocess
    std::string pre_in, pre_out, pre_stemmer = "english";
    bool no_year = false, no_num = false, no_lowercase = false;
    bool no_name = false, no_name_collapse = false, no_stem = false;
    CLI::App* pre = app.add_subcommand("preprocess",
                                       "Normalize a quintuple file (YEAR/NUM/NAME, case, stems)");
    pre->add_option("--in", pre_in, "Input quintuple file")->required();
    pre->add_option("--out", pre_out, "Output quintuple file")->required();
    pre->add_flag("--no-year", no_year, "Disable the 4-digit YEAR rule");
    pre->add_flag("--no-num", no_num, "Disable the numeric NUM rule");
    pre->add_flag("--no-lowercase", no_lowercase, "Keep verb/preposition case");
    pre->add_flag("--no-name", no_name, "Disable the NAME rule");
    pre->add_flag("--no-name-collapse", no_name_collapse, "Disable NAME-NAME collapsing");
    pre->add_flag("--no-stem", no_stem, "Disable verb stemming");
    pre->add_option("--stemmer", pre_stemmer, "Stemmer: english or none")
        ->check(CLI::IsMember({"english", "none"}));

    // train
    std::string train_in, train_model;
    Count train_cutoff = 0;
    CLI::App* train_cmd = app.add_subcommand("train", "Count sub-tuples of a quintuple file");
    train_cmd->add_option("--in", train_in, "Training quintuple file")->required();
    train_cmd->add_option("--model", train_model, "Model file to write")->required();
    train_cmd->add_option("--cutoff", train_cutoff,
                          "Zero every sub-tuple whose total count is below this");

    // predict
    std::string pred_model, pred_in, pred_out;
    std::vector<std::string> pred_words;
    BackoffFlags pred_flags;
    CLI::App* pred = app.add_subcommand("predict", "Attachment decisions for quadruples");
    pred->add_option("--model", pred_model, "Model file")->required();
    pred->add_option("--in", pred_in, "File of 4-field query lines");
    pred->add_option("quadruple", pred_words, "Inline query: V N1 P N2");
    pred->add_option("--out", pred_out, "Write results here instead of stdout");
    add_backoff_flags(pred, pred_flags);

    // eval
    std::string eval_model, eval_test, eval_out;
    BackoffFlags eval_flags;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Per-stage accuracy on a labeled test file");
    eval_cmd->add_option("--model", eval_model, "Model file")->required();
    eval_cmd->add_option("--test", eval_test, "Labeled test quintuple file")->required();
    eval_cmd->add_option("--out", eval_out, "Write the report here instead of stdout");
    add_backoff_flags(eval_cmd, eval_flags);

    // baseline
    std::string base_method, base_model, base_test, base_out;
    bool base_restrict = false;
    CLI::App* base = app.add_subcommand("baseline", "Score a reference baseline");
    base->add_option("--method", base_method, "noun, prep, hindle-rooth, or pair-backoff")
        ->required()
        ->check(CLI::IsMember({"noun", "prep", "hindle-rooth", "pair-backoff"}));
    base->add_option("--model", base_model, "Model file (not needed for noun)");
    base->add_option("--test", base_test, "Labeled test quintuple file")->required();
    base->add_flag("--restrict-hr", base_restrict,
                   "Keep only items where the Hindle-Rooth test is definite");
    base->add_option("--out", base_out, "Write the report here instead of stdout");

    // ablate
    std::string abl_model, abl_test, abl_tuple, abl_out;
    Count abl_cutoff = 0;
    bool abl_rank = false;
    BackoffFlags abl_flags;
    CLI::App* abl = app.add_subcommand("ablate", "Cutoff and single-tuple experiments");
    abl->add_option("--model", abl_model, "Model file")->required();
    abl->add_option("--test", abl_test, "Labeled test quintuple file")->required();
    CLI::Option* abl_cut_opt = abl->add_option("--cutoff", abl_cutoff,
                                               "Re-evaluate with counts below this zeroed");
    CLI::Option* abl_tuple_opt =
        abl->add_option("--tuple", abl_tuple, "Single-tuple variant, kind code like .NPD");
    CLI::Option* abl_rank_opt =
        abl->add_flag("--rank-tuples", abl_rank, "Rank all 14 non-quadruple kinds by accuracy");
    abl_cut_opt->excludes(abl_tuple_opt)->excludes(abl_rank_opt);
    abl_tuple_opt->excludes(abl_rank_opt);
    abl->add_option("--out", abl_out, "Write the report here instead of stdout");
    add_backoff_flags(abl, abl_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (pre->parsed()) {
            NormalizeConfig cfg;
            cfg.replace_year = !no_year;
            cfg.replace_num = !no_num;
            cfg.lowercase_verb_prep = !no_lowercase;
            cfg.replace_name = !no_name;
            cfg.collapse_name = !no_name_collapse;
            cfg.stem_verb = !no_stem;
            cfg.stemmer = pre_stemmer;
            Corpus corpus = load_corpus_file(pre_in);
            write_output(write_corpus(normalize_corpus(corpus, cfg)), pre_out);
        } else if (train_cmd->parsed()) {
            CountModel model = CountModel::train(load_corpus_file(train_in));
            if (train_cutoff > 0) model = model.with_cutoff(train_cutoff);
            std::ofstream out(train_model);
            if (!out) throw FormatError(0, "cannot open model file: " + train_model);
            model.save(out);
        } else if (pred->parsed()) {
            if (pred_in.empty() == pred_words.empty()) {
                std::cerr << "predict: give either --in <file> or an inline V N1 P N2 query\n";
                return kExitUsage;
            }
            if (!pred_words.empty() && pred_words.size() != 4) {
                std::cerr << "predict: an inline query needs exactly 4 words\n";
                return kExitUsage;
            }
            CountModel model = load_model_file(pred_model);
            BackoffConfig cfg = to_config(pred_flags);
            std::vector<Quadruple> queries;
            if (!pred_in.empty()) {
                std::ifstream in(pred_in);
                if (!in) throw FormatError(0, "cannot open query file: " + pred_in);
                queries = parse_quadruples(in);
            } else {
                queries.push_back(
                    Quadruple{pred_words[0], pred_words[1], pred_words[2], pred_words[3]});
            }
            std::ostringstream out;
            char buf[64];
            for (const Quadruple& q : queries) {
                auto [label, est] = decide(model, q, cfg);
                std::snprintf(buf, sizeof(buf), "%d %.4f ", to_int(label), est.p_noun());
                out << buf << stage_name(est.stage) << '\n';
            }
            write_output(out.str(), pred_out);
        } else if (eval_cmd->parsed()) {
            CountModel model = load_model_file(eval_model);
            Corpus test = load_corpus_file(eval_test);
            EvalReport report = evaluate(model, test, to_config(eval_flags));
            write_output(format_report(report) + format_summary(report) + "\n", eval_out);
        } else if (base->parsed()) {
            if (base_method != "noun" && base_model.empty()) {
                std::cerr << "baseline: --model is required for method " << base_method << "\n";
                return kExitUsage;
            }
            Corpus test = load_corpus_file(base_test);
            CountModel model;
            if (!base_model.empty()) model = load_model_file(base_model);
            if (base_restrict) {
                if (base_model.empty()) {
                    std::cerr << "baseline: --restrict-hr needs --model\n";
                    return kExitUsage;
                }
                test = restrict_hr_testset(model, test);
            }
            PrepositionTable prep_table;
            if (base_method == "prep") prep_table = PrepositionTable::from_model(model);

            Count correct = 0;
            for (const LabeledQuintuple& item : test) {
                Attachment label = Attachment::Noun;
                if (base_method == "noun") {
                    label = baseline_always_noun(item.quad);
                } else if (base_method == "prep") {
                    label = baseline_most_likely_prep(prep_table, item.quad);
                } else if (base_method == "hindle-rooth") {
                    // Indefinite outcomes fall to the noun default.
                    HindleRoothOutcome o = hindle_rooth_decide(model, item.quad);
                    label = o == HindleRoothOutcome::Verb ? Attachment::Verb : Attachment::Noun;
                } else {
                    label = backed_off_pair_decide(model, item.quad);
                }
                if (label == item.label) ++correct;
            }
            std::ostringstream out;
            char buf[32];
            out << "method=" << base_method << " total=" << test.size()
                << " correct=" << correct << " accuracy=";
            if (test.empty()) {
                out << "-";
            } else {
                std::snprintf(buf, sizeof(buf), "%.1f",
                              100.0 * static_cast<double>(correct) /
                                  static_cast<double>(test.size()));
                out << buf;
            }
            out << '\n';
            write_output(out.str(), base_out);
        } else if (abl->parsed()) {
            CountModel model = load_model_file(abl_model);
            Corpus test = load_corpus_file(abl_test);
            BackoffConfig cfg = to_config(abl_flags);
            std::string text;
            if (abl_rank) {
                text = format_ranking(rank_tuples(model, test, cfg));
            } else if (!abl_tuple.empty()) {
                auto kind = TupleKind::from_code(abl_tuple);
                if (!kind || kind->arity() == 4) {
                    std::cerr << "ablate: invalid kind code \"" << abl_tuple
                              << "\" (need a triple, pair, or single like .NPD)\n";
                    return kExitUsage;
                }
                text = format_tuple_ablation(ablate_tuple(model, test, *kind, cfg)) + "\n";
            } else if (abl_cut_opt->count() > 0) {
                EvalReport report = ablate_cutoff(model, test, abl_cutoff, cfg);
                text = format_report(report) + format_summary(report) + "\n";
            } else {
                std::cerr << "ablate: give one of --cutoff, --tuple, or --rank-tuples\n";
                return kExitUsage;
            }
            write_output(text, abl_out);
        }
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const UndefinedResultError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
