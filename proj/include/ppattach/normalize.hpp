// Morphological / lexical preprocessing for quintuple corpora:
// YEAR and NUM substitution, case folding, NAME substitution, and
// verb stemming.

#ifndef PPATTACH_NORMALIZE_HPP
#define PPATTACH_NORMALIZE_HPP

#include <functional>
#include <string>

#include "ppattach/corpus.hpp"

namespace ppattach {

// Which rules run, and which stemmer backs the stem rule.
// The default enables everything.
struct NormalizeConfig {
    bool replace_year = true;        // 4-digit tokens -> "YEAR"
    bool replace_num = true;         // other numeric tokens -> "NUM"
    bool lowercase_verb_prep = true; // v and p fields to lower case
    bool replace_name = true;        // Capitalized n1/n2 segments -> "NAME"
    bool collapse_name = true;       // NAME-NAME runs -> "NAME"
    bool stem_verb = true;           // v field to its morphological stem
    std::string stemmer = "english"; // "english" or "none"
};

// Exactly four ASCII digits -> "YEAR"; otherwise unchanged.
std::string normalize_year(const std::string& token);

// Only digits, commas, and periods (at least one digit) -> "NUM";
// otherwise unchanged.
std::string normalize_num(const std::string& token);

// YEAR rule first, then NUM. "1988" -> "YEAR", "1,020.5" -> "NUM".
std::string normalize_token_year_num(const std::string& token);

// For n1/n2 fields: every hyphen-separated segment of the form
// [A-Z][a-z]+ becomes "NAME", then each maximal hyphen-joined run of
// "NAME" segments collapses to a single "NAME".
std::string normalize_name(const std::string& token);

// ASCII case folding; bytes outside A-Z are untouched.
std::string ascii_lower(const std::string& token);

// Rule-based English verb stemmer: a small irregular-form table plus
// -s/-es/-ed/-ing stripping with undoubling and e-restoration
// heuristics. Deterministic and a fixed point on its own outputs.
std::string english_verb_stem(const std::string& verb);

using Stemmer = std::function<std::string(const std::string&)>;

// "english" -> english_verb_stem, "none" -> identity.
// Throws std::invalid_argument for an unknown name.
Stemmer make_stemmer(const std::string& name);

// Applies the enabled rules in order: YEAR/NUM on all four word fields,
// lower-casing on v and p, NAME substitution and collapse on n1 and n2,
// stemming on v. The label is untouched. Idempotent under the default
// configuration.
LabeledQuintuple normalize_quintuple(const LabeledQuintuple& item,
                                     const NormalizeConfig& cfg = {});

Corpus normalize_corpus(const Corpus& corpus, const NormalizeConfig& cfg = {});

}  // namespace ppattach

#endif  // PPATTACH_NORMALIZE_HPP
