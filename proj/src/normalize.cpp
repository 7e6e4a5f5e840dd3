#include "ppattach/normalize.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ppattach {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

bool all_digits(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!is_digit(c)) return false;
    return true;
}

// [A-Z][a-z]+ over the whole segment.
bool is_capitalized_word(std::string_view seg) {
    if (seg.size() < 2 || !is_upper(seg[0])) return false;
    for (std::size_t i = 1; i < seg.size(); ++i)
        if (!is_lower(seg[i])) return false;
    return true;
}

std::vector<std::string> split_hyphens(const std::string& t) {
    std::vector<std::string> segs;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = t.find('-', start);
        if (pos == std::string::npos) {
            segs.push_back(t.substr(start));
            return segs;
        }
        segs.push_back(t.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string join_hyphens(const std::vector<std::string>& segs) {
    std::string out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (i > 0) out += '-';
        out += segs[i];
    }
    return out;
}

std::string apply_name_segments(const std::string& t) {
    std::vector<std::string> segs = split_hyphens(t);
    for (std::string& s : segs)
        if (is_capitalized_word(s)) s = "NAME";
    return join_hyphens(segs);
}

std::string collapse_name_runs(const std::string& t) {
    std::vector<std::string> segs = split_hyphens(t);
    std::vector<std::string> out;
    for (std::string& s : segs) {
        if (s == "NAME" && !out.empty() && out.back() == "NAME") continue;
        out.push_back(std::move(s));
    }
    return join_hyphens(out);
}

std::string name_token(const std::string& t, bool replace, bool collapse) {
    std::string r = replace ? apply_name_segments(t) : t;
    return collapse ? collapse_name_runs(r) : r;
}

// ---- stemmer ------------------------------------------------------------

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool has_vowel(std::string_view s) {
    for (char c : s)
        if (is_vowel(c)) return true;
    return false;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.substr(s.size() - suffix.size()) == suffix;
}

// Common irregular past / participle / present forms seen as verb heads
// in newswire text.
const std::unordered_map<std::string, std::string>& irregular_verbs() {
    static const std::unordered_map<std::string, std::string> table = {
        // The copula stays unreduced (no common base to strip toward);
        // "was" and "being" are protected from the generic -s/-ing rules.
        {"was", "was"},     {"being", "being"},
        {"has", "have"},    {"had", "have"},
        {"having", "have"}, {"does", "do"},     {"did", "do"},
        {"done", "do"},     {"went", "go"},     {"gone", "go"},
        {"said", "say"},    {"made", "make"},   {"took", "take"},
        {"taken", "take"},  {"got", "get"},     {"gotten", "get"},
        {"gave", "give"},   {"given", "give"},  {"came", "come"},
        {"saw", "see"},     {"seen", "see"},    {"knew", "know"},
        {"known", "know"},  {"thought", "think"}, {"found", "find"},
        {"told", "tell"},   {"became", "become"}, {"shown", "show"},
        {"left", "leave"},  {"felt", "feel"},   {"brought", "bring"},
        {"began", "begin"}, {"begun", "begin"}, {"kept", "keep"},
        {"held", "hold"},   {"wrote", "write"}, {"written", "write"},
        {"stood", "stand"}, {"heard", "hear"},  {"meant", "mean"},
        {"met", "meet"},    {"ran", "run"},     {"paid", "pay"},
        {"laid", "lay"},    {"sat", "sit"},     {"spoke", "speak"},
        {"spoken", "speak"}, {"led", "lead"},   {"grew", "grow"},
        {"grown", "grow"},  {"lost", "lose"},   {"fell", "fall"},
        {"fallen", "fall"}, {"sent", "send"},   {"built", "build"},
        {"understood", "understand"},           {"drew", "draw"},
        {"drawn", "draw"},  {"broke", "break"}, {"broken", "break"},
        {"spent", "spend"}, {"rose", "rise"},   {"risen", "rise"},
        {"drove", "drive"}, {"driven", "drive"}, {"bought", "buy"},
        {"wore", "wear"},   {"worn", "wear"},   {"chose", "choose"},
        {"chosen", "choose"}, {"sold", "sell"}, {"won", "win"},
        {"ate", "eat"},     {"eaten", "eat"},   {"sought", "seek"},
        {"fought", "fight"}, {"taught", "teach"}, {"caught", "catch"},
        {"bore", "bear"},   {"borne", "bear"},  {"shook", "shake"},
        {"shaken", "shake"}, {"struck", "strike"}, {"stole", "steal"},
        {"stolen", "steal"}, {"swung", "swing"}, {"threw", "throw"},
        {"thrown", "throw"}, {"fled", "flee"},  {"agreed", "agree"},
        {"freed", "free"},  {"decreed", "decree"},
        {"guaranteed", "guarantee"},            {"dying", "die"},
        {"tying", "tie"},   {"lying", "lie"},
    };
    return table;
}

// After stripping -ed/-ing: undo consonant doubling, or restore a
// dropped final e where the ending makes it likely.
std::string fixup_stripped(std::string r) {
    char last = r.back();
    if (r.size() >= 2 && last == r[r.size() - 2] && !is_vowel(last) &&
        last != 'l' && last != 's' && last != 'z') {
        r.pop_back();  // planned -> plan, stopped -> stop
        return r;
    }
    // announc -> announce, continu -> continue, receiv -> receive
    if (last == 'c' || last == 'u' || last == 'v') return r + 'e';
    // judg -> judge, charg -> charge (dg/rg/lg never end a word)
    if (ends_with(r, "dg") || ends_with(r, "rg") || ends_with(r, "lg"))
        return r + 'e';
    // stat -> state, provid -> provide, us -> use: single vowel before a
    // final consonant from the restore set.
    static const std::string_view restore = "bdgkmpstz";
    if (restore.find(last) != std::string_view::npos && r.size() >= 2 &&
        is_vowel(r[r.size() - 2]) &&
        (r.size() == 2 || !is_vowel(r[r.size() - 3])))
        return r + 'e';
    return r;
}

}  // namespace

std::string normalize_year(const std::string& token) {
    if (token.size() == 4 && all_digits(token)) return "YEAR";
    return token;
}

std::string normalize_num(const std::string& token) {
    bool digit_seen = false;
    for (char c : token) {
        if (is_digit(c)) {
            digit_seen = true;
        } else if (c != ',' && c != '.') {
            return token;
        }
    }
    return digit_seen ? "NUM" : token;
}

std::string normalize_token_year_num(const std::string& token) {
    return normalize_num(normalize_year(token));
}

std::string normalize_name(const std::string& token) {
    return name_token(token, /*replace=*/true, /*collapse=*/true);
}

std::string ascii_lower(const std::string& token) {
    std::string out = token;
    for (char& c : out)
        if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::string english_verb_stem(const std::string& verb) {
    const auto& irregular = irregular_verbs();
    if (auto it = irregular.find(verb); it != irregular.end()) return it->second;

    const std::string& w = verb;
    std::size_t n = w.size();

    // -s forms
    if (ends_with(w, "ies")) {
        if (n >= 5) return w.substr(0, n - 3) + 'y';  // applies -> apply
        return w.substr(0, n - 1);                    // dies -> die
    }
    if (ends_with(w, "sses") || ends_with(w, "shes") || ends_with(w, "ches") ||
        ends_with(w, "xes") || ends_with(w, "zes") || ends_with(w, "oes"))
        return w.substr(0, n - 2);
    if (ends_with(w, "s") && n >= 2 && !ends_with(w, "ss") &&
        !ends_with(w, "us") && !ends_with(w, "is"))
        return w.substr(0, n - 1);

    // -ed forms
    if (ends_with(w, "ied")) {
        if (n >= 5) return w.substr(0, n - 3) + 'y';  // carried -> carry
        return w.substr(0, n - 1);                    // died -> die
    }
    // "eed" endings are base forms (need, exceed, proceed); the table
    // carries the few ee-verb pasts (agreed, freed, ...).
    if (ends_with(w, "eed")) return w;
    if (ends_with(w, "ed")) {
        std::string r = w.substr(0, n - 2);
        if (r.size() >= 2 && has_vowel(r)) return fixup_stripped(std::move(r));
        return w;
    }

    // -ing forms
    if (ends_with(w, "eeing")) return w.substr(0, n - 3);  // seeing -> see
    if (ends_with(w, "ing")) {
        std::string r = w.substr(0, n - 3);
        if (r.size() >= 2 && has_vowel(r)) return fixup_stripped(std::move(r));
        return w;  // sing, bring: remainder too short or vowel-free
    }

    return w;
}

Stemmer make_stemmer(const std::string& name) {
    if (name == "english") return english_verb_stem;
    if (name == "none") return [](const std::string& v) { return v; };
    throw std::invalid_argument("unknown stemmer: " + name);
}

LabeledQuintuple normalize_quintuple(const LabeledQuintuple& item,
                                     const NormalizeConfig& cfg) {
    LabeledQuintuple out = item;
    Quadruple& q = out.quad;

    auto year_num = [&cfg](std::string& t) {
        if (cfg.replace_year) t = normalize_year(t);
        if (cfg.replace_num) t = normalize_num(t);
    };
    year_num(q.verb);
    year_num(q.noun1);
    year_num(q.prep);
    year_num(q.noun2);

    if (cfg.lowercase_verb_prep) {
        q.verb = ascii_lower(q.verb);
        q.prep = ascii_lower(q.prep);
    }

    q.noun1 = name_token(q.noun1, cfg.replace_name, cfg.collapse_name);
    q.noun2 = name_token(q.noun2, cfg.replace_name, cfg.collapse_name);

    if (cfg.stem_verb) q.verb = make_stemmer(cfg.stemmer)(q.verb);

    return out;
}

Corpus normalize_corpus(const Corpus& corpus, const NormalizeConfig& cfg) {
    // Resolve the stemmer once for the whole pass.
    NormalizeConfig pass = cfg;
    pass.stem_verb = false;
    Stemmer stem = cfg.stem_verb ? make_stemmer(cfg.stemmer) : Stemmer{};

    Corpus out;
    out.reserve(corpus.size());
    for (const LabeledQuintuple& item : corpus) {
        LabeledQuintuple norm = normalize_quintuple(item, pass);
        if (stem) norm.quad.verb = stem(norm.quad.verb);
        out.push_back(std::move(norm));
    }
    return out;
}

}  // namespace ppattach
