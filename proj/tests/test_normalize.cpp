#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "ppattach/normalize.hpp"
#include "generators.hpp"

using namespace ppattach;

TEST_CASE("YEAR rule: exactly four ASCII digits") {
    CHECK(normalize_year("1988") == "YEAR");
    CHECK(normalize_year("0000") == "YEAR");
    CHECK(normalize_year("198") == "198");
    CHECK(normalize_year("19888") == "19888");
    CHECK(normalize_year("19a8") == "19a8");
    CHECK(normalize_year("board") == "board");
}

TEST_CASE("NUM rule: digits, commas, and periods with at least one digit") {
    CHECK(normalize_num("1,020.5") == "NUM");
    CHECK(normalize_num("12") == "NUM");
    CHECK(normalize_num(".5") == "NUM");
    CHECK(normalize_num("1.2.3") == "NUM");
    CHECK(normalize_num(",") == ",");
    CHECK(normalize_num("...") == "...");
    CHECK(normalize_num("1a") == "1a");
    CHECK(normalize_num("") == "");
    CHECK(normalize_num("board") == "board");
}

TEST_CASE("YEAR is tested before NUM") {
    CHECK(normalize_token_year_num("1988") == "YEAR");
    CHECK(normalize_token_year_num("123") == "NUM");
    CHECK(normalize_token_year_num("12345") == "NUM");
    CHECK(normalize_token_year_num("1,988") == "NUM");
}

TEST_CASE("NAME rule: capitalized hyphen segments, then run collapse") {
    CHECK(normalize_name("Pierre") == "NAME");
    CHECK(normalize_name("Smith-Jones") == "NAME");
    CHECK(normalize_name("New-York-Stock-Exchange") == "NAME");
    CHECK(normalize_name("Pierre-based") == "NAME-based");
    CHECK(normalize_name("Smith-Jones-based") == "NAME-based");
    CHECK(normalize_name("vinken") == "vinken");
    CHECK(normalize_name("McDonald") == "McDonald");  // second capital blocks the match
    CHECK(normalize_name("U.S.") == "U.S.");
    CHECK(normalize_name("A") == "A");  // needs at least one lowercase letter
    CHECK(normalize_name("YEAR") == "YEAR");
    CHECK(normalize_name("NAME") == "NAME");
    CHECK(normalize_name("") == "");
    CHECK(normalize_name("-") == "-");
}

TEST_CASE("ascii_lower folds only A-Z") {
    CHECK(ascii_lower("AS") == "as");
    CHECK(ascii_lower("Joined") == "joined");
    CHECK(ascii_lower("ABC-Def") == "abc-def");
    CHECK(ascii_lower("1988") == "1988");
    CHECK(ascii_lower("\xC3\x89") == "\xC3\x89");  // non-ASCII bytes untouched
}

TEST_CASE("stemmer: regular -ed forms") {
    CHECK(english_verb_stem("joined") == "join");
    CHECK(english_verb_stem("opened") == "open");
    CHECK(english_verb_stem("offered") == "offer");
    CHECK(english_verb_stem("planned") == "plan");
    CHECK(english_verb_stem("stopped") == "stop");
    CHECK(english_verb_stem("typed") == "type");
    CHECK(english_verb_stem("analyzed") == "analyze");
    CHECK(english_verb_stem("used") == "use");
    CHECK(english_verb_stem("based") == "base");
    CHECK(english_verb_stem("announced") == "announce");
    CHECK(english_verb_stem("continued") == "continue");
    CHECK(english_verb_stem("received") == "receive");
    CHECK(english_verb_stem("judged") == "judge");
    CHECK(english_verb_stem("charged") == "charge");
    CHECK(english_verb_stem("carried") == "carry");
    CHECK(english_verb_stem("died") == "die");
}

TEST_CASE("stemmer: -eed words are base forms, ee-verb pasts are tabled") {
    CHECK(english_verb_stem("need") == "need");
    CHECK(english_verb_stem("exceed") == "exceed");
    CHECK(english_verb_stem("proceed") == "proceed");
    CHECK(english_verb_stem("feed") == "feed");
    CHECK(english_verb_stem("agreed") == "agree");
    CHECK(english_verb_stem("freed") == "free");
    CHECK(english_verb_stem("guaranteed") == "guarantee");
}

TEST_CASE("stemmer: -s forms") {
    CHECK(english_verb_stem("applies") == "apply");
    CHECK(english_verb_stem("dies") == "die");
    CHECK(english_verb_stem("passes") == "pass");
    CHECK(english_verb_stem("discusses") == "discuss");
    CHECK(english_verb_stem("reaches") == "reach");
    CHECK(english_verb_stem("fixes") == "fix");
    CHECK(english_verb_stem("buzzes") == "buzz");
    CHECK(english_verb_stem("goes") == "go");
    CHECK(english_verb_stem("buys") == "buy");
    CHECK(english_verb_stem("sells") == "sell");
    CHECK(english_verb_stem("focus") == "focus");  // -us guard
    CHECK(english_verb_stem("is") == "is");        // -is guard: the copula passes through
}

TEST_CASE("stemmer: -ing forms") {
    CHECK(english_verb_stem("running") == "run");
    CHECK(english_verb_stem("getting") == "get");
    CHECK(english_verb_stem("selling") == "sell");
    CHECK(english_verb_stem("falling") == "fall");
    CHECK(english_verb_stem("seeing") == "see");
    CHECK(english_verb_stem("making") == "make");
    CHECK(english_verb_stem("taking") == "take");
    CHECK(english_verb_stem("hoping") == "hope");
    CHECK(english_verb_stem("hopping") == "hop");
    CHECK(english_verb_stem("standing") == "stand");
    CHECK(english_verb_stem("feeding") == "feed");
    CHECK(english_verb_stem("dying") == "die");
    // words that merely end in "ing" survive the vowel guard
    CHECK(english_verb_stem("bring") == "bring");
    CHECK(english_verb_stem("sing") == "sing");
    CHECK(english_verb_stem("swing") == "swing");
    CHECK(english_verb_stem("spring") == "spring");
}

TEST_CASE("stemmer: irregular table") {
    CHECK(english_verb_stem("said") == "say");
    CHECK(english_verb_stem("made") == "make");
    CHECK(english_verb_stem("took") == "take");
    CHECK(english_verb_stem("went") == "go");
    CHECK(english_verb_stem("bought") == "buy");
    CHECK(english_verb_stem("sold") == "sell");
    CHECK(english_verb_stem("fell") == "fall");
    CHECK(english_verb_stem("rose") == "rise");
    CHECK(english_verb_stem("paid") == "pay");
    CHECK(english_verb_stem("held") == "hold");
    CHECK(english_verb_stem("left") == "leave");
    CHECK(english_verb_stem("met") == "meet");
    CHECK(english_verb_stem("won") == "win");
    CHECK(english_verb_stem("led") == "lead");
    CHECK(english_verb_stem("has") == "have");
    CHECK(english_verb_stem("did") == "do");
    // protected forms that the generic rules would corrupt
    CHECK(english_verb_stem("was") == "was");
    CHECK(english_verb_stem("being") == "being");
}

TEST_CASE("stemmer is a fixed point on its own outputs") {
    const std::vector<std::string> words = {
        "joined",  "planned", "typed",   "analyzed", "used",    "announced",
        "carried", "applies", "passes",  "goes",     "running", "selling",
        "seeing",  "making",  "agreed",  "said",     "bought",  "took",
        "was",     "being",   "is",      "feeding",  "bring",   "exceed",
        "hopping", "dies",    "studied", "says",     "stopped", "held",
    };
    for (const std::string& w : words) {
        std::string s = english_verb_stem(w);
        CHECK(english_verb_stem(s) == s);
    }
}

TEST_CASE("make_stemmer resolves names") {
    Stemmer none = make_stemmer("none");
    CHECK(none("joined") == "joined");
    Stemmer english = make_stemmer("english");
    CHECK(english("joined") == "join");
    CHECK_THROWS_AS(make_stemmer("porter2"), std::invalid_argument);
}

TEST_CASE("normalize_quintuple applies the full default pipeline") {
    LabeledQuintuple in{Attachment::Verb, {"Joined", "board", "As", "director"}};
    LabeledQuintuple out = normalize_quintuple(in);
    CHECK(out.label == Attachment::Verb);
    CHECK(out.quad == Quadruple{"join", "board", "as", "director"});

    LabeledQuintuple year_in{Attachment::Noun, {"is", "revenue", "from", "1988"}};
    CHECK(normalize_quintuple(year_in).quad == Quadruple{"is", "revenue", "from", "YEAR"});

    LabeledQuintuple name_in{Attachment::Noun, {"bought", "Pierre", "for", "1,020.5"}};
    CHECK(normalize_quintuple(name_in).quad == Quadruple{"buy", "NAME", "for", "NUM"});
}

TEST_CASE("normalization is idempotent") {
    const std::vector<LabeledQuintuple> items = {
        {Attachment::Verb, {"Joined", "board", "As", "director"}},
        {Attachment::Noun, {"is", "revenue", "from", "1988"}},
        {Attachment::Noun, {"bought", "Smith-Jones", "for", "1,020.5"}},
        {Attachment::Verb, {"1988", "Pierre-based", "IN", "McDonald"}},
        {Attachment::Noun, {"running", "NAME", "of", "YEAR"}},
        {Attachment::Verb, {"was", "New-York-Stock-Exchange", "at", "NUM"}},
    };
    for (const LabeledQuintuple& item : items) {
        LabeledQuintuple once = normalize_quintuple(item);
        CHECK(normalize_quintuple(once) == once);
    }
}

TEST_CASE("labels are never changed") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Corpus c = gen::corpus(rng);
        Corpus n = normalize_corpus(c);
        REQUIRE(n.size() == c.size());
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(n[i].label == c[i].label);
    }
}

TEST_CASE("rule locality: disabling a rule leaves its tokens alone") {
    NormalizeConfig cfg;

    SUBCASE("num disabled") {
        cfg.replace_num = false;
        LabeledQuintuple in{Attachment::Noun, {"is", "revenue", "from", "1,020.5"}};
        CHECK(normalize_quintuple(in, cfg).quad.noun2 == "1,020.5");
    }
    SUBCASE("year disabled leaves 4-digit tokens to the NUM rule") {
        cfg.replace_year = false;
        LabeledQuintuple in{Attachment::Noun, {"is", "revenue", "from", "1988"}};
        CHECK(normalize_quintuple(in, cfg).quad.noun2 == "NUM");
    }
    SUBCASE("year and num disabled") {
        cfg.replace_year = false;
        cfg.replace_num = false;
        LabeledQuintuple in{Attachment::Noun, {"is", "revenue", "from", "1988"}};
        CHECK(normalize_quintuple(in, cfg).quad.noun2 == "1988");
    }
    SUBCASE("name disabled") {
        cfg.replace_name = false;
        LabeledQuintuple in{Attachment::Noun, {"is", "Pierre", "from", "Lyon"}};
        LabeledQuintuple out = normalize_quintuple(in, cfg);
        CHECK(out.quad.noun1 == "Pierre");
        CHECK(out.quad.noun2 == "Lyon");
    }
    SUBCASE("collapse disabled keeps NAME-NAME") {
        cfg.collapse_name = false;
        LabeledQuintuple in{Attachment::Noun, {"is", "Smith-Jones", "from", "x"}};
        CHECK(normalize_quintuple(in, cfg).quad.noun1 == "NAME-NAME");
    }
    SUBCASE("lowercase disabled") {
        cfg.lowercase_verb_prep = false;
        cfg.stem_verb = false;
        LabeledQuintuple in{Attachment::Verb, {"Joined", "board", "As", "director"}};
        LabeledQuintuple out = normalize_quintuple(in, cfg);
        CHECK(out.quad.verb == "Joined");
        CHECK(out.quad.prep == "As");
    }
    SUBCASE("stem disabled") {
        cfg.stem_verb = false;
        LabeledQuintuple in{Attachment::Verb, {"joined", "board", "as", "director"}};
        CHECK(normalize_quintuple(in, cfg).quad.verb == "joined");
    }
}

TEST_CASE("normalize_corpus equals per-item normalization") {
    std::mt19937 rng(13);
    Corpus c = gen::corpus(rng, 30);
    c.push_back({Attachment::Verb, {"Joined", "Pierre-based", "As", "1988"}});
    Corpus n = normalize_corpus(c);
    REQUIRE(n.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(n[i] == normalize_quintuple(c[i]));
}

TEST_CASE("normalize_corpus rejects unknown stemmers") {
    NormalizeConfig cfg;
    cfg.stemmer = "unknown";
    Corpus c{{Attachment::Verb, {"a", "b", "c", "d"}}};
    CHECK_THROWS_AS(normalize_corpus(c, cfg), std::invalid_argument);
}
