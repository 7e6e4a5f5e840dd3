// Labeled quintuple corpora: the `A V N1 P N2` one-record-per-line format.

#ifndef PPATTACH_CORPUS_HPP
#define PPATTACH_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ppattach/errors.hpp"

namespace ppattach {

// Attachment decision: 1 = noun attachment, 0 = verb attachment.
enum class Attachment : std::uint8_t { Verb = 0, Noun = 1 };

constexpr int to_int(Attachment a) { return static_cast<int>(a); }

constexpr Attachment attachment_from_int(int v) {
    return v == 0 ? Attachment::Verb : Attachment::Noun;
}

// The four head words conditioning an attachment decision.
struct Quadruple {
    std::string verb;
    std::string noun1;
    std::string prep;
    std::string noun2;

    bool operator==(const Quadruple&) const = default;
};

struct LabeledQuintuple {
    Attachment label = Attachment::Verb;
    Quadruple quad;

    bool operator==(const LabeledQuintuple&) const = default;
};

// File order preserved, duplicates retained: counts are multiset counts.
using Corpus = std::vector<LabeledQuintuple>;

// Reads a quintuple file. One record per line, five whitespace-separated
// fields; blank lines are skipped. Throws FormatError (with the 1-based
// line number) on a line with the wrong field count or a label other
// than "0"/"1".
Corpus parse_corpus(std::istream& in);
Corpus parse_corpus(const std::string& text);

// Canonical writer: single-space separated, one trailing newline per
// record. parse_corpus(write_corpus(c)) == c.
void write_corpus(const Corpus& c, std::ostream& out);
std::string write_corpus(const Corpus& c);

// Reads unlabeled queries: four whitespace-separated fields per line.
Corpus load_corpus_file(const std::string& path);
std::vector<Quadruple> parse_quadruples(std::istream& in);

}  // namespace ppattach

#endif  // PPATTACH_CORPUS_HPP
