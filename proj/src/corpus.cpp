#include "ppattach/corpus.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ppattach {

namespace {

// Splits on runs of ASCII whitespace.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

Attachment parse_label(const std::string& field, std::size_t line_no) {
    if (field == "0") return Attachment::Verb;
    if (field == "1") return Attachment::Noun;
    throw FormatError(line_no, "attachment label must be 0 or 1, got \"" + field + "\"");
}

}  // namespace

Corpus parse_corpus(std::istream& in) {
    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> fields = split_fields(line);
        if (fields.empty()) continue;  // blank line
        if (fields.size() != 5) {
            throw FormatError(line_no, "expected 5 fields, got " +
                                           std::to_string(fields.size()));
        }
        LabeledQuintuple item;
        item.label = parse_label(fields[0], line_no);
        item.quad.verb = std::move(fields[1]);
        item.quad.noun1 = std::move(fields[2]);
        item.quad.prep = std::move(fields[3]);
        item.quad.noun2 = std::move(fields[4]);
        corpus.push_back(std::move(item));
    }
    return corpus;
}

Corpus parse_corpus(const std::string& text) {
    std::istringstream in(text);
    return parse_corpus(in);
}

void write_corpus(const Corpus& c, std::ostream& out) {
    for (const LabeledQuintuple& item : c) {
        out << to_int(item.label) << ' ' << item.quad.verb << ' '
            << item.quad.noun1 << ' ' << item.quad.prep << ' '
            << item.quad.noun2 << '\n';
    }
}

std::string write_corpus(const Corpus& c) {
    std::ostringstream out;
    write_corpus(c, out);
    return out.str();
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(0, "cannot open corpus file: " + path);
    return parse_corpus(in);
}

std::vector<Quadruple> parse_quadruples(std::istream& in) {
    std::vector<Quadruple> queries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != 4) {
            throw FormatError(line_no, "expected 4 fields, got " +
                                           std::to_string(fields.size()));
        }
        queries.push_back(Quadruple{std::move(fields[0]), std::move(fields[1]),
                                    std::move(fields[2]), std::move(fields[3])});
    }
    return queries;
}

}  // namespace ppattach
