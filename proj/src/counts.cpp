#include "ppattach/counts.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace ppattach {

namespace {

constexpr char kSlotLetters[4] = {'V', 'N', 'P', 'D'};

constexpr Slot kSlotOrder[4] = {Slot::V, Slot::N1, Slot::P, Slot::N2};

const char* kHeaderTag = "ppattach-counts";
const char* kHeaderVersion = "v1";

}  // namespace

std::string TupleKind::code() const {
    std::string c(4, '.');
    for (int i = 0; i < 4; ++i)
        if (contains(kSlotOrder[i])) c[i] = kSlotLetters[i];
    return c;
}

std::optional<TupleKind> TupleKind::from_code(std::string_view code) {
    if (code.size() != 4) return std::nullopt;
    unsigned mask = 0;
    for (int i = 0; i < 4; ++i) {
        if (code[i] == kSlotLetters[i])
            mask |= 1u << static_cast<unsigned>(kSlotOrder[i]);
        else if (code[i] != '.')
            return std::nullopt;
    }
    if (mask == 0) return std::nullopt;
    TupleKind k;
    k.mask_ = mask;
    return k;
}

std::span<const TupleKind> TupleKind::all() {
    static const std::vector<TupleKind> kinds = [] {
        std::vector<TupleKind> v;
        for (unsigned m = 1; m < 16; ++m) {
            TupleKind k;
            k.mask_ = m;
            v.push_back(k);
        }
        std::sort(v.begin(), v.end(), canonical_kind_less);
        return v;
    }();
    return kinds;
}

bool canonical_kind_less(TupleKind a, TupleKind b) {
    return a.code() < b.code();
}

SubTuple subtuple(const Quadruple& q, TupleKind k) {
    SubTuple t;
    t.kind = k;
    t.words.reserve(static_cast<std::size_t>(k.arity()));
    for (Slot s : kSlotOrder)
        if (k.contains(s)) t.words.push_back(slot_word(q, s));
    return t;
}

std::size_t SubTupleHash::operator()(const SubTuple& t) const {
    std::size_t h = t.kind.mask();
    for (const std::string& w : t.words) {
        // boost-style combine
        h ^= std::hash<std::string>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

CountModel CountModel::train(const Corpus& corpus) {
    CountModel m;
    for (const LabeledQuintuple& item : corpus) {
        ++m.label_totals_[to_int(item.label)];
        for (TupleKind k : TupleKind::all()) {
            LabelCounts& c = m.table_[subtuple(item.quad, k)];
            if (item.label == Attachment::Noun)
                ++c.noun;
            else
                ++c.verb;
        }
    }
    m.n_items_ = static_cast<Count>(corpus.size());
    return m;
}

Count CountModel::total(const SubTuple& x) const {
    auto it = table_.find(x);
    return it == table_.end() ? 0 : it->second.total();
}

Count CountModel::total(const Quadruple& q, TupleKind k) const {
    return total(subtuple(q, k));
}

Count CountModel::joint(Attachment a, const SubTuple& x) const {
    auto it = table_.find(x);
    return it == table_.end() ? 0 : it->second.of(a);
}

Count CountModel::joint(Attachment a, const Quadruple& q, TupleKind k) const {
    return joint(a, subtuple(q, k));
}

CountModel CountModel::with_cutoff(Count threshold) const {
    CountModel m;
    m.label_totals_ = label_totals_;
    m.n_items_ = n_items_;
    for (const auto& [key, counts] : table_)
        if (counts.total() >= threshold) m.table_.emplace(key, counts);
    return m;
}

void CountModel::save(std::ostream& out) const {
    out << kHeaderTag << ' ' << kHeaderVersion << ' ' << n_items_ << ' '
        << label_totals_[0] << ' ' << label_totals_[1] << '\n';

    std::vector<const Table::value_type*> entries;
    entries.reserve(table_.size());
    for (const auto& entry : table_) entries.push_back(&entry);
    std::sort(entries.begin(), entries.end(), [](const auto* a, const auto* b) {
        unsigned ca = a->first.kind.mask();
        unsigned cb = b->first.kind.mask();
        if (ca != cb) return canonical_kind_less(a->first.kind, b->first.kind);
        return a->first.words < b->first.words;
    });

    for (const auto* entry : entries) {
        const std::string code = entry->first.kind.code();
        auto write_line = [&](char tag, Count count) {
            out << code << ' ' << tag;
            for (const std::string& w : entry->first.words) out << ' ' << w;
            out << ' ' << count << '\n';
        };
        write_line('*', entry->second.total());
        if (entry->second.verb > 0) write_line('0', entry->second.verb);
        if (entry->second.noun > 0) write_line('1', entry->second.noun);
    }
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string f;
    while (in >> f) fields.push_back(f);
    return fields;
}

Count parse_count(const std::string& field, std::size_t line_no) {
    if (field.empty()) throw FormatError(line_no, "empty count");
    for (char c : field)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw FormatError(line_no, "count must be a non-negative integer, got \"" +
                                           field + "\"");
    try {
        return std::stoull(field);
    } catch (const std::exception&) {
        throw FormatError(line_no, "count out of range: \"" + field + "\"");
    }
}

}  // namespace

CountModel CountModel::load(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;

    if (!std::getline(in, line)) throw FormatError(1, "missing header line");
    std::vector<std::string> h = split_ws(line);
    if (h.size() != 5 || h[0] != kHeaderTag || h[1] != kHeaderVersion)
        throw FormatError(line_no, "bad header, expected \"" + std::string(kHeaderTag) +
                                       " " + kHeaderVersion + " <items> <f0> <f1>\"");
    CountModel m;
    m.n_items_ = parse_count(h[2], line_no);
    m.label_totals_[0] = parse_count(h[3], line_no);
    m.label_totals_[1] = parse_count(h[4], line_no);
    if (m.label_totals_[0] + m.label_totals_[1] != m.n_items_)
        throw FormatError(line_no, "label totals do not sum to the item count");

    // total lines, kept aside to validate against the joint counts
    std::unordered_map<SubTuple, Count, SubTupleHash> declared_totals;
    std::unordered_map<SubTuple, std::array<bool, 2>, SubTupleHash> seen_joint;

    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> f = split_ws(line);
        if (f.empty()) continue;
        auto kind = TupleKind::from_code(f[0]);
        if (!kind) throw FormatError(line_no, "unknown kind code \"" + f[0] + "\"");
        const std::size_t arity = static_cast<std::size_t>(kind->arity());
        if (f.size() != 3 + arity)
            throw FormatError(line_no, "expected " + std::to_string(3 + arity) +
                                           " fields for kind " + f[0] + ", got " +
                                           std::to_string(f.size()));
        if (f[1].size() != 1 || (f[1][0] != '*' && f[1][0] != '0' && f[1][0] != '1'))
            throw FormatError(line_no, "entry tag must be 0, 1, or *, got \"" + f[1] + "\"");

        SubTuple key;
        key.kind = *kind;
        key.words.assign(f.begin() + 2, f.begin() + 2 + arity);
        Count count = parse_count(f.back(), line_no);

        if (f[1][0] == '*') {
            if (!declared_totals.emplace(std::move(key), count).second)
                throw FormatError(line_no, "duplicate total entry");
        } else {
            Attachment a = attachment_from_int(f[1][0] - '0');
            auto it = seen_joint.try_emplace(key).first;
            if (it->second[to_int(a)])
                throw FormatError(line_no, "duplicate joint entry");
            it->second[to_int(a)] = true;
            if (count > 0) {
                LabelCounts& c = m.table_[std::move(key)];
                if (a == Attachment::Noun)
                    c.noun = count;
                else
                    c.verb = count;
            }
        }
    }

    for (const auto& [key, total] : declared_totals) {
        auto it = m.table_.find(key);
        Count actual = it == m.table_.end() ? 0 : it->second.total();
        if (actual != total)
            throw FormatError(0, "total for " + key.kind.code() +
                                     " entry does not match its joint counts");
    }
    return m;
}

}  // namespace ppattach
