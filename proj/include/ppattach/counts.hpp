// Frequency tables over the sub-tuples of (V, N1, P, N2): the sufficient
// statistic every estimator in this project reads from.

#ifndef PPATTACH_COUNTS_HPP
#define PPATTACH_COUNTS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ppattach/corpus.hpp"

namespace ppattach {

using Count = std::uint64_t;

// Slot identity within the quadruple, in canonical order.
enum class Slot : unsigned { V = 0, N1 = 1, P = 2, N2 = 3 };

inline const std::string& slot_word(const Quadruple& q, Slot s) {
    switch (s) {
        case Slot::V:  return q.verb;
        case Slot::N1: return q.noun1;
        case Slot::P:  return q.prep;
        default:       return q.noun2;
    }
}

// A non-empty subset of {V, N1, P, N2}. Fifteen kinds exist: the
// quadruple, 4 triples, 6 pairs, and 4 singles.
class TupleKind {
public:
    constexpr TupleKind() = default;

    static constexpr TupleKind of(std::initializer_list<Slot> slots) {
        unsigned m = 0;
        for (Slot s : slots) m |= 1u << static_cast<unsigned>(s);
        return TupleKind(m);
    }

    constexpr bool contains(Slot s) const {
        return (mask_ >> static_cast<unsigned>(s)) & 1u;
    }

    constexpr int arity() const {
        int n = 0;
        for (unsigned m = mask_; m != 0; m >>= 1) n += static_cast<int>(m & 1u);
        return n;
    }

    constexpr bool has_preposition() const { return contains(Slot::P); }
    constexpr unsigned mask() const { return mask_; }
    constexpr bool valid() const { return mask_ != 0 && mask_ < 16; }

    // 4-character mask over the VNPD slots: "VNPD" is the quadruple,
    // "V.P." is (V,P), "..P." is (P).
    std::string code() const;
    static std::optional<TupleKind> from_code(std::string_view code);

    // All 15 kinds, sorted by code (the canonical kind order).
    static std::span<const TupleKind> all();

    friend constexpr bool operator==(TupleKind a, TupleKind b) = default;

private:
    constexpr explicit TupleKind(unsigned mask) : mask_(mask) {}
    unsigned mask_ = 0;
};

// Canonical kind order: lexicographic on the 4-character code.
bool canonical_kind_less(TupleKind a, TupleKind b);

namespace kinds {
inline constexpr TupleKind quadruple = TupleKind::of({Slot::V, Slot::N1, Slot::P, Slot::N2});
inline constexpr TupleKind v_n1_p  = TupleKind::of({Slot::V, Slot::N1, Slot::P});
inline constexpr TupleKind v_p_n2  = TupleKind::of({Slot::V, Slot::P, Slot::N2});
inline constexpr TupleKind n1_p_n2 = TupleKind::of({Slot::N1, Slot::P, Slot::N2});
inline constexpr TupleKind v_n1_n2 = TupleKind::of({Slot::V, Slot::N1, Slot::N2});
inline constexpr TupleKind v_p   = TupleKind::of({Slot::V, Slot::P});
inline constexpr TupleKind n1_p  = TupleKind::of({Slot::N1, Slot::P});
inline constexpr TupleKind p_n2  = TupleKind::of({Slot::P, Slot::N2});
inline constexpr TupleKind v_n1  = TupleKind::of({Slot::V, Slot::N1});
inline constexpr TupleKind v_n2  = TupleKind::of({Slot::V, Slot::N2});
inline constexpr TupleKind n1_n2 = TupleKind::of({Slot::N1, Slot::N2});
inline constexpr TupleKind v  = TupleKind::of({Slot::V});
inline constexpr TupleKind n1 = TupleKind::of({Slot::N1});
inline constexpr TupleKind p  = TupleKind::of({Slot::P});
inline constexpr TupleKind n2 = TupleKind::of({Slot::N2});
}  // namespace kinds

// A kind plus its word values in slot order. Slot identity is part of
// the key: (V=board) and (N1=board) never collide.
struct SubTuple {
    TupleKind kind;
    std::vector<std::string> words;  // arity() entries, slot order

    bool operator==(const SubTuple&) const = default;
};

// Extracts the words of `k` from `q`.
SubTuple subtuple(const Quadruple& q, TupleKind k);

struct SubTupleHash {
    std::size_t operator()(const SubTuple& t) const;
};

// Joint and total frequencies for every sub-tuple seen in training,
// plus the global label counts. Immutable once built; totals are
// maintained as noun+verb so the decomposition f(x)=f(0,x)+f(1,x)
// holds by construction.
class CountModel {
public:
    struct LabelCounts {
        Count verb = 0;
        Count noun = 0;

        Count total() const { return verb + noun; }
        Count of(Attachment a) const { return a == Attachment::Noun ? noun : verb; }
        bool operator==(const LabelCounts&) const = default;
    };

    using Table = std::unordered_map<SubTuple, LabelCounts, SubTupleHash>;

    CountModel() = default;

    // Tabulates all 15 sub-tuples of every training item.
    static CountModel train(const Corpus& corpus);

    // f(x): times x was seen with either attachment. 0 if unseen.
    Count total(const SubTuple& x) const;
    Count total(const Quadruple& q, TupleKind k) const;

    // f(a,x): times x was seen with attachment a. 0 if unseen.
    Count joint(Attachment a, const SubTuple& x) const;
    Count joint(Attachment a, const Quadruple& q, TupleKind k) const;

    // f(0) and f(1) over the whole training set.
    Count label_total(Attachment a) const { return label_totals_[to_int(a)]; }
    Count items() const { return n_items_; }

    // Copy with every sub-tuple x where f(x) < threshold zeroed
    // (joint counts included). Label totals and the item count keep
    // their trained values.
    CountModel with_cutoff(Count threshold) const;

    const Table& entries() const { return table_; }

    // Line-oriented text serialization; deterministic entry order.
    // load() throws FormatError on malformed lines, unknown kind codes,
    // bad counts, duplicate entries, or an inconsistent total line.
    void save(std::ostream& out) const;
    static CountModel load(std::istream& in);

    bool operator==(const CountModel&) const = default;

private:
    Table table_;
    std::array<Count, 2> label_totals_{0, 0};
    Count n_items_ = 0;
};

}  // namespace ppattach

#endif  // PPATTACH_COUNTS_HPP
