#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "invseq_lab/bigint.hpp"

namespace invseq_lab {

namespace detail {

inline int sign3(int a, int b) { return a < b ? -1 : a > b ? 1 : 0; }

inline std::vector<int> reduce_word(const std::vector<int>& word) {
    std::vector<int> sorted(word);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out;
    out.reserve(word.size());
    for (int v : word) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()));
    }
    return out;
}

}  // namespace detail

// A reduced word over {0,...,d-1} used as an avoidance pattern.
class PatternWord {
public:
    explicit PatternWord(std::vector<int> letters) : letters_(std::move(letters)) {
        if (letters_.empty()) throw std::invalid_argument("pattern word: empty word");
        if (detail::reduce_word(letters_) != letters_)
            throw std::invalid_argument("pattern word: not reduced");
    }

    // "102" -> (1,0,2). Single decimal digits only, which covers every pattern
    // the CLI accepts.
    static PatternWord from_digits(const std::string& digits) {
        std::vector<int> letters;
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("pattern word: expected digits, got '" + digits + "'");
            letters.push_back(c - '0');
        }
        return PatternWord(std::move(letters));
    }

    const std::vector<int>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    int operator[](int i) const { return letters_[static_cast<size_t>(i)]; }

    friend bool operator==(const PatternWord& a, const PatternWord& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator<(const PatternWord& a, const PatternWord& b) {
        return a.letters_ < b.letters_;
    }

private:
    std::vector<int> letters_;
};

// Replace every occurrence of the i-th smallest distinct value by i-1.
inline PatternWord reduction(const std::vector<int>& word) {
    if (word.empty()) throw std::invalid_argument("reduction: empty word");
    return PatternWord(detail::reduce_word(word));
}

// A sequence e_1..e_n with 0 <= e_j <= j-1; the empty sequence is valid.
class InversionSequence {
public:
    InversionSequence() = default;

    explicit InversionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
        for (size_t j = 0; j < entries_.size(); ++j)
            if (entries_[j] < 0 || entries_[j] > static_cast<int>(j))
                throw std::invalid_argument("inversion sequence: entry out of range at position " +
                                            std::to_string(j + 1));
    }

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const InversionSequence& a, const InversionSequence& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator<(const InversionSequence& a, const InversionSequence& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<int> entries_;
};

struct StatRecord {
    int dist;    // number of distinct entries
    int maxval;  // maximum entry, -1 for the empty sequence
    int prmx;    // position of the first descent under the sentinel e_{n+1} = -1; 0 for empty
    int rank;    // prmx - maxval - 1; defined on 102-avoiders only
};

namespace detail {

// Does any strictly increasing index tuple ending at position `last` select a
// subsequence order-isomorphic to w?  Order isomorphism is checked pairwise,
// which is equivalent to equality of reductions and prunes partial tuples.
inline bool occurrence_ending_at(const std::vector<int>& e, const PatternWord& w, int last) {
    const int k = w.size();
    if (k > last + 1) return false;
    std::vector<int> picked(static_cast<size_t>(k));
    picked[static_cast<size_t>(k) - 1] = last;
    std::function<bool(int, int)> rec = [&](int slot, int hi) {
        if (slot < 0) return true;
        for (int i = slot; i < hi; ++i) {
            bool ok = true;
            for (int a = slot + 1; a < k; ++a)
                if (sign3(e[static_cast<size_t>(i)], e[static_cast<size_t>(picked[static_cast<size_t>(a)])]) !=
                    sign3(w[slot], w[a])) {
                    ok = false;
                    break;
                }
            if (ok) {
                picked[static_cast<size_t>(slot)] = i;
                if (rec(slot - 1, i)) return true;
            }
        }
        return false;
    };
    return rec(k - 2, last);
}

}  // namespace detail

// True iff some strictly increasing index tuple selects a subsequence whose
// reduction equals w; false whenever |e| < |w|.
inline bool contains(const InversionSequence& e, const PatternWord& w) {
    for (int last = w.size() - 1; last < e.size(); ++last)
        if (detail::occurrence_ending_at(e.entries(), w, last)) return true;
    return false;
}

inline int dist(const InversionSequence& e) {
    std::set<int> values(e.entries().begin(), e.entries().end());
    return static_cast<int>(values.size());
}

inline int max_value(const InversionSequence& e) {
    if (e.empty()) return -1;
    return *std::max_element(e.entries().begin(), e.entries().end());
}

inline int prmx(const InversionSequence& e) {
    const int n = e.size();
    if (n == 0) return 0;
    for (int i = 0; i + 1 < n; ++i)
        if (e[i] > e[i + 1]) return i + 1;
    return n;  // e_n > e_{n+1} = -1 always descends
}

// rank = prmx - max - 1; only 102-avoiders carry it.
inline std::optional<int> try_rank(const InversionSequence& e) {
    static const PatternWord w102(std::vector<int>{1, 0, 2});
    if (contains(e, w102)) return std::nullopt;
    if (e.empty()) return 0;
    return prmx(e) - max_value(e) - 1;
}

inline int rank(const InversionSequence& e) {
    auto r = try_rank(e);
    if (!r) throw std::domain_error("rank undefined");
    return *r;
}

inline StatRecord stats(const InversionSequence& e) {
    return StatRecord{dist(e), max_value(e), prmx(e), rank(e)};
}

// Exact counts indexed by (length n, dist m, rank t); -1 marks a dimension the
// producer did not track (an undefined rank, or a table keyed by (m,t) alone).
class CountTable {
public:
    using Key = std::tuple<int, int, int>;

    void add(int n, int m, int t, const Int& c = 1) { cells_[Key{n, m, t}] += c; }

    const Int& at(int n, int m, int t) const {
        static const Int kZero = 0;
        auto it = cells_.find(Key{n, m, t});
        return it == cells_.end() ? kZero : it->second;
    }

    // Sum of all cells matching the key components that are not -1.
    Int marginal(int n, int m, int t) const {
        Int total = 0;
        for (const auto& [key, c] : cells_) {
            auto [kn, km, kt] = key;
            if ((n == -1 || kn == n) && (m == -1 || km == m) && (t == -1 || kt == t)) total += c;
        }
        return total;
    }

    Int total() const { return marginal(-1, -1, -1); }

    const std::map<Key, Int>& cells() const { return cells_; }

private:
    std::map<Key, Int> cells_;
};

struct EnumFilter {
    std::optional<int> dist;
    std::optional<int> rank;
};

// Yields the inversion sequences of length n avoiding every pattern and
// matching the filter, in lexicographic order.  Backtracking places one entry
// at a time and tests only occurrences whose last index is the new position,
// which is enough because containment is monotone under prefix extension.
inline void enumerate_avoiding(int n, const std::vector<PatternWord>& patterns,
                               const EnumFilter& filter,
                               const std::function<void(const InversionSequence&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_avoiding: need n >= 0");
    std::vector<int> e;
    e.reserve(static_cast<size_t>(n));
    std::vector<int> value_count(static_cast<size_t>(n) + 1, 0);
    int distinct = 0;

    std::function<void()> rec = [&]() {
        const int pos = static_cast<int>(e.size());
        if (pos == n) {
            InversionSequence seq(e);
            if (filter.rank && rank(seq) != *filter.rank) return;
            visit(seq);
            return;
        }
        for (int v = 0; v <= pos; ++v) {
            const bool fresh = value_count[static_cast<size_t>(v)] == 0;
            if (filter.dist) {
                if (distinct + (fresh ? 1 : 0) > *filter.dist) continue;
                if (distinct + (fresh ? 1 : 0) + (n - pos - 1) < *filter.dist) continue;
            }
            e.push_back(v);
            bool hit = false;
            for (const auto& w : patterns)
                if (detail::occurrence_ending_at(e, w, pos)) {
                    hit = true;
                    break;
                }
            if (!hit) {
                value_count[static_cast<size_t>(v)] += 1;
                distinct += fresh ? 1 : 0;
                rec();
                distinct -= fresh ? 1 : 0;
                value_count[static_cast<size_t>(v)] -= 1;
            }
            e.pop_back();
        }
    };
    rec();
}

inline std::vector<InversionSequence> enumerate_avoiding(int n,
                                                         const std::vector<PatternWord>& patterns,
                                                         const EnumFilter& filter = {}) {
    std::vector<InversionSequence> out;
    enumerate_avoiding(n, patterns, filter, [&](const InversionSequence& e) { out.push_back(e); });
    return out;
}

// Counts for every (n, m, t) with n <= n_max.  Sequences whose rank is
// undefined (the pattern set does not force 102-avoidance) land in t = -1.
inline CountTable count_table(int n_max, const std::vector<PatternWord>& patterns) {
    if (n_max < 0) throw std::invalid_argument("count_table: need n_max >= 0");
    CountTable table;
    for (int n = 0; n <= n_max; ++n)
        enumerate_avoiding(n, patterns, {}, [&](const InversionSequence& e) {
            auto t = try_rank(e);
            table.add(n, dist(e), t ? *t : -1);
        });
    return table;
}

// On rank-0 avoiders of 102 and 000: identity when the maximum occurs once;
// when it occurs twice, deletes the entry at position prmx.  The image has the
// same dist and a unique maximum.  The empty sequence counts as unique-max so
// the m = 0 case of the bijection holds.
inline InversionSequence remark_dedup(const InversionSequence& e) {
    if (rank(e) != 0) throw std::domain_error("remark map requires rank 0");
    if (e.empty()) return e;
    const int mx = max_value(e);
    int occurrences = 0;
    for (int v : e.entries()) occurrences += v == mx ? 1 : 0;
    if (occurrences == 1) return e;
    if (occurrences > 2)
        throw std::logic_error("remark_dedup: maximum occurs three times; input cannot avoid 000");
    std::vector<int> out = e.entries();
    out.erase(out.begin() + (prmx(e) - 1));
    return InversionSequence(std::move(out));
}

}  // namespace invseq_lab
