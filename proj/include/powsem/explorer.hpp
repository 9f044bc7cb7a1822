#pragma once

#include "powsem/monomial.hpp"
#include "powsem/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace powsem {

// Evaluations of all words up to a given length, grouped by canonical
// value. Exact evaluations key on their full rendering; truncated ones on
// their window rendering, so equal-looking values of different exactness
// never collide.
struct WordTable {
    struct Entry {
        Series value;
        bool exact;
        std::vector<Word> words; // in enumeration order (length, then lex)
    };
    std::map<std::string, Entry> entries;
    unsigned depth = 0;
    Int window;

    std::vector<const Entry*> collisions() const;
};

WordTable enumerate(const std::vector<Series>& generators, unsigned depth, const Int& precision);

// Words x, y (over the generators) with eval(x) ∘ a = eval(y) ∘ b within
// the comparison window; nullopt if none exists at this depth.
std::optional<std::pair<Word, Word>> reversibility_search(const Series& a, const Series& b,
                                                          const std::vector<Series>& generators,
                                                          unsigned depth, const Int& precision);

// Either two distinct words over {f1 -> 1, f2 -> 2} with equal evaluation,
// or the (depth-bounded, never conclusive) absence of such a relation.
struct FreePairEvidence {
    bool relation_found;
    Word w1, w2;
    unsigned searched_depth;
    bool exact;
};

FreePairEvidence free_pair_evidence(const Series& f1, const Series& f2, unsigned depth,
                                    const Int& precision);

} // namespace powsem
