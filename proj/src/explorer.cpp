#include "powsem/explorer.hpp"

#include "powsem/errors.hpp"

#include <algorithm>

namespace powsem {

namespace {

constexpr std::size_t kMaxTableEntries = 200000;

std::string canonical_key(const Series& s, const Int& window) {
    if (s.exact()) return s.str();
    return s.truncated(std::min(window, s.precision())).str();
}

} // namespace

std::vector<const WordTable::Entry*> WordTable::collisions() const {
    std::vector<const Entry*> out;
    for (const auto& [key, entry] : entries)
        if (entry.words.size() > 1) out.push_back(&entry);
    return out;
}

WordTable enumerate(const std::vector<Series>& generators, unsigned depth, const Int& precision) {
    if (generators.empty()) throw error("enumerate: no generators");
    WordTable table;
    table.depth = depth;
    table.window = precision;

    std::vector<std::pair<Word, Series>> frontier;
    for (unsigned len = 1; len <= depth; ++len) {
        std::vector<std::pair<Word, Series>> next;
        if (len == 1) {
            for (std::size_t i = 1; i <= generators.size(); ++i)
                next.emplace_back(Word{{i}}, generators[i - 1]);
        } else {
            next.reserve(frontier.size() * generators.size());
            for (const auto& [w, v] : frontier) {
                for (std::size_t i = 1; i <= generators.size(); ++i) {
                    Word nw = w;
                    nw.indices.push_back(i);
                    next.emplace_back(std::move(nw), compose(v, generators[i - 1]));
                }
            }
        }
        for (const auto& [w, v] : next) {
            std::string key = canonical_key(v, precision);
            auto [it, fresh] = table.entries.try_emplace(key, WordTable::Entry{v, v.exact(), {}});
            it->second.words.push_back(w);
            if (table.entries.size() > kMaxTableEntries)
                throw resource_limit("word table exceeded its cap");
        }
        frontier = std::move(next);
    }
    return table;
}

std::optional<std::pair<Word, Word>> reversibility_search(const Series& a, const Series& b,
                                                          const std::vector<Series>& generators,
                                                          unsigned depth, const Int& precision) {
    WordTable table = enumerate(generators, depth, precision);

    // all words in enumeration order
    std::vector<std::pair<Word, Series>> evals;
    for (const auto& [key, entry] : table.entries)
        for (const Word& w : entry.words) evals.emplace_back(w, entry.value);
    std::sort(evals.begin(), evals.end(), [](const auto& x, const auto& y) {
        if (x.first.indices.size() != y.first.indices.size())
            return x.first.indices.size() < y.first.indices.size();
        return x.first.indices < y.first.indices;
    });

    std::map<std::string, Word> b_side;
    for (const auto& [w, v] : evals)
        b_side.try_emplace(canonical_key(compose(v, b), precision), w);

    for (const auto& [w, v] : evals) {
        auto hit = b_side.find(canonical_key(compose(v, a), precision));
        if (hit != b_side.end()) return std::make_pair(w, hit->second);
    }
    return std::nullopt;
}

FreePairEvidence free_pair_evidence(const Series& f1, const Series& f2, unsigned depth,
                                    const Int& precision) {
    if (!equals(f1, f2).is_unequal())
        throw error("free_pair_evidence requires two distinguishable series");

    std::vector<Series> pair{f1, f2};
    std::vector<std::pair<Word, Series>> frontier;
    std::map<std::string, std::pair<Word, bool>> seen;

    for (unsigned len = 1; len <= depth; ++len) {
        std::vector<std::pair<Word, Series>> next;
        if (len == 1) {
            next.emplace_back(Word{{1}}, f1);
            next.emplace_back(Word{{2}}, f2);
        } else {
            for (const auto& [w, v] : frontier) {
                for (std::size_t i = 1; i <= 2; ++i) {
                    Word nw = w;
                    nw.indices.push_back(i);
                    next.emplace_back(std::move(nw), compose(v, pair[i - 1]));
                }
            }
        }
        for (const auto& [w, v] : next) {
            std::string key = canonical_key(v, precision);
            auto [it, fresh] = seen.try_emplace(key, w, v.exact());
            if (!fresh)
                return FreePairEvidence{true, it->second.first, w, len, it->second.second && v.exact()};
            if (seen.size() > kMaxTableEntries)
                throw resource_limit("free-pair search table exceeded its cap");
        }
        frontier = std::move(next);
    }
    return FreePairEvidence{false, {}, {}, depth, true};
}

} // namespace powsem
