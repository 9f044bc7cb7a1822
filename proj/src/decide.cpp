#include "powsem/decide.hpp"

#include "powsem/errors.hpp"

#include <map>

namespace powsem {

namespace {

constexpr std::size_t kMaxSearchEntries = 200000;

// canonical comparison key: exact values render in full, truncated values
// through the window
std::string canonical_key(const Series& s, const Int& window) {
    if (s.exact()) return s.str();
    return s.truncated(std::min(window, s.precision())).str();
}

} // namespace

std::optional<RatioCert> simultaneity_ratio(const std::vector<std::pair<Cyclo, Int>>& forms) {
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            const auto& [ci, di] = forms[i];
            const auto& [cj, dj] = forms[j];
            Cyclo ratio = ci.pow(dj - 1) / cj.pow(di - 1);
            if (!ratio.root_of_unity_order())
                return RatioCert{i + 1, j + 1, ratio};
        }
    }
    return std::nullopt;
}

Verdict decide(const std::vector<Series>& generators, const Int& precision, unsigned depth) {
    if (generators.empty()) throw error("decide: no generators");
    for (const Series& g : generators) {
        auto ord = g.order(); // throws indeterminate_order for blank windows
        if (!ord) throw error("decide: the zero series is not a semigroup element");
        if (*ord < 2)
            throw error("decide: generators must have order >= 2, got order " + ord->get_str());
    }

    Int n1 = *generators.front().order();
    if (precision < n1)
        return Verdict{InconclusiveInfo{"precision is below the first generator's order",
                                        n1 + precision, depth}};

    // step 1: conjugate everything by the first generator's normalizer
    Normalizer nz = monomial_normalizer(generators.front(), precision);
    std::vector<Series> conj;
    conj.reserve(generators.size());
    for (const Series& g : generators) conj.push_back(conjugate(g, nz.beta, precision));

    // step 2: exact monomiality check; a nonzero off-monomial coefficient
    // survives every change of conjugator, so it certifies non-amenability
    std::vector<std::pair<Cyclo, Int>> forms;
    for (std::size_t i = 0; i < conj.size(); ++i) {
        Int d = *generators[i].order();
        for (const auto& [e, v] : conj[i].terms()) {
            if (e != d)
                return Verdict{NotAmenableCert{NonMonomialCert{i + 1, e, v}}};
        }
        forms.emplace_back(conj[i].coeff(d), d);
    }

    // step 3: alignment. With a root-of-unity anchor every further
    // monomial-preserving conjugation is a root-of-unity scaling, so any
    // non-unitary coefficient is already fatal; in general the pairwise
    // ratios decide.
    if (forms.front().first.root_of_unity_order()) {
        for (std::size_t i = 1; i < forms.size(); ++i) {
            if (!forms[i].first.root_of_unity_order())
                return Verdict{NotAmenableCert{NotRootCert{i + 1, forms[i].first}}};
        }
    }
    if (auto fail = simultaneity_ratio(forms)) return Verdict{NotAmenableCert{*fail}};

    // step 4: build the common-left-multiple witness over the monomial
    // forms and replay it on the original generators
    std::vector<Monomial> form_monos;
    form_monos.reserve(forms.size());
    for (const auto& [c, d] : forms) form_monos.emplace_back(c, d);
    CommonLeftMultiple clm = common_left_multiple(form_monos);

    std::vector<Series> replayed;
    replayed.reserve(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i)
        replayed.push_back(compose(eval_word(clm.words[i], generators), generators[i]));

    bool all_exact = true;
    std::optional<Int> verified;
    for (std::size_t i = 1; i < replayed.size(); ++i) {
        Equality eq = equals(replayed.front(), replayed[i]);
        if (eq.is_unequal())
            return Verdict{InconclusiveInfo{
                "witness replay diverged at exponent " + eq.detail.get_str(),
                precision * 2, depth}};
        if (!eq.is_exact()) {
            all_exact = false;
            verified = verified ? std::min(*verified, eq.detail) : eq.detail;
        }
    }
    if (replayed.size() == 1 && !replayed.front().exact()) {
        all_exact = false;
        verified = replayed.front().precision();
    }

    AmenableCert cert{nz.beta,
                      form_monos,
                      std::nullopt,
                      std::nullopt,
                      clm.words,
                      replayed.front(),
                      all_exact,
                      all_exact ? Int(0) : *verified};

    // the root-of-unity normal forms, when the aligning unit is representable
    if (!forms.front().second.fits_ulong_p()) return Verdict{std::move(cert)};
    if (auto u = cyclotomic_root(forms.front().first.inverse(),
                                 forms.front().second.get_ui() - 1)) {
        std::vector<Monomial> aligned;
        bool ok = true;
        for (const auto& [c, d] : forms) {
            Cyclo ac = u->pow(d - 1) * c;
            ok = ok && ac.root_of_unity_order().has_value();
            if (!ok) break;
            aligned.emplace_back(ac, d);
        }
        if (ok) {
            cert.alignment = *u;
            cert.aligned_forms = std::move(aligned);
        }
    }

    return Verdict{std::move(cert)};
}

std::optional<Cond4Witness> check_condition_4(const std::vector<Series>& generators,
                                              unsigned depth, const Int& precision) {
    if (generators.empty()) throw error("check_condition_4: no generators");
    const std::size_t k = generators.size();

    struct Slot {
        Series value;
        bool exact;
        std::map<std::size_t, Word> per_last; // last generator index -> earliest word
    };
    std::map<std::string, Slot> table;

    std::vector<std::pair<Word, Series>> frontier;
    for (std::size_t i = 1; i <= k; ++i)
        frontier.emplace_back(Word{{i}}, generators[i - 1]);

    for (unsigned len = 2; len <= depth; ++len) {
        std::vector<std::pair<Word, Series>> next;
        next.reserve(frontier.size() * k);
        for (const auto& [w, v] : frontier) {
            for (std::size_t i = 1; i <= k; ++i) {
                Word nw = w;
                nw.indices.push_back(i);
                Series nv = compose(v, generators[i - 1]);
                std::string key = canonical_key(nv, precision);
                auto [it, fresh] = table.try_emplace(key, Slot{nv, nv.exact(), {}});
                if (table.size() > kMaxSearchEntries)
                    throw resource_limit("condition-4 search table exceeded its cap");
                it->second.per_last.try_emplace(i, nw);
                if (it->second.per_last.size() == k) {
                    std::vector<Word> words;
                    for (std::size_t g = 1; g <= k; ++g) {
                        Word full = it->second.per_last.at(g);
                        full.indices.pop_back(); // strip the trailing Q_g
                        words.push_back(std::move(full));
                    }
                    return Cond4Witness{it->second.value, std::move(words), it->second.exact};
                }
                next.emplace_back(std::move(nw), std::move(nv));
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

} // namespace powsem
