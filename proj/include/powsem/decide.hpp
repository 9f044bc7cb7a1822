#pragma once

#include "powsem/monomial.hpp"
#include "powsem/normalize.hpp"
#include "powsem/series.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace powsem {

// A semigroup certified amenable: the conjugator, the monomial forms it
// produces, and a common-left-multiple witness replayed and verified on
// the original generators (exactly for polynomial input, through the full
// tracked precision otherwise).
struct AmenableCert {
    Series beta;
    std::vector<Monomial> forms;
    std::optional<Cyclo> alignment;                    // u carrying the forms into the
    std::optional<std::vector<Monomial>> aligned_forms; // root-of-unity normal forms
    std::vector<Word> words; // words[i] ∘ Q_i all evaluate to `common`
    Series common;
    bool exact;
    Int verified_precision;
};

// some conjugated generator has a nonzero coefficient off its leading
// monomial position
struct NonMonomialCert {
    std::size_t generator; // 1-based
    Int exponent;
    Cyclo value;
};

// the anchor form is a root of unity but this generator's form is not, so
// no simultaneous alignment exists
struct NotRootCert {
    std::size_t generator;
    Cyclo value;
};

// the pairwise alignment obstruction c_i^(d_j - 1) / c_j^(d_i - 1)
struct RatioCert {
    std::size_t i, j;
    Cyclo ratio;
};

struct InconclusiveInfo {
    std::string reason;
    Int suggested_precision;
    unsigned suggested_depth;
};

using NotAmenableCert = std::variant<NonMonomialCert, NotRootCert, RatioCert>;

struct Verdict {
    enum class Kind { amenable, not_amenable, inconclusive };
    std::variant<AmenableCert, NotAmenableCert, InconclusiveInfo> outcome;

    Kind kind() const {
        if (std::holds_alternative<AmenableCert>(outcome)) return Kind::amenable;
        if (std::holds_alternative<NotAmenableCert>(outcome)) return Kind::not_amenable;
        return Kind::inconclusive;
    }
    const AmenableCert& amenable() const { return std::get<AmenableCert>(outcome); }
    const NotAmenableCert& not_amenable() const { return std::get<NotAmenableCert>(outcome); }
    const InconclusiveInfo& inconclusive() const { return std::get<InconclusiveInfo>(outcome); }
};

// Pairwise alignment test: passes (nullopt) iff for every pair the ratio
// c_i^(d_j-1) / c_j^(d_i-1) is a root of unity, which is equivalent to the
// existence of a single linear conjugation making every coefficient a root
// of unity over the algebraic closure.
std::optional<RatioCert> simultaneity_ratio(const std::vector<std::pair<Cyclo, Int>>& forms);

// The decision pipeline: conjugate everything by the first generator's
// normalizer, test monomiality, test alignment, then build and exactly
// replay a common-left-multiple witness on the original generators.
// Amenable is only ever emitted after that replay verifies.
Verdict decide(const std::vector<Series>& generators, const Int& precision = Int(16),
               unsigned depth = 6);

// Direct breadth-first search for an element of every principal left ideal
// S Q_i among words of length <= depth. Independent of the normalization
// path; serves as a cross-check oracle for decide. Sound for exact
// polynomial generators; truncated generators are compared through the
// precision window only.
struct Cond4Witness {
    Series value;
    std::vector<Word> words; // words[i] ∘ Q_i = value
    bool exact;
};

std::optional<Cond4Witness> check_condition_4(const std::vector<Series>& generators,
                                              unsigned depth, const Int& precision);

} // namespace powsem
