#pragma once

#include "powsem/cyclo.hpp"
#include "powsem/series.hpp"

#include <optional>
#include <set>
#include <vector>

namespace powsem {

// A monomial c z^d with c != 0 and d >= 2, an element of the monomial
// composition semigroup. Membership in the root-of-unity subsemigroup
// additionally requires c to be a root of unity.
struct Monomial {
    Cyclo coeff;
    Int degree;

    Monomial(Cyclo c, Int d);

    bool in_zu() const { return coeff.root_of_unity_order().has_value(); }
    Series to_series() const { return Series::monomial(coeff, degree); }
    std::string str() const { return to_series().str(); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree == b.degree && a.coeff == b.coeff;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// (w1 z^d1) ∘ (w2 z^d2) = w1 w2^d1 z^(d1 d2); this is the semidirect
// product law on (coefficient, degree) pairs.
Monomial mono_compose(const Monomial& q, const Monomial& r);

struct MonomialSemigroup {
    std::vector<Monomial> generators;
    explicit MonomialSemigroup(std::vector<Monomial> gens);
};

// Generator-level data of a monomial semigroup: the coefficient group
// U(S), the degree semigroup N(S), and the prime supports P1 (coefficient
// orders) and P2 (degrees). Generators suffice because composing only
// mixes existing primes.
struct Profile {
    std::vector<RootOfUnity> u_gens;
    std::vector<Int> n_gens;
    std::set<Int> p1;
    std::set<Int> p2;
};

Profile profile(const MonomialSemigroup& s);

// Strips from the coefficient the root-of-unity part supported on p2:
// with eps = eps1 * eps2 per crt_split, w z^d maps to eps1 z^d.
Monomial phi_map(const Monomial& q, const std::set<Int>& p2);

// A composition word over generator indices (1-based); (i1,...,ir) denotes
// Q_{i1} ∘ Q_{i2} ∘ ... ∘ Q_{ir}.
struct Word {
    std::vector<std::size_t> indices;

    bool operator==(const Word&) const = default;
};

Monomial eval_word(const Word& w, const std::vector<Monomial>& gens);
Series eval_word(const Word& w, const std::vector<Series>& gens);

// A word s over S's generators with s ∘ q1 = s ∘ q2, when the congruence
// holds; decided by a finite residue search over the degrees reachable in
// S modulo the order of the coefficient ratio.
std::optional<Word> congruent(const Monomial& q1, const Monomial& q2, const MonomialSemigroup& s);

// Image of S under phi, with the class map recorded per generator. The
// image satisfies P1 ∩ P2 = empty, which is what makes it cancellative.
struct Quotient {
    std::vector<Monomial> images;        // phi of each generator, positionally
    MonomialSemigroup image_semigroup;   // deduplicated image generators
    std::set<Int> p1_image;
    std::set<Int> p2;
};

Quotient quotient(const MonomialSemigroup& s);

// Words x, y over the pair {f1 -> 1, f2 -> 2} with eval(x) ∘ f1 =
// eval(y) ∘ f2.
struct WitnessPair {
    Word x, y;
};

// Always succeeds on the root-of-unity semigroup: equal degrees go through
// the pigeonhole on coefficient ratios, unequal degrees reduce to the
// equal-degree case via f1 ∘ f2 and f2 ∘ f1. More generally it succeeds
// whenever the degree-matched coefficient ratio is a root of unity, which
// is exactly the alignment condition the decision pipeline has already
// checked; otherwise not_in_zu is thrown. Every returned identity is
// re-verified by mono_compose before it escapes.
WitnessPair reversibility_witness(const Monomial& f1, const Monomial& f2);

// The pigeonhole index bound for an equal-degree pair: j2 never exceeds
// |coefficient ratio| + 1.
unsigned long reversibility_bound(const Monomial& f1, const Monomial& f2);

// Element of the intersection of all principal left ideals S Q_i, built by
// folding reversibility witnesses; words[i] ∘ Q_i = value for every i.
struct CommonLeftMultiple {
    Monomial value;
    std::vector<Word> words;
};

CommonLeftMultiple common_left_multiple(const MonomialSemigroup& s);
// positional variant; duplicate entries are allowed
CommonLeftMultiple common_left_multiple(const std::vector<Monomial>& forms);

// Two distinct words over {f1 -> 1, f2 -> 2} with equal evaluation,
// witnessing that f1, f2 generate no free subsemigroup of rank two.
WitnessPair free_pair_relation(const Monomial& f1, const Monomial& f2);

// Bounded enumeration of the indecomposable elements of U x N, where U is
// the multiplicative closure of u_gens (bounded word length) and N the
// degree semigroup of n_gens. Degree factorizations are exhaustive; the
// coefficient equation is searched within the same bounded closure of U.
std::vector<Monomial> indecomposables(const std::vector<Cyclo>& u_gens,
                                      const std::vector<Int>& n_gens,
                                      unsigned bound);

} // namespace powsem
