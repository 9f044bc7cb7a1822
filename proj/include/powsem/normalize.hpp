#pragma once

#include "powsem/series.hpp"

#include <optional>
#include <vector>

namespace powsem {

// Conjugator carrying a series A of order n >= 2 to its monomial form:
// beta has order one with leading coefficient exactly 1, and
// conjugate(A, beta) = leading * z^n through the requested precision.
struct Normalizer {
    Series beta;
    Int source_order;
    Cyclo leading;

    Series monomial_form() const { return Series::monomial(leading, source_order); }
};

// Solves A ∘ beta = beta ∘ (c_n z^n) coefficient by coefficient with
// b_1 = 1. The comparison at z^{n+k-1} pins b_k with pivot n*c_n, so the
// recursion stays inside the coefficient field of A: no root extraction,
// at the price of keeping the leading coefficient on the monomial side.
// Requires ord A = n >= 2 and precision >= n.
Normalizer monomial_normalizer(const Series& a, const Int& precision);

// An e-th root of x of the shape q * eta with q rational and eta a root of
// unity, when one exists. This covers e = 1, roots of unity, and rationals
// that are perfect e-th powers up to sign; other cyclotomic radicals are
// deliberately out of reach.
std::optional<Cyclo> cyclotomic_root(const Cyclo& x, unsigned long e);

// The classical normalization A ∘ beta = beta ∘ z^n. Only produced when an
// (n-1)-th root of 1/c_n is representable (see cyclotomic_root); throws
// root_unavailable otherwise, in which case callers should fall back to
// monomial_normalizer explicitly.
Series bottcher(const Series& a, const Int& precision);

// All eps with eps^{n-1} = 1: the ambiguity of the conjugator, which is
// unique only up to beta(z) -> beta(eps z).
std::vector<RootOfUnity> branches(unsigned long n);

} // namespace powsem
