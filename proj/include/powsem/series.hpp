#pragma once

#include "powsem/cyclo.hpp"

#include <map>
#include <optional>
#include <string>

namespace powsem {

// Outcome of comparing two series.
struct Equality {
    enum class Kind { exact, to_precision, unequal };
    Kind kind;
    Int detail; // agreement precision, or the first differing exponent

    bool is_exact() const { return kind == Kind::exact; }
    bool is_unequal() const { return kind == Kind::unequal; }
    // equal at least through the known windows
    bool holds() const { return kind != Kind::unequal; }
};

// A truncated formal power series over the cyclotomic numbers.
//
// Storage is a sparse exponent -> coefficient map of the nonzero known
// coefficients. `precision` is the largest exponent whose coefficient is
// known (absent entries below it are known zeros); when `exact` is set the
// series is a polynomial known in full and every absent coefficient is a
// literal zero.
//
// Operations track the tight precision of their results: a coefficient is
// reported only when it is certain from the inputs' known windows.
class Series {
public:
    using Terms = std::map<Int, Cyclo>;

    // exact zero polynomial
    Series();

    // exact polynomial with the given coefficients
    static Series polynomial(Terms terms);
    // series known through `precision` only
    static Series truncated_series(Terms terms, const Int& precision);
    static Series identity(); // z
    static Series monomial(const Cyclo& c, const Int& degree);
    static Series zero_truncated(const Int& precision);

    const Terms& terms() const { return terms_; }
    const Int& precision() const { return precision_; }
    bool exact() const { return exact_; }

    bool is_known(const Int& n) const { return exact_ || n <= precision_; }
    // coefficient of z^n; n must lie in the known window
    Cyclo coeff(const Int& n) const;

    // Least exponent with a nonzero coefficient. nullopt encodes +infinity
    // (the exact zero polynomial); throws indeterminate_order when every
    // known coefficient vanishes but the tail is unknown.
    std::optional<Int> order() const;

    // order when it is known to be finite, else throws
    Int order_finite() const;

    bool is_zero_polynomial() const { return exact_ && terms_.empty(); }
    // degree of an exact nonzero polynomial
    Int degree() const;

    // view of this series known only through `n`
    Series truncated(const Int& n) const;

    Series operator-() const;
    Series scaled(const Cyclo& c) const;

    std::string str() const;

private:
    Series(Terms t, Int precision, bool exact);

    Terms terms_;
    Int precision_;
    bool exact_;

    friend Series add_impl(const Series&, const Series&, bool negate);
    friend Series mul(const Series&, const Series&);
    friend Series compose(const Series&, const Series&);
    friend Series comp_inverse(const Series&, const std::optional<Int>&);
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

// small integral powers (parser support); monomials take a fast path
Series pow_series(const Series& a, const Int& e);

// A ∘ B; requires ord B >= 1
Series compose(const Series& a, const Series& b);

// Compositional inverse of an order-one series: B ∘ result = result ∘ B = z
// through the working precision (`precision`, defaulting to B's own).
Series comp_inverse(const Series& b, const std::optional<Int>& precision = std::nullopt);

// beta^-1 ∘ A ∘ beta
Series conjugate(const Series& a, const Series& beta,
                 const std::optional<Int>& precision = std::nullopt);

Equality equals(const Series& a, const Series& b);

std::ostream& operator<<(std::ostream& os, const Series& s);

} // namespace powsem
