#include "powsem/series.hpp"

#include "powsem/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace powsem {

namespace {

using Terms = Series::Terms;

constexpr unsigned long kMaxExactPowerExponent = 1u << 14;
constexpr std::size_t kMaxTermCount = 2000000;

void prune_zeros(Terms& t) {
    for (auto it = t.begin(); it != t.end();) {
        if (it->second.is_zero()) it = t.erase(it);
        else ++it;
    }
}

void drop_above(Terms& t, const Int& cap) {
    t.erase(t.upper_bound(cap), t.end());
}

// nullopt cap = no truncation
Terms mul_terms(const Terms& a, const Terms& b, const std::optional<Int>& cap) {
    Terms out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Int e = ea + eb;
            if (cap && e > *cap) break; // b ascending, later entries only grow
            auto it = out.find(e);
            if (it == out.end()) out.emplace(e, ca * cb);
            else it->second = it->second + ca * cb;
            if (out.size() > kMaxTermCount) throw resource_limit("series product too large");
        }
    }
    prune_zeros(out);
    return out;
}

Terms pow_terms(const Terms& base, const Int& e, const std::optional<Int>& cap) {
    if (e == 0) return Terms{{Int(0), Cyclo(1l)}};
    if (base.empty()) return {};
    if (base.size() == 1) {
        const auto& [exp, c] = *base.begin();
        Int re = exp * e;
        if (cap && re > *cap) return {};
        return Terms{{re, c.pow(e)}};
    }
    if (cap) {
        // the product's order is at least e * ord(base)
        const Int& ord = base.begin()->first;
        if (ord > 0 && ord * e > *cap) return {};
    } else if (!e.fits_ulong_p() || e.get_ui() > kMaxExactPowerExponent) {
        throw resource_limit("series power: exponent too large for exact expansion");
    }
    Terms acc{{Int(0), Cyclo(1l)}};
    Terms sq = base;
    Int n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = mul_terms(acc, sq, cap);
        n >>= 1;
        if (n > 0) sq = mul_terms(sq, sq, cap);
    }
    return acc;
}

// lower bound for the order, using only known data; nullopt = +infinity
std::optional<Int> order_lower_bound(const Series& s) {
    if (!s.terms().empty()) return s.terms().begin()->first;
    if (s.exact()) return std::nullopt; // exact zero: infinite order
    return s.precision() + 1;
}

std::optional<Int> min_opt(const std::optional<Int>& a, const std::optional<Int>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

} // namespace

Series::Series() : terms_(), precision_(1), exact_(true) {}

Series::Series(Terms t, Int precision, bool exact)
    : terms_(std::move(t)), precision_(std::move(precision)), exact_(exact) {}

Series Series::polynomial(Terms terms) {
    prune_zeros(terms);
    for (const auto& [e, c] : terms)
        if (e < 0) throw error("series exponents must be nonnegative");
    Int prec = terms.empty() ? Int(1) : std::max(Int(1), terms.rbegin()->first);
    return Series(std::move(terms), prec, true);
}

Series Series::truncated_series(Terms terms, const Int& precision) {
    if (precision < 1) throw error("series precision must be positive");
    prune_zeros(terms);
    for (const auto& [e, c] : terms) {
        if (e < 0) throw error("series exponents must be nonnegative");
        if (e > precision) throw error("series term beyond declared precision");
    }
    return Series(std::move(terms), precision, false);
}

Series Series::identity() { return polynomial(Terms{{Int(1), Cyclo(1l)}}); }

Series Series::monomial(const Cyclo& c, const Int& degree) {
    return polynomial(Terms{{degree, c}});
}

Series Series::zero_truncated(const Int& precision) {
    return truncated_series(Terms{}, precision);
}

Cyclo Series::coeff(const Int& n) const {
    if (!is_known(n)) throw error("coefficient of z^" + n.get_str() + " is beyond the known precision");
    auto it = terms_.find(n);
    return it == terms_.end() ? Cyclo(0l) : it->second;
}

std::optional<Int> Series::order() const {
    if (!terms_.empty()) return terms_.begin()->first;
    if (exact_) return std::nullopt;
    throw indeterminate_order();
}

Int Series::order_finite() const {
    auto o = order();
    if (!o) throw error("order is infinite (zero polynomial)");
    return *o;
}

Int Series::degree() const {
    if (!exact_) throw error("degree of a truncated series is unknown");
    if (terms_.empty()) throw error("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

Series Series::truncated(const Int& n) const {
    if (n < 1) throw error("series precision must be positive");
    Int p = exact_ ? n : std::min(n, precision_);
    Terms t = terms_;
    drop_above(t, p);
    return Series(std::move(t), p, false);
}

Series Series::operator-() const {
    Terms t = terms_;
    for (auto& [e, c] : t) c = -c;
    return Series(std::move(t), precision_, exact_);
}

Series Series::scaled(const Cyclo& c) const {
    Terms t;
    if (!c.is_zero())
        for (const auto& [e, v] : terms_) t.emplace(e, v * c);
    prune_zeros(t);
    return Series(std::move(t), precision_, exact_);
}

Series add_impl(const Series& a, const Series& b, bool negate) {
    bool exact = a.exact_ && b.exact_;
    Int prec = exact ? Int(1) : Int(0);
    if (!exact) {
        if (!a.exact_ && !b.exact_) prec = std::min(a.precision_, b.precision_);
        else prec = a.exact_ ? b.precision_ : a.precision_;
    }
    Terms t = a.terms_;
    if (!exact) drop_above(t, prec);
    for (const auto& [e, c] : b.terms_) {
        if (!exact && e > prec) break;
        Cyclo v = negate ? -c : c;
        auto it = t.find(e);
        if (it == t.end()) t.emplace(e, v);
        else it->second = it->second + v;
    }
    prune_zeros(t);
    if (exact) return Series::polynomial(std::move(t));
    return Series(std::move(t), prec, false);
}

Series operator+(const Series& a, const Series& b) { return add_impl(a, b, false); }
Series operator-(const Series& a, const Series& b) { return add_impl(a, b, true); }

Series mul(const Series& a, const Series& b) {
    if (a.is_zero_polynomial() || b.is_zero_polynomial()) return Series();
    bool exact = a.exact_ && b.exact_;
    std::optional<Int> cap;
    if (!exact) {
        std::optional<Int> w;
        if (!a.exact_) w = min_opt(w, a.precision_ + *order_lower_bound(b));
        if (!b.exact_) w = min_opt(w, b.precision_ + *order_lower_bound(a));
        cap = w;
    }
    Terms t = mul_terms(a.terms_, b.terms_, cap);
    if (exact) return Series::polynomial(std::move(t));
    return Series::truncated_series(std::move(t), *cap);
}

Series pow_series(const Series& a, const Int& e) {
    if (e < 0) throw error("series powers require nonnegative exponents");
    if (e == 0) return Series::monomial(Cyclo(1l), Int(0));
    std::optional<Int> cap;
    if (!a.exact()) cap = a.precision(); // each factor has order >= 0; window cannot grow
    Terms t = pow_terms(a.terms(), e, cap);
    if (!cap) return Series::polynomial(std::move(t));
    return Series::truncated_series(std::move(t), *cap);
}

Series compose(const Series& a, const Series& b) {
    // ord B >= 1: the constant coefficient must be a known zero
    if (!b.terms().empty() && b.terms().begin()->first == 0)
        throw composition_undefined();

    // A ∘ 0 = c0 exactly, whatever the tail of A is
    if (b.is_zero_polynomial()) {
        Cyclo c0 = a.terms().count(Int(0)) ? a.terms().at(Int(0)) : Cyclo(0l);
        return Series::monomial(c0, Int(0));
    }

    bool exact = a.exact() && b.exact();
    std::optional<Int> cap;
    if (!exact) {
        std::optional<Int> ob = order_lower_bound(b); // >= 1 here
        Int bl = ob ? *ob : b.precision() + 1;
        std::optional<Int> w;
        if (!a.exact()) w = min_opt(w, a.precision() * bl);
        if (!b.exact()) {
            // least positive exponent A is known to use
            std::optional<Int> a1;
            for (const auto& [e, c] : a.terms()) {
                if (e >= 1) { a1 = e; break; }
            }
            if (!a1 && !a.exact()) a1 = a.precision() + 1;
            if (a1) w = min_opt(w, b.precision() + (*a1 - 1) * bl);
            // exact constant A: no dependence on B at all
        }
        if (!w) return a; // exact constant composed with truncated series
        cap = w;
    }

    // sparse Horner over descending exponents of A
    Terms acc;
    bool first = true;
    Int prev_exp(0);
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const Int& e = it->first;
        if (first) {
            acc = Terms{{Int(0), it->second}};
            first = false;
        } else {
            acc = mul_terms(acc, pow_terms(b.terms(), prev_exp - e, cap), cap);
            auto f = acc.find(Int(0));
            if (f == acc.end()) acc.emplace(Int(0), it->second);
            else f->second = f->second + it->second;
        }
        prev_exp = e;
    }
    if (!first && prev_exp > 0) acc = mul_terms(acc, pow_terms(b.terms(), prev_exp, cap), cap);
    prune_zeros(acc);

    if (exact) return Series::polynomial(std::move(acc));
    return Series::truncated_series(std::move(acc), *cap);
}

Series comp_inverse(const Series& b, const std::optional<Int>& precision) {
    std::optional<Int> ord;
    try {
        ord = b.order();
    } catch (const indeterminate_order&) {
        throw not_invertible("compositional inverse requires a series of known order one");
    }
    if (!ord || *ord != 1)
        throw not_invertible("compositional inverse requires order one, got order " +
                             (ord ? ord->get_str() : std::string("infinity")));

    bool linear = b.exact() && b.degree() == 1;
    // coefficient g_k only depends on b_2..b_k, so an inexact b supports the
    // inverse through its own precision and no further
    Int w = precision ? *precision : (linear ? Int(1) : b.precision());
    if (!b.exact()) w = std::min(w, b.precision());
    Cyclo b1 = b.coeff(Int(1));

    // Solve C ∘ B = z coefficient by coefficient: with C = sum g_k z^k,
    // [z^k] B^k = b1^k and earlier powers of B are already accumulated, so
    // each g_k is a single division. The group of order-one series under
    // truncated composition makes C a two-sided inverse through w.
    std::optional<Int> cap = w;
    Terms bp = b.terms();
    drop_above(bp, w);
    Terms bpow = bp;       // B^k
    Terms running;         // sum_{j<k} g_j B^j
    Terms c;               // the inverse
    Cyclo b1pow(1l);
    for (Int k(1); k <= w; ++k) {
        b1pow = b1pow * b1;
        Cyclo target = (k == 1) ? Cyclo(1l) : Cyclo(0l);
        auto it = running.find(k);
        if (it != running.end()) target = target - it->second;
        Cyclo gk = target / b1pow;
        if (!gk.is_zero()) {
            c.emplace(k, gk);
            for (const auto& [e, v] : bpow) {
                if (e > w) break;
                auto f = running.find(e);
                if (f == running.end()) running.emplace(e, gk * v);
                else f->second = f->second + gk * v;
            }
        }
        if (k < w) bpow = mul_terms(bpow, bp, cap);
    }

    if (linear) return Series::polynomial(std::move(c));
    return Series::truncated_series(std::move(c), w);
}

Series conjugate(const Series& a, const Series& beta, const std::optional<Int>& precision) {
    Series inv = comp_inverse(beta, precision);
    return compose(inv, compose(a, beta));
}

Equality equals(const Series& a, const Series& b) {
    if (a.exact() && b.exact()) {
        auto ia = a.terms().begin(), ib = b.terms().begin();
        while (ia != a.terms().end() && ib != b.terms().end()) {
            if (ia->first < ib->first) return Equality{Equality::Kind::unequal, ia->first};
            if (ib->first < ia->first) return Equality{Equality::Kind::unequal, ib->first};
            if (ia->second != ib->second) return Equality{Equality::Kind::unequal, ia->first};
            ++ia;
            ++ib;
        }
        if (ia != a.terms().end()) return Equality{Equality::Kind::unequal, ia->first};
        if (ib != b.terms().end()) return Equality{Equality::Kind::unequal, ib->first};
        return Equality{Equality::Kind::exact, Int(0)};
    }
    Int w = a.exact() ? b.precision()
                      : (b.exact() ? a.precision() : std::min(a.precision(), b.precision()));
    auto ia = a.terms().begin(), ib = b.terms().begin();
    auto skip_beyond = [&w](auto& it, const auto& end) {
        if (it != end && it->first > w) it = end;
    };
    while (true) {
        skip_beyond(ia, a.terms().end());
        skip_beyond(ib, b.terms().end());
        if (ia == a.terms().end() && ib == b.terms().end()) break;
        if (ib == b.terms().end()) return Equality{Equality::Kind::unequal, ia->first};
        if (ia == a.terms().end()) return Equality{Equality::Kind::unequal, ib->first};
        if (ia->first < ib->first) return Equality{Equality::Kind::unequal, ia->first};
        if (ib->first < ia->first) return Equality{Equality::Kind::unequal, ib->first};
        if (ia->second != ib->second) return Equality{Equality::Kind::unequal, ia->first};
        ++ia;
        ++ib;
    }
    return Equality{Equality::Kind::to_precision, w};
}

std::string Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (neg) cs = cs.substr(1);
        bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;

        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
            continue;
        }
        std::string zpart = (e == 1) ? "z" : "z^" + e.get_str();
        if (cs == "1") os << zpart;
        else if (needs_parens) os << "(" << cs << ")*" << zpart;
        else os << cs << "*" << zpart;
    }
    if (exact_) {
        if (first) os << "0";
    } else {
        if (!first) os << " + ";
        os << "O(z^" << precision_.get_str() << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

} // namespace powsem
