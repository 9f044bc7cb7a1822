#pragma once

#include "powsem/numbers.hpp"

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace powsem {

// An element of the cyclotomic field Q(zeta_m), stored in the power basis
// 1, zeta, ..., zeta^{phi(m)-1} fully reduced modulo the m-th cyclotomic
// polynomial. Reduction modulo the cyclotomic polynomial (rather than
// z^m - 1) makes the representation canonical, so zero-testing and
// equality are exact.
//
// Mixed-conductor arithmetic lifts both operands into Q(zeta_lcm); two
// values compare equal iff their images in the compositum have identical
// coordinates. Values are immutable after construction.
class Cyclo {
public:
    Cyclo() : conductor_(1), coeffs_(1, Rat(0)) {}
    Cyclo(const Rat& r) : conductor_(1), coeffs_(1, r) { coeffs_[0].canonicalize(); }
    Cyclo(long n) : conductor_(1), coeffs_(1, Rat(n)) {}
    Cyclo(const Int& n) : conductor_(1), coeffs_(1, Rat(n)) {}

    // primitive m-th root of unity
    static Cyclo zeta(unsigned long m);
    // zeta_m^k (k may be negative)
    static Cyclo zeta_pow(unsigned long m, long k);
    // coefficients in the power basis of Q(zeta_m); size must be phi(m)
    static Cyclo from_coeffs(unsigned long m, std::vector<Rat> coeffs);

    unsigned long conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // the value as a rational, when it is one
    std::optional<Rat> as_rational() const;

    // image in Q(zeta_target), conductor() | target
    Cyclo lifted(unsigned long target) const;

    // Descends to conductor 1 for rationals and to the minimal conductor
    // for roots of unity. Other elements are returned unchanged;
    // correctness never depends on this pass.
    Cyclo simplified() const;

    Cyclo operator-() const;
    Cyclo inverse() const;
    Cyclo pow(const Int& e) const;

    // minimal t >= 1 with x^t = 1, when x is a root of unity. Torsion in
    // Q(zeta_m) is exactly mu_lcm(2,m), so only divisors of lcm(2,m) are
    // tested.
    std::optional<unsigned long> root_of_unity_order() const;

    // Canonical, re-parseable rendering ("5/6", "zeta(12)^7",
    // "1/2 - 2*zeta(5)^3", ...).
    std::string str() const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

private:
    Cyclo(unsigned long m, std::vector<Rat> c) : conductor_(m), coeffs_(std::move(c)) {}

    unsigned long conductor_;
    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& x);

// zeta_order^exponent with order minimal: gcd(exponent, order) = 1 unless
// order = 1.
struct RootOfUnity {
    unsigned long order = 1;
    unsigned long exponent = 0;

    static RootOfUnity one() { return RootOfUnity{}; }
    // normalizes zeta_t^j to minimal order
    static RootOfUnity make(unsigned long t, long j);

    Cyclo value() const;
    RootOfUnity times(const RootOfUnity& other) const;
    RootOfUnity pow(const Int& e) const;
    RootOfUnity inverse() const;
    bool is_one() const { return order == 1; }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

std::ostream& operator<<(std::ostream& os, const RootOfUnity& r);

// Recognizes x as zeta_t^j when x is a root of unity.
std::optional<RootOfUnity> as_root_of_unity(const Cyclo& x);

// Unique factorization eps = eps1 * eps2 with the prime support of
// |eps1| disjoint from P and the prime support of |eps2| contained in P.
std::pair<RootOfUnity, RootOfUnity> crt_split(const RootOfUnity& eps, const std::set<Int>& P);

} // namespace powsem
