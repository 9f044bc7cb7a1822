#pragma once

#include <gmpxx.h>

#include <set>
#include <vector>

namespace powsem {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (reduced, positive denominator), which the whole library
// relies on for exact equality.
using Int = mpz_class;
using Rat = mpq_class;

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);
unsigned long gcd_ul(unsigned long a, unsigned long b);
unsigned long lcm_ul(unsigned long a, unsigned long b);

// Set of prime divisors of |l|, l != 0; empty for l = 1.
std::set<Int> prime_support(const Int& l);

unsigned long euler_phi(unsigned long m);

// All divisors of n >= 1, ascending.
std::vector<unsigned long> divisors_of(unsigned long n);

// a^-1 mod m for gcd(a, m) = 1, m >= 1. Returns 0 when m = 1.
unsigned long inverse_mod(unsigned long a, unsigned long m);

// Exact e-th root of x >= 0; true iff x is a perfect e-th power.
bool perfect_root(const Int& x, unsigned long e, Int& out);

// Exact e-th root of a rational: for e odd any sign, for e even x must be
// positive (the positive root is returned).
bool perfect_root_rat(const Rat& x, unsigned long e, Rat& out);

Int pow_int(const Int& base, unsigned long e);

} // namespace powsem
