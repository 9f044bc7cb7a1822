#include "powsem/numbers.hpp"

#include "powsem/errors.hpp"

namespace powsem {

Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

unsigned long gcd_ul(unsigned long a, unsigned long b) {
    while (b != 0) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned long lcm_ul(unsigned long a, unsigned long b) {
    if (a == 0 || b == 0) return 0;
    Int l = lcm_int(Int(a), Int(b));
    if (!l.fits_ulong_p()) throw resource_limit("lcm exceeds machine word");
    return l.get_ui();
}

std::set<Int> prime_support(const Int& l) {
    Int n = abs(l);
    if (n == 0) throw error("prime_support of zero");
    std::set<Int> out;
    if (n == 1) return out;

    Int p = 2;
    const unsigned long trial_bound = 1000000;
    while (p <= trial_bound && p * p <= n) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            out.insert(p);
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
        }
        p = (p == 2) ? Int(3) : Int(p + 2);
    }
    if (n > 1) {
        // no factor <= 10^6, so n is prime if below 10^12; otherwise ask GMP
        if (n < Int("1000000000000") || mpz_probab_prime_p(n.get_mpz_t(), 32) > 0) {
            out.insert(n);
        } else {
            throw resource_limit("prime_support: composite cofactor too large to factor");
        }
    }
    return out;
}

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m, n = m;
    for (unsigned long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

unsigned long inverse_mod(unsigned long a, unsigned long m) {
    if (m == 1) return 0;
    Int r;
    if (mpz_invert(r.get_mpz_t(), Int(a).get_mpz_t(), Int(m).get_mpz_t()) == 0)
        throw error("inverse_mod: arguments not coprime");
    return r.get_ui();
}

bool perfect_root(const Int& x, unsigned long e, Int& out) {
    if (x < 0) return false;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), e);
    if (exact == 0) return false;
    out = r;
    return true;
}

bool perfect_root_rat(const Rat& x, unsigned long e, Rat& out) {
    Int num = x.get_num(), den = x.get_den();
    bool negative = num < 0;
    if (negative && e % 2 == 0) return false;
    Int rn, rd;
    if (!perfect_root(abs(num), e, rn) || !perfect_root(den, e, rd)) return false;
    if (negative) rn = -rn;
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace powsem
