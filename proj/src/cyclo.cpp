#include "powsem/cyclo.hpp"

#include "powsem/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace powsem {

namespace {

// Conductors are capped so that the per-conductor reduction tables stay
// desk sized; lcm growth across mixed-conductor arithmetic hits this
// before memory does.
constexpr unsigned long kMaxConductor = 2520;

// x^m - 1 divided by the cyclotomic polynomials of the proper divisors
// of m. Integer arithmetic throughout; the divisor is always monic.
std::vector<Int> poly_exact_div(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int c = rem[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    for (const Int& r : rem)
        if (r != 0) throw error("internal: inexact cyclotomic division");
    return quot;
}

std::vector<Int> cyclotomic_coeffs(unsigned long m, std::map<unsigned long, std::vector<Int>>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<Int> f(m + 1, Int(0));
    f[0] = -1;
    f[m] = 1;
    for (unsigned long d : divisors_of(m)) {
        if (d == m) continue;
        f = poly_exact_div(f, cyclotomic_coeffs(d, cache));
    }
    cache[m] = f;
    return f;
}

struct Ctx {
    unsigned long m = 1;
    unsigned long phi = 1;
    std::vector<Int> cyclo;              // Phi_m, ascending, monic, size phi+1
    std::vector<std::vector<Int>> xpow;  // x^k mod Phi_m for 0 <= k <= kmax
};

const Ctx& ctx_for(unsigned long m) {
    static std::mutex mu;
    static std::map<unsigned long, Ctx> contexts;
    static std::map<unsigned long, std::vector<Int>> poly_cache;

    std::lock_guard<std::mutex> lock(mu);
    auto it = contexts.find(m);
    if (it != contexts.end()) return it->second;

    if (m == 0) throw error("conductor must be positive");
    if (m > kMaxConductor) throw resource_limit("conductor too large: " + std::to_string(m));

    Ctx c;
    c.m = m;
    c.phi = euler_phi(m);
    c.cyclo = cyclotomic_coeffs(m, poly_cache);

    // reductions of x^k, needed up to 2*phi-2 for products and m-1 for lifts
    unsigned long kmax = std::max(2 * c.phi >= 2 ? 2 * c.phi - 2 : 0, m - 1);
    c.xpow.resize(kmax + 1);
    for (unsigned long k = 0; k <= kmax; ++k) {
        if (k < c.phi) {
            c.xpow[k].assign(c.phi, Int(0));
            c.xpow[k][k] = 1;
        } else {
            // x * xpow[k-1], folding the x^phi overflow back via Phi_m
            const std::vector<Int>& prev = c.xpow[k - 1];
            std::vector<Int> cur(c.phi, Int(0));
            Int top = prev[c.phi - 1];
            for (unsigned long i = 0; i < c.phi; ++i) {
                cur[i] = (i > 0 ? prev[i - 1] : Int(0)) - top * c.cyclo[i];
            }
            c.xpow[k] = std::move(cur);
        }
    }
    return contexts.emplace(m, std::move(c)).first->second;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// polynomial helpers over Q for the inverse computation
using QPoly = std::vector<Rat>;

std::size_t qdeg(const QPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d; // number of meaningful coefficients; 0 for the zero polynomial
}

QPoly qsub_scaled(const QPoly& a, const QPoly& b, const Rat& c, std::size_t shift) {
    QPoly r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    return r;
}

} // namespace

Cyclo Cyclo::zeta(unsigned long m) { return zeta_pow(m, 1); }

Cyclo Cyclo::zeta_pow(unsigned long m, long k) {
    const Ctx& c = ctx_for(m);
    long kr = k % static_cast<long>(m);
    if (kr < 0) kr += static_cast<long>(m);
    std::vector<Rat> coeffs(c.phi, Rat(0));
    const std::vector<Int>& red = c.xpow[static_cast<unsigned long>(kr)];
    for (unsigned long i = 0; i < c.phi; ++i) coeffs[i] = Rat(red[i]);
    return Cyclo(m, std::move(coeffs));
}

Cyclo Cyclo::from_coeffs(unsigned long m, std::vector<Rat> coeffs) {
    const Ctx& c = ctx_for(m);
    if (coeffs.size() != c.phi) throw error("from_coeffs: expected phi(m) coordinates");
    for (Rat& r : coeffs) r.canonicalize();
    return Cyclo(m, std::move(coeffs));
}

bool Cyclo::is_zero() const {
    for (const Rat& r : coeffs_)
        if (r != 0) return false;
    return true;
}

bool Cyclo::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::optional<Rat> Cyclo::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

Cyclo Cyclo::lifted(unsigned long target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0) throw error("lifted: target conductor not a multiple");
    const Ctx& c = ctx_for(target);
    unsigned long step = target / conductor_;
    std::vector<Rat> out(c.phi, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const std::vector<Int>& red = c.xpow[i * step];
        for (unsigned long j = 0; j < c.phi; ++j)
            if (red[j] != 0) out[j] += coeffs_[i] * Rat(red[j]);
    }
    return Cyclo(target, std::move(out));
}

Cyclo Cyclo::simplified() const {
    if (is_rational()) return Cyclo(coeffs_[0]);
    if (auto r = as_root_of_unity(*this)) return r->value();
    return *this;
}

Cyclo Cyclo::operator-() const {
    std::vector<Rat> out = coeffs_;
    for (Rat& r : out) r = -r;
    return Cyclo(conductor_, std::move(out));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    unsigned long m = lcm_ul(a.conductor_, b.conductor_);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    unsigned long m = lcm_ul(a.conductor_, b.conductor_);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    unsigned long m = lcm_ul(a.conductor_, b.conductor_);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    const Ctx& c = ctx_for(m);
    std::size_t n = c.phi;

    std::vector<Rat> conv(2 * n - 1, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coeffs_[j] == 0) continue;
            conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    std::vector<Rat> out(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) out[k] = conv[k];
    for (std::size_t k = n; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        const std::vector<Int>& red = c.xpow[k];
        for (std::size_t i = 0; i < n; ++i)
            if (red[i] != 0) out[i] += conv[k] * Rat(red[i]);
    }
    return Cyclo::from_coeffs(m, std::move(out));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw division_by_zero();
    if (auto r = as_rational()) return Cyclo(Rat(1) / *r);

    const Ctx& c = ctx_for(conductor_);
    // extended Euclid in Q[x]: maintain r_i = t_i * this (mod Phi_m).
    QPoly r0(c.cyclo.size());
    for (std::size_t i = 0; i < c.cyclo.size(); ++i) r0[i] = Rat(c.cyclo[i]);
    QPoly r1(coeffs_.begin(), coeffs_.end());
    QPoly t0{Rat(0)}, t1{Rat(1)};

    while (qdeg(r1) > 0) {
        // divide r0 by r1
        std::size_t d1 = qdeg(r1);
        Rat lead = r1[d1 - 1];
        while (qdeg(r0) >= d1) {
            std::size_t d0 = qdeg(r0);
            Rat q = r0[d0 - 1] / lead;
            std::size_t shift = d0 - d1;
            r0 = qsub_scaled(r0, r1, q, shift);
            QPoly qmono(shift + 1, Rat(0));
            qmono[shift] = q;
            // t0 -= q * x^shift * t1
            if (t0.size() < t1.size() + shift) t0.resize(t1.size() + shift, Rat(0));
            for (std::size_t i = 0; i < t1.size(); ++i) t0[i + shift] -= q * t1[i];
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
    // r1 == 0 here, so r0 is the gcd; Phi_m irreducible and *this nonzero
    // force it to be a nonzero constant
    if (qdeg(r0) != 1 || r0[0] == 0) throw error("internal: cyclotomic inverse failed");
    Rat scale = Rat(1) / r0[0];
    std::vector<Rat> out(c.phi, Rat(0));
    for (std::size_t i = 0; i < t0.size() && i < c.phi; ++i) out[i] = t0[i] * scale;
    return Cyclo::from_coeffs(conductor_, std::move(out));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

Cyclo Cyclo::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return Cyclo(1l);

    Int exp = e;
    if (!exp.fits_ulong_p() || exp.get_ui() > 4096) {
        // big exponents are only feasible when the base has finite order
        if (auto t = root_of_unity_order()) {
            exp = exp % Int(*t);
        } else {
            throw resource_limit("pow: exponent too large for a base of infinite order");
        }
    }
    unsigned long n = exp.get_ui();
    Cyclo base = *this, acc(1l);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

std::optional<unsigned long> Cyclo::root_of_unity_order() const {
    if (is_zero()) return std::nullopt;
    if (auto r = as_rational()) {
        if (*r == 1) return 1;
        if (*r == -1) return 2;
        return std::nullopt;
    }
    // roots of unity have integer power-basis coordinates
    for (const Rat& c : coeffs_)
        if (c.get_den() != 1) return std::nullopt;

    unsigned long w = lcm_ul(2, conductor_);
    for (unsigned long t : divisors_of(w)) {
        if (t == 1) continue; // non-rational, so order 1 is impossible
        if (pow(Int(t)).is_one()) return t;
    }
    return std::nullopt;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    unsigned long m = lcm_ul(a.conductor_, b.conductor_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::string Cyclo::str() const {
    Cyclo s = simplified();
    if (auto r = s.as_rational()) return rat_str(*r);
    if (auto root = as_root_of_unity(s)) {
        std::string base = "zeta(" + std::to_string(root->order) + ")";
        if (root->exponent == 1) return base;
        return base + "^" + std::to_string(root->exponent);
    }
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
        const Rat& c = s.coeffs_[i];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string sym;
        if (i == 1) sym = "zeta(" + std::to_string(s.conductor_) + ")";
        else if (i > 1) sym = "zeta(" + std::to_string(s.conductor_) + ")^" + std::to_string(i);
        if (sym.empty()) out += rat_str(a);
        else if (a == 1) out += sym;
        else out += rat_str(a) + "*" + sym;
        first = false;
    }
    return first ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.str(); }

RootOfUnity RootOfUnity::make(unsigned long t, long j) {
    if (t == 0) throw error("root of unity order must be positive");
    long jr = j % static_cast<long>(t);
    if (jr < 0) jr += static_cast<long>(t);
    unsigned long ju = static_cast<unsigned long>(jr);
    unsigned long g = gcd_ul(ju == 0 ? t : ju, t);
    unsigned long order = t / g;
    unsigned long exponent = (order == 1) ? 0 : ju / g;
    return RootOfUnity{order, exponent};
}

Cyclo RootOfUnity::value() const {
    if (order == 1) return Cyclo(1l);
    return Cyclo::zeta_pow(order, static_cast<long>(exponent));
}

RootOfUnity RootOfUnity::times(const RootOfUnity& other) const {
    unsigned long l = lcm_ul(order, other.order);
    unsigned long e = (exponent * (l / order) + other.exponent * (l / other.order)) % l;
    return make(l, static_cast<long>(e));
}

RootOfUnity RootOfUnity::pow(const Int& e) const {
    Int r = e % Int(order);
    if (r < 0) r += Int(order);
    Int ne = Int(exponent) * r % Int(order);
    return make(order, static_cast<long>(ne.get_ui()));
}

RootOfUnity RootOfUnity::inverse() const {
    if (order == 1) return *this;
    return RootOfUnity{order, order - exponent};
}

std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) { return os << r.value().str(); }

std::optional<RootOfUnity> as_root_of_unity(const Cyclo& x) {
    auto t = x.root_of_unity_order();
    if (!t) return std::nullopt;
    if (*t == 1) return RootOfUnity::one();
    if (*t == 2) return RootOfUnity{2, 1};
    Cyclo z = Cyclo::zeta(*t);
    Cyclo acc(1l);
    for (unsigned long j = 1; j < *t; ++j) {
        acc = acc * z;
        if (gcd_ul(j, *t) != 1) continue;
        if (acc == x) return RootOfUnity{*t, j};
    }
    throw error("internal: root-of-unity exponent not found");
}

std::pair<RootOfUnity, RootOfUnity> crt_split(const RootOfUnity& eps, const std::set<Int>& P) {
    unsigned long t = eps.order;
    // t = t1 * t2 with t1 coprime to P and t2 supported on P
    unsigned long t2 = 1;
    unsigned long rest = t;
    for (const Int& p : P) {
        if (!p.fits_ulong_p()) continue;
        unsigned long pu = p.get_ui();
        while (rest % pu == 0) {
            rest /= pu;
            t2 *= pu;
        }
    }
    unsigned long t1 = rest;

    if (t2 == 1) return {eps, RootOfUnity::one()};
    if (t1 == 1) return {RootOfUnity::one(), eps};

    // eps1 = eps^{t2 * (t2^-1 mod t1)}, eps2 = eps^{t1 * (t1^-1 mod t2)}
    unsigned long j = eps.exponent;
    Int v1 = Int(j) * Int(inverse_mod(t2 % t1, t1)) % Int(t1);
    Int v2 = Int(j) * Int(inverse_mod(t1 % t2, t2)) % Int(t2);
    unsigned long e1 = v1.get_ui();
    unsigned long e2 = v2.get_ui();
    return {RootOfUnity::make(t1, static_cast<long>(e1)), RootOfUnity::make(t2, static_cast<long>(e2))};
}

} // namespace powsem
