#include "powsem/normalize.hpp"

#include "powsem/errors.hpp"

namespace powsem {

namespace {

// eta with eta^e = tau, for tau a root of unity
Cyclo root_of_root_of_unity(const RootOfUnity& tau, unsigned long e) {
    if (tau.is_one()) return Cyclo(1l);
    unsigned long s = tau.order;
    unsigned long se = s * e;
    return Cyclo::zeta_pow(se, static_cast<long>(tau.exponent));
}

} // namespace

Normalizer monomial_normalizer(const Series& a, const Int& precision) {
    auto ord = a.order();
    if (!ord || *ord < 2)
        throw error("monomial normalizer requires order >= 2, got " +
                    (ord ? ord->get_str() : std::string("infinity")));
    const Int& n = *ord;
    if (precision < n) throw error("normalizer precision must be at least the order");
    Cyclo cn = a.coeff(n);

    // already a monomial: the identity conjugates it to itself, exactly
    if (a.exact() && a.terms().size() == 1)
        return Normalizer{Series::identity(), n, cn};

    Int width = precision - n + 1; // beta carries coefficients b_1..b_width
    // b_k needs A's coefficients through n+k-1, so a truncated input caps
    // the producible width
    if (!a.exact()) width = std::min(width, Int(a.precision() - n + 1));
    Series::Terms beta{{Int(1), Cyclo(1l)}};
    Series target = Series::monomial(cn, n);
    Cyclo pivot = Cyclo(n) * cn;

    for (Int k(2); k <= width; ++k) {
        Int m = n + k - 1;
        Series partial = Series::truncated_series(beta, m);
        Cyclo lhs = compose(a.truncated(m), partial).coeff(m);
        Cyclo rhs = compose(partial, target).coeff(m);
        Cyclo bk = (rhs - lhs) / pivot;
        if (!bk.is_zero()) beta.emplace(k, bk);
    }
    return Normalizer{Series::truncated_series(std::move(beta), width), n, cn};
}

std::optional<Cyclo> cyclotomic_root(const Cyclo& x, unsigned long e) {
    if (x.is_zero() || e == 0) return std::nullopt;
    if (e == 1) return x;

    // q * eta with q^e = sigma * r and eta^e = sigma * rho, sigma = +-1
    auto assemble = [e](const Rat& r, const RootOfUnity& rho) -> std::optional<Cyclo> {
        for (int sign : {1, -1}) {
            Rat target = sign * r;
            Rat q;
            if (!perfect_root_rat(target, e, q)) continue;
            RootOfUnity tau = rho;
            if (sign < 0) tau = tau.times(RootOfUnity{2, 1});
            return Cyclo(q) * root_of_root_of_unity(tau, e);
        }
        return std::nullopt;
    };

    if (auto r = x.as_rational()) return assemble(*r, RootOfUnity::one());
    if (auto rho = as_root_of_unity(x)) return assemble(Rat(1), *rho);

    // split x = r * rho by killing the torsion part with a w-th power;
    // w is even, so x^w = r^w must be positive for the split to exist
    unsigned long w = lcm_ul(2, x.conductor());
    Cyclo xw = x.pow(Int(w));
    auto yr = xw.as_rational();
    if (!yr || *yr <= 0) return std::nullopt;
    Rat r0;
    if (!perfect_root_rat(*yr, w, r0)) return std::nullopt;
    for (const Rat& r : {r0, Rat(-r0)}) {
        if (r == 0) continue;
        Cyclo rho_c = x / Cyclo(r);
        auto rho = as_root_of_unity(rho_c);
        if (!rho) continue;
        if (auto u = assemble(r, *rho)) return u;
    }
    return std::nullopt;
}

Series bottcher(const Series& a, const Int& precision) {
    Normalizer nz = monomial_normalizer(a, precision);
    if (!nz.source_order.fits_ulong_p())
        throw root_unavailable("order too large for branch arithmetic");
    unsigned long n = nz.source_order.get_ui();

    auto u = cyclotomic_root(nz.leading.inverse(), n - 1);
    if (!u)
        throw root_unavailable("no representable root of 1/" + nz.leading.str() +
                               " of degree " + std::to_string(n - 1));
    // beta(z) -> beta(u z) moves the monomial form from c_n z^n to z^n
    return compose(nz.beta, Series::monomial(*u, Int(1)));
}

std::vector<RootOfUnity> branches(unsigned long n) {
    if (n < 2) throw error("branches: order must be >= 2");
    std::vector<RootOfUnity> out;
    for (unsigned long j = 0; j < n - 1; ++j)
        out.push_back(RootOfUnity::make(n - 1, static_cast<long>(j)));
    return out;
}

} // namespace powsem
