#include "powsem/monomial.hpp"

#include "powsem/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace powsem {

namespace {

// first collision of the coefficient-ratio exponents e_j = 1 + d + ... +
// d^{j-1} taken modulo the order of the ratio; j2 is minimal, then j1
struct Collision {
    unsigned long j1, j2;
};

Collision pigeonhole_collision_mod(unsigned long n, const Int& degree) {
    unsigned long d = static_cast<unsigned long>(mpz_fdiv_ui(degree.get_mpz_t(), n));
    std::map<unsigned long, unsigned long> seen;
    unsigned long e = 1 % n;
    for (unsigned long j = 1; j <= n + 1; ++j) {
        auto [it, fresh] = seen.emplace(e, j);
        if (!fresh) return {it->second, j};
        e = (1 + d * e) % n;
    }
    throw error("internal: pigeonhole found no collision");
}

Collision pigeonhole_collision(const Cyclo& ratio, const Int& degree) {
    auto t = ratio.root_of_unity_order();
    if (!t)
        throw not_in_zu("coefficient ratio " + ratio.str() + " is not a root of unity");
    return pigeonhole_collision_mod(*t, degree);
}

// torsion representation for the root-of-unity subsemigroup: all
// arithmetic on (order, exponent, degree) integers
struct ZuMono {
    RootOfUnity w;
    Int d;
    friend bool operator==(const ZuMono&, const ZuMono&) = default;
};

ZuMono zu_compose(const ZuMono& a, const ZuMono& b) {
    return ZuMono{a.w.times(b.w.pow(a.d)), a.d * b.d};
}

ZuMono zu_eval(const Word& word, const ZuMono& f1, const ZuMono& f2) {
    std::optional<ZuMono> acc;
    for (std::size_t idx : word.indices) {
        const ZuMono& g = (idx == 1) ? f1 : f2;
        acc = acc ? zu_compose(*acc, g) : g;
    }
    return *acc;
}

Word repeat(std::size_t idx, unsigned long count) {
    Word w;
    w.indices.assign(count, idx);
    return w;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.indices.insert(w.indices.end(), b.indices.begin(), b.indices.end());
    return w;
}

void append_pattern(Word& w, std::initializer_list<std::size_t> pat, unsigned long times) {
    for (unsigned long i = 0; i < times; ++i)
        w.indices.insert(w.indices.end(), pat.begin(), pat.end());
}

void verify_witness(const WitnessPair& wp, const Monomial& f1, const Monomial& f2) {
    std::vector<Monomial> pair{f1, f2};
    Monomial lhs = mono_compose(eval_word(wp.x, pair), f1);
    Monomial rhs = mono_compose(eval_word(wp.y, pair), f2);
    if (!(lhs == rhs)) throw error("internal: reversibility witness failed verification");
}

// the ratio whose root-of-unity order drives the equal-degree pigeonhole
// for (f1, f2); for unequal degrees it is the ratio of f1∘f2 and f2∘f1
Cyclo matched_ratio(const Monomial& f1, const Monomial& f2) {
    if (f1.degree == f2.degree) return f1.coeff / f2.coeff;
    Monomial a = mono_compose(f1, f2), b = mono_compose(f2, f1);
    return a.coeff / b.coeff;
}

} // namespace

Monomial::Monomial(Cyclo c, Int d) : coeff(std::move(c)), degree(std::move(d)) {
    if (coeff.is_zero()) throw error("monomial coefficient must be nonzero");
    if (degree < 2) throw error("monomial degree must be at least 2");
}

Monomial mono_compose(const Monomial& q, const Monomial& r) {
    return Monomial(q.coeff * r.coeff.pow(q.degree), q.degree * r.degree);
}

MonomialSemigroup::MonomialSemigroup(std::vector<Monomial> gens) : generators(std::move(gens)) {
    if (generators.empty()) throw error("monomial semigroup needs at least one generator");
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i] == generators[j])
                throw error("monomial semigroup generators must be pairwise distinct");
}

Profile profile(const MonomialSemigroup& s) {
    Profile p;
    for (const Monomial& g : s.generators) {
        auto r = as_root_of_unity(g.coeff);
        if (!r) throw not_in_zu("generator coefficient " + g.coeff.str() + " is not a root of unity");
        p.u_gens.push_back(*r);
        p.n_gens.push_back(g.degree);
        for (const Int& q : prime_support(Int(r->order))) p.p1.insert(q);
        for (const Int& q : prime_support(g.degree)) p.p2.insert(q);
    }
    return p;
}

Monomial phi_map(const Monomial& q, const std::set<Int>& p2) {
    auto r = as_root_of_unity(q.coeff);
    if (!r) throw not_in_zu("coefficient " + q.coeff.str() + " is not a root of unity");
    auto [e1, e2] = crt_split(*r, p2);
    return Monomial(e1.value(), q.degree);
}

Monomial eval_word(const Word& w, const std::vector<Monomial>& gens) {
    if (w.indices.empty()) throw error("cannot evaluate the empty word");
    std::optional<Monomial> acc;
    for (std::size_t idx : w.indices) {
        if (idx < 1 || idx > gens.size()) throw error("word index out of range");
        const Monomial& g = gens[idx - 1];
        acc = acc ? mono_compose(*acc, g) : g;
    }
    return *acc;
}

Series eval_word(const Word& w, const std::vector<Series>& gens) {
    if (w.indices.empty()) throw error("cannot evaluate the empty word");
    std::optional<Series> acc;
    for (std::size_t idx : w.indices) {
        if (idx < 1 || idx > gens.size()) throw error("word index out of range");
        const Series& g = gens[idx - 1];
        acc = acc ? compose(*acc, g) : g;
    }
    return *acc;
}

std::optional<Word> congruent(const Monomial& q1, const Monomial& q2, const MonomialSemigroup& s) {
    if (q1.degree != q2.degree) return std::nullopt;
    if (q1 == q2) return Word{{1}};

    Cyclo ratio = q1.coeff / q2.coeff;
    auto t = ratio.root_of_unity_order();
    if (!t) throw not_in_zu("coefficient ratio " + ratio.str() + " is not a root of unity");
    unsigned long n = *t; // n > 1 here: ratio 1 implies q1 == q2

    // s ∘ q1 = s ∘ q2 iff the degree of s is divisible by n, so search the
    // multiplicative closure of the generator degrees in Z/n
    std::map<unsigned long, Word> reached;
    std::deque<unsigned long> frontier;
    auto degree_mod = [n](const Int& d) {
        return static_cast<unsigned long>(mpz_fdiv_ui(d.get_mpz_t(), n));
    };
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
        unsigned long r = degree_mod(s.generators[i].degree);
        if (!reached.count(r)) {
            reached.emplace(r, Word{{i + 1}});
            frontier.push_back(r);
        }
    }
    while (!frontier.empty() && !reached.count(0)) {
        unsigned long r = frontier.front();
        frontier.pop_front();
        for (std::size_t i = 0; i < s.generators.size(); ++i) {
            unsigned long nr = (r * degree_mod(s.generators[i].degree)) % n;
            if (!reached.count(nr)) {
                reached.emplace(nr, concat(reached.at(r), Word{{i + 1}}));
                frontier.push_back(nr);
            }
        }
    }
    auto hit = reached.find(0);
    if (hit == reached.end()) return std::nullopt;

    const Word& witness = hit->second;
    Monomial sv = eval_word(witness, s.generators);
    if (!(mono_compose(sv, q1) == mono_compose(sv, q2)))
        throw error("internal: congruence witness failed verification");
    return witness;
}

Quotient quotient(const MonomialSemigroup& s) {
    Profile prof = profile(s);
    std::vector<Monomial> images;
    images.reserve(s.generators.size());
    for (const Monomial& g : s.generators) images.push_back(phi_map(g, prof.p2));

    std::vector<Monomial> dedup;
    for (const Monomial& m : images) {
        bool seen = false;
        for (const Monomial& d : dedup) seen = seen || d == m;
        if (!seen) dedup.push_back(m);
    }

    std::set<Int> p1_image;
    for (const Monomial& m : dedup) {
        auto r = as_root_of_unity(m.coeff);
        for (const Int& q : prime_support(Int(r->order))) p1_image.insert(q);
    }
    for (const Int& q : p1_image)
        if (prof.p2.count(q)) throw error("internal: quotient image supports intersect");

    return Quotient{std::move(images), MonomialSemigroup(std::move(dedup)), std::move(p1_image),
                    std::move(prof.p2)};
}

WitnessPair reversibility_witness(const Monomial& f1, const Monomial& f2) {
    WitnessPair out;
    if (f1 == f2) {
        out.x = Word{{1}};
        out.y = Word{{1}};
        verify_witness(out, f1, f2);
        return out;
    }

    // torsion fast path: both coefficients are roots of unity, so the
    // whole construction and its verification run on integers
    auto r1 = as_root_of_unity(f1.coeff);
    auto r2 = as_root_of_unity(f2.coeff);
    if (r1 && r2) {
        ZuMono m1{*r1, f1.degree}, m2{*r2, f2.degree};
        if (f1.degree == f2.degree) {
            Collision c = pigeonhole_collision_mod(r1->times(r2->inverse()).order, f1.degree);
            out.x = repeat(1, c.j2 - 1);
            out.y = concat(repeat(1, c.j1), repeat(2, c.j2 - c.j1 - 1));
        } else {
            ZuMono a = zu_compose(m1, m2), b = zu_compose(m2, m1);
            if (a == b) {
                out.x = Word{{2}};
                out.y = Word{{1}};
            } else {
                Collision c =
                    pigeonhole_collision_mod(a.w.times(b.w.inverse()).order, a.d);
                Word x, y;
                append_pattern(x, {1, 2}, c.j1);
                append_pattern(x, {2, 1}, c.j2 - c.j1 - 1);
                x.indices.push_back(2);
                append_pattern(y, {1, 2}, c.j2 - 1);
                y.indices.push_back(1);
                out.x = std::move(x);
                out.y = std::move(y);
            }
        }
        if (!(zu_compose(zu_eval(out.x, m1, m2), m1) == zu_compose(zu_eval(out.y, m1, m2), m2)))
            throw error("internal: reversibility witness failed verification");
        return out;
    }

    if (f1.degree == f2.degree) {
        // F1^(j2) = F1^(j1) ∘ F2^(j2-j1)
        Collision c = pigeonhole_collision(f1.coeff / f2.coeff, f1.degree);
        out.x = repeat(1, c.j2 - 1);
        out.y = concat(repeat(1, c.j1), repeat(2, c.j2 - c.j1 - 1));
        verify_witness(out, f1, f2);
        return out;
    }
    Monomial a = mono_compose(f1, f2), b = mono_compose(f2, f1);
    if (a == b) {
        out.x = Word{{2}};
        out.y = Word{{1}};
        verify_witness(out, f1, f2);
        return out;
    }
    // (F1∘F2)^(j2) = (F1∘F2)^(j1) ∘ (F2∘F1)^(j2-j1), rewritten so the
    // trailing letters are F1 and F2 respectively
    Collision c = pigeonhole_collision(a.coeff / b.coeff, a.degree);
    Word x, y;
    append_pattern(x, {1, 2}, c.j1);
    append_pattern(x, {2, 1}, c.j2 - c.j1 - 1);
    x.indices.push_back(2);
    append_pattern(y, {1, 2}, c.j2 - 1);
    y.indices.push_back(1);
    out.x = std::move(x);
    out.y = std::move(y);
    verify_witness(out, f1, f2);
    return out;
}

unsigned long reversibility_bound(const Monomial& f1, const Monomial& f2) {
    if (f1 == f2) return 2;
    Cyclo r = matched_ratio(f1, f2);
    auto t = r.root_of_unity_order();
    if (!t) throw not_in_zu("coefficient ratio " + r.str() + " is not a root of unity");
    return *t + 1;
}

CommonLeftMultiple common_left_multiple(const MonomialSemigroup& s) {
    return common_left_multiple(s.generators);
}

CommonLeftMultiple common_left_multiple(const std::vector<Monomial>& gens) {
    if (gens.empty()) throw error("common_left_multiple needs at least one generator");
    std::vector<Word> words;
    Word f_word;

    if (gens.size() == 1) {
        words.push_back(Word{{1}});
        f_word = Word{{1, 1}};
    } else {
        // base case: right reversibility of the first two generators, whose
        // pair indices already are the generator indices
        WitnessPair wp = reversibility_witness(gens[0], gens[1]);
        words.push_back(wp.x);
        words.push_back(wp.y);
        f_word = concat(words[0], Word{{1}});
    }

    for (std::size_t j = 3; j <= gens.size(); ++j) {
        Monomial f = eval_word(f_word, gens);
        WitnessPair wp = reversibility_witness(f, gens[j - 1]);

        auto expand = [&](const Word& w) {
            Word out;
            for (std::size_t idx : w.indices) {
                if (idx == 1) out = concat(out, f_word);
                else out.indices.push_back(j);
            }
            return out;
        };
        Word xg = expand(wp.x);
        Word yg = expand(wp.y);
        for (Word& a : words) a = concat(xg, a);
        words.push_back(yg);
        f_word = concat(xg, f_word);
    }

    Monomial value = eval_word(f_word, gens);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Monomial check = mono_compose(eval_word(words[i], gens), gens[i]);
        if (!(check == value)) throw error("internal: common left multiple failed verification");
    }
    return CommonLeftMultiple{value, std::move(words)};
}

WitnessPair free_pair_relation(const Monomial& f1, const Monomial& f2) {
    if (f1 == f2) throw error("free_pair_relation requires distinct monomials");
    std::vector<Monomial> pair{f1, f2};
    WitnessPair out;
    if (f1.degree == f2.degree) {
        Collision c = pigeonhole_collision(f1.coeff / f2.coeff, f1.degree);
        out.x = repeat(1, c.j2);
        out.y = concat(repeat(1, c.j1), repeat(2, c.j2 - c.j1));
    } else {
        Monomial a = mono_compose(f1, f2), b = mono_compose(f2, f1);
        if (a == b) {
            out.x = Word{{1, 2}};
            out.y = Word{{2, 1}};
        } else {
            Collision c = pigeonhole_collision(a.coeff / b.coeff, a.degree);
            append_pattern(out.x, {1, 2}, c.j2);
            append_pattern(out.y, {1, 2}, c.j1);
            append_pattern(out.y, {2, 1}, c.j2 - c.j1);
        }
    }
    if (out.x == out.y) throw error("internal: free pair relation degenerated");
    if (!(eval_word(out.x, pair) == eval_word(out.y, pair)))
        throw error("internal: free pair relation failed verification");
    return out;
}

std::vector<Monomial> indecomposables(const std::vector<Cyclo>& u_gens,
                                      const std::vector<Int>& n_gens,
                                      unsigned bound) {
    if (u_gens.empty() || n_gens.empty()) throw error("indecomposables: empty generator data");
    for (const Cyclo& u : u_gens)
        if (u.is_zero()) throw error("indecomposables: zero coefficient generator");
    for (const Int& d : n_gens)
        if (d < 2) throw error("indecomposables: degrees must be at least 2");
    if (bound == 0) return {};

    // multiplicative closure of the coefficients, up to `bound` factors
    std::vector<Cyclo> u_set;
    auto insert_u = [&u_set](const Cyclo& c) {
        for (const Cyclo& x : u_set)
            if (x == c) return;
        u_set.push_back(c);
    };
    std::vector<Cyclo> layer(u_gens);
    for (const Cyclo& c : layer) insert_u(c);
    for (unsigned len = 2; len <= bound; ++len) {
        std::vector<Cyclo> next;
        for (const Cyclo& x : layer)
            for (const Cyclo& g : u_gens) next.push_back(x * g);
        layer = std::move(next);
        for (const Cyclo& c : layer) insert_u(c);
    }
    bool has_one = false;
    for (const Cyclo& c : u_set) has_one = has_one || c.is_one();
    if (!has_one) throw error("indecomposables: the coefficient semigroup must contain 1");

    // degree closure up to `bound` factors
    std::set<Int> n_set(n_gens.begin(), n_gens.end());
    {
        std::set<Int> cur(n_gens.begin(), n_gens.end());
        for (unsigned len = 2; len <= bound; ++len) {
            std::set<Int> next;
            for (const Int& x : cur)
                for (const Int& g : n_gens) next.insert(x * g);
            for (const Int& x : next) n_set.insert(x);
            cur = std::move(next);
        }
    }

    // exact membership in the full degree semigroup
    std::map<Int, bool> memo;
    auto in_n = [&](auto&& self, const Int& d) -> bool {
        auto it = memo.find(d);
        if (it != memo.end()) return it->second;
        bool yes = false;
        for (const Int& g : n_gens) {
            if (d == g) { yes = true; break; }
            if (d % g == 0 && self(self, d / g)) { yes = true; break; }
        }
        memo[d] = yes;
        return yes;
    };

    auto coeff_splits = [&](const Cyclo& u, const Int& d1) {
        for (const Cyclo& u1 : u_set)
            for (const Cyclo& u2 : u_set)
                if (u1 * u2.pow(d1) == u) return true;
        return false;
    };

    std::vector<Monomial> out;
    for (const Int& d : n_set) {
        // all factorizations d = d1 * d2 with d1, d2 >= 2 in the degree semigroup
        std::vector<Int> d1s;
        for (Int d1(2); d1 * d1 <= d; ++d1) {
            if (d % d1 != 0) continue;
            Int d2 = d / d1;
            if (in_n(in_n, d1) && in_n(in_n, d2)) d1s.push_back(d1);
            if (d1 != d2 && in_n(in_n, d2) && in_n(in_n, d1)) d1s.push_back(d2);
        }
        for (const Cyclo& u : u_set) {
            bool decomposable = false;
            for (const Int& d1 : d1s)
                decomposable = decomposable || coeff_splits(u, d1);
            if (!decomposable) out.emplace_back(u, d);
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.str() < b.str();
    });
    return out;
}

} // namespace powsem
