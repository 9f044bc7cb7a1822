// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here is exact arithmetic; there are no tolerances to
// tune, only equality at stated precisions and stated time budgets.

#include "powsem/decide.hpp"
#include "powsem/errors.hpp"
#include "powsem/explorer.hpp"
#include "powsem/normalize.hpp"
#include "powsem/parse.hpp"
#include "powsem/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace powsem;
using nlohmann::json;

namespace {

int checks_failed = 0;
std::vector<json> produced_reports; // collected for criterion 8

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++checks_failed;
        std::printf("    FAILED: %s\n", what.c_str());
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Series zmono(const Cyclo& c, long d) { return Series::monomial(c, Int(d)); }

// ---------------------------------------------------------------- criterion 1

bool criterion_decision_regressions() {
    const Config cfg; // N = 16, L = 6
    struct Case {
        const char* name;
        std::vector<std::string> gens;
    };

    {
        auto t0 = std::chrono::steady_clock::now();
        json r = run_decide({"z^2", "zeta(5)*z^3"}, cfg);
        expect(seconds_since(t0) < 5.0, "regression 1 exceeded 5 s");
        expect(r.at("verdict") == "amenable", "<z^2, zeta5 z^3> must be amenable");
        expect(r.at("certificate").at("witness").at("equality") == "exact",
               "witness must verify exactly");
        produced_reports.push_back(r);
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        json r = run_decide({"z^2", "z^2 + z^3"}, cfg);
        expect(seconds_since(t0) < 5.0, "regression 2 exceeded 5 s");
        expect(r.at("verdict") == "not_amenable", "<z^2, z^2+z^3> must be not amenable");
        const json& c = r.at("certificate");
        expect(c.at("kind") == "non_monomial_coefficient", "expected a non-monomial certificate");
        expect(c.at("generator") == 2 && c.at("exponent") == "3",
               "certificate must point at generator 2, exponent 3");
        produced_reports.push_back(r);
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        json r = run_decide({"2*z^2"}, cfg);
        expect(seconds_since(t0) < 5.0, "regression 3 exceeded 5 s");
        expect(r.at("verdict") == "amenable", "<2z^2> must be amenable");
        expect(r.at("certificate").contains("normal_forms") &&
                   r.at("certificate").at("normal_forms").at(0) == "z^2",
               "<2z^2> must report normal form z^2");
        produced_reports.push_back(r);
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        json r = run_decide({"2*z^2", "2*z^3"}, cfg);
        expect(seconds_since(t0) < 5.0, "regression 4 exceeded 5 s");
        expect(r.at("verdict") == "not_amenable", "<2z^2, 2z^3> must be not amenable");
        const json& c = r.at("certificate");
        expect(c.at("kind") == "ratio_not_root_of_unity", "expected a ratio certificate");
        expect(c.at("ratio") == "2", "failing ratio must be 2");
        produced_reports.push_back(r);

        // cross-check via the direct conjugation path: the classical
        // normalizer of 2z^2 is z/2 and it sends 2z^3 to (1/2) z^3
        Series beta = bottcher(zmono(Cyclo(2l), 2), Int(12));
        expect(equals(beta, zmono(Cyclo(Rat(1, 2)), 1)).is_exact(), "bottcher(2z^2) must be z/2");
        Series conj = conjugate(zmono(Cyclo(2l), 3), beta, Int(12));
        expect(conj.coeff(Int(3)) == Cyclo(Rat(1, 2)),
               "conjugating 2z^3 by z/2 must give coefficient 1/2");
        expect(!Cyclo(Rat(1, 2)).root_of_unity_order().has_value(),
               "1/2 must not be a root of unity");
    }
    return checks_failed == 0;
}

// ---------------------------------------------------------------- criterion 2

bool criterion_corpus_agreement() {
    std::mt19937 rng(20260808);
    const unsigned long orders[] = {1, 2, 3, 4, 5, 6, 8, 12};
    int total = 0, witnessed = 0, not_amenable = 0, disagreements = 0;

    auto random_root = [&]() {
        unsigned long t = orders[rng() % 8];
        unsigned long j = 1 + rng() % t;
        return RootOfUnity::make(t, static_cast<long>(j)).value();
    };

    for (int trial = 0; trial < 200; ++trial) {
        bool perturbed = trial >= 140;
        std::size_t k = perturbed ? 2 + rng() % 2 : 1 + rng() % 3;
        std::vector<Series> gens;
        std::vector<std::string> rendered;
        for (std::size_t i = 0; i < k; ++i) {
            long d = 2 + static_cast<long>(rng() % 3);
            Series::Terms t{{Int(d), random_root()}};
            if (perturbed && i == rng() % k) {
                long e = d + 1 + static_cast<long>(rng() % 2);
                t[Int(e)] = random_root();
            }
            gens.push_back(Series::polynomial(std::move(t)));
        }
        // duplicate generators are legal input but make weak corpus entries
        bool dup = false;
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                dup = dup || equals(gens[i], gens[j]).is_exact();
        if (dup) {
            --trial;
            continue;
        }

        unsigned depth = perturbed ? 3 : (k == 3 ? 5 : 6);
        Verdict v = decide(gens, Int(16), depth);
        auto w = check_condition_4(gens, depth, Int(16));
        ++total;
        if (w) {
            ++witnessed;
            if (v.kind() != Verdict::Kind::amenable) ++disagreements;
        }
        if (v.kind() == Verdict::Kind::not_amenable) {
            ++not_amenable;
            if (w) ++disagreements;
        }
    }
    std::printf("    corpus: %d semigroups, %d with breadth-first witnesses, %d not amenable\n",
                total, witnessed, not_amenable);
    expect(total >= 200, "corpus must cover at least 200 semigroups");
    expect(witnessed >= 60, "corpus too weak: breadth-first search almost never concluded");
    expect(not_amenable >= 30, "corpus too weak: hardly any not-amenable cases");
    expect(disagreements == 0, "decide disagreed with the breadth-first oracle");
    return checks_failed == 0;
}

// ---------------------------------------------------------------- criterion 3

bool criterion_reversibility_machinery() {
    std::vector<Monomial> elems;
    for (unsigned long t = 1; t <= 12; ++t)
        for (unsigned long j = 0; j < t; ++j) {
            if (t > 1 && gcd_ul(j == 0 ? t : j, t) != 1) continue;
            for (long d = 2; d <= 5; ++d)
                elems.emplace_back(RootOfUnity::make(t, static_cast<long>(j)).value(), Int(d));
        }
    std::printf("    %zu elements, %zu ordered pairs\n", elems.size(), elems.size() * elems.size());

    std::mt19937 rng(99);
    std::size_t cyclo_checked = 0;
    for (const Monomial& f1 : elems) {
        for (const Monomial& f2 : elems) {
            WitnessPair w = reversibility_witness(f1, f2); // verified on construction
            if (f1.degree == f2.degree && !(f1 == f2)) {
                unsigned long lcm_order =
                    lcm_ul(*f1.coeff.root_of_unity_order(), *f2.coeff.root_of_unity_order());
                if (w.x.indices.size() + 1 > lcm_order + 1) {
                    expect(false, "pigeonhole bound j2 <= lcm + 1 violated");
                    return false;
                }
            }
            // independent spot check through full cyclotomic arithmetic
            if (rng() % 64 == 0) {
                std::vector<Monomial> pair{f1, f2};
                Monomial lhs = mono_compose(eval_word(w.x, pair), f1);
                Monomial rhs = mono_compose(eval_word(w.y, pair), f2);
                if (!(lhs == rhs)) {
                    expect(false, "cyclotomic replay of a witness failed");
                    return false;
                }
                ++cyclo_checked;
            }
        }
    }
    std::printf("    %zu witnesses independently replayed in cyclotomic arithmetic\n", cyclo_checked);
    expect(cyclo_checked >= 300, "expected at least 300 independent replays");
    return checks_failed == 0;
}

// ---------------------------------------------------------------- criterion 4

bool criterion_congruence_machinery() {
    const unsigned long orders[] = {1, 2, 3, 4, 6, 9, 12};
    const long degrees[] = {2, 3, 4, 9};
    long pairs_checked = 0, cancel_checked = 0;

    for (unsigned long t1 : orders) {
        for (long d1 : degrees) {
            for (unsigned long t2 : orders) {
                for (long d2 : degrees) {
                    Monomial g1(RootOfUnity::make(t1, 1).value(), Int(d1));
                    Monomial g2(RootOfUnity::make(t2, 1).value(), Int(d2));
                    if (g1 == g2) continue;
                    MonomialSemigroup s({g1, g2});
                    std::set<Int> p2 = profile(s).p2;

                    std::vector<Monomial> elems{g1, g2};
                    for (const Monomial& a : {g1, g2})
                        for (const Monomial& b : {g1, g2}) elems.push_back(mono_compose(a, b));

                    // both directions of the kernel equality
                    for (const Monomial& q1 : elems) {
                        for (const Monomial& q2 : elems) {
                            if (q1.degree != q2.degree) continue;
                            bool cong = congruent(q1, q2, s).has_value();
                            bool kernel = phi_map(q1, p2) == phi_map(q2, p2);
                            if (cong != kernel) {
                                expect(false, "congruence and phi-kernel disagree");
                                return false;
                            }
                            ++pairs_checked;
                        }
                    }

                    // left cancellativity of the quotient image
                    Quotient q = quotient(s);
                    std::vector<Monomial> imgs = q.image_semigroup.generators;
                    std::vector<Monomial> ielems = imgs;
                    for (const Monomial& a : imgs)
                        for (const Monomial& b : imgs) ielems.push_back(mono_compose(a, b));
                    for (const Monomial& a : ielems)
                        for (const Monomial& f1 : ielems)
                            for (const Monomial& f2 : ielems) {
                                if (mono_compose(a, f1) == mono_compose(a, f2) && !(f1 == f2)) {
                                    expect(false, "quotient image is not left cancellative");
                                    return false;
                                }
                                ++cancel_checked;
                            }
                }
            }
        }
    }
    std::printf("    %ld congruence pairs, %ld cancellation triples, zero counterexamples\n",
                pairs_checked, cancel_checked);
    expect(pairs_checked > 3000, "exhaustive family unexpectedly small");
    return checks_failed == 0;
}

// ---------------------------------------------------------------- criterion 5

bool criterion_normalization() {
    std::mt19937 rng(5150);
    auto random_zeta12_coeff = [&]() {
        std::vector<Rat> coeffs(euler_phi(12));
        for (auto& c : coeffs) c = Rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
        return Cyclo::from_coeffs(12, coeffs);
    };

    for (int i = 0; i < 100; ++i) {
        long n = 2 + static_cast<long>(rng() % 2);
        Series::Terms t;
        Cyclo lead = random_zeta12_coeff();
        while (lead.is_zero()) lead = random_zeta12_coeff();
        t[Int(n)] = lead;
        long extras = 1 + static_cast<long>(rng() % 3);
        for (long e = 0; e < extras; ++e)
            t[Int(n + 1 + static_cast<long>(rng() % 5))] = random_zeta12_coeff();
        Series a = Series::polynomial(std::move(t));
        if (a.terms().size() < 2) {
            --i;
            continue;
        }

        Normalizer nz = monomial_normalizer(a, Int(16));
        Equality fe = equals(compose(a, nz.beta), compose(nz.beta, nz.monomial_form()));
        if (fe.is_unequal() || (!fe.is_exact() && fe.detail < 16)) {
            expect(false, "functional equation failed at sample " + std::to_string(i));
            return false;
        }
    }
    std::printf("    100 random generators over Q(zeta_12), equation exact through precision 16\n");
    return checks_failed == 0;
}

// ---------------------------------------------------------------- criterion 6

bool criterion_series_algebra() {
    std::mt19937 rng(6174);
    const unsigned long ms[] = {1, 3, 4, 12};
    auto random_coeff = [&](bool nonzero) {
        for (;;) {
            unsigned long m = ms[rng() % 4];
            std::vector<Rat> coeffs(euler_phi(m));
            for (auto& c : coeffs)
                c = Rat(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 2));
            Cyclo c = Cyclo::from_coeffs(m, coeffs);
            if (!nonzero || !c.is_zero()) return c;
        }
    };
    auto random_poly = [&](long min_order, long max_degree) {
        Series::Terms t;
        t[Int(min_order)] = random_coeff(true);
        long extras = static_cast<long>(rng() % 3);
        for (long e = 0; e < extras; ++e) {
            long exp = min_order + 1 + static_cast<long>(rng() % (max_degree - min_order + 1));
            t[Int(exp)] = random_coeff(false);
        }
        return Series::polynomial(std::move(t));
    };

    int cases = 0;
    for (int i = 0; i < 250; ++i) { // associativity, exact
        Series a = random_poly(1, 4), b = random_poly(1, 4), c = random_poly(1, 4);
        if (!equals(compose(compose(a, b), c), compose(a, compose(b, c))).is_exact()) {
            expect(false, "associativity failed");
            return false;
        }
        ++cases;
    }
    for (int i = 0; i < 250; ++i) { // order multiplicativity
        Series a = random_poly(1 + static_cast<long>(rng() % 3), 5);
        Series b = random_poly(1 + static_cast<long>(rng() % 3), 5);
        if (*compose(a, b).order() != *a.order() * *b.order()) {
            expect(false, "order multiplicativity failed");
            return false;
        }
        ++cases;
    }
    for (int i = 0; i < 250; ++i) { // compositional inverse round-trip
        Series b = random_poly(1, 4);
        Series inv = comp_inverse(b, Int(10));
        Equality left = equals(compose(b, inv), Series::identity());
        Equality right = equals(compose(inv, b), Series::identity());
        bool deep_enough = left.is_exact() || left.detail >= 10;
        if (left.is_unequal() || right.is_unequal() || !deep_enough) {
            expect(false, "compositional inverse round-trip failed");
            return false;
        }
        ++cases;
    }
    for (int i = 0; i < 250; ++i) { // right cancellativity
        Series a1 = random_poly(2, 5), a2 = random_poly(2, 5), x = random_poly(2, 4);
        bool same_out = equals(compose(a1, x), compose(a2, x)).is_exact();
        bool same_in = equals(a1, a2).is_exact();
        if (same_out != same_in) {
            expect(false, "right cancellativity failed");
            return false;
        }
        ++cases;
    }
    std::printf("    %d exact algebra cases\n", cases);
    expect(cases >= 1000, "need at least 1000 cases");
    return checks_failed == 0;
}

// ---------------------------------------------------------------- criterion 7

bool criterion_indecomposable_demonstrator() {
    json r = run_indecomposable({"1", "2"}, {2}, Config{});
    produced_reports.push_back(r);
    std::vector<Monomial> elems = indecomposables({Cyclo(1l), Cyclo(2l)}, {Int(2)}, 4);
    int degree2 = 0;
    for (const Monomial& m : elems)
        if (m.degree == 2) ++degree2;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (elems[i] == elems[j]) {
                expect(false, "duplicate indecomposables");
                return false;
            }
    std::printf("    %d distinct indecomposable elements of degree 2 within bound 4\n", degree2);
    expect(degree2 >= 5, "need at least 5 degree-2 indecomposables");
    return checks_failed == 0;
}

// ---------------------------------------------------------------- criterion 8

bool criterion_certificate_replay() {
    // reports produced by the earlier criteria, plus one of each remaining kind
    const Config cfg;
    produced_reports.push_back(run_normalize("z^2 + z^3", cfg));
    Config bcfg = cfg;
    bcfg.bottcher = true;
    produced_reports.push_back(run_normalize("-z^3", bcfg));
    produced_reports.push_back(run_witness("z^2", "-z^2", cfg));
    produced_reports.push_back(run_witness("zeta(3)*z^2", "z^2", cfg));
    produced_reports.push_back(run_quotient({"z^2", "-z^2"}, cfg));
    produced_reports.push_back(run_quotient({"zeta(12)*z^2", "zeta(3)*z^3"}, cfg));
    produced_reports.push_back(run_explore({"z^2", "-z^2"}, cfg));
    produced_reports.push_back(run_decide({"z^2 - (1/2)*z^4 + O(z^12)", "z^2 + O(z^12)"},
                                          Config{Int(10), 6, false, 4}));
    // corpus-style samples through the report layer
    produced_reports.push_back(run_decide({"zeta(3)*z^2", "zeta(4)*z^2", "z^3"}, cfg));
    produced_reports.push_back(run_decide({"zeta(6)*z^4", "z^2 + zeta(3)*z^5"}, cfg));

    int verified = 0;
    for (const json& r : produced_reports) {
        json reparsed = json::parse(r.dump()); // from the serialized form alone
        std::vector<std::string> messages;
        if (!verify_report(reparsed, messages)) {
            std::string what = "report failed to verify: " + r.at("command").get<std::string>();
            for (const auto& m : messages) what += " [" + m + "]";
            expect(false, what);
            return false;
        }
        ++verified;
    }
    std::printf("    %d reports verified from their serialized form\n", verified);
    expect(verified >= 14, "expected at least 14 reports");
    return checks_failed == 0;
}

struct Criterion {
    const char* name;
    std::function<bool()> run;
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"decision regressions", criterion_decision_regressions},
        {"corpus agreement with the breadth-first oracle", criterion_corpus_agreement},
        {"reversibility witnesses", criterion_reversibility_machinery},
        {"congruence and quotient machinery", criterion_congruence_machinery},
        {"normalization functional equation", criterion_normalization},
        {"series algebra", criterion_series_algebra},
        {"indecomposable demonstrator", criterion_indecomposable_demonstrator},
        {"certificate replay", criterion_certificate_replay},
    };

    int failures = 0;
    int index = 1;
    for (const auto& c : criteria) {
        checks_failed = 0;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        std::printf("[%d] %-48s %s (%.2f s)%s\n", index, c.name, ok ? "PASS" : "FAIL",
                    seconds_since(t0), note.c_str());
        if (!ok) ++failures;
        ++index;
    }
    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
