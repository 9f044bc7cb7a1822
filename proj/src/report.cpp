#include "powsem/report.hpp"

#include "powsem/decide.hpp"
#include "powsem/errors.hpp"
#include "powsem/explorer.hpp"
#include "powsem/normalize.hpp"
#include "powsem/parse.hpp"

#include <chrono>

namespace powsem {

namespace {

using nlohmann::json;

class Stopwatch {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }
};

json base_report(const char* command, const Config& cfg) {
    return json{{"schema_version", 1},
                {"command", command},
                {"config", {{"precision", cfg.precision.get_str()}, {"depth", cfg.depth}}}};
}

json word_json(const Word& w) {
    json a = json::array();
    for (std::size_t i : w.indices) a.push_back(i);
    return a;
}

Word word_from_json(const json& a) {
    Word w;
    for (const auto& v : a) w.indices.push_back(v.get<std::size_t>());
    return w;
}

json words_json(const std::vector<Word>& ws) {
    json a = json::array();
    for (const Word& w : ws) a.push_back(word_json(w));
    return a;
}

json int_set_json(const std::set<Int>& s) {
    json a = json::array();
    for (const Int& x : s) a.push_back(x.get_str());
    return a;
}

std::vector<Series> parse_generators(const std::vector<std::string>& literals) {
    if (literals.empty()) throw parse_error("no generators in input", 0);
    std::vector<Series> out;
    out.reserve(literals.size());
    for (const std::string& s : literals) out.push_back(parse_generator(s));
    return out;
}

json decide_certificate(const Verdict& v) {
    switch (v.kind()) {
        case Verdict::Kind::amenable: {
            const AmenableCert& c = v.amenable();
            json w{{"words", words_json(c.words)},
                   {"common", c.common.str()},
                   {"equality", c.exact ? "exact" : "to_precision"}};
            if (!c.exact) w["verified_precision"] = c.verified_precision.get_str();
            json forms = json::array();
            for (const Monomial& m : c.forms) forms.push_back(m.str());
            json cert{{"beta", c.beta.str()}, {"monomial_forms", forms}, {"witness", w}};
            if (c.alignment) {
                cert["alignment_unit"] = c.alignment->str();
                json nf = json::array();
                for (const Monomial& m : *c.aligned_forms) nf.push_back(m.str());
                cert["normal_forms"] = nf;
            }
            return cert;
        }
        case Verdict::Kind::not_amenable: {
            const NotAmenableCert& c = v.not_amenable();
            if (const auto* nm = std::get_if<NonMonomialCert>(&c))
                return json{{"kind", "non_monomial_coefficient"},
                            {"generator", nm->generator},
                            {"exponent", nm->exponent.get_str()},
                            {"value", nm->value.str()}};
            if (const auto* nr = std::get_if<NotRootCert>(&c))
                return json{{"kind", "coefficient_not_root_of_unity"},
                            {"generator", nr->generator},
                            {"value", nr->value.str()}};
            const auto& rc = std::get<RatioCert>(c);
            return json{{"kind", "ratio_not_root_of_unity"},
                        {"pair", {rc.i, rc.j}},
                        {"ratio", rc.ratio.str()}};
        }
        case Verdict::Kind::inconclusive: {
            const InconclusiveInfo& c = v.inconclusive();
            return json{{"reason", c.reason},
                        {"suggested_precision", c.suggested_precision.get_str()},
                        {"suggested_depth", c.suggested_depth}};
        }
    }
    throw error("internal: unknown verdict kind");
}

const char* verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::amenable: return "amenable";
        case Verdict::Kind::not_amenable: return "not_amenable";
        default: return "inconclusive";
    }
}

} // namespace

json run_decide(const std::vector<std::string>& generator_literals, const Config& cfg) {
    Stopwatch sw;
    std::vector<Series> gens = parse_generators(generator_literals);
    Verdict v = decide(gens, cfg.precision, cfg.depth);

    json report = base_report("decide", cfg);
    report["generators"] = generator_literals;
    report["verdict"] = verdict_name(v.kind());
    report["certificate"] = decide_certificate(v);

    json caveats = json::array();
    bool truncated_input = false;
    for (const Series& g : gens) truncated_input = truncated_input || !g.exact();
    if (v.kind() == Verdict::Kind::amenable && !v.amenable().exact)
        caveats.push_back("witness verified through precision " +
                          v.amenable().verified_precision.get_str() +
                          " only; inputs are truncated series");
    if (truncated_input) caveats.push_back("some generators are truncated series");
    report["caveats"] = caveats;
    report["timing_ms"] = sw.ms();
    return report;
}

json run_normalize(const std::string& literal, const Config& cfg) {
    Stopwatch sw;
    Series a = parse_generator(literal);
    Normalizer nz = monomial_normalizer(a, cfg.precision);
    Equality fe = equals(compose(a, nz.beta), compose(nz.beta, nz.monomial_form()));

    json report = base_report("normalize", cfg);
    report["input"] = literal;
    report["beta"] = nz.beta.str();
    report["monomial_form"] = nz.monomial_form().str();
    report["functional_equation"] =
        fe.is_exact() ? std::string("exact") : "to_precision " + fe.detail.get_str();

    if (cfg.bottcher) {
        json b;
        try {
            Series bb = bottcher(a, cfg.precision);
            b["available"] = true;
            b["beta"] = bb.str();
            json br = json::array();
            for (const RootOfUnity& eps : branches(nz.source_order.get_ui()))
                br.push_back(eps.value().str());
            b["branches"] = br;
        } catch (const root_unavailable& e) {
            b["available"] = false;
            b["reason"] = e.what();
        }
        report["bottcher"] = b;
    }
    report["timing_ms"] = sw.ms();
    return report;
}

json run_explore(const std::vector<std::string>& generator_literals, const Config& cfg) {
    Stopwatch sw;
    std::vector<Series> gens = parse_generators(generator_literals);
    WordTable table = enumerate(gens, cfg.depth, cfg.precision);

    json report = base_report("explore", cfg);
    report["generators"] = generator_literals;
    std::size_t words = 0;
    json collisions = json::array();
    for (const auto& [key, entry] : table.entries) {
        words += entry.words.size();
        if (entry.words.size() > 1)
            collisions.push_back(json{{"value", key},
                                      {"exact", entry.exact},
                                      {"words", words_json(entry.words)}});
    }
    report["word_count"] = words;
    report["distinct_values"] = table.entries.size();
    report["collisions"] = collisions;
    report["timing_ms"] = sw.ms();
    return report;
}

json run_quotient(const std::vector<std::string>& monomial_literals, const Config& cfg) {
    Stopwatch sw;
    std::vector<Monomial> gens;
    for (const std::string& s : monomial_literals) gens.push_back(parse_monomial(s));
    Quotient q = quotient(MonomialSemigroup(gens));

    json report = base_report("quotient", cfg);
    report["generators"] = monomial_literals;
    json images = json::array();
    for (const Monomial& m : q.images) images.push_back(m.str());
    report["images"] = images;
    json image_gens = json::array();
    for (const Monomial& m : q.image_semigroup.generators) image_gens.push_back(m.str());
    report["image_generators"] = image_gens;
    report["p1_image"] = int_set_json(q.p1_image);
    report["p2"] = int_set_json(q.p2);
    report["timing_ms"] = sw.ms();
    return report;
}

json run_witness(const std::string& f1, const std::string& f2, const Config& cfg) {
    Stopwatch sw;
    Monomial m1 = parse_monomial(f1), m2 = parse_monomial(f2);
    WitnessPair wp = reversibility_witness(m1, m2);
    std::vector<Monomial> pair{m1, m2};
    Monomial common = mono_compose(eval_word(wp.x, pair), m1);

    json report = base_report("witness", cfg);
    report["f1"] = f1;
    report["f2"] = f2;
    report["x"] = word_json(wp.x);
    report["y"] = word_json(wp.y);
    report["common"] = common.str();
    report["timing_ms"] = sw.ms();
    return report;
}

json run_indecomposable(const std::vector<std::string>& u_literals,
                        const std::vector<long>& n_gens, const Config& cfg) {
    Stopwatch sw;
    std::vector<Cyclo> us;
    for (const std::string& s : u_literals) us.push_back(parse_cyclo(s));
    std::vector<Int> ns;
    for (long n : n_gens) ns.push_back(Int(n));
    std::vector<Monomial> elems = indecomposables(us, ns, cfg.bound);

    json report = base_report("indecomposable", cfg);
    report["u_generators"] = u_literals;
    json nj = json::array();
    for (long n : n_gens) nj.push_back(n);
    report["n_generators"] = nj;
    report["bound"] = cfg.bound;
    json ej = json::array();
    for (const Monomial& m : elems) ej.push_back(m.str());
    report["elements"] = ej;
    report["timing_ms"] = sw.ms();
    return report;
}

namespace {

bool fail(std::vector<std::string>& messages, const std::string& msg) {
    messages.push_back(msg);
    return false;
}

bool verify_decide(const json& r, std::vector<std::string>& messages) {
    std::vector<std::string> literals = r.at("generators").get<std::vector<std::string>>();
    std::vector<Series> gens = parse_generators(literals);
    Int precision(r.at("config").at("precision").get<std::string>());
    std::string verdict = r.at("verdict");
    const json& cert = r.at("certificate");

    if (verdict == "amenable") {
        // the core proof: the words hit a common element of every ideal
        std::vector<Word> words;
        for (const auto& wj : cert.at("witness").at("words")) words.push_back(word_from_json(wj));
        if (words.size() != gens.size()) return fail(messages, "word count mismatch");
        Series common = parse_series(cert.at("witness").at("common").get<std::string>());
        bool want_exact = cert.at("witness").at("equality") == "exact";
        std::vector<Series> replayed;
        for (std::size_t i = 0; i < gens.size(); ++i)
            replayed.push_back(compose(eval_word(words[i], gens), gens[i]));
        for (std::size_t i = 0; i < replayed.size(); ++i) {
            Equality eq = equals(replayed[0], replayed[i]);
            if (eq.is_unequal()) return fail(messages, "witness replay diverged");
            if (want_exact && !eq.is_exact()) return fail(messages, "witness claimed exact but is not");
        }
        Equality against_common = equals(replayed[0], common);
        if (against_common.is_unequal()) return fail(messages, "common value mismatch");
        if (want_exact && !against_common.is_exact())
            return fail(messages, "common value not exactly reproduced");

        // the conjugation data: beta carries each generator onto its form
        Series beta = parse_series(cert.at("beta").get<std::string>());
        std::vector<std::string> forms = cert.at("monomial_forms").get<std::vector<std::string>>();
        if (forms.size() != gens.size()) return fail(messages, "form count mismatch");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Series conj = conjugate(gens[i], beta, precision);
            if (equals(conj, parse_series(forms[i])).is_unequal())
                return fail(messages, "conjugated generator does not match its form");
        }
        return true;
    }

    if (verdict == "not_amenable") {
        Normalizer nz = monomial_normalizer(gens.front(), precision);
        std::string kind = cert.at("kind");
        if (kind == "non_monomial_coefficient") {
            std::size_t g = cert.at("generator");
            Int e(cert.at("exponent").get<std::string>());
            Cyclo value = parse_cyclo(cert.at("value").get<std::string>());
            if (g < 1 || g > gens.size()) return fail(messages, "generator index out of range");
            Series conj = conjugate(gens[g - 1], nz.beta, precision);
            if (value.is_zero()) return fail(messages, "claimed coefficient is zero");
            if (conj.coeff(e) != value) return fail(messages, "off-monomial coefficient mismatch");
            if (e == *gens[g - 1].order()) return fail(messages, "exponent is the leading position");
            return true;
        }
        // both remaining kinds are statements about the conjugated forms
        std::vector<Cyclo> cs;
        std::vector<Int> ds;
        for (const Series& g : gens) {
            Series conj = conjugate(g, nz.beta, precision);
            Int d = *g.order();
            cs.push_back(conj.coeff(d));
            ds.push_back(d);
        }
        if (kind == "coefficient_not_root_of_unity") {
            std::size_t g = cert.at("generator");
            Cyclo value = parse_cyclo(cert.at("value").get<std::string>());
            if (g < 1 || g > gens.size()) return fail(messages, "generator index out of range");
            if (cs[g - 1] != value) return fail(messages, "coefficient mismatch");
            if (value.root_of_unity_order()) return fail(messages, "value is a root of unity");
            if (!cs[0].root_of_unity_order())
                return fail(messages, "anchor coefficient is not a root of unity");
            return true;
        }
        if (kind == "ratio_not_root_of_unity") {
            std::size_t i = cert.at("pair").at(0), j = cert.at("pair").at(1);
            Cyclo value = parse_cyclo(cert.at("ratio").get<std::string>());
            if (i < 1 || j < 1 || i > gens.size() || j > gens.size() || i == j)
                return fail(messages, "pair indices out of range");
            Cyclo ratio = cs[i - 1].pow(ds[j - 1] - 1) / cs[j - 1].pow(ds[i - 1] - 1);
            if (ratio != value) return fail(messages, "ratio mismatch");
            if (value.root_of_unity_order()) return fail(messages, "ratio is a root of unity");
            return true;
        }
        return fail(messages, "unknown certificate kind");
    }

    if (verdict == "inconclusive") {
        if (!cert.contains("reason") || !cert.contains("suggested_precision"))
            return fail(messages, "inconclusive certificate lacks suggestions");
        return true;
    }
    return fail(messages, "unknown verdict");
}

bool verify_normalize(const json& r, std::vector<std::string>& messages) {
    Series a = parse_generator(r.at("input").get<std::string>());
    Series beta = parse_series(r.at("beta").get<std::string>());
    Series form = parse_series(r.at("monomial_form").get<std::string>());
    Equality fe = equals(compose(a, beta), compose(beta, form));
    if (fe.is_unequal()) return fail(messages, "functional equation failed");
    std::string claimed = r.at("functional_equation");
    if (claimed == "exact" && !fe.is_exact())
        return fail(messages, "claimed exact functional equation is not exact");
    if (r.contains("bottcher") && r.at("bottcher").at("available").get<bool>()) {
        Series bb = parse_series(r.at("bottcher").at("beta").get<std::string>());
        Series target = Series::monomial(Cyclo(1l), *a.order());
        if (equals(compose(a, bb), compose(bb, target)).is_unequal())
            return fail(messages, "bottcher functional equation failed");
    }
    return true;
}

bool verify_explore(const json& r, std::vector<std::string>& messages) {
    std::vector<Series> gens =
        parse_generators(r.at("generators").get<std::vector<std::string>>());
    Int window(r.at("config").at("precision").get<std::string>());
    for (const auto& col : r.at("collisions")) {
        std::vector<Word> words;
        for (const auto& wj : col.at("words")) words.push_back(word_from_json(wj));
        if (words.size() < 2) return fail(messages, "collision with fewer than two words");
        for (std::size_t i = 1; i < words.size(); ++i)
            if (words[i] == words[0]) return fail(messages, "collision words are not distinct");
        Series first = eval_word(words[0], gens);
        for (const Word& w : words) {
            Series v = eval_word(w, gens);
            Equality eq = equals(first, v);
            if (eq.is_unequal()) return fail(messages, "collision words evaluate differently");
        }
    }
    return true;
}

bool verify_quotient(const json& r, std::vector<std::string>& messages) {
    std::vector<std::string> literals = r.at("generators").get<std::vector<std::string>>();
    std::vector<Monomial> gens;
    for (const std::string& s : literals) gens.push_back(parse_monomial(s));
    Quotient q = quotient(MonomialSemigroup(gens));
    std::vector<std::string> images = r.at("images").get<std::vector<std::string>>();
    if (images.size() != q.images.size()) return fail(messages, "image count mismatch");
    for (std::size_t i = 0; i < images.size(); ++i)
        if (!(parse_monomial(images[i]) == q.images[i]))
            return fail(messages, "phi image mismatch");
    for (const auto& p : r.at("p1_image"))
        if (r.at("p2").contains(p)) return fail(messages, "image supports intersect");
    return true;
}

bool verify_witness(const json& r, std::vector<std::string>& messages) {
    Monomial f1 = parse_monomial(r.at("f1").get<std::string>());
    Monomial f2 = parse_monomial(r.at("f2").get<std::string>());
    std::vector<Monomial> pair{f1, f2};
    Word x = word_from_json(r.at("x"));
    Word y = word_from_json(r.at("y"));
    Monomial lhs = mono_compose(eval_word(x, pair), f1);
    Monomial rhs = mono_compose(eval_word(y, pair), f2);
    if (!(lhs == rhs)) return fail(messages, "witness identity failed");
    if (!(lhs == parse_monomial(r.at("common").get<std::string>())))
        return fail(messages, "common value mismatch");
    return true;
}

bool verify_indecomposable(const json& r, std::vector<std::string>& messages) {
    std::vector<Cyclo> us;
    for (const auto& s : r.at("u_generators")) us.push_back(parse_cyclo(s.get<std::string>()));
    std::vector<Int> ns;
    for (const auto& n : r.at("n_generators")) ns.push_back(Int(n.get<long>()));
    unsigned bound = r.at("bound");
    std::vector<Monomial> elems = indecomposables(us, ns, bound);
    const json& claimed = r.at("elements");
    if (claimed.size() != elems.size()) return fail(messages, "element count mismatch");
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (!(parse_monomial(claimed.at(i).get<std::string>()) == elems[i]))
            return fail(messages, "element mismatch");
    return true;
}

} // namespace

bool verify_report(const json& report, std::vector<std::string>& messages) {
    try {
        if (report.at("schema_version") != 1) return fail(messages, "unknown schema version");
        std::string command = report.at("command");
        if (command == "decide") return verify_decide(report, messages);
        if (command == "normalize") return verify_normalize(report, messages);
        if (command == "explore") return verify_explore(report, messages);
        if (command == "quotient") return verify_quotient(report, messages);
        if (command == "witness") return verify_witness(report, messages);
        if (command == "indecomposable") return verify_indecomposable(report, messages);
        return fail(messages, "unknown command: " + command);
    } catch (const std::exception& e) {
        return fail(messages, std::string("verification error: ") + e.what());
    }
}

int exit_code(const json& report) {
    if (report.at("command") != "decide") return 0;
    std::string v = report.at("verdict");
    if (v == "amenable") return 0;
    if (v == "not_amenable") return 1;
    return 2;
}

} // namespace powsem
