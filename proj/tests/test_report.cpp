#include "doctest.h"

#include "powsem/report.hpp"

using namespace powsem;
using nlohmann::json;

namespace {

json strip_timing(json j) {
    j.erase("timing_ms");
    return j;
}

bool verifies(const json& report) {
    std::vector<std::string> messages;
    bool ok = verify_report(report, messages);
    if (!ok)
        for (const auto& m : messages) MESSAGE(m);
    return ok;
}

} // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("decide report carries the verdict and replays") {
    Config cfg;
    json r = run_decide({"z^2", "zeta(5)*z^3"}, cfg);
    CHECK(r.at("schema_version") == 1);
    CHECK(r.at("verdict") == "amenable");
    CHECK(r.at("certificate").at("witness").at("equality") == "exact");
    CHECK(verifies(r));
    CHECK(exit_code(r) == 0);
}

TEST_CASE("decide exit codes") {
    Config cfg;
    CHECK(exit_code(run_decide({"z^2", "z^2 + z^3"}, cfg)) == 1);
    CHECK(exit_code(run_decide({"2*z^2"}, cfg)) == 0);
    json inconclusive = run_decide({"z^9", "z^3"}, Config{Int(4), 6, false, 4});
    CHECK(exit_code(inconclusive) == 2);
}

TEST_CASE("reports are deterministic modulo timing") {
    Config cfg;
    json a = run_decide({"z^2", "-z^2"}, cfg);
    json b = run_decide({"z^2", "-z^2"}, cfg);
    CHECK(strip_timing(a).dump() == strip_timing(b).dump());
}

TEST_CASE("all commands verify from their serialized form") {
    Config cfg;
    CHECK(verifies(json::parse(run_decide({"z^2", "z^2 + z^3"}, cfg).dump())));
    CHECK(verifies(json::parse(run_decide({"2*z^2", "2*z^3"}, cfg).dump())));
    CHECK(verifies(json::parse(run_normalize("z^2 + z^3", cfg).dump())));
    Config bcfg = cfg;
    bcfg.bottcher = true;
    CHECK(verifies(json::parse(run_normalize("-z^3", bcfg).dump())));
    CHECK(verifies(json::parse(run_explore({"z^2", "-z^2"}, cfg).dump())));
    CHECK(verifies(json::parse(run_quotient({"z^2", "-z^2"}, cfg).dump())));
    CHECK(verifies(json::parse(run_witness("z^2", "-z^2", cfg).dump())));
    CHECK(verifies(json::parse(run_indecomposable({"1", "2"}, {2}, cfg).dump())));
}

TEST_CASE("tampered reports fail verification") {
    Config cfg;
    json r = run_decide({"z^2", "zeta(5)*z^3"}, cfg);
    r["certificate"]["witness"]["common"] = "z^4";
    std::vector<std::string> messages;
    CHECK(!verify_report(r, messages));
    CHECK(!messages.empty());

    json w = run_witness("z^2", "-z^2", cfg);
    w["y"] = json::array({2, 2});
    messages.clear();
    CHECK(!verify_report(w, messages));
}

TEST_CASE("witness report matches the named example") {
    json w = run_witness("z^2", "-z^2", Config{});
    CHECK(w.at("x") == json::array({1}));
    CHECK(w.at("y") == json::array({1}));
    CHECK(w.at("common") == "z^4");
}

TEST_CASE("normalize report exposes the recursion output") {
    json r = run_normalize("z^2 + z^3", Config{});
    std::string beta = r.at("beta");
    CHECK(beta.rfind("z - (1/2)*z^2", 0) == 0);
    CHECK(r.at("monomial_form") == "z^2");
}

TEST_CASE("indecomposable report lists the demonstrator family") {
    json r = run_indecomposable({"1", "2"}, {2}, Config{});
    CHECK(r.at("elements").size() >= 5);
}

TEST_SUITE_END();
