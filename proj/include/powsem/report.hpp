#pragma once

#include "powsem/numbers.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace powsem {

struct Config {
    Int precision = Int(16);
    unsigned depth = 6;
    bool bottcher = false;
    unsigned bound = 4;
};

// Every runner returns a self-contained JSON report: schema_version,
// command, config, inputs as literals, and certificates whose words are
// index arrays. Reports verify from their own content alone; serialization
// is deterministic up to the timing_ms field.
nlohmann::json run_decide(const std::vector<std::string>& generator_literals, const Config& cfg);
nlohmann::json run_normalize(const std::string& literal, const Config& cfg);
nlohmann::json run_explore(const std::vector<std::string>& generator_literals, const Config& cfg);
nlohmann::json run_quotient(const std::vector<std::string>& monomial_literals, const Config& cfg);
nlohmann::json run_witness(const std::string& f1, const std::string& f2, const Config& cfg);
nlohmann::json run_indecomposable(const std::vector<std::string>& u_literals,
                                  const std::vector<long>& n_gens, const Config& cfg);

// Re-checks a report's certificates through the public API, using only the
// report's own content. Returns true when everything replays; failure
// details land in `messages`.
bool verify_report(const nlohmann::json& report, std::vector<std::string>& messages);

// decide: 0 amenable, 1 not amenable, 2 inconclusive; other commands 0
int exit_code(const nlohmann::json& report);

} // namespace powsem
