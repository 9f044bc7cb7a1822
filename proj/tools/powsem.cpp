// powsem — exact arithmetic for composition semigroups of formal power
// series: amenability decisions with replayable certificates, Böttcher-type
// normal forms, monomial quotients, and word exploration.

#include "CLI11.hpp"

#include "powsem/errors.hpp"
#include "powsem/parse.hpp"
#include "powsem/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw powsem::error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const nlohmann::json& report, const std::string& output, bool compact) {
    std::string text = compact ? report.dump() : report.dump(2);
    if (output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(output);
        if (!out) throw powsem::error("cannot write " + output);
        out << text << "\n";
    }
    if (report.contains("verdict"))
        std::cerr << "verdict: " << report.at("verdict").get<std::string>() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact amenability decisions for composition semigroups of power series"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags are accepted after the subcommand too

    powsem::Config cfg;
    std::string precision_str = "16";
    std::string output;
    bool compact = false;

    app.add_option("--precision", precision_str, "working precision (coefficients tracked per result)");
    app.add_option("--depth", cfg.depth, "word-length bound for searches");
    app.add_option("--output", output, "write the JSON report to this file");
    app.add_flag("--json", compact, "compact single-line JSON on stdout");

    std::string input_file, literal, f1, f2;
    std::vector<std::string> literals, u_literals;
    std::vector<long> n_gens;

    auto* cmd_decide = app.add_subcommand("decide", "decide right amenability of the generated semigroup");
    cmd_decide->add_option("file", input_file, "file with one series literal per line")->required();

    auto* cmd_normalize = app.add_subcommand("normalize", "conjugate a series to its monomial normal form");
    cmd_normalize->add_option("series", literal, "series literal")->required();
    cmd_normalize->add_flag("--bottcher", cfg.bottcher, "also solve for the classical normal form and report branches");

    auto* cmd_explore = app.add_subcommand("explore", "enumerate words and report relations");
    cmd_explore->add_option("file", input_file, "file with one series literal per line")->required();

    auto* cmd_quotient = app.add_subcommand("quotient", "image of a monomial semigroup under the support-splitting homomorphism");
    cmd_quotient->add_option("monomials", literals, "monomial literals")->required();

    auto* cmd_witness = app.add_subcommand("witness", "right-reversibility witness for two monomials");
    cmd_witness->add_option("f1", f1, "first monomial")->required();
    cmd_witness->add_option("f2", f2, "second monomial")->required();

    auto* cmd_indec = app.add_subcommand("indecomposable", "bounded enumeration of indecomposable elements of U x N");
    cmd_indec->add_option("--u", u_literals, "coefficient generators (cyclotomic literals)")->required();
    cmd_indec->add_option("--n", n_gens, "degree generators (integers >= 2)")->required();
    cmd_indec->add_option("--bound", cfg.bound, "enumeration bound");

    auto* cmd_verify = app.add_subcommand("verify", "re-check the certificates of a saved report");
    cmd_verify->add_option("report", input_file, "report JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.precision = powsem::Int(precision_str);
        if (cfg.precision < 2 || cfg.depth < 1)
            throw powsem::error("precision must be >= 2 and depth >= 1");

        nlohmann::json report;
        if (cmd_decide->parsed()) {
            report = powsem::run_decide(powsem::literal_lines(read_file(input_file)), cfg);
        } else if (cmd_normalize->parsed()) {
            report = powsem::run_normalize(literal, cfg);
        } else if (cmd_explore->parsed()) {
            report = powsem::run_explore(powsem::literal_lines(read_file(input_file)), cfg);
        } else if (cmd_quotient->parsed()) {
            report = powsem::run_quotient(literals, cfg);
        } else if (cmd_witness->parsed()) {
            report = powsem::run_witness(f1, f2, cfg);
        } else if (cmd_indec->parsed()) {
            report = powsem::run_indecomposable(u_literals, n_gens, cfg);
        } else if (cmd_verify->parsed()) {
            nlohmann::json target = nlohmann::json::parse(read_file(input_file));
            std::vector<std::string> messages;
            bool ok = powsem::verify_report(target, messages);
            report = {{"schema_version", 1},
                      {"command", "verify"},
                      {"target_command", target.value("command", "?")},
                      {"verified", ok},
                      {"messages", messages}};
            emit(report, output, compact);
            for (const std::string& m : messages) std::cerr << m << "\n";
            return ok ? 0 : 1;
        }
        emit(report, output, compact);
        return powsem::exit_code(report);
    } catch (const powsem::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "report error: " << e.what() << "\n";
        return 3;
    } catch (const powsem::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 4;
    }
}
