#include "qfrob/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qfrob/errors.hpp"
#include "qfrob/suites.hpp"

namespace qfrob {

namespace {

struct Flags {
    SuiteOptions suite;
    bool json = false;
    std::string out_file;
};

void add_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--cells", f.suite.cells, "number of cells N of the circle")->capture_default_str();
    cmd->add_option("--ell", f.suite.ell, "quasilocality radius")->capture_default_str();
    cmd->add_option("--epsilon", f.suite.epsilon, "bump half-width")->capture_default_str();
    cmd->add_option("--step-div", f.suite.step_div, "grid step is epsilon / step-div")->capture_default_str();
    cmd->add_option("--seed", f.suite.seed, "seed for randomized checks")->capture_default_str();
    cmd->add_option("--m", f.suite.m, "input arity")->capture_default_str();
    cmd->add_option("--n", f.suite.n, "output arity")->capture_default_str();
    cmd->add_flag("--json", f.json, "emit a JSON report");
    cmd->add_flag("--fail-fast", f.suite.fail_fast, "stop after the first failing suite");
    cmd->add_option("--out", f.out_file, "also write the report to FILE");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numerical checks of the homotopy Frobenius structure on the circle", "qfrob"};
    app.require_subcommand(1);
    Flags flags;
    const std::map<std::string, std::pair<std::string, std::function<Report(const SuiteOptions&)>>> suites{
        {"verify-discrete", {"lifts and homotopy equations on the cellular circle", suite_verify_discrete}},
        {"verify-homology-model", {"Frobenius axioms on H(S^1)", suite_homology_model}},
        {"verify-frob1", {"Frob1 composition signs and associativity", suite_frob1}},
        {"qloc-dims", {"cohomology of quasilocal operations", suite_qloc_dims}},
        {"verify-derham", {"smooth-model integrals", suite_derham}},
        {"obstruction", {"the genus-2 obstruction", suite_obstruction}},
        {"all", {"every suite", suite_all}},
    };
    for (const auto& [name, entry] : suites) add_flags(app.add_subcommand(name, entry.first), flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    const std::string chosen = app.get_subcommands().front()->get_name();
    Report report("");
    try {
        report = suites.at(chosen).second(flags.suite);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << app.get_subcommand(chosen)->help();
        return kExitUsage;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitFailure;
    }

    const std::string rendered = flags.json ? report.to_json().dump(2) + "\n" : report.to_text();
    out << rendered;
    if (!flags.out_file.empty()) {
        std::ofstream f(flags.out_file);
        if (!f) {
            err << "error: cannot write " << flags.out_file << "\n";
            return kExitUsage;
        }
        f << rendered;
    }
    if (!report.pass()) {
        for (const auto* c : report.failures())
            err << "FAIL " << c->name << ": expected " << c->expected << ", actual " << c->actual << "\n";
        return kExitFailure;
    }
    return kExitPass;
}

}  // namespace qfrob
