#include <fstream>
#include <optional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rootposet/errors.hpp"
#include "rootposet/report.hpp"
#include "rootposet/root_system.hpp"
#include "rootposet/verify.hpp"

using namespace rootposet;

namespace {

constexpr int exit_usage = 2;

// "--type F4", or "--type F --rank 4".
RootSystem system_from_flags(const std::string& type, int rank) {
    if (type.empty()) throw UnsupportedInput("--type is required");
    std::string text = type;
    if (rank > 0) {
        if (text.size() == 1) {
            text += std::to_string(rank);
        } else if (RootSystemId::parse(text).rank != rank) {
            throw UnsupportedInput("--rank " + std::to_string(rank) + " contradicts --type " + type);
        }
    }
    return RootSystem::build(RootSystemId::parse(text));
}

struct Args {
    std::string type;
    int rank = 0;
    std::string what;
    std::string format = "text";
    std::string diagram;
    std::string out;
    std::string suite = "all";
    int max_rank = 8;
    bool exhaustive = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root posets, ad-nilpotent and Abelian ideals, typed Hasse diagrams"};
    app.require_subcommand(1);
    Args a;

    auto* rep = app.add_subcommand("report", "Print a table for one root system");
    rep->add_option("--type", a.type, "System such as F4, or a family letter with --rank")->required();
    rep->add_option("--rank", a.rank, "Rank, when --type is a bare family letter");
    rep->add_option("--what", a.what, "roots, hasse, ideals, abelian, classes or covering")->required();
    rep->add_option("--format", a.format, "text, json or csv");

    auto* exp = app.add_subcommand("export", "Write a Hasse diagram as DOT");
    exp->add_option("--type", a.type, "System such as F4")->required();
    exp->add_option("--rank", a.rank, "Rank, when --type is a bare family letter");
    exp->add_option("--diagram", a.diagram, "delta, ad or ab")->required();
    exp->add_option("--out", a.out, "Output file (stdout when omitted)");

    auto* ver = app.add_subcommand("verify", "Run the verification harness");
    ver->add_option("--suite", a.suite, "delta, weights, ad, abelian, covering or all");
    ver->add_option("--max-rank", a.max_rank, "Largest rank checked (1-8)");
    ver->add_flag("--exhaustive", a.exhaustive, "Check every ideal, including E7 and E8");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    // Parse every flag before doing any work, so bad input is always exit 2.
    ReportTopic topic{};
    ReportFormat format{};
    Diagram diagram{};
    std::optional<RootSystem> rs;
    VerifyOptions options;
    try {
        if (*rep || *exp) rs = system_from_flags(a.type, a.rank);
        if (*rep) {
            topic = parse_topic(a.what);
            format = parse_format(a.format);
        }
        if (*exp) diagram = parse_diagram(a.diagram);
        if (*ver) {
            options.suite = parse_suite(a.suite);
            if (a.max_rank < 1 || a.max_rank > 8) throw UnsupportedInput("--max-rank must be in [1, 8]");
            options.max_rank = a.max_rank;
            options.exhaustive = a.exhaustive;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*rep) {
            std::cout << report(*rs, topic, format);
            return 0;
        }
        if (*exp) {
            const std::string dot = export_diagram(*rs, diagram);
            if (a.out.empty()) {
                std::cout << dot;
                return 0;
            }
            std::ofstream file(a.out, std::ios::binary);
            if (!(file << dot) || !file.flush()) {
                std::cerr << "error: cannot write " << a.out << '\n';
                return 1;
            }
            return 0;
        }
        const auto result = run_verify(options);
        std::cout << result.text();
        return result.passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
