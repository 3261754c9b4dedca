#include "whg/bargmann.hpp"
#include "whg/coherent.hpp"
#include "whg/fock.hpp"
#include "whg/qukit.hpp"
#include "whg/report_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailedRelation = 1;
constexpr int kExitUsage = 2;

constexpr int kMaxRank = 4;
constexpr int kMaxLevel = 10;
constexpr int kMaxQukitLevel = 12;
constexpr long kDefaultMaxDim = 5000;

struct Options {
    int rank = 1;
    int level = 1;
    std::string format = "text";
    std::string out;
    std::string emit = "coeffs";
    int max_rank = 3;
    int max_level = 3;
};

long max_dimension() {
    const char* env = std::getenv("WHG_MAX_DIM");
    if (env == nullptr || *env == '\0') return kDefaultMaxDim;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || value < 1) {
        throw CLI::ValidationError("WHG_MAX_DIM", "must be a positive integer");
    }
    return value;
}

void check_basis_dimension(int rank, int level) {
    if (whg::binomial(level + rank, rank) > max_dimension()) {
        throw CLI::ValidationError("config", "basis dimension exceeds WHG_MAX_DIM");
    }
}

void check_qukit_dimension(int level) {
    if ((1L << level) > max_dimension()) {
        throw CLI::ValidationError("config", "qubit space dimension exceeds WHG_MAX_DIM");
    }
}

int emit(const Options& options, const std::string& payload, bool all_passed) {
    if (options.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream file(options.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << options.out << "\n";
            return kExitUsage;
        }
        file << payload;
    }
    return all_passed ? kExitPass : kExitFailedRelation;
}

int emit_reports(const Options& options, const std::vector<whg::CheckReport>& reports) {
    bool all_passed = true;
    for (const auto& report : reports) all_passed = all_passed && report.passed();
    const std::string payload = options.format == "json" ? whg::reports_json(reports)
                                                         : whg::reports_text(reports);
    return emit(options, payload, all_passed);
}

int run_verify_all(const Options& options) {
    std::vector<whg::CheckReport> reports;
    for (int rank = 1; rank <= options.max_rank; ++rank) {
        for (int level = 1; level <= options.max_level; ++level) {
            check_basis_dimension(rank, level);
            for (auto& report : whg::fock::algebra_reports(rank, level)) {
                reports.push_back(std::move(report));
            }
            reports.push_back(whg::bargmann::verify_bargmann(rank, level));
            if (rank == 1 && level <= kMaxQukitLevel) {
                check_qukit_dimension(level);
                reports.push_back(whg::qukit::verify_qukit(level));
            }
            reports.push_back(whg::coherent::recurrence_check(rank, level));
            reports.push_back(whg::coherent::eigen_check(rank, level));
            reports.push_back(whg::coherent::resolution_check(rank, level));
        }
    }
    return emit_reports(options, reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suite for the generalized Weyl-Heisenberg algebra,\n"
                 "its Grassmann calculus and Barut-Girardello coherent states.\n"
                 "Environment: WHG_MAX_DIM caps the basis dimension (default 5000)."};
    app.require_subcommand(1);

    Options options;

    auto add_format_options = [&options](CLI::App* cmd) {
        cmd->add_option("--format", options.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", options.out, "Write the report to a file instead of stdout");
    };
    auto add_rank_level = [&options](CLI::App* cmd) {
        cmd->add_option("-r,--rank", options.rank, "Rank r of the algebra")
            ->required()
            ->check(CLI::Range(1, kMaxRank));
        cmd->add_option("-k,--level", options.level, "Level k of the representation")
            ->required()
            ->check(CLI::Range(1, kMaxLevel));
    };

    CLI::App* verify_algebra =
        app.add_subcommand("verify-algebra",
                           "Verify the defining relations, the su(r+1) realization, the "
                           "Chevalley-Serre relations and the large-k contraction");
    add_rank_level(verify_algebra);
    add_format_options(verify_algebra);

    CLI::App* verify_qukit =
        app.add_subcommand("verify-qukit", "Verify the multi-qubit realization on (C^2)^k");
    verify_qukit->add_option("-k,--level", options.level, "Number of qubits")
        ->required()
        ->check(CLI::Range(1, kMaxQukitLevel));
    add_format_options(verify_qukit);

    CLI::App* verify_bargmann = app.add_subcommand(
        "verify-bargmann", "Verify the analytic realization against the matrix one");
    add_rank_level(verify_bargmann);
    add_format_options(verify_bargmann);

    CLI::App* coherent = app.add_subcommand(
        "coherent", "Coherent-state coefficients, eigenvalue and resolution checks");
    add_rank_level(coherent);
    coherent->add_option("--emit", options.emit, "What to compute")
        ->check(CLI::IsMember({"coeffs", "eigencheck", "resolution"}))
        ->capture_default_str();
    add_format_options(coherent);

    CLI::App* verify_all = app.add_subcommand(
        "verify-all", "Run every suite over the (rank, level) grid, ordered by (rank, level)");
    verify_all->add_option("--max-rank", options.max_rank, "Largest rank")
        ->check(CLI::Range(1, kMaxRank))
        ->capture_default_str();
    verify_all->add_option("--max-level", options.max_level, "Largest level")
        ->check(CLI::Range(1, kMaxLevel))
        ->capture_default_str();
    add_format_options(verify_all);

    try {
        app.parse(argc, argv);

        if (verify_algebra->parsed()) {
            check_basis_dimension(options.rank, options.level);
            return emit_reports(options, whg::fock::algebra_reports(options.rank, options.level));
        }
        if (verify_qukit->parsed()) {
            check_qukit_dimension(options.level);
            return emit_reports(options, {whg::qukit::verify_qukit(options.level)});
        }
        if (verify_bargmann->parsed()) {
            check_basis_dimension(options.rank, options.level);
            return emit_reports(options, {whg::bargmann::verify_bargmann(options.rank,
                                                                         options.level)});
        }
        if (coherent->parsed()) {
            check_basis_dimension(options.rank, options.level);
            if (options.emit == "coeffs") {
                const auto state =
                    whg::coherent::build_coherent_state(options.rank, options.level);
                const auto entries = whg::coherent::state_entries(state);
                const std::string payload = options.format == "json"
                                                ? whg::coherent_entries_json(entries)
                                                : whg::coherent_entries_text(entries);
                return emit(options, payload, true);
            }
            if (options.emit == "eigencheck") {
                return emit_reports(options, {whg::coherent::eigen_check(options.rank,
                                                                         options.level)});
            }
            return emit_reports(options, {whg::coherent::resolution_check(options.rank,
                                                                          options.level)});
        }
        if (verify_all->parsed()) {
            return run_verify_all(options);
        }
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
