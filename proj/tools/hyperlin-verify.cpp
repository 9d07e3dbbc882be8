// Command-line harness: runs named verification suites and writes
// structured reports. Exit codes: 0 all checks passed, 1 at least one
// check failed, 2 usage or configuration problem.

#include "hyperlin/hyperlin.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int run(const hyperlin::suite_config& cfg, const std::string& dump_target,
        const std::string& dump_generator) {
    using namespace hyperlin;

    if (!dump_target.empty()) {
        grid_spec grid(cfg.grid_half_width.value_or(20.0), cfg.grid_points.value_or(8001));
        grid_function f = grid_function::sample(grid, make_generator(dump_generator));
        std::ofstream out(dump_target);
        if (!out) throw config_error("cannot write " + dump_target);
        if (dump_target.size() >= 5 && dump_target.substr(dump_target.size() - 5) == ".json") {
            out << to_json(f).dump(2) << "\n";
        } else {
            out << to_csv(f);
        }
        std::cout << "wrote " << dump_generator << " samples to " << dump_target << "\n";
        if (cfg.suite.empty()) return 0;
    }

    verification_report report = run_suite(cfg);

    std::string rendered = cfg.format == report_format::json ? report.to_json().dump(2) + "\n"
                                                             : report.to_text();
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw config_error("cannot write " + cfg.output);
        out << rendered;
    }

    // one summary line per check on stdout, full report to the output path
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << report.suite << "/" << c.id << ": "
                  << c.description << "\n";
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks.size()
              << " checks)";
    if (!cfg.output.empty()) std::cout << " -> " << cfg.output;
    std::cout << "\n";
    if (cfg.output.empty() && cfg.format == report_format::json) {
        std::cout << rendered;
    }
    return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification harness for hyperbolic-scalar linear algebra"};
    app.get_formatter()->column_width(34);

    hyperlin::suite_config cfg;
    bool list = false;
    std::string suite, format = "json", backend, dump_target, dump_generator = "gaussian";
    double half_width = 0.0;
    std::size_t points = 0;

    app.add_option("--suite", suite,
                   "suite to run: algebra, bounds, eigen, fourier, delta, ccr, weyl, axioms, all");
    app.add_flag("--list-suites", list, "print the suite catalog and exit");
    app.add_option("--grid-half-width", half_width, "override the grid half-width");
    app.add_option("--grid-points", points, "override the grid point count (odd)");
    app.add_option("--tolerance", cfg.tolerance, "convergence tolerance")->capture_default_str();
    app.add_option("--seed", cfg.seed, "random sweep seed")->capture_default_str();
    app.add_option("--output", cfg.output, "write the full report to this path");
    app.add_option("--format", format, "report format: json or text")->capture_default_str();
    app.add_option("--algebra-file", cfg.algebra_file,
                   "JSON structure-constant table to include in the algebra suite");
    app.add_option("--matrix-file", cfg.matrix_file,
                   "JSON 2x2 matrix of [x, y] pairs to classify in the eigen suite");
    app.add_option("--upto", cfg.upto, "window bound for the exact commutator checks")->capture_default_str();
    app.add_option("--samples", cfg.samples, "random vector count for the exact sweeps")->capture_default_str();
    std::string quad = "trapezoid";
    app.add_option("--quadrature", quad, "integration rule: trapezoid or simpson")->capture_default_str();
    app.add_option("--dump-grid", dump_target,
                   "sample a generator onto the grid and write CSV (or JSON by extension)");
    app.add_option("--generator", dump_generator,
                   "generator for --dump-grid: gaussian, normalized-gaussian, indicator, "
                   "bump, plane-wave(k)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (list) {
            for (const auto& info : hyperlin::list_suites()) {
                std::cout << info.name << ": " << info.description << "\n    " << info.claims
                          << "\n";
            }
            return 0;
        }
        if (half_width != 0.0) cfg.grid_half_width = half_width;
        if (points != 0) cfg.grid_points = points;
        if (format == "json") {
            cfg.format = hyperlin::report_format::json;
        } else if (format == "text") {
            cfg.format = hyperlin::report_format::text;
        } else {
            throw hyperlin::config_error("unknown format: " + format);
        }
        if (quad == "trapezoid") {
            cfg.rule = hyperlin::quadrature::trapezoid;
        } else if (quad == "simpson") {
            cfg.rule = hyperlin::quadrature::simpson;
        } else {
            throw hyperlin::config_error("unknown quadrature rule: " + quad);
        }
        if (const char* env = std::getenv("HYPERLIN_BACKEND")) {
            const std::string value = env;
            if (value == "rational") {
                cfg.backend = hyperlin::backend_kind::rational_backend;
            } else if (value == "float") {
                cfg.backend = hyperlin::backend_kind::float_backend;
            } else {
                throw hyperlin::config_error("HYPERLIN_BACKEND must be rational or float");
            }
        }
        if (suite.empty() && dump_target.empty()) {
            std::cerr << "error: nothing to do; pass --suite, --list-suites, or --dump-grid\n";
            return 2;
        }
        cfg.suite = suite;
        return run(cfg, dump_target, dump_generator);
    } catch (const hyperlin::unknown_suite_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hyperlin::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
