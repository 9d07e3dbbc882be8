#include <catch_amalgamated.hpp>

#include "hyperlin/suites.hpp"

#include <cstdio>
#include <fstream>

using namespace hyperlin;

namespace {

suite_config base_config(const std::string& name) {
    suite_config cfg;
    cfg.suite = name;
    cfg.seed = 9;
    return cfg;
}

} // namespace

TEST_CASE("suite catalog", "[suites]") {
    const auto catalog = list_suites();
    CHECK(catalog.size() == 9);
    bool has_fourier = false, has_ccr = false, has_all = false;
    for (const auto& info : catalog) {
        has_fourier = has_fourier || info.name == "fourier";
        has_ccr = has_ccr || info.name == "ccr";
        has_all = has_all || info.name == "all";
        CHECK_FALSE(info.description.empty());
        CHECK_FALSE(info.claims.empty());
    }
    CHECK(has_fourier);
    CHECK(has_ccr);
    CHECK(has_all);
}

TEST_CASE("unknown suite and bad config are rejected", "[suites]") {
    CHECK_THROWS_AS(run_suite(base_config("nope")), unknown_suite_error);

    suite_config bad_tol = base_config("weyl");
    bad_tol.tolerance = 0.0;
    CHECK_THROWS_AS(run_suite(bad_tol), config_error);

    suite_config bad_grid = base_config("weyl");
    bad_grid.grid_points = 2000;  // even
    CHECK_THROWS_AS(run_suite(bad_grid), config_error);

    suite_config bad_upto = base_config("ccr");
    bad_upto.upto = 0;
    CHECK_THROWS_AS(run_suite(bad_upto), config_error);
}

TEST_CASE("fast suites pass at defaults", "[suites]") {
    for (const std::string name : {"algebra", "bounds", "weyl", "delta", "axioms"}) {
        const verification_report rep = run_suite(base_config(name));
        INFO(name);
        CHECK(rep.passed());
        CHECK(rep.suite == name);
        CHECK_FALSE(rep.checks.empty());
    }
}

TEST_CASE("reports are byte-stable for a fixed config and seed", "[suites]") {
    const verification_report a = run_suite(base_config("algebra"));
    const verification_report b = run_suite(base_config("algebra"));
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));
    CHECK(a.to_text() == b.to_text());

    suite_config other_seed = base_config("algebra");
    other_seed.seed = 10;
    const verification_report c = run_suite(other_seed);
    CHECK(c.passed());  // different stream, same verdict
}

TEST_CASE("report schema", "[suites]") {
    const auto doc = run_suite(base_config("weyl")).to_json();
    CHECK(doc["schema"] == 1);
    CHECK(doc["suite"] == "weyl");
    CHECK(doc["pass"].is_boolean());
    CHECK(doc["environment"]["grid"]["points"].is_number());
    CHECK(doc["environment"]["backend"] == "rational");
    REQUIRE(doc["checks"].is_array());
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("description"));
        CHECK(c.contains("claim"));
        CHECK(c.contains("measured"));
        CHECK(c.contains("expected"));
        CHECK(c["pass"].is_boolean());
    }
}

TEST_CASE("float backend variant of the algebra suite", "[suites]") {
    suite_config cfg = base_config("algebra");
    cfg.backend = backend_kind::float_backend;
    const verification_report rep = run_suite(cfg);
    CHECK(rep.passed());
    CHECK(rep.environment["backend"] == "float");
}

TEST_CASE("custom algebra file feeds the algebra suite", "[suites]") {
    const std::string path = "test_algebra_table.json";
    {
        std::ofstream out(path);
        out << algebra_to_json(*quaternion_spec()).dump() << "\n";
    }
    suite_config cfg = base_config("algebra");
    cfg.algebra_file = path;
    const verification_report rep = run_suite(cfg);
    bool found = false;
    for (const auto& c : rep.checks) {
        if (c.id == "custom-algebra-defect") {
            found = true;
            CHECK(c.measured["max_relative_defect"].get<double>() <= 1e-10);
        }
    }
    CHECK(found);
    std::remove(path.c_str());

    suite_config missing = base_config("algebra");
    missing.algebra_file = "does_not_exist.json";
    CHECK_THROWS_AS(run_suite(missing), config_error);
}

TEST_CASE("matrix file feeds the eigen suite", "[suites]") {
    const std::string path = "test_matrix.json";
    {
        std::ofstream out(path);
        out << "[[[2, 0], [1, 1]], [[1, -1], [0, 0]]]\n";
    }
    suite_config cfg = base_config("eigen");
    cfg.matrix_file = path;
    const verification_report rep = run_suite(cfg);
    bool found = false;
    for (const auto& c : rep.checks) {
        if (c.id == "matrix-file-classification") {
            found = true;
            CHECK(c.measured["classification"] == "TwoRealPlusTwoHyperbolic");
            CHECK(c.pass);
        }
    }
    CHECK(found);
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "[[[0, 0], [0, 1]], [[0, 1], [0, 0]]]\n";  // not self-adjoint
    }
    suite_config bad = base_config("eigen");
    bad.matrix_file = path;
    CHECK_THROWS_AS(run_suite(bad), config_error);
    std::remove(path.c_str());
}

TEST_CASE("the all suite merges every other suite", "[suites]") {
    suite_config cfg = base_config("all");
    // shrink the heavy grids so this stays a unit test
    cfg.grid_points = 2001;
    cfg.grid_half_width = 20.0;
    cfg.samples = 20;
    const verification_report rep = run_suite(cfg);
    CHECK(rep.suite == "all");
    int suites_seen = 0;
    std::string last;
    for (const auto& c : rep.checks) {
        const std::string prefix = c.id.substr(0, c.id.find('/'));
        if (prefix != last) {
            ++suites_seen;
            last = prefix;
        }
    }
    CHECK(suites_seen == 8);
}
