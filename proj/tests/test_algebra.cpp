#include <catch_amalgamated.hpp>

#include "hyperlin/algebra.hpp"
#include "hyperlin/rng.hpp"

#include <cmath>

using namespace hyperlin;

namespace {

std::vector<double> random_coeffs(splitmix64& rng, std::size_t n) {
    std::vector<double> r(n);
    for (auto& c : r) c = rng.uniform(-2.0, 2.0);
    return r;
}

} // namespace

TEST_CASE("unit element acts as identity in every table", "[algebra]") {
    for (const auto& spec : {real_spec(), complex_spec(), hyperbolic_spec(), quaternion_spec(),
                             octonion_spec()}) {
        for (std::size_t i = 0; i < spec->dim(); ++i) {
            const auto e0 = algebra_element::basis(spec, 0);
            const auto ei = algebra_element::basis(spec, i);
            CHECK(e0 * ei == ei);
            CHECK(ei * e0 == ei);
        }
    }
}

TEST_CASE("quaternion multiplication table", "[algebra]") {
    auto h = quaternion_spec();
    auto e = [&](std::size_t i) { return algebra_element::basis(h, i); };
    CHECK(e(1) * e(2) == e(3));
    CHECK(e(2) * e(3) == e(1));
    CHECK(e(3) * e(1) == e(2));
    CHECK(e(1) * e(1) == algebra_element(h, {-1, 0, 0, 0}));
    // anticommutation of distinct imaginary units
    CHECK(e(2) * e(1) == algebra_element(h, {0, 0, 0, -1}));
}

TEST_CASE("octonion multiplication table", "[algebra]") {
    auto o = octonion_spec();
    auto e = [&](std::size_t i) { return algebra_element::basis(o, i); };
    CHECK(e(2) * e(4) == e(6));
    CHECK(e(1) * e(2) == e(3));
    CHECK(e(5) * e(5) == algebra_element(o, {-1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(modulus(e(5)) == 1.0);
}

TEST_CASE("modulus", "[algebra]") {
    auto h = quaternion_spec();
    CHECK(modulus(algebra_element(h, {1, 1, 1, 1})) == 2.0);
    auto g = hyperbolic_spec();
    CHECK(modulus(algebra_element(g, {1, 1})) == std::sqrt(2.0));
}

TEST_CASE("multiplicativity defect vanishes on the composition algebras", "[algebra]") {
    // complex example: |(3+4i)(1+i)| = |-1+7i| = sqrt(50) = 5 sqrt(2) = |3+4i| |1+i|
    auto c = complex_spec();
    const algebra_element a(c, {3, 4});
    const algebra_element b(c, {1, 1});
    CHECK(multiplicativity_defect(a, b) <= 1e-14);

    splitmix64 rng(21);
    for (const auto& spec : {real_spec(), complex_spec(), quaternion_spec(), octonion_spec()}) {
        double worst = 0.0;
        for (int k = 0; k < 10000; ++k) {
            const algebra_element u(spec, random_coeffs(rng, spec->dim()));
            const algebra_element v(spec, random_coeffs(rng, spec->dim()));
            const double denom = modulus(u) * modulus(v);
            if (denom < 1e-6) continue;
            worst = std::max(worst, multiplicativity_defect(u, v) / denom);
        }
        INFO(spec->name());
        REQUIRE(worst <= 1e-10);
    }
}

TEST_CASE("hyperbolic table is not a composition algebra", "[algebra]") {
    auto g = hyperbolic_spec();
    // N((1+j)(1-j)) = N(0) = 0 while N(1+j) N(1-j) = 2
    CHECK(multiplicativity_defect(algebra_element(g, {1, 1}), algebra_element(g, {1, -1})) ==
          2.0);
    // against the identity the defect is always exactly zero
    splitmix64 rng(22);
    for (int k = 0; k < 100; ++k) {
        const algebra_element u(g, random_coeffs(rng, 2));
        CHECK(multiplicativity_defect(u, algebra_element::basis(g, 0)) == 0.0);
    }
}

TEST_CASE("associativity and commutativity per table", "[algebra]") {
    splitmix64 rng(23);
    auto h = quaternion_spec();
    auto o = octonion_spec();
    auto g = hyperbolic_spec();

    auto max_dev = [](const algebra_element& x, const algebra_element& y) {
        double m = 0.0;
        for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
            m = std::max(m, std::fabs(x[i] - y[i]));
        }
        return m;
    };

    for (int k = 0; k < 3000; ++k) {
        const algebra_element a(h, random_coeffs(rng, 4));
        const algebra_element b(h, random_coeffs(rng, 4));
        const algebra_element c(h, random_coeffs(rng, 4));
        REQUIRE(max_dev((a * b) * c, a * (b * c)) <= 1e-12);
    }
    {
        auto e = [&](std::size_t i) { return algebra_element::basis(h, i); };
        CHECK_FALSE(e(1) * e(2) == e(2) * e(1));
    }
    {
        auto e = [&](std::size_t i) { return algebra_element::basis(o, i); };
        CHECK_FALSE((e(1) * e(2)) * e(4) == e(1) * (e(2) * e(4)));
    }
    for (int k = 0; k < 3000; ++k) {
        const algebra_element a(g, random_coeffs(rng, 2));
        const algebra_element b(g, random_coeffs(rng, 2));
        const algebra_element c(g, random_coeffs(rng, 2));
        REQUIRE(a * b == b * a);
        REQUIRE(max_dev((a * b) * c, a * (b * c)) <= 1e-12);
    }
}

TEST_CASE("the dim-2 spec with e1^2 = +1 is the scalar ring, bit for bit", "[algebra]") {
    auto g = hyperbolic_spec();
    splitmix64 rng(24);
    for (int k = 0; k < 10000; ++k) {
        const hyperd za(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const hyperd zb(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const algebra_element ab =
            algebra_element(g, {za.re, za.hy}) * algebra_element(g, {zb.re, zb.hy});
        const hyperd direct = za * zb;
        REQUIRE(ab[0] == direct.re);
        REQUIRE(ab[1] == direct.hy);
    }
}

TEST_CASE("elements of different specs never combine", "[algebra]") {
    const auto h = algebra_element::basis(quaternion_spec(), 1);
    const auto o = algebra_element::basis(octonion_spec(), 1);
    CHECK_THROWS_AS(h * o, spec_mismatch_error);
    CHECK_THROWS_AS(h + o, spec_mismatch_error);
    // two handles to structurally identical tables do combine
    const auto g1 = algebra_element::basis(hyperbolic_spec(), 1);
    const auto g2 = algebra_element::basis(hyperbolic_spec(), 1);
    CHECK(g1 * g2 == algebra_element::basis(g1.spec(), 0));
}

TEST_CASE("JSON table round trip", "[algebra]") {
    for (const auto& spec : {complex_spec(), hyperbolic_spec(), quaternion_spec(),
                             octonion_spec()}) {
        const auto doc = algebra_to_json(*spec);
        const auto back = algebra_from_json(doc, spec->name());
        CHECK(back->same_table(*spec));
    }
}

TEST_CASE("JSON table validation", "[algebra]") {
    using nlohmann::json;
    CHECK_THROWS_AS(algebra_from_json(json{{"triples", json::array()}}), config_error);
    CHECK_THROWS_AS(algebra_from_json(json{{"dim", 9}}), config_error);
    CHECK_THROWS_AS(algebra_from_json(json{{"dim", 0}}), config_error);
    // unit-row triples are implied; a conflicting one is rejected
    CHECK_THROWS_AS(algebra_from_json(json{{"dim", 2}, {"triples", {{0, 1, 1, 2.0}}}}),
                    config_error);
    CHECK_THROWS_AS(algebra_from_json(json{{"dim", 2}, {"triples", {{1, 0, 0, 1.0}}}}),
                    config_error);
    // a consistent unit-row triple is accepted
    const auto ok = algebra_from_json(json{{"dim", 2}, {"triples", {{0, 1, 1, 1.0}, {1, 1, 0, 1.0}}}});
    CHECK(ok->same_table(*hyperbolic_spec()));
    CHECK_THROWS_AS(algebra_from_json(json{{"dim", 2}, {"triples", {{1, 1, 2, 1.0}}}}),
                    config_error);
}
