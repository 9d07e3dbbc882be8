#include <catch_amalgamated.hpp>

#include "hyperlin/hyper.hpp"
#include "hyperlin/rng.hpp"

#include <cmath>
#include <limits>

using namespace hyperlin;

namespace {

hyperq rq(long long num, long long den = 1) {
    return hyperq(rational(num, den));
}

hyperq make_hyperq(long long xr, long long xd, long long yr, long long yd) {
    return hyperq(rational(xr, xd), rational(yr, yd));
}

hyperq random_rational_point(splitmix64& rng) {
    return make_hyperq(rng.uniform_int(-9, 9), rng.uniform_int(1, 9), rng.uniform_int(-9, 9),
                       rng.uniform_int(1, 9));
}

} // namespace

TEST_CASE("multiplication realizes j^2 = +1", "[hyper]") {
    const hyperq j = hyperq::unit_j();
    CHECK(j * j == rq(1));

    const hyperq z(rational(3), rational(-7));
    CHECK(rq(1) * z == z);

    // (1+j)(1-j) = 1 - j^2 = 0: a zero-divisor pair
    CHECK(make_hyperq(1, 1, 1, 1) * make_hyperq(1, 1, -1, 1) == hyperq{});
}

TEST_CASE("multiplication formula on doubles", "[hyper]") {
    const hyperd a(1.5, -2.0), b(0.25, 3.0);
    const hyperd p = a * b;
    CHECK(p.re == 1.5 * 0.25 + (-2.0) * 3.0);
    CHECK(p.hy == 1.5 * 3.0 + (-2.0) * 0.25);
}

TEST_CASE("ring laws hold exactly on rationals", "[hyper]") {
    splitmix64 rng(11);
    for (int k = 0; k < 1000; ++k) {
        const hyperq a = random_rational_point(rng);
        const hyperq b = random_rational_point(rng);
        const hyperq c = random_rational_point(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("conjugation", "[hyper]") {
    CHECK(conj(hyperd(3.0, 4.0)) == hyperd(3.0, -4.0));
    CHECK(conj(hyperd(5.0, 0.0)) == hyperd(5.0, 0.0));
    CHECK(conj(conj(hyperd(2.0, -7.0))) == hyperd(2.0, -7.0));

    splitmix64 rng(12);
    for (int k = 0; k < 500; ++k) {
        const hyperq a = random_rational_point(rng);
        const hyperq b = random_rational_point(rng);
        CHECK(conj(a * b) == conj(a) * conj(b));
    }
}

TEST_CASE("norm is Euclidean, not the self product", "[hyper]") {
    CHECK(norm(hyperd(3.0, 4.0)) == 5.0);
    CHECK(norm(hyperd{}) == 0.0);

    // z = 1 + 2j: ||z||^2 = 5 while z conj(z) = (1 - 4) + 0j = -3
    const hyperq z = make_hyperq(1, 1, 2, 1);
    CHECK(norm_sq(z) == rational(5));
    CHECK(z * conj(z) == rq(-3));

    splitmix64 rng(13);
    for (int k = 0; k < 1000; ++k) {
        hyperq w = random_rational_point(rng);
        const hyperq self = w * conj(w);
        CHECK(self.hy == 0);
        CHECK(self.re == w.re * w.re - w.hy * w.hy);
        if (w.hy != 0) CHECK(norm_sq(w) != self.re);
    }
}

TEST_CASE("norm properties over random samples", "[hyper]") {
    splitmix64 rng(14);
    for (int k = 0; k < 10000; ++k) {
        const hyperd a(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
        const hyperd b(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
        const double s = rng.uniform(-3.0, 3.0);
        REQUIRE(norm(a + b) <= norm(a) + norm(b) + 1e-12);
        REQUIRE(std::fabs(norm(s * a) - std::fabs(s) * norm(a)) <= 1e-12 * (1.0 + norm(a)));
        REQUIRE(norm(a) >= 0.0);
    }
}

TEST_CASE("light cone membership", "[hyper]") {
    CHECK(light_cone_contains(hyperd{}, hyperd(2.0, 2.0)));
    CHECK_FALSE(light_cone_contains(hyperd{}, hyperd(1.0, 0.0)));
    // through center 1 + j the minus line passes y' = -(x' - 1) + 1; at x' = 3, y' = -1
    CHECK(light_cone_contains(hyperd(1.0, 1.0), hyperd(3.0, -1.0)));
    CHECK(light_cone_contains(hyperq(rational(1), rational(1)),
                              hyperq(rational(3), rational(-1))));
}

TEST_CASE("zero divisors are closed on the cone", "[hyper]") {
    splitmix64 rng(15);
    for (int k = 0; k < 2000; ++k) {
        const rational a(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
        const rational b(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
        const hyperq za(a, rng.uniform_int(0, 1) ? a : -a);
        const hyperq zb(b, rng.uniform_int(0, 1) ? b : -b);
        CHECK(on_light_cone(za));
        CHECK(on_light_cone(za * zb));
    }
}

TEST_CASE("inverse off the cone, exactly", "[hyper]") {
    // 2 + j -> 2/3 - (1/3) j, since x^2 - y^2 = 3
    const hyperq z = make_hyperq(2, 1, 1, 1);
    CHECK(inverse(z) == make_hyperq(2, 3, -1, 3));
    CHECK(z * inverse(z) == rq(1));
    CHECK(inverse(rq(1)) == rq(1));

    splitmix64 rng(16);
    int checked = 0;
    while (checked < 1000) {
        const hyperq w = random_rational_point(rng);
        if (w.re * w.re == w.hy * w.hy) continue;
        REQUIRE(w * inverse(w) == rq(1));
        ++checked;
    }
}

TEST_CASE("inverse on the cone raises", "[hyper]") {
    CHECK_THROWS_AS(inverse(make_hyperq(1, 1, 1, 1)), light_cone_error);
    CHECK_THROWS_AS(inverse(hyperd(2.0, -2.0)), light_cone_error);
    CHECK_THROWS_AS(inverse(hyperd{}), light_cone_error);
}

TEST_CASE("float inverse stays within 4 ulp when well conditioned", "[hyper]") {
    splitmix64 rng(17);
    const double ulp4 = 4.0 * std::numeric_limits<double>::epsilon();
    int checked = 0;
    while (checked < 1000) {
        const hyperd z(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        const double ns = norm_sq(z);
        if (ns < 0.25 || std::fabs(z.re * z.re - z.hy * z.hy) < 0.5 * ns) continue;
        const hyperd p = z * inverse(z);
        REQUIRE(std::fabs(p.re - 1.0) <= ulp4);
        REQUIRE(std::fabs(p.hy) <= ulp4);
        ++checked;
    }
}

TEST_CASE("division routes through the inverse", "[hyper]") {
    const hyperq a = make_hyperq(5, 2, -1, 3);
    const hyperq b = make_hyperq(2, 1, 1, 1);
    CHECK((a / b) * b == a);
    CHECK_THROWS_AS(a / make_hyperq(3, 1, 3, 1), light_cone_error);
}

TEST_CASE("hyperbolic exponential", "[hyper]") {
    const hyperd e = exp_j(0.7);
    CHECK(e.re == std::cosh(0.7));
    CHECK(e.hy == std::sinh(0.7));
    // conj(e^{ja}) e^{ja} = cosh^2 - sinh^2 = 1
    const hyperd u = conj(e) * e;
    CHECK(std::fabs(u.re - 1.0) <= 1e-15);
    CHECK(u.hy == 0.0);
}
