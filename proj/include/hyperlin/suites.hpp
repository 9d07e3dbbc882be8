#ifndef HYPERLIN_SUITES_HPP
#define HYPERLIN_SUITES_HPP

#include "hyperlin/algebra.hpp"
#include "hyperlin/ccr.hpp"
#include "hyperlin/eigen.hpp"
#include "hyperlin/errors.hpp"
#include "hyperlin/fourier.hpp"
#include "hyperlin/grid.hpp"
#include "hyperlin/hyper.hpp"
#include "hyperlin/linalg.hpp"
#include "hyperlin/operators.hpp"
#include "hyperlin/report.hpp"
#include "hyperlin/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperlin {

enum class backend_kind { rational_backend, float_backend };
enum class report_format { json, text };

inline const char* to_string(backend_kind b) {
    return b == backend_kind::rational_backend ? "rational" : "float";
}

/// Knobs for a suite run. Grid fields are overrides: each suite picks its
/// own default grid when they are unset.
struct suite_config {
    std::string suite;
    std::optional<double> grid_half_width;
    std::optional<std::size_t> grid_points;
    double tolerance = 1e-6;
    std::uint64_t seed = 1;
    std::string output;
    report_format format = report_format::json;
    backend_kind backend = backend_kind::rational_backend;
    long long upto = 120;
    std::size_t samples = 200;
    std::string algebra_file;
    std::string matrix_file;
    quadrature rule = quadrature::trapezoid;
};

struct suite_info {
    std::string name;
    std::string description;
    std::string claims;
};

inline std::vector<suite_info> list_suites() {
    return {
        {"algebra",
         "scalar ring and structure-constant algebra checks",
         "j^2 = +1; inverses exist exactly off the light cone; the Euclidean modulus is "
         "multiplicative on the four composition algebras and fails on the hyperbolic table"},
        {"bounds",
         "sqrt(2) inequalities for hyperbolic vector spaces",
         "||a x|| <= sqrt(2) ||a|| ||x|| and ||(x,y)|| <= sqrt(2) ||x|| ||y||, both tight"},
        {"eigen",
         "spectral trichotomy of self-adjoint 2x2 hyperbolic matrices",
         "sign of (x11-x22)^2 + 4 x12^2 - 4 y12^2 decides 4, 1, or 0 eigenvalues; the "
         "relabeled complex matrix is Hermitian and always has real eigenvalues"},
        {"fourier",
         "hyperbolic Fourier transform and the failure of any Plancherel identity",
         "kernel cosh(px) - j sinh(px); the unit-mass Gaussian maps to exp(p^2/2), whose "
         "windowed norm grows without bound"},
        {"delta",
         "failure of 2 sinh(a x)/x as a delta family",
         "integrals against a Gaussian grow monotonically without approaching the value at 0"},
        {"ccr",
         "exact commutation-relation counterexample and grid commutator residuals",
         "diagonal(N) with the -i/(m-n) kernel satisfies [Q,P] = i exactly on zero-sum "
         "sequences; on the grid [q,p] = j holds to stencil accuracy in both representations"},
        {"weyl",
         "exchange relation of translations and phase multipliers",
         "translating then phasing differs from phasing then translating by exactly e^{its}"},
        {"axioms",
         "expectation values and hyperbolic Schrodinger evolution",
         "E(O) = (psi, O psi)/(psi, psi) on invertible states; j psi' = H psi is solved by "
         "the power-series exponential"},
        {"all", "every suite above, in catalog order", "union of the individual suites"},
    };
}

namespace detail {

inline nlohmann::json grid_json(const grid_spec& g) {
    return {{"half_width", g.half_width}, {"points", g.npoints}};
}

inline check_record make_check(std::string id, std::string description, std::string claim,
                               nlohmann::json measured, nlohmann::json expected, bool pass) {
    return check_record{std::move(id), std::move(description), std::move(claim),
                        std::move(measured), std::move(expected), pass};
}

inline hyperd random_hyper(splitmix64& rng, double scale = 2.0) {
    return hyperd(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
}

inline hyperq random_hyperq(splitmix64& rng) {
    // explicit result type: a deduced return would hand back a dangling
    // multiprecision expression template
    auto coeff = [&]() -> rational {
        return rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
    };
    return hyperq(coeff(), coeff());
}

inline gvectord random_gvector(splitmix64& rng, std::size_t n, double scale = 2.0) {
    gvectord v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = random_hyper(rng, scale);
    return v;
}

inline std::vector<double> random_coeffs(splitmix64& rng, std::size_t n, double scale = 2.0) {
    std::vector<double> r(n);
    for (auto& c : r) c = rng.uniform(-scale, scale);
    return r;
}

inline gmatrixd random_sa2(splitmix64& rng, double scale = 2.0) {
    const double x11 = rng.uniform(-scale, scale);
    const double x22 = rng.uniform(-scale, scale);
    const double x12 = rng.uniform(-scale, scale);
    const double y12 = rng.uniform(-scale, scale);
    return gmatrixd{{hyperd(x11), hyperd(x12, y12)}, {hyperd(x12, -y12), hyperd(x22)}};
}

/// Plain composite Simpson for the closed-form oracle integrands.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      std::size_t intervals = 4096) {
    if (intervals % 2 == 1) ++intervals;
    const double h = (b - a) / static_cast<double>(intervals);
    double acc = f(a) + f(b);
    for (std::size_t k = 1; k < intervals; ++k) {
        acc += f(a + static_cast<double>(k) * h) * (k % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

/// Scan lambda = u + jv over a window around the trace and compare the
/// near-zero set of ||det(A - lambda I)|| against the returned spectrum.
inline bool eigen_scan_agrees(const gmatrixd& A, const eigen_result& er) {
    const double tr = A(0, 0).re + A(1, 1).re;
    const double disc = er.discriminant;
    const double width = 1.5 * std::sqrt(std::max(std::fabs(disc), 1.0)) + 0.5;
    const int cells = 160;
    const double delta = 2.0 * width / cells;

    if (er.classification == sa2_class::no_eigenvalues) {
        // no zeros anywhere: ||det|| is bounded below by |disc| / 4
        double lowest = std::numeric_limits<double>::infinity();
        for (int iu = 0; iu <= cells; ++iu)
            for (int iv = 0; iv <= cells; ++iv) {
                const hyperd lambda(tr / 2.0 - width + iu * delta, -width + iv * delta);
                lowest = std::min(lowest, char_residual(A, lambda));
            }
        return lowest >= 0.999 * std::fabs(disc) / 4.0;
    }

    const double root = std::sqrt(std::max(disc, 0.0));
    const double theta = 2.0 * delta * (root + delta);
    const double match_radius = 8.0 * delta;
    auto near_some_eigenvalue = [&](const hyperd& lambda) {
        for (const auto& ev : er.eigenvalues) {
            if (norm(lambda - ev) <= match_radius) return true;
        }
        return false;
    };
    // (a) the grid node nearest each eigenvalue is flagged
    for (const auto& ev : er.eigenvalues) {
        const double su = std::round((ev.re - (tr / 2.0 - width)) / delta);
        const double sv = std::round((ev.hy + width) / delta);
        const hyperd node(tr / 2.0 - width + su * delta, -width + sv * delta);
        if (char_residual(A, node) > theta) return false;
    }
    // (b) every flagged node sits near a returned eigenvalue
    for (int iu = 0; iu <= cells; ++iu)
        for (int iv = 0; iv <= cells; ++iv) {
            const hyperd lambda(tr / 2.0 - width + iu * delta, -width + iv * delta);
            if (char_residual(A, lambda) <= theta && !near_some_eigenvalue(lambda)) {
                return false;
            }
        }
    return true;
}

inline grid_spec resolve_grid(const suite_config& cfg, double default_L, std::size_t default_N) {
    return grid_spec(cfg.grid_half_width.value_or(default_L),
                     cfg.grid_points.value_or(default_N));
}

inline nlohmann::json environment_json(const suite_config& cfg, const grid_spec& grid) {
    return {
        {"grid", grid_json(grid)},
        {"tolerance", cfg.tolerance},
        {"seed", cfg.seed},
        {"backend", to_string(cfg.backend)},
    };
}

inline std::string rational_str(const rational& q) { return q.str(); }

inline nlohmann::json hyper_json(const hyperd& z) { return {z.re, z.hy}; }

inline nlohmann::json hyperq_json(const hyperq& z) {
    return {rational_str(z.re), rational_str(z.hy)};
}

} // namespace detail

// ---------------------------------------------------------------------------
// algebra suite
// ---------------------------------------------------------------------------

inline verification_report run_algebra_suite(const suite_config& cfg) {
    using detail::make_check;
    verification_report rep;
    rep.suite = "algebra";
    grid_spec grid = detail::resolve_grid(cfg, 20.0, 8001);
    rep.environment = detail::environment_json(cfg, grid);
    splitmix64 rng(cfg.seed);

    {
        const hyperq j = hyperq::unit_j();
        rep.add(make_check("j-squared", "square of the hyperbolic unit", "j^2 = +1",
                           detail::hyperq_json(j * j), detail::hyperq_json(hyperq(rational(1))),
                           j * j == hyperq(rational(1))));
    }
    {
        const hyperq a(rational(1), rational(1));
        const hyperq b(rational(1), rational(-1));
        const hyperq prod = a * b;
        rep.add(make_check("zero-divisor-pair", "(1+j)(1-j) annihilates",
                           "the ring has zero divisors on the light cone",
                           detail::hyperq_json(prod), detail::hyperq_json(hyperq{}),
                           prod == hyperq{}));
    }
    {
        bool ok = true;
        for (int k = 0; k < 1000 && ok; ++k) {
            const hyperq z = detail::random_hyperq(rng);
            ok = conj(conj(z)) == z && hyperq(rational(1)) * z == z;
        }
        rep.add(make_check("conjugation-involution", "conj is an involution; 1 is the unit",
                           "basic ring identities hold exactly", {{"failures", ok ? 0 : 1}},
                           {{"failures", 0}}, ok));
    }
    {
        // z conj(z) = (x^2 - y^2) + 0j, generally different from x^2 + y^2
        const hyperq z(rational(1), rational(2));
        const hyperq zz = z * conj(z);
        const bool ok = zz == hyperq(rational(-3)) && norm_sq(z) == rational(5);
        rep.add(make_check("norm-vs-self-product",
                           "squared modulus differs from z * conj(z) off the real axis",
                           "||z||^2 = x^2 + y^2 while z conj(z) = (x^2 - y^2) + 0j",
                           {{"z_conj_z", detail::hyperq_json(zz)},
                            {"norm_sq", detail::rational_str(norm_sq(z))}},
                           {{"z_conj_z", detail::hyperq_json(hyperq(rational(-3)))},
                            {"norm_sq", "5"}},
                           ok));
    }
    {
        const bool a = light_cone_contains(hyperq{}, hyperq(rational(2), rational(2)));
        const bool b = light_cone_contains(hyperq{}, hyperq(rational(1), rational(0)));
        const bool c = light_cone_contains(hyperq(rational(1), rational(1)),
                                           hyperq(rational(3), rational(-1)));
        rep.add(make_check("light-cone-membership", "slope +/-1 lines through a center",
                           "the light cone of z is the pair of lines y' = +/-(x'-x) + y",
                           {{"on_plus_line", a}, {"off_cone", b}, {"on_minus_line", c}},
                           {{"on_plus_line", true}, {"off_cone", false}, {"on_minus_line", true}},
                           a && !b && c));
    }
    {
        // inverse sweep, backend-dependent
        int failures = 0;
        const int count = 1000;
        if (cfg.backend == backend_kind::rational_backend) {
            for (int k = 0; k < count; ++k) {
                hyperq z = detail::random_hyperq(rng);
                while (z.re * z.re == z.hy * z.hy) z = detail::random_hyperq(rng);
                if (z * inverse(z) != hyperq(rational(1))) ++failures;
            }
        } else {
            const double ulp4 = 4.0 * std::numeric_limits<double>::epsilon();
            for (int k = 0; k < count; ++k) {
                // keep (x^2+y^2)/|x^2-y^2| modest so 4 ulp is attainable
                hyperd z = detail::random_hyper(rng);
                while (std::fabs(norm_sq(z)) < 0.25 ||
                       std::fabs(z.re * z.re - z.hy * z.hy) < 0.5 * norm_sq(z)) {
                    z = detail::random_hyper(rng);
                }
                const hyperd prod = z * inverse(z);
                if (std::fabs(prod.re - 1.0) > ulp4 || std::fabs(prod.hy) > ulp4) ++failures;
            }
        }
        rep.add(make_check("inverse-off-cone",
                           "z * inverse(z) = 1 for 1000 random invertible z",
                           "x/(x^2-y^2) - j y/(x^2-y^2) inverts every element off the cone",
                           {{"failures", failures}}, {{"failures", 0}}, failures == 0));
    }
    {
        int raised = 0;
        const int count = 1000;
        for (int k = 0; k < count; ++k) {
            rational a(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
            if (a == 0) a = rational(1);
            const bool plus = rng.uniform_int(0, 1) == 1;
            const hyperq z(a, plus ? a : -a);
            try {
                (void)inverse(z);
            } catch (const light_cone_error&) {
                ++raised;
            }
        }
        rep.add(make_check("inverse-on-cone", "light-cone elements raise on inversion",
                           "the ring is not a field: the cone x^2 = y^2 has no inverses",
                           {{"raised", raised}}, {{"raised", 1000}}, raised == count));
    }
    {
        // modulus multiplicativity across the algebra catalog
        const std::vector<algebra_spec_ptr> composition = {real_spec(), complex_spec(),
                                                           quaternion_spec(), octonion_spec()};
        nlohmann::json measured = nlohmann::json::object();
        bool ok = true;
        for (const auto& spec : composition) {
            double worst = 0.0;
            for (int k = 0; k < 10000; ++k) {
                algebra_element a(spec, detail::random_coeffs(rng, spec->dim()));
                algebra_element b(spec, detail::random_coeffs(rng, spec->dim()));
                const double denom = modulus(a) * modulus(b);
                if (denom < 1e-6) continue;
                worst = std::max(worst, multiplicativity_defect(a, b) / denom);
            }
            measured[spec->name()] = worst;
            ok = ok && worst <= 1e-10;
        }
        rep.add(make_check("multiplicative-norm-composition",
                           "relative defect of N(ab) = N(a)N(b) over 10^4 random pairs each",
                           "the Euclidean modulus is multiplicative on the four composition "
                           "algebras",
                           measured, {{"max_relative_defect", 1e-10}}, ok));
    }
    {
        auto g = hyperbolic_spec();
        algebra_element a(g, {1.0, 1.0});
        algebra_element b(g, {1.0, -1.0});
        const double defect = multiplicativity_defect(a, b);
        rep.add(make_check("hyperbolic-defect-witness",
                           "defect of the zero-divisor pair (1+j, 1-j)",
                           "the hyperbolic modulus is a norm but not multiplicative",
                           {{"defect", defect}}, {{"defect", 2.0}}, defect == 2.0));
    }
    {
        auto h = quaternion_spec();
        auto e = [&](std::size_t i) { return algebra_element::basis(h, i); };
        const bool table = e(1) * e(2) == e(3);
        bool noncomm = false;
        for (std::size_t i = 1; i <= 3 && !noncomm; ++i)
            for (std::size_t j = 1; j <= 3 && !noncomm; ++j)
                noncomm = !(e(i) * e(j) == e(j) * e(i));
        bool assoc = true;
        for (int k = 0; k < 2000 && assoc; ++k) {
            algebra_element a(h, detail::random_coeffs(rng, 4));
            algebra_element b(h, detail::random_coeffs(rng, 4));
            algebra_element c(h, detail::random_coeffs(rng, 4));
            const algebra_element lhs = (a * b) * c;
            const algebra_element rhs = a * (b * c);
            double dev = 0.0;
            for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::fabs(lhs[i] - rhs[i]));
            assoc = dev <= 1e-10;
        }
        rep.add(make_check("quaternion-structure",
                           "e1 e2 = e3; associative; not commutative",
                           "the quaternion table is an associative non-commutative algebra",
                           {{"e1e2_is_e3", table}, {"noncommutative", noncomm},
                            {"associative", assoc}},
                           {{"e1e2_is_e3", true}, {"noncommutative", true}, {"associative", true}},
                           table && noncomm && assoc));
    }
    {
        auto o = octonion_spec();
        auto e = [&](std::size_t i) { return algebra_element::basis(o, i); };
        const bool table = e(2) * e(4) == e(6);
        const bool nonassoc = !((e(1) * e(2)) * e(4) == e(1) * (e(2) * e(4)));
        bool units = true;
        for (std::size_t i = 0; i < 8; ++i) units = units && e(0) * e(i) == e(i);
        rep.add(make_check("octonion-structure",
                           "e2 e4 = e6; a basis triple fails associativity; e0 is the unit",
                           "the octonion table from the seven oriented triples is a "
                           "non-associative composition algebra",
                           {{"e2e4_is_e6", table}, {"nonassociative", nonassoc},
                            {"unit_row", units}},
                           {{"e2e4_is_e6", true}, {"nonassociative", true}, {"unit_row", true}},
                           table && nonassoc && units));
    }
    {
        auto g = hyperbolic_spec();
        bool match = true;
        bool commutative = true;
        for (int k = 0; k < 10000 && match; ++k) {
            const hyperd za = detail::random_hyper(rng);
            const hyperd zb = detail::random_hyper(rng);
            algebra_element a(g, {za.re, za.hy});
            algebra_element b(g, {zb.re, zb.hy});
            const algebra_element ab = a * b;
            const hyperd direct = za * zb;
            match = ab[0] == direct.re && ab[1] == direct.hy;
            commutative = commutative && ab == b * a;
        }
        rep.add(make_check("table-matches-scalar-product",
                           "structure-constant product vs direct scalar product, bit for bit",
                           "the dim-2 table with e1^2 = +1 is exactly the hyperbolic ring",
                           {{"identical", match}, {"commutative", commutative}},
                           {{"identical", true}, {"commutative", true}}, match && commutative));
    }
    if (!cfg.algebra_file.empty()) {
        std::ifstream in(cfg.algebra_file);
        if (!in) throw config_error("cannot open algebra file: " + cfg.algebra_file);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw config_error("algebra file parse error: " + std::string(e.what()));
        }
        auto spec = algebra_from_json(doc);
        double worst = 0.0;
        for (int k = 0; k < 10000; ++k) {
            algebra_element a(spec, detail::random_coeffs(rng, spec->dim()));
            algebra_element b(spec, detail::random_coeffs(rng, spec->dim()));
            const double denom = modulus(a) * modulus(b);
            if (denom < 1e-6) continue;
            worst = std::max(worst, multiplicativity_defect(a, b) / denom);
        }
        rep.add(make_check("custom-algebra-defect",
                           "multiplicativity defect of the user-supplied table",
                           "informational: how close the supplied algebra is to composition",
                           {{"dim", spec->dim()}, {"max_relative_defect", worst}},
                           "reported", true));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// bounds suite
// ---------------------------------------------------------------------------

inline verification_report run_bounds_suite(const suite_config& cfg) {
    using detail::make_check;
    verification_report rep;
    rep.suite = "bounds";
    grid_spec grid = detail::resolve_grid(cfg, 20.0, 8001);
    rep.environment = detail::environment_json(cfg, grid);
    splitmix64 rng(cfg.seed);
    const double limit = std::sqrt(2.0) + 1e-12;

    {
        double worst = 0.0;
        for (int k = 0; k < 100000; ++k) {
            const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
            const hyperd a = detail::random_hyper(rng);
            const gvectord x = detail::random_gvector(rng, n);
            if (norm(a) < 1e-9 || norm(x) < 1e-9) continue;
            worst = std::max(worst, scalar_bound_check(a, x));
        }
        rep.add(make_check("scalar-bound-sweep",
                           "||a x|| / (||a|| ||x||) over 10^5 random samples, n <= 8",
                           "scalar multiplication dilates the norm by at most sqrt(2)",
                           {{"max_ratio", worst}}, {{"limit", limit}}, worst <= limit));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 100000; ++k) {
            const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
            const gvectord x = detail::random_gvector(rng, n);
            const gvectord y = detail::random_gvector(rng, n);
            if (norm(x) < 1e-9 || norm(y) < 1e-9) continue;
            worst = std::max(worst, inner_bound_check(x, y));
        }
        rep.add(make_check("inner-bound-sweep",
                           "||(x, y)|| / (||x|| ||y||) over 10^5 random samples, n <= 8",
                           "the inner product obeys the same sqrt(2) bound",
                           {{"max_ratio", worst}}, {{"limit", limit}}, worst <= limit));
    }
    {
        const hyperd a(1.0, 1.0);
        const gvectord x{hyperd(1.0, 1.0)};
        const double ratio = scalar_bound_check(a, x);
        rep.add(make_check("scalar-bound-tight", "a = x = 1 + j attains the constant",
                           "the sqrt(2) factor cannot be improved",
                           {{"ratio", ratio}}, {{"value", std::sqrt(2.0)}},
                           std::fabs(ratio - std::sqrt(2.0)) <= 1e-12));
    }
    {
        const gvectord x{hyperd(1.0, 1.0)};
        const gvectord y{hyperd(1.0, -1.0)};
        const double ratio = inner_bound_check(x, y);
        rep.add(make_check("inner-bound-tight", "x = (1+j), y = (1-j) attains the constant",
                           "the sqrt(2) factor is tight for the inner product too",
                           {{"ratio", ratio}}, {{"value", std::sqrt(2.0)}},
                           std::fabs(ratio - std::sqrt(2.0)) <= 1e-12));
    }
    {
        const hyperd a(1.0, 1.0);
        const gvectord x{hyperd(1.0, -1.0)};
        const double ratio = scalar_bound_check(a, x);
        rep.add(make_check("annihilating-pair", "(1+j) scaling the mirror null vector",
                           "zero divisors collapse whole rays to zero",
                           {{"ratio", ratio}}, {{"value", 0.0}}, ratio == 0.0));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 10000; ++k) {
            const gvectord v =
                detail::random_gvector(rng, static_cast<std::size_t>(rng.uniform_int(1, 8)));
            worst = std::max(worst, std::fabs(inner_product(v, v).hy));
        }
        rep.add(make_check("self-product-real",
                           "hyperbolic part of (v, v) over 10^4 random vectors",
                           "(v, v) = sum (x_i^2 - y_i^2) + 0j: exactly real, possibly negative",
                           {{"max_hyperbolic_part", worst}}, {{"value", 0.0}}, worst == 0.0));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// eigen suite
// ---------------------------------------------------------------------------

inline verification_report run_eigen_suite(const suite_config& cfg) {
    using detail::make_check;
    verification_report rep;
    rep.suite = "eigen";
    grid_spec grid = detail::resolve_grid(cfg, 20.0, 8001);
    rep.environment = detail::environment_json(cfg, grid);
    splitmix64 rng(cfg.seed);

    {
        const gmatrixd A{{hyperd(2.0), hyperd(1.0, 1.0)}, {hyperd(1.0, -1.0), hyperd(0.0)}};
        const eigen_result er = eigen_sa2(A);
        double worst = 0.0;
        for (const auto& ev : er.eigenvalues) worst = std::max(worst, char_residual(A, ev));
        nlohmann::json evs = nlohmann::json::array();
        for (const auto& ev : er.eigenvalues) evs.push_back(detail::hyper_json(ev));
        const bool ok = er.classification == sa2_class::two_real_plus_two_hyperbolic &&
                        er.eigenvalues.size() == 4 && worst <= 1e-12;
        rep.add(make_check("positive-discriminant",
                           "a matrix with discriminant 4: two real and two hyperbolic roots",
                           "positive discriminant yields four eigenvalues, only two real",
                           {{"classification", to_string(er.classification)},
                            {"eigenvalues", evs}, {"max_char_residual", worst}},
                           {{"classification", "TwoRealPlusTwoHyperbolic"},
                            {"eigenvalues", {{2.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}, {1.0, -1.0}}}},
                           ok));
    }
    {
        const gmatrixd A{{hyperd(0.0), hyperd(1.0, 1.0)}, {hyperd(1.0, -1.0), hyperd(0.0)}};
        const eigen_result er = eigen_sa2(A);
        const bool ok = er.classification == sa2_class::one_real &&
                        er.eigenvalues.size() == 1 && er.eigenvalues[0] == hyperd(0.0);
        rep.add(make_check("zero-discriminant", "a null off-diagonal collapses the spectrum",
                           "zero discriminant yields a single real eigenvalue",
                           {{"classification", to_string(er.classification)}},
                           {{"classification", "OneReal"}}, ok));
    }
    {
        const gmatrixd A{{hyperd(0.0), hyperd(0.0, 1.0)}, {hyperd(0.0, -1.0), hyperd(0.0)}};
        const eigen_result er = eigen_sa2(A);
        const auto [lo, hi] = hermitian_eigen_2x2(t_map(A));
        const bool ok = er.classification == sa2_class::no_eigenvalues &&
                        er.eigenvalues.empty() && std::fabs(lo + 1.0) <= 1e-12 &&
                        std::fabs(hi - 1.0) <= 1e-12;
        rep.add(make_check("negative-discriminant",
                           "self-adjoint matrix with no eigenvalues vs its complex relabeling",
                           "a self-adjoint hyperbolic matrix can have an empty spectrum while "
                           "the relabeled Hermitian matrix keeps eigenvalues -1 and +1",
                           {{"classification", to_string(er.classification)},
                            {"hermitian_eigenvalues", {lo, hi}}},
                           {{"classification", "NoEigenvalues"},
                            {"hermitian_eigenvalues", {-1.0, 1.0}}},
                           ok));
    }
    {
        int mismatches = 0;
        double worst_residual = 0.0;
        int count_four = 0, count_one = 0, count_none = 0;
        for (int k = 0; k < 10000; ++k) {
            const gmatrixd A = detail::random_sa2(rng);
            const eigen_result er = eigen_sa2(A);
            const double band = 1e-10 * (1.0 + norm(A) * norm(A));
            sa2_class expected;
            if (std::fabs(er.discriminant) <= band) {
                expected = sa2_class::one_real;
            } else {
                expected = er.discriminant > 0.0 ? sa2_class::two_real_plus_two_hyperbolic
                                                 : sa2_class::no_eigenvalues;
            }
            if (er.classification != expected) ++mismatches;
            switch (er.classification) {
                case sa2_class::two_real_plus_two_hyperbolic: ++count_four; break;
                case sa2_class::one_real: ++count_one; break;
                case sa2_class::no_eigenvalues: ++count_none; break;
            }
            for (const auto& ev : er.eigenvalues) {
                worst_residual = std::max(worst_residual, char_residual(A, ev) / (1.0 + norm(A) * norm(A)));
            }
        }
        rep.add(make_check("classification-sweep",
                           "10^4 random self-adjoint matrices: class vs discriminant sign, "
                           "characteristic residual of every returned eigenvalue",
                           "the discriminant sign decides 4/1/0 and the roots annihilate "
                           "det(A - lambda I)",
                           {{"mismatches", mismatches},
                            {"max_scaled_residual", worst_residual},
                            {"four", count_four}, {"one", count_one}, {"none", count_none}},
                           {{"mismatches", 0}, {"max_scaled_residual", 1e-10}},
                           mismatches == 0 && worst_residual <= 1e-10));
    }
    {
        int agreed = 0;
        const int instances = 100;
        for (int k = 0; k < instances; ++k) {
            gmatrixd A = detail::random_sa2(rng);
            while (std::fabs(eigen_sa2(A).discriminant) < 0.5) A = detail::random_sa2(rng);
            if (detail::eigen_scan_agrees(A, eigen_sa2(A))) ++agreed;
        }
        rep.add(make_check("grid-scan-oracle",
                           "zero set of ||det(A - lambda I)|| scanned over the plane vs the "
                           "returned spectrum, 100 instances",
                           "the formulaic spectrum is exactly the zero set of the "
                           "characteristic function",
                           {{"agreed", agreed}}, {{"agreed", instances}}, agreed == instances));
    }
    {
        bool ok = true;
        double worst_gap = 0.0;
        for (int k = 0; k < 10000 && ok; ++k) {
            gmatrixd A = detail::random_sa2(rng);
            eigen_result er = eigen_sa2(A);
            if (er.classification != sa2_class::two_real_plus_two_hyperbolic) continue;
            const auto [lo, hi] = hermitian_eigen_2x2(t_map(A));
            const double y12 = A(0, 1).hy;
            const double real_lo = er.eigenvalues[1].re;
            const double real_hi = er.eigenvalues[0].re;
            if (y12 == 0.0) {
                ok = lo == real_lo && hi == real_hi;
            } else {
                const double gap = std::max(std::fabs(lo - real_lo), std::fabs(hi - real_hi));
                worst_gap = std::max(worst_gap, gap);
                ok = gap > 0.0;
            }
        }
        rep.add(make_check("relabeling-shifts-spectrum",
                           "complex vs hyperbolic real eigenvalues across the sweep",
                           "relabeling j to i flips the discriminant's y term, so the spectra "
                           "differ whenever y12 is nonzero and coincide exactly when it is zero",
                           {{"separations_positive", ok}, {"max_gap_seen", worst_gap}},
                           {{"separations_positive", true}}, ok));
    }
    {
        bool ok = true;
        for (int k = 0; k < 2000 && ok; ++k) {
            gmatrixd A(2, 2), B(2, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    A(i, j) = detail::random_hyper(rng);
                    B(i, j) = detail::random_hyper(rng);
                }
            ok = adjoint(adjoint(A)) == A &&
                 max_entry_norm(adjoint(A * B) - adjoint(B) * adjoint(A)) <= 1e-12;
        }
        rep.add(make_check("adjoint-algebra", "involution and the product rule",
                           "conjugate transposition is involutive and antimultiplicative",
                           {{"holds", ok}}, {{"holds", true}}, ok));
    }
    if (!cfg.matrix_file.empty()) {
        std::ifstream in(cfg.matrix_file);
        if (!in) throw config_error("cannot open matrix file: " + cfg.matrix_file);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw config_error("matrix file parse error: " + std::string(e.what()));
        }
        if (!doc.is_array() || doc.size() != 2 || doc[0].size() != 2 || doc[1].size() != 2) {
            throw config_error("matrix file must hold a 2x2 array of [x, y] pairs");
        }
        gmatrixd A(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                A(i, j) = hyperd(doc[i][j].at(0).get<double>(), doc[i][j].at(1).get<double>());
            }
        eigen_result er;
        try {
            er = eigen_sa2(A);
        } catch (const not_self_adjoint_error& e) {
            throw config_error(std::string("matrix file: ") + e.what());
        }
        double worst = 0.0;
        for (const auto& ev : er.eigenvalues) worst = std::max(worst, char_residual(A, ev));
        nlohmann::json evs = nlohmann::json::array();
        for (const auto& ev : er.eigenvalues) evs.push_back(detail::hyper_json(ev));
        const double band = 1e-10 * (1.0 + norm(A) * norm(A));
        rep.add(make_check("matrix-file-classification",
                           "classification of the user-supplied self-adjoint matrix",
                           "user input is classified by the same discriminant rule",
                           {{"classification", to_string(er.classification)},
                            {"discriminant", er.discriminant}, {"eigenvalues", evs},
                            {"max_char_residual", worst}},
                           {{"max_char_residual", band}}, worst <= band));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// fourier suite
// ---------------------------------------------------------------------------

inline verification_report run_fourier_suite(const suite_config& cfg) {
    using detail::make_check;
    verification_report rep;
    rep.suite = "fourier";
    grid_spec grid = detail::resolve_grid(cfg, 20.0, 8001);
    rep.environment = detail::environment_json(cfg, grid);
    splitmix64 rng(cfg.seed);

    {
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const double p = rng.uniform(-2.0, 2.0);
            const double x = rng.uniform(-2.0, 2.0);
            const gmatrixd one{{hyperd(1.0)}};
            const gmatrixd e = exp_series(one, -p * x, hyperd::unit_j());
            const hyperd kernel(std::cosh(p * x), -std::sinh(p * x));
            worst = std::max(worst, norm(e(0, 0) - kernel));
        }
        rep.add(make_check("kernel-identity",
                           "exp(-j p x) via the power series vs cosh - j sinh, 20 points",
                           "the transform kernel is the hyperbolic exponential",
                           {{"max_deviation", worst}}, {{"tolerance", 1e-12}}, worst <= 1e-12));
    }

    const grid_function gauss = grid_function::sample(grid, make_generator("normalized-gaussian"));
    {
        const std::vector<double> momenta{0.0, 0.5, 1.0, 1.5, 2.0};
        const fourier_result fr = hyperbolic_fourier(gauss, momenta, cfg.tolerance, cfg.rule);
        double worst = 0.0;
        bool all_converged = true;
        nlohmann::json ratios = nlohmann::json::array();
        for (std::size_t i = 0; i < momenta.size(); ++i) {
            const double expected = std::exp(momenta[i] * momenta[i] / 2.0);
            const double ratio = fr.values[i].re / expected;
            ratios.push_back(ratio);
            worst = std::max(worst, std::fabs(ratio - 1.0));
            all_converged = all_converged && fr.converged[i];
        }
        rep.add(make_check("gaussian-transform",
                           "transform of the unit-mass Gaussian at p in {0, .5, 1, 1.5, 2}",
                           "the transform equals exp(p^2/2): it leaves every square-integrable "
                           "class immediately",
                           {{"ratios", ratios}, {"max_relative_error", worst},
                            {"converged", all_converged}},
                           {{"max_relative_error", 0.01}, {"converged", true}},
                           worst <= 0.01 && all_converged));
    }
    {
        const grid_function box = grid_function::sample(grid, make_generator("indicator"));
        const std::vector<double> momenta{0.5, 1.0, 2.0};
        const fourier_result fr = hyperbolic_fourier(box, momenta, cfg.tolerance, cfg.rule);
        double worst = 0.0;
        for (std::size_t i = 0; i < momenta.size(); ++i) {
            const double p = momenta[i];
            const double expected = 2.0 * std::sinh(p) / p;
            worst = std::max(worst,
                             std::fabs(fr.values[i].re - expected) / expected +
                                 std::fabs(fr.values[i].hy));
        }
        rep.add(make_check("indicator-transform",
                           "transform of the interval indicator vs 2 sinh(p)/p",
                           "even input kills the odd part of the kernel",
                           {{"max_relative_error", worst}}, {{"tolerance", 0.01}},
                           worst <= 0.01));
    }
    {
        const fourier_result fr = hyperbolic_fourier(gauss, {8.0}, cfg.tolerance, cfg.rule);
        const auto& trace = fr.traces[0];
        const bool increasing = trace[0].second < trace[1].second && trace[1].second < trace[2].second;
        nlohmann::json tr = nlohmann::json::array();
        for (const auto& [w, v] : trace) tr.push_back({w, v});
        rep.add(make_check("divergence-trace",
                           "truncation trace of the Gaussian transform at p = 8",
                           "the kernel grows like e^{|p||x|}: widening the window keeps "
                           "inflating the integral instead of settling",
                           {{"trace", tr}, {"converged", static_cast<bool>(fr.converged[0])}},
                           {{"strictly_increasing", true}, {"converged", false}},
                           increasing && !fr.converged[0]));
    }
    {
        const grid_function bump = grid_function::sample(grid, make_generator("bump"));
        const std::vector<double> momenta{0.0, 0.5, 1.0};
        const hyperd a(1.0, 0.5), b(-0.5, 1.0);
        grid_function combo = grid_function::zero(grid);
        for (std::size_t k = 0; k < combo.size(); ++k) {
            combo[k] = a * gauss[k] + b * bump[k];
        }
        const fourier_result ff = hyperbolic_fourier(gauss, momenta, cfg.tolerance, cfg.rule);
        const fourier_result fg = hyperbolic_fourier(bump, momenta, cfg.tolerance, cfg.rule);
        const fourier_result fc = hyperbolic_fourier(combo, momenta, cfg.tolerance, cfg.rule);
        double worst = 0.0;
        for (std::size_t i = 0; i < momenta.size(); ++i) {
            worst = std::max(worst,
                             norm(fc.values[i] - (a * ff.values[i] + b * fg.values[i])));
        }
        rep.add(make_check("linearity", "F[a f + b g] vs a F[f] + b F[g] at converged momenta",
                           "the transform is linear over the hyperbolic scalars",
                           {{"max_deviation", worst}}, {{"tolerance", 1e-8}}, worst <= 1e-8));
    }
    {
        const std::vector<double> windows{0.5, 1.0, 2.0, 3.0};
        nlohmann::json measured = nlohmann::json::array();
        bool increasing = true;
        bool oracle_ok = true;
        double previous = 0.0;
        double at2 = 0.0;
        for (double P : windows) {
            const double defect = plancherel_defect(gauss, P, 2001, cfg.rule);
            const double oracle = std::sqrt(
                detail::simpson([](double p) { return std::exp(p * p); }, -P, P));
            measured.push_back({{"window", P}, {"defect", defect}, {"oracle", oracle}});
            increasing = increasing && defect > previous;
            oracle_ok = oracle_ok && std::fabs(defect - oracle) <= 0.01 * oracle;
            previous = defect;
            if (P == 2.0) at2 = defect;
        }
        rep.add(make_check("no-plancherel",
                           "norm of the transformed Gaussian over growing momentum windows",
                           "no unitary extension exists: the windowed norm of F[f] grows "
                           "without bound while ||f|| is fixed",
                           {{"windows", measured}, {"defect_at_2", at2}},
                           {{"strictly_increasing", true}, {"min_defect_at_2", 5.5},
                            {"oracle_relative_tolerance", 0.01}},
                           increasing && oracle_ok && at2 >= 5.5));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// delta suite
// ---------------------------------------------------------------------------

inline verification_report run_delta_suite(const suite_config& cfg) {
    using detail::make_check;
    verification_report rep;
    rep.suite = "delta";
    grid_spec grid = detail::resolve_grid(cfg, 20.0, 8001);
    rep.environment = detail::environment_json(cfg, grid);

    const grid_function phi = grid_function::sample(grid, make_generator("gaussian"));
    {
        const hyperd v = delta_limit_integral(1e-3, phi, cfg.rule);
        rep.add(make_check("vanishing-alpha", "the integral vanishes as alpha goes to 0",
                           "f_alpha converges pointwise to 0 for small alpha",
                           {{"value", detail::hyper_json(v)}}, {{"max_norm", 0.01}},
                           norm(v) <= 0.01));
    }
    {
        const std::vector<double> alphas{0.5, 1.0, 2.0, 3.0, 4.0};
        nlohmann::json measured = nlohmann::json::array();
        bool increasing = true;
        bool oracle_ok = true;
        bool real_valued = true;
        double previous = 0.0;
        double at4 = 0.0;
        const double sqrt_pi = std::sqrt(4.0 * std::atan(1.0));
        for (double alpha : alphas) {
            const hyperd v = delta_limit_integral(alpha, phi, cfg.rule);
            const double oracle = sqrt_pi * detail::simpson([](double p) { return std::exp(p * p / 4.0); },
                                                            -alpha, alpha);
            measured.push_back({{"alpha", alpha}, {"value", v.re}, {"oracle", oracle}});
            increasing = increasing && v.re > previous;
            oracle_ok = oracle_ok && std::fabs(v.re - oracle) <= 0.01 * oracle;
            real_valued = real_valued && std::fabs(v.hy) <= 1e-10;
            previous = v.re;
            if (alpha == 4.0) at4 = v.re;
        }
        rep.add(make_check("no-delta-limit",
                           "integrals of 2 sinh(ax)/x against the Gaussian for growing a",
                           "the family diverges instead of converging to the Gaussian's value "
                           "1 at the origin, so it is not a representation of the point "
                           "evaluation",
                           {{"values", measured}, {"value_at_4", at4}},
                           {{"strictly_increasing", true}, {"min_value_at_4", 10.0},
                            {"oracle_relative_tolerance", 0.01}},
                           increasing && oracle_ok && real_valued && at4 > 10.0));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// ccr suite
// ---------------------------------------------------------------------------

inline verification_report run_ccr_suite(const suite_config& cfg) {
    using detail::make_check;
    verification_report rep;
    rep.suite = "ccr";
    grid_spec grid = detail::resolve_grid(cfg, 10.0, 4001);
    rep.environment = detail::environment_json(cfg, grid);
    splitmix64 rng(cfg.seed);

    {
        finite_support_vector x;
        x.set(1, complex_rational(rational(1)));
        x.set(2, complex_rational(rational(-1)));
        const finite_support_vector qx = apply_q(x);
        const bool q_ok = qx.at(1) == complex_rational(rational(1)) &&
                          qx.at(2) == complex_rational(rational(-2)) && qx.at(3).is_zero();
        const std::vector<complex_rational> px = apply_p(x, 10);
        const complex_rational minus_i(rational(0), rational(-1));
        const complex_rational half_i(rational(0), rational(1, 2));
        const bool p_ok = px[0] == minus_i && px[1] == minus_i && px[2] == half_i;
        rep.add(make_check("operator-action",
                           "Q and P applied to e1 - e2, read off exactly",
                           "Q scales entry n by n; P convolves with the -i/(m-n) kernel",
                           {{"q_ok", q_ok}, {"p_ok", p_ok}},
                           {{"q_ok", true}, {"p_ok", true}}, q_ok && p_ok));
    }
    {
        bool all = true;
        for (long long k = 1; k <= 49 && all; ++k) {
            finite_support_vector x;
            x.set(k, complex_rational(rational(1)));
            x.set(k + 1, complex_rational(rational(-1)));
            all = commutator_check(x, 100);
        }
        rep.add(make_check("commutator-basis-differences",
                           "(QP - PQ)x = i x for x = e_k - e_{k+1}, k <= 49, window 100",
                           "the commutation relation holds exactly on the dense subspace",
                           {{"all_exact", all}}, {{"all_exact", true}}, all));
    }
    {
        bool all = true;
        std::size_t checked = 0;
        for (std::size_t k = 0; k < cfg.samples && all; ++k) {
            finite_support_vector x;
            const int support = static_cast<int>(rng.uniform_int(2, 8));
            for (int s = 0; s < support - 1; ++s) {
                long long idx = rng.uniform_int(1, 59);
                rational re(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
                rational im(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
                x.set(idx, x.at(idx) + complex_rational(re, im));
            }
            const complex_rational s = x.sum();
            x.set(60, x.at(60) - s);
            if (!x.in_domain()) continue;
            all = commutator_check(x, cfg.upto);
            ++checked;
        }
        rep.add(make_check("commutator-random-domain",
                           "random zero-sum vectors with support in [1, 60], window " +
                               std::to_string(cfg.upto),
                           "no tolerance anywhere: the telescoping cancellation is exact",
                           {{"checked", checked}, {"all_exact", all}},
                           {{"all_exact", true}}, all && checked > 0));
    }
    {
        bool raised = false;
        std::string residual;
        try {
            (void)commutator_check(finite_support_vector::basis(1), 10);
        } catch (const not_in_domain_error& e) {
            raised = true;
            residual = "(" + e.residual.re.str() + ", " + e.residual.im.str() + ")";
        }
        rep.add(make_check("domain-violation",
                           "x = e1 has entry sum 1 and is rejected with the residual constant",
                           "off the zero-sum subspace the commutator misses i by exactly "
                           "-i times the entry sum",
                           {{"raised", raised}, {"residual_constant", residual}},
                           {{"raised", true}, {"residual_constant", "(0, -1)"}},
                           raised && residual == "(0, -1)"));
    }
    {
        bool symmetric = true;
        for (int k = 0; k < 50 && symmetric; ++k) {
            finite_support_vector x, y;
            for (int s = 0; s < 4; ++s) {
                x.set(rng.uniform_int(1, 40),
                      complex_rational(rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 7)),
                                       rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 7))));
                y.set(rng.uniform_int(1, 40),
                      complex_rational(rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 7)),
                                       rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 7))));
            }
            const long long window = 80;
            symmetric = pairing(apply_p(x, window), densify(y, window)) ==
                        pairing(densify(x, window), apply_p(y, window));
        }
        rep.add(make_check("formal-symmetry", "<Px, y> = <x, Py> exactly over a common window",
                           "the kernel -i/(m-n) is Hermitian: i times an antisymmetric real "
                           "matrix",
                           {{"holds", symmetric}}, {{"holds", true}}, symmetric));
    }
    {
        const grid_function f = grid_function::sample(grid, make_generator("gaussian"));
        const double pos = ccr_commutator_residual(f, ccr_rep::position);
        const double mom = ccr_commutator_residual(f, ccr_rep::momentum);
        rep.add(make_check("grid-commutator",
                           "interior residual of [q, p]f - j f on the Gaussian, both "
                           "representations",
                           "multiplication by the coordinate and -j d/dx (or +j d/dp with the "
                           "roles swapped) realize the hyperbolic commutation relation",
                           {{"position", pos}, {"momentum", mom}},
                           {{"max_residual", 1e-6}}, pos <= 1e-6 && mom <= 1e-6));
    }
    {
        const std::size_t coarse_n = (grid.npoints - 1) / 2 + 1;
        const grid_spec coarse(grid.half_width, coarse_n);
        const grid_function f_fine = grid_function::sample(grid, make_generator("gaussian"));
        const grid_function f_coarse = grid_function::sample(coarse, make_generator("gaussian"));
        nlohmann::json measured = nlohmann::json::object();
        bool ok = true;
        for (ccr_rep r : {ccr_rep::position, ccr_rep::momentum}) {
            const double fine = ccr_commutator_residual(f_fine, r);
            const double rough = ccr_commutator_residual(f_coarse, r);
            const double order = std::log2(rough / fine);
            measured[r == ccr_rep::position ? "position_order" : "momentum_order"] = order;
            ok = ok && order >= 3.5;
        }
        rep.add(make_check("stencil-convergence-order",
                           "empirical order of the commutator residual when halving h",
                           "the fourth-order stencil makes the residual shrink at fourth order",
                           measured, {{"min_order", 3.5}}, ok));
    }
    {
        rep.add(make_check("spectral-character",
                           "inequivalence witness, stated",
                           "the counterexample's Q has the positive integers as pure point "
                           "spectrum, while the position operator's spectrum is continuous; "
                           "no unitary can carry one to the other, despite both pairs "
                           "satisfying the same commutation relation",
                           {{"counterexample_spectrum", "pure point {1, 2, 3, ...}"},
                            {"position_spectrum", "continuous (the real line)"}},
                           "stated", true));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// weyl suite
// ---------------------------------------------------------------------------

inline verification_report run_weyl_suite(const suite_config& cfg) {
    using detail::make_check;
    verification_report rep;
    rep.suite = "weyl";
    grid_spec grid = detail::resolve_grid(cfg, 10.0, 2001);
    rep.environment = detail::environment_json(cfg, grid);
    const double h = grid.spacing();

    {
        const double r = weyl_relation_check(0.0, 0.0, grid);
        rep.add(make_check("zero-parameters", "t = s = 0 is trivially exact",
                           "both groups start at the identity",
                           {{"residual", r}}, {{"value", 0.0}}, r == 0.0));
    }
    {
        const std::vector<double> ts{0.0, 50.0 * h, 100.0 * h, 200.0 * h, 400.0 * h};
        const std::vector<double> ss{0.0, 0.5, 1.0,
                                     4.0 * std::atan(1.0) / grid.half_width, 2.0};
        double worst = 0.0;
        for (double t : ts)
            for (double s : ss) worst = std::max(worst, weyl_relation_check(t, s, grid));
        rep.add(make_check("aligned-grid-5x5",
                           "max residual over a 5x5 grid of aligned translations and phases",
                           "the exponentiated commutation relation holds with phase e^{its} "
                           "whenever translations land on grid points",
                           {{"max_residual", worst}}, {{"tolerance", 1e-12}}, worst <= 1e-12));
    }
    {
        bool raised = false;
        try {
            (void)weyl_relation_check(0.5 * h, 1.0, grid);
        } catch (const grid_alignment_error&) {
            raised = true;
        }
        rep.add(make_check("alignment-guard", "fractional translations are rejected",
                           "only exact sample permutations keep the check exact",
                           {{"raised", raised}}, {{"raised", true}}, raised));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// axioms suite
// ---------------------------------------------------------------------------

inline verification_report run_axioms_suite(const suite_config& cfg) {
    using detail::make_check;
    verification_report rep;
    rep.suite = "axioms";
    grid_spec grid = detail::resolve_grid(cfg, 20.0, 8001);
    rep.environment = detail::environment_json(cfg, grid);
    splitmix64 rng(cfg.seed);

    {
        const gmatrixd O = gmatrixd::diagonal({hyperd(2.0), hyperd(3.0)});
        const hyperd ev1 = expected_value(O, gvectord{hyperd(1.0), hyperd(0.0)});
        const hyperd ev2 = expected_value(O, gvectord{hyperd(1.0), hyperd(1.0)});
        const bool ok = ev1 == hyperd(2.0) && ev2 == hyperd(2.5);
        rep.add(make_check("expectation-values",
                           "eigenvector gives the eigenvalue; a superposition averages",
                           "E(O) = (psi, O psi)/(psi, psi)",
                           {{"eigenvector", detail::hyper_json(ev1)},
                            {"superposition", detail::hyper_json(ev2)}},
                           {{"eigenvector", {2.0, 0.0}}, {"superposition", {2.5, 0.0}}}, ok));
    }
    {
        bool raised = false;
        try {
            (void)expected_value(gmatrixd::identity(1), gvectord{hyperd(1.0, 1.0)});
        } catch (const light_cone_error&) {
            raised = true;
        }
        rep.add(make_check("null-state-rejected",
                           "a nonzero state with (psi, psi) = 0 has no expectation values",
                           "the expectation formula requires an invertible self inner product",
                           {{"raised", raised}}, {{"raised", true}}, raised));
    }
    {
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const gmatrixd O = detail::random_sa2(rng);
            gvectord psi = detail::random_gvector(rng, 2);
            while (on_light_cone(inner_product(psi, psi))) psi = detail::random_gvector(rng, 2);
            worst = std::max(worst, std::fabs(expected_value(O, psi).hy));
        }
        rep.add(make_check("self-adjoint-expectations-real",
                           "hyperbolic part of E(O) for 200 random self-adjoint O and valid "
                           "states",
                           "(psi, O psi) is real whenever O equals its adjoint, even though "
                           "such O may have no eigenvalues at all",
                           {{"max_hyperbolic_part", worst}}, {{"tolerance", 1e-12}},
                           worst <= 1e-12));
    }
    {
        const gmatrixd H = gmatrixd::diagonal({hyperd(1.0), hyperd(-1.0)});
        const gvectord psi0{hyperd(1.0), hyperd(1.0)};
        const double t = 0.7;
        const gvectord psi = evolve(H, psi0, t);
        const gvectord expected{hyperd(std::cosh(t), std::sinh(t)),
                                hyperd(std::cosh(t), -std::sinh(t))};
        const double gap = norm(psi - expected);
        const gvectord frozen = evolve(gmatrixd{{hyperd(0.0)}}, gvectord{hyperd(1.0, 2.0)}, 5.0);
        const bool frozen_ok = frozen == gvectord{hyperd(1.0, 2.0)};
        rep.add(make_check("evolution-closed-form",
                           "diagonal generator evolves componentwise; zero generator freezes",
                           "j psi' = H psi is solved by psi(t) = exp(j t H) psi0, a hyperbolic "
                           "rotation per eigenline",
                           {{"deviation", gap}, {"frozen", frozen_ok}},
                           {{"tolerance", 1e-12}, {"frozen", true}},
                           gap <= 1e-12 && frozen_ok));
    }
    {
        const gmatrixd H{{hyperd(1.0), hyperd(0.5, 0.25)}, {hyperd(0.5, -0.25), hyperd(-0.5)}};
        const gvectord psi0{hyperd(1.0), hyperd(0.0, 1.0)};
        const double t = 0.6, dt = 1e-4;
        const gvectord plus = evolve(H, psi0, t + dt);
        const gvectord minus = evolve(H, psi0, t - dt);
        gvectord derivative(2);
        for (std::size_t i = 0; i < 2; ++i) {
            derivative[i] = (plus[i] - minus[i]) * (1.0 / (2.0 * dt));
        }
        const gvectord rhs = H * evolve(H, psi0, t);
        double worst = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
            worst = std::max(worst, norm(hyperd::unit_j() * derivative[i] - rhs[i]));
        }
        rep.add(make_check("schrodinger-residual",
                           "j d psi/dt vs H psi with a centered difference in t",
                           "the power-series evolution satisfies the hyperbolic Schrodinger "
                           "equation",
                           {{"residual", worst}}, {{"tolerance", 1e-6}}, worst <= 1e-6));
    }
    {
        const gmatrixd A{{hyperd(0.3), hyperd(0.2, 0.1)}, {hyperd(0.2, -0.1), hyperd(-0.4)}};
        const gmatrixd left = exp_series(A, 0.9, hyperd::unit_j());
        const gmatrixd right =
            exp_series(A, 0.4, hyperd::unit_j()) * exp_series(A, 0.5, hyperd::unit_j());
        const double gap = max_entry_norm(left - right);
        rep.add(make_check("one-parameter-group",
                           "exp(j (s+t) A) vs exp(j s A) exp(j t A)",
                           "the exponential series is a one-parameter group in t",
                           {{"deviation", gap}}, {{"tolerance", 1e-10}}, gap <= 1e-10));
    }
    {
        // (5/4)^2 - (3/4)^2 = 1: an exact point on the unit hyperbola.
        const hyperq u(rational(5, 4), rational(3, 4));
        const gmatrixq U = gmatrixq::diagonal({u, conj(u)});
        bool preserved = true;
        for (int k = 0; k < 100 && preserved; ++k) {
            gvectorq x(2), y(2);
            for (std::size_t i = 0; i < 2; ++i) {
                x[i] = detail::random_hyperq(rng);
                y[i] = detail::random_hyperq(rng);
            }
            preserved = inner_product(U * x, U * y) == inner_product(x, y);
        }
        rep.add(make_check("hyperbolic-rotation-unitary",
                           "(Ux, Uy) = (x, y) exactly for the rational hyperbola point 5/4 + 3/4 j",
                           "diagonal matrices of unit-self-product scalars preserve the inner "
                           "product: conj(u) u = 1",
                           {{"preserved", preserved}}, {{"preserved", true}}, preserved));
    }
    return rep;
}

// ---------------------------------------------------------------------------

inline verification_report run_suite(const suite_config& cfg) {
    if (cfg.tolerance <= 0.0) throw config_error("tolerance must be positive");
    if (cfg.upto < 1) throw config_error("window bound must be at least 1");
    if (cfg.samples < 1) throw config_error("sample count must be at least 1");

    if (cfg.suite == "algebra") return run_algebra_suite(cfg);
    if (cfg.suite == "bounds") return run_bounds_suite(cfg);
    if (cfg.suite == "eigen") return run_eigen_suite(cfg);
    if (cfg.suite == "fourier") return run_fourier_suite(cfg);
    if (cfg.suite == "delta") return run_delta_suite(cfg);
    if (cfg.suite == "ccr") return run_ccr_suite(cfg);
    if (cfg.suite == "weyl") return run_weyl_suite(cfg);
    if (cfg.suite == "axioms") return run_axioms_suite(cfg);
    if (cfg.suite == "all") {
        verification_report all;
        all.suite = "all";
        all.environment = detail::environment_json(cfg, detail::resolve_grid(cfg, 20.0, 8001));
        for (const auto& info : list_suites()) {
            if (info.name == "all") continue;
            suite_config sub = cfg;
            sub.suite = info.name;
            all.merge(run_suite(sub));
        }
        return all;
    }
    throw unknown_suite_error("unknown suite: " + cfg.suite);
}

} // namespace hyperlin

#endif
