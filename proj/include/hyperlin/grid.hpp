#ifndef HYPERLIN_GRID_HPP
#define HYPERLIN_GRID_HPP

#include "hyperlin/errors.hpp"
#include "hyperlin/hyper.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hyperlin {

/// Uniform grid on [-L, L] with an odd point count, so that x = 0 is a
/// grid point exactly: x_k = (k - mid) * h with mid = (N-1)/2, h = L/mid.
struct grid_spec {
    double half_width;
    std::size_t npoints;

    grid_spec(double L, std::size_t N) : half_width(L), npoints(N) {
        if (L <= 0.0) throw config_error("grid half-width must be positive");
        if (N < 5 || N % 2 == 0) {
            throw config_error("grid point count must be odd and at least 5");
        }
    }

    std::size_t midpoint() const { return (npoints - 1) / 2; }
    double spacing() const { return half_width / static_cast<double>(midpoint()); }
    double coordinate(std::size_t k) const {
        return (static_cast<double>(k) - static_cast<double>(midpoint())) * spacing();
    }

    friend bool operator==(const grid_spec& a, const grid_spec& b) {
        return a.half_width == b.half_width && a.npoints == b.npoints;
    }
    friend bool operator!=(const grid_spec& a, const grid_spec& b) { return !(a == b); }
};

enum class quadrature {
    trapezoid,  // default; composite trapezoid, O(h^2), spectrally accurate
                // for smooth functions that decay at the boundary
    simpson,    // composite Simpson, O(h^4); N odd gives an even interval count
};

/// A hyperbolic-valued function sampled on a uniform grid. Immutable in
/// practice: operators return new functions.
class grid_function {
public:
    grid_function(grid_spec spec, std::vector<hyperd> values)
        : spec_(spec), v_(std::move(values)) {
        if (v_.size() != spec_.npoints) {
            throw grid_mismatch_error("value count does not match the grid");
        }
    }

    static grid_function sample(const grid_spec& spec,
                                const std::function<hyperd(double)>& f) {
        std::vector<hyperd> v(spec.npoints);
        for (std::size_t k = 0; k < spec.npoints; ++k) v[k] = f(spec.coordinate(k));
        return grid_function(spec, std::move(v));
    }

    static grid_function zero(const grid_spec& spec) {
        return grid_function(spec, std::vector<hyperd>(spec.npoints));
    }

    const grid_spec& spec() const { return spec_; }
    std::size_t size() const { return v_.size(); }
    const hyperd& operator[](std::size_t k) const { return v_[k]; }
    hyperd& operator[](std::size_t k) { return v_[k]; }
    const std::vector<hyperd>& values() const { return v_; }

private:
    grid_spec spec_;
    std::vector<hyperd> v_;
};

namespace detail {

inline void require_same_grid(const grid_function& f, const grid_function& g) {
    if (f.spec() != g.spec()) throw grid_mismatch_error("functions live on different grids");
}

template <class F>
hyperd integrate(const grid_spec& spec, std::size_t lo, std::size_t hi, quadrature rule,
                 F&& value) {
    const double h = spec.spacing();
    hyperd acc{};
    if (rule == quadrature::simpson && (hi - lo) % 2 == 0 && hi > lo) {
        for (std::size_t k = lo; k <= hi; ++k) {
            double w = (k == lo || k == hi) ? 1.0 : (k - lo) % 2 == 1 ? 4.0 : 2.0;
            acc += value(k) * w;
        }
        return acc * (h / 3.0);
    }
    for (std::size_t k = lo; k <= hi; ++k) {
        double w = (k == lo || k == hi) ? 0.5 : 1.0;
        acc += value(k) * w;
    }
    return acc * h;
}

} // namespace detail

/// (f, g) = integral of conj(f) g, by composite quadrature over the grid.
inline hyperd l2_inner(const grid_function& f, const grid_function& g,
                       quadrature rule = quadrature::trapezoid) {
    detail::require_same_grid(f, g);
    return detail::integrate(f.spec(), 0, f.size() - 1, rule,
                             [&](std::size_t k) { return conj(f[k]) * g[k]; });
}

/// sqrt of the integral of ||f(x)||^2 = x(x)^2 + y(x)^2.
inline double l2_norm(const grid_function& f, quadrature rule = quadrature::trapezoid) {
    hyperd s = detail::integrate(f.spec(), 0, f.size() - 1, rule, [&](std::size_t k) {
        return hyperd(norm_sq(f[k]));
    });
    return std::sqrt(s.re);
}

// ---- derivatives -----------------------------------------------------------
//
// Fourth-order stencils: the classic five-point central difference in the
// interior and skewed five-point stencils at the two points nearest each
// boundary. Exact for polynomials of degree <= 4.

inline grid_function derivative(const grid_function& f) {
    const std::size_t n = f.size();
    const double h = f.spec().spacing();
    grid_function d = grid_function::zero(f.spec());
    for (std::size_t k = 2; k + 2 < n; ++k) {
        d[k] = (f[k - 2] - f[k + 2] + 8.0 * (f[k + 1] - f[k - 1])) * (1.0 / (12.0 * h));
    }
    auto edge = [&](std::size_t base, std::ptrdiff_t dir, const double (&c)[5]) {
        hyperd acc{};
        for (std::size_t m = 0; m < 5; ++m) {
            acc += f[base + dir * static_cast<std::ptrdiff_t>(m)] * c[m];
        }
        return acc * (static_cast<double>(dir) / (12.0 * h));
    };
    static constexpr double c0[5] = {-25.0, 48.0, -36.0, 16.0, -3.0};
    static constexpr double c1[5] = {-3.0, -10.0, 18.0, -6.0, 1.0};
    d[0] = edge(0, +1, c0);
    d[1] = edge(1, +1, c1);
    d[n - 1] = edge(n - 1, -1, c0);
    d[n - 2] = edge(n - 2, -1, c1);
    return d;
}

inline grid_function derivative(const grid_function& f, unsigned order) {
    grid_function d = f;
    for (unsigned m = 0; m < order; ++m) d = derivative(d);
    return d;
}

/// sup over the grid of || x^n (d/dx)^m f(x) ||; a grid estimate of the
/// rapid-decrease seminorm, converging as the spacing shrinks.
inline double schwartz_seminorm(const grid_function& f, unsigned n, unsigned m) {
    if (m > 4) {
        throw unsupported_order_error("derivative order above 4 is not supported");
    }
    grid_function d = derivative(f, m);
    double best = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        best = std::max(best, std::pow(std::fabs(d.spec().coordinate(k)), n) * norm(d[k]));
    }
    return best;
}

/// Computable stand-in for membership of the rapid-decrease class: each
/// requested seminorm estimate and the l2 norm must be stable under
/// shrinking the window to half width, i.e. the suprema and the mass live
/// in the interior instead of growing with the domain.
inline bool embedding_check(const grid_function& f,
                            const std::vector<std::pair<unsigned, unsigned>>& orders,
                            double tolerance = 1e-6) {
    const std::size_t n = f.size();
    const std::size_t quarter = n / 4;
    auto window_seminorm = [&](unsigned nn, unsigned mm, std::size_t margin) {
        grid_function d = derivative(f, mm);
        double best = 0.0;
        for (std::size_t k = margin; k < n - margin; ++k) {
            best = std::max(best, std::pow(std::fabs(d.spec().coordinate(k)), nn) * norm(d[k]));
        }
        return best;
    };
    for (const auto& [nn, mm] : orders) {
        if (mm > 4) throw unsupported_order_error("derivative order above 4 is not supported");
        double full = window_seminorm(nn, mm, 0);
        double half = window_seminorm(nn, mm, quarter);
        if (std::fabs(full - half) > tolerance * (1.0 + std::fabs(full))) return false;
    }
    auto windowed_l2 = [&](std::size_t lo, std::size_t hi) {
        hyperd s = detail::integrate(f.spec(), lo, hi, quadrature::trapezoid,
                                     [&](std::size_t k) { return hyperd(norm_sq(f[k])); });
        return std::sqrt(s.re);
    };
    double full = windowed_l2(0, n - 1);
    double half = windowed_l2(quarter, n - 1 - quarter);
    return std::fabs(full - half) <= tolerance * (1.0 + std::fabs(full));
}

// ---- built-in test functions ----------------------------------------------

/// Named generators accepted by the command line:
///   gaussian              exp(-x^2)
///   normalized-gaussian   (2 pi)^{-1/2} exp(-x^2/2), unit mass
///   indicator             1 on [-1, 1]
///   bump                  exp(-1/(1-x^2)) on (-1, 1), smooth, compact support
///   plane-wave(k)         cosh(kx) + j sinh(kx)
inline std::function<hyperd(double)> make_generator(const std::string& name) {
    if (name == "gaussian") {
        return [](double x) { return hyperd(std::exp(-x * x)); };
    }
    if (name == "normalized-gaussian") {
        const double c = 1.0 / std::sqrt(8.0 * std::atan(1.0));  // (2 pi)^{-1/2}
        return [c](double x) { return hyperd(c * std::exp(-x * x / 2.0)); };
    }
    if (name == "indicator") {
        return [](double x) { return hyperd(std::fabs(x) <= 1.0 ? 1.0 : 0.0); };
    }
    if (name == "bump") {
        return [](double x) {
            double s = 1.0 - x * x;
            return hyperd(s > 0.0 ? std::exp(-1.0 / s) : 0.0);
        };
    }
    if (name.rfind("plane-wave(", 0) == 0 && name.back() == ')') {
        std::size_t parsed = 0;
        double k = 0.0;
        const std::string arg = name.substr(11, name.size() - 12);
        try {
            k = std::stod(arg, &parsed);
        } catch (const std::exception&) {
            throw config_error("bad plane-wave parameter: " + arg);
        }
        if (parsed != arg.size()) throw config_error("bad plane-wave parameter: " + arg);
        return [k](double x) { return exp_j(k * x); };
    }
    throw config_error("unknown generator: " + name);
}

// ---- serialization ----------------------------------------------------------

inline std::string to_csv(const grid_function& f) {
    std::string out = "x,value_x,value_y\n";
    char line[96];
    for (std::size_t k = 0; k < f.size(); ++k) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", f.spec().coordinate(k),
                      f[k].re, f[k].hy);
        out += line;
    }
    return out;
}

inline nlohmann::json to_json(const grid_function& f) {
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t k = 0; k < f.size(); ++k) values.push_back({f[k].re, f[k].hy});
    return nlohmann::json{
        {"grid", {{"half_width", f.spec().half_width}, {"points", f.spec().npoints}}},
        {"values", std::move(values)},
    };
}

inline grid_function grid_function_from_json(const nlohmann::json& doc) {
    if (!doc.contains("grid") || !doc.contains("values")) {
        throw config_error("grid function JSON needs \"grid\" and \"values\"");
    }
    grid_spec spec(doc["grid"]["half_width"].get<double>(),
                   doc["grid"]["points"].get<std::size_t>());
    std::vector<hyperd> v;
    v.reserve(doc["values"].size());
    for (const auto& pair : doc["values"]) {
        v.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return grid_function(spec, std::move(v));
}

} // namespace hyperlin

#endif
