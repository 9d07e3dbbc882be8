#ifndef HYPERLIN_FOURIER_HPP
#define HYPERLIN_FOURIER_HPP

#include "hyperlin/grid.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace hyperlin {

/// Transform values at the probe momenta, with the nested-truncation
/// evidence that decides pointwise convergence. The kernel exp(-j p x) =
/// cosh(px) - j sinh(px) grows like e^{|p||x|}, so for many inputs the
/// truncated integrals blow up instead of settling; that blow-up is data
/// here, recorded in the traces, never an error.
struct fourier_result {
    std::vector<double> momenta;
    std::vector<hyperd> values;          // integral over the widest window
    std::vector<bool> converged;         // last two truncation levels agree
    std::vector<std::vector<std::pair<double, double>>> traces;  // (half-width, ||value||)
};

namespace detail {

inline hyperd fourier_window(const grid_function& f, double p, std::size_t lo, std::size_t hi,
                             quadrature rule) {
    return integrate(f.spec(), lo, hi, rule, [&](std::size_t k) {
        const double px = p * f.spec().coordinate(k);
        // exp(-j p x) f(x)
        return hyperd(std::cosh(px), -std::sinh(px)) * f[k];
    });
}

} // namespace detail

/// (F f)(p) = integral of exp(-j p x) f(x) dx, evaluated over the nested
/// windows [-L/4, L/4], [-L/2, L/2], [-L, L]. A momentum converges when
/// the last two windows agree within tolerance * (1 + ||value||).
inline fourier_result hyperbolic_fourier(const grid_function& f,
                                         const std::vector<double>& momenta,
                                         double tolerance = 1e-6,
                                         quadrature rule = quadrature::trapezoid) {
    const std::size_t mid = f.spec().midpoint();
    fourier_result out;
    out.momenta = momenta;
    for (double p : momenta) {
        std::vector<std::pair<double, double>> trace;
        hyperd value{};
        hyperd previous{};
        for (int level = 0; level < 3; ++level) {
            const std::size_t half = mid >> (2 - level);
            previous = value;
            value = detail::fourier_window(f, p, mid - half, mid + half, rule);
            trace.emplace_back(f.spec().coordinate(mid + half), norm(value));
        }
        const bool ok = norm(value - previous) <= tolerance * (1.0 + norm(value));
        out.values.push_back(value);
        out.converged.push_back(ok);
        out.traces.push_back(std::move(trace));
    }
    return out;
}

/// || F f || restricted to the momentum window [-P, P]. For the unit-mass
/// Gaussian this grows without bound in P (the transform is exp(p^2/2)),
/// which is exactly why no extension of F can be an isometry.
inline double plancherel_defect(const grid_function& f, double momentum_window,
                                std::size_t momentum_points = 2001,
                                quadrature rule = quadrature::trapezoid) {
    if (momentum_window == 0.0) return 0.0;
    if (momentum_window < 0.0) throw config_error("momentum window must be >= 0");
    if (momentum_points < 5 || momentum_points % 2 == 0) {
        throw config_error("momentum point count must be odd and at least 5");
    }
    const std::size_t n = f.size();
    const std::size_t mid_p = (momentum_points - 1) / 2;
    const double dp = momentum_window / static_cast<double>(mid_p);
    double acc = 0.0;
    for (std::size_t m = 0; m < momentum_points; ++m) {
        const double p = (static_cast<double>(m) - static_cast<double>(mid_p)) * dp;
        hyperd value = detail::fourier_window(f, p, 0, n - 1, rule);
        const double w = (m == 0 || m == momentum_points - 1) ? 0.5 : 1.0;
        acc += w * to_double(norm_sq(value));
    }
    return std::sqrt(acc * dp);
}

/// Integral of f_a(x) phi(x) with f_a(x) = 2 sinh(a x)/x and the removable
/// singularity at 0 filled with its limit 2a. Against a Gaussian this is
/// real, grows monotonically in a, and never approaches phi(0): the family
/// fails to represent the point-evaluation functional.
inline hyperd delta_limit_integral(double alpha, const grid_function& phi,
                                   quadrature rule = quadrature::trapezoid) {
    if (alpha <= 0.0) throw config_error("alpha must be positive");
    const std::size_t mid = phi.spec().midpoint();
    return detail::integrate(phi.spec(), 0, phi.size() - 1, rule, [&](std::size_t k) {
        const double x = phi.spec().coordinate(k);
        const double fa = (k == mid) ? 2.0 * alpha : 2.0 * std::sinh(alpha * x) / x;
        return phi[k] * fa;
    });
}

} // namespace hyperlin

#endif
