#ifndef HYPERLIN_OPERATORS_HPP
#define HYPERLIN_OPERATORS_HPP

#include "hyperlin/grid.hpp"

#include <algorithm>
#include <cstddef>

namespace hyperlin {

/// Which realization of the commutation pair to use: position has
/// q = multiplication by the coordinate and p = -j d/dq; momentum has
/// q = +j d/dp and p = multiplication by the coordinate.
enum class ccr_rep { position, momentum };

/// (q f)(x) = x f(x).
inline grid_function position_op(const grid_function& f) {
    grid_function out = f;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= f.spec().coordinate(k);
    return out;
}

/// (p f)(x) = -j f'(x), with the fourth-order stencil derivative.
inline grid_function momentum_op(const grid_function& f) {
    grid_function d = derivative(f);
    const hyperd minus_j(0.0, -1.0);
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = minus_j * d[k];
    return d;
}

/// Momentum-representation coordinate operator, (q f)(p) = +j f'(p).
inline grid_function position_op_momentum_rep(const grid_function& f) {
    grid_function d = derivative(f);
    const hyperd plus_j(0.0, 1.0);
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = plus_j * d[k];
    return d;
}

/// Max interior norm of ([q, p] - j) f for the chosen representation.
/// 10% of the points at each boundary are excluded: the test function is
/// assumed to be negligible there, so the residual measures only the
/// stencil error against the continuum identity [q, p] = j.
inline double ccr_commutator_residual(const grid_function& f, ccr_rep rep) {
    // qp applies p first and q second; pq the other way around.
    const bool pos = rep == ccr_rep::position;
    grid_function qp = pos ? position_op(momentum_op(f))
                           : position_op_momentum_rep(position_op(f));
    grid_function pq = pos ? momentum_op(position_op(f))
                           : position_op(position_op_momentum_rep(f));
    const hyperd j = hyperd::unit_j();
    const std::size_t n = f.size();
    const std::size_t margin = n / 10;
    double worst = 0.0;
    for (std::size_t k = margin; k < n - margin; ++k) {
        worst = std::max(worst, norm(qp[k] - pq[k] - j * f[k]));
    }
    return worst;
}

} // namespace hyperlin

#endif
