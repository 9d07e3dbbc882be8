#ifndef HYPERLIN_EIGEN_HPP
#define HYPERLIN_EIGEN_HPP

#include "hyperlin/errors.hpp"
#include "hyperlin/linalg.hpp"

#include <cmath>
#include <vector>

namespace hyperlin {

/// Spectral trichotomy of a self-adjoint 2x2 hyperbolic matrix. The
/// discriminant D = (x11-x22)^2 + 4 x12^2 - 4 y12^2 can be negative
/// (unlike its complex Hermitian counterpart, which adds the y term):
///   D > 0  ->  two real eigenvalues and two hyperbolic ones,
///   D = 0  ->  a single real eigenvalue,
///   D < 0  ->  no eigenvalues at all in the hyperbolic scalars.
enum class sa2_class {
    two_real_plus_two_hyperbolic,
    one_real,
    no_eigenvalues,
};

inline const char* to_string(sa2_class c) {
    switch (c) {
        case sa2_class::two_real_plus_two_hyperbolic: return "TwoRealPlusTwoHyperbolic";
        case sa2_class::one_real: return "OneReal";
        case sa2_class::no_eigenvalues: return "NoEigenvalues";
    }
    return "?";
}

struct eigen_result {
    sa2_class classification;
    std::vector<hyperd> eigenvalues;  // 4, 1, or 0 entries
    double discriminant;
};

/// Eigenvalues of A in SA2: solutions of det(A - lambda I) = 0 with
/// lambda ranging over the hyperbolic scalars.
/// |D| below 1e-10 * (1 + ||A||^2) is classified as D = 0.
inline eigen_result eigen_sa2(const gmatrixd& A) {
    if (!A.square() || A.rows() != 2) {
        throw dimension_mismatch_error("SA2 eigenvalues are defined for 2x2 matrices");
    }
    if (!is_self_adjoint(A)) {
        throw not_self_adjoint_error("matrix is not self-adjoint");
    }
    const double x11 = A(0, 0).re;
    const double x22 = A(1, 1).re;
    const double x12 = A(0, 1).re;
    const double y12 = A(0, 1).hy;
    const double tr = x11 + x22;
    const double disc = (x11 - x22) * (x11 - x22) + 4.0 * x12 * x12 - 4.0 * y12 * y12;
    const double anrm = norm(A);
    const double zero_band = 1e-10 * (1.0 + anrm * anrm);

    eigen_result out;
    out.discriminant = disc;
    if (std::fabs(disc) <= zero_band) {
        out.classification = sa2_class::one_real;
        out.eigenvalues = {hyperd(tr / 2.0)};
    } else if (disc > 0.0) {
        const double root = std::sqrt(disc);
        out.classification = sa2_class::two_real_plus_two_hyperbolic;
        out.eigenvalues = {
            hyperd((tr + root) / 2.0),
            hyperd((tr - root) / 2.0),
            hyperd(tr / 2.0, root / 2.0),
            hyperd(tr / 2.0, -root / 2.0),
        };
    } else {
        out.classification = sa2_class::no_eigenvalues;
    }
    return out;
}

/// || det(A - lambda I) ||, the quantity the eigenvalues annihilate.
inline double char_residual(const gmatrixd& A, const hyperd& lambda) {
    gmatrixd shifted = A;
    shifted(0, 0) -= lambda;
    shifted(1, 1) -= lambda;
    return norm(det2(shifted));
}

} // namespace hyperlin

#endif
