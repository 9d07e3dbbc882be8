#ifndef HYPERLIN_HYPER_HPP
#define HYPERLIN_HYPER_HPP

#include "hyperlin/backend.hpp"
#include "hyperlin/errors.hpp"

#include <cmath>
#include <ostream>

namespace hyperlin {

/// A hyperbolic (split-complex) number x + j*y with j^2 = +1, over a real
/// scalar backend R (double for numerics, `rational` for exact identities).
///
/// The ring is commutative but has zero divisors: every element on one of
/// the two slope +/-1 lines through the origin annihilates its mirror and
/// has no multiplicative inverse.
template <class R>
struct hyper {
    R re{};
    R hy{};

    constexpr hyper() = default;
    constexpr hyper(R real_part) : re(std::move(real_part)), hy() {}
    constexpr hyper(R real_part, R hyper_part)
        : re(std::move(real_part)), hy(std::move(hyper_part)) {}

    static hyper unit_j() { return hyper(R(0), R(1)); }

    hyper& operator+=(const hyper& o) { re += o.re; hy += o.hy; return *this; }
    hyper& operator-=(const hyper& o) { re -= o.re; hy -= o.hy; return *this; }

    hyper& operator*=(const hyper& o) {
        // (x1 + j y1)(x2 + j y2) = (x1 x2 + y1 y2) + j (x1 y2 + x2 y1)
        R r = re * o.re + hy * o.hy;
        R h = re * o.hy + hy * o.re;
        re = std::move(r);
        hy = std::move(h);
        return *this;
    }

    hyper& operator*=(const R& s) { re *= s; hy *= s; return *this; }

    friend hyper operator+(hyper a, const hyper& b) { return a += b; }
    friend hyper operator-(hyper a, const hyper& b) { return a -= b; }
    friend hyper operator*(hyper a, const hyper& b) { return a *= b; }
    friend hyper operator*(hyper a, const R& s) { return a *= s; }
    friend hyper operator*(const R& s, hyper a) { return a *= s; }
    friend hyper operator-(const hyper& a) { return hyper(-a.re, -a.hy); }

    friend bool operator==(const hyper& a, const hyper& b) {
        return a.re == b.re && a.hy == b.hy;
    }
    friend bool operator!=(const hyper& a, const hyper& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const hyper& z) {
        return os << "(" << to_double(z.re) << (to_double(z.hy) < 0 ? "" : "+")
                  << to_double(z.hy) << "j)";
    }
};

using hyperd = hyper<double>;
using hyperq = hyper<rational>;

template <class R>
hyper<R> conj(const hyper<R>& z) {
    return hyper<R>(z.re, -z.hy);
}

/// x^2 + y^2, exact on the rational backend.
template <class R>
R norm_sq(const hyper<R>& z) {
    return z.re * z.re + z.hy * z.hy;
}

/// Euclidean modulus sqrt(x^2 + y^2). Always >= 0, zero iff z = 0.
/// Note this is NOT z * conj(z), which equals (x^2 - y^2) + 0j.
template <class R>
double norm(const hyper<R>& z) {
    return std::hypot(to_double(z.re), to_double(z.hy));
}

namespace detail {

// Null-direction test for x^2 == y^2. Exact equality on rational scalars;
// on floats a measure-zero set needs a relative tolerance.
inline bool is_null(double dx, double dy) {
    double a = dx * dx;
    double b = dy * dy;
    return std::fabs(a - b) <= 1e-12 * (a + b);
}

inline bool is_null(const rational& dx, const rational& dy) {
    return dx * dx == dy * dy;
}

} // namespace detail

/// True iff z lies on one of the two slope +/-1 lines through `center`.
template <class R>
bool light_cone_contains(const hyper<R>& center, const hyper<R>& z) {
    return detail::is_null(z.re - center.re, z.hy - center.hy);
}

/// True iff z is on the light cone of 0, i.e. not invertible (or zero).
template <class R>
bool on_light_cone(const hyper<R>& z) {
    return detail::is_null(z.re, z.hy);
}

/// Multiplicative inverse x/(x^2-y^2) - j y/(x^2-y^2).
/// Throws light_cone_error when x^2 = y^2: those elements have no inverse.
template <class R>
hyper<R> inverse(const hyper<R>& z) {
    if (on_light_cone(z)) {
        throw light_cone_error("hyperbolic number on the light cone has no inverse");
    }
    R d = z.re * z.re - z.hy * z.hy;
    return hyper<R>(z.re / d, -z.hy / d);
}

template <class R>
hyper<R> operator/(const hyper<R>& a, const hyper<R>& b) {
    return a * inverse(b);
}

/// exp(j*a) = cosh(a) + j*sinh(a); the hyperbolic plane wave at phase a.
inline hyperd exp_j(double a) { return hyperd(std::cosh(a), std::sinh(a)); }

} // namespace hyperlin

#endif
