#ifndef HYPERLIN_CCR_HPP
#define HYPERLIN_CCR_HPP

#include "hyperlin/backend.hpp"
#include "hyperlin/errors.hpp"
#include "hyperlin/grid.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hyperlin {

/// a + b i with exact rational coefficients. The whole point of this
/// module is that the commutator telescopes to an exact identity; floats
/// would manufacture residuals where there are none.
struct complex_rational {
    rational re{};
    rational im{};

    complex_rational() = default;
    complex_rational(rational r) : re(std::move(r)) {}
    complex_rational(rational r, rational i) : re(std::move(r)), im(std::move(i)) {}

    static complex_rational unit_i() { return complex_rational(rational(0), rational(1)); }

    complex_rational& operator+=(const complex_rational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    complex_rational& operator-=(const complex_rational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    complex_rational& operator*=(const complex_rational& o) {
        rational r = re * o.re - im * o.im;
        rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend complex_rational operator+(complex_rational a, const complex_rational& b) { return a += b; }
    friend complex_rational operator-(complex_rational a, const complex_rational& b) { return a -= b; }
    friend complex_rational operator*(complex_rational a, const complex_rational& b) { return a *= b; }
    friend complex_rational operator-(const complex_rational& a) {
        return complex_rational(-a.re, -a.im);
    }
    friend bool operator==(const complex_rational& a, const complex_rational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const complex_rational& a, const complex_rational& b) {
        return !(a == b);
    }

    bool is_zero() const { return re == 0 && im == 0; }
};

inline complex_rational conj(const complex_rational& z) {
    return complex_rational(z.re, -z.im);
}

struct not_in_domain_error : std::invalid_argument {
    explicit not_in_domain_error(const std::string& what, complex_rational residual_constant)
        : std::invalid_argument(what), residual(std::move(residual_constant)) {}

    /// The constant by which ([Q,P] - i)x misses zero on every component
    /// when the entries do not sum to zero.
    complex_rational residual;
};

/// Sparse sequence indexed from 1 with finitely many nonzero entries.
/// Membership in the commutator's domain additionally requires the
/// entries to sum to zero.
class finite_support_vector {
public:
    finite_support_vector() = default;

    static finite_support_vector basis(long long n) {
        finite_support_vector x;
        x.set(n, complex_rational(rational(1)));
        return x;
    }

    void set(long long index, complex_rational value) {
        if (index < 1) throw config_error("sequence indices start at 1");
        if (value.is_zero()) {
            entries_.erase(index);
        } else {
            entries_[index] = std::move(value);
        }
    }

    complex_rational at(long long index) const {
        auto it = entries_.find(index);
        return it == entries_.end() ? complex_rational() : it->second;
    }

    const std::map<long long, complex_rational>& entries() const { return entries_; }

    complex_rational sum() const {
        complex_rational s;
        for (const auto& [idx, v] : entries_) s += v;
        return s;
    }

    /// x belongs to the dense subspace D iff its entries sum to zero.
    bool in_domain() const { return sum().is_zero(); }

    long long max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

    friend finite_support_vector operator-(const finite_support_vector& a,
                                           const finite_support_vector& b) {
        finite_support_vector out = a;
        for (const auto& [idx, v] : b.entries_) out.set(idx, out.at(idx) - v);
        return out;
    }

private:
    std::map<long long, complex_rational> entries_;
};

/// Q = diagonal(1, 2, 3, ...): multiply entry n by n. Exact.
inline finite_support_vector apply_q(const finite_support_vector& x) {
    finite_support_vector out;
    for (const auto& [idx, v] : x.entries()) {
        out.set(idx, complex_rational(rational(idx)) * v);
    }
    return out;
}

/// P has kernel -i/(m - n) off the diagonal and 0 on it; the image of a
/// finite-support vector is dense, so the caller names the window [1, upto]
/// to materialize.
inline std::vector<complex_rational> apply_p(const finite_support_vector& x, long long upto) {
    if (upto < 1) throw config_error("window bound must be at least 1");
    std::vector<complex_rational> out(static_cast<std::size_t>(upto));
    const complex_rational minus_i(rational(0), rational(-1));
    for (long long m = 1; m <= upto; ++m) {
        complex_rational acc;
        for (const auto& [n, v] : x.entries()) {
            if (n == m) continue;
            // keep the constructed denominator positive: boost's rational
            // adaptor rejects negative denominators for unbounded integers
            const long long d = m - n;
            const rational coef = d > 0 ? rational(1, d) : rational(-1, -d);
            acc += complex_rational(coef) * v;
        }
        out[static_cast<std::size_t>(m - 1)] = minus_i * acc;
    }
    return out;
}

/// Verifies (QP - PQ)x = i x exactly on components 1..upto. For x whose
/// entries sum to s != 0 the identity fails by the constant -i s on every
/// component; that failure is reported through not_in_domain_error.
inline bool commutator_check(const finite_support_vector& x, long long upto) {
    if (!x.in_domain()) {
        complex_rational s = x.sum();
        throw not_in_domain_error(
            "entries do not sum to zero; ([Q,P] - i)x equals the constant -i * sum",
            complex_rational(rational(0), rational(-1)) * s);
    }
    // QPx: scale the windowed image of P by the index.
    std::vector<complex_rational> px = apply_p(x, upto);
    std::vector<complex_rational> qpx(px.size());
    for (long long m = 1; m <= upto; ++m) {
        qpx[static_cast<std::size_t>(m - 1)] = complex_rational(rational(m)) * px[m - 1];
    }
    // PQx
    std::vector<complex_rational> pqx = apply_p(apply_q(x), upto);
    const complex_rational i = complex_rational::unit_i();
    for (long long m = 1; m <= upto; ++m) {
        complex_rational lhs = qpx[static_cast<std::size_t>(m - 1)] - pqx[m - 1];
        if (lhs != i * x.at(m)) return false;
    }
    return true;
}

/// <x, y> = sum conj(x_n) y_n over a finite window; exact.
inline complex_rational pairing(const std::vector<complex_rational>& x,
                                const std::vector<complex_rational>& y) {
    complex_rational acc;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t k = 0; k < n; ++k) acc += conj(x[k]) * y[k];
    return acc;
}

inline std::vector<complex_rational> densify(const finite_support_vector& x, long long upto) {
    std::vector<complex_rational> out(static_cast<std::size_t>(upto));
    for (const auto& [idx, v] : x.entries()) {
        if (idx <= upto) out[static_cast<std::size_t>(idx - 1)] = v;
    }
    return out;
}

// ---- Weyl relation on a periodic complex grid -------------------------------

/// Residual of the exchange relation between the translation group
/// V1(t): psi(q) -> psi(q - t) and the phase group V2(s): psi(q) ->
/// e^{isq} psi(q), measured on a Gaussian. With the V1 convention above
/// the phase sits as V1 V2 = e^{-its} V2 V1 (equivalently V2 V1 =
/// e^{+its} V1 V2, the form with both factors swapped). Translations must
/// land on grid points so that V1 permutes samples exactly; the Gaussian's
/// wrap-around tail is below 1e-12 for the step sizes accepted here.
inline double weyl_relation_check(double t, double s, const grid_spec& spec) {
    const double h = spec.spacing();
    const double steps_real = t / h;
    const long long steps = std::llround(steps_real);
    if (std::fabs(steps_real - static_cast<double>(steps)) > 1e-9) {
        throw grid_alignment_error("translation is not a grid multiple: t/h = " +
                                   std::to_string(steps_real));
    }
    const std::size_t n = spec.npoints;
    std::vector<std::complex<double>> psi(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = spec.coordinate(k);
        psi[k] = std::exp(-x * x);
    }
    auto translate = [&](const std::vector<std::complex<double>>& v) {
        std::vector<std::complex<double>> out(n);
        for (std::size_t k = 0; k < n; ++k) {
            long long src = (static_cast<long long>(k) - steps) % static_cast<long long>(n);
            if (src < 0) src += static_cast<long long>(n);
            out[k] = v[static_cast<std::size_t>(src)];
        }
        return out;
    };
    auto phase = [&](const std::vector<std::complex<double>>& v) {
        std::vector<std::complex<double>> out(n);
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = std::exp(std::complex<double>(0.0, s * spec.coordinate(k))) * v[k];
        }
        return out;
    };
    const std::vector<std::complex<double>> lhs = translate(phase(psi));
    const std::vector<std::complex<double>> rhs = phase(translate(psi));
    const std::complex<double> w = std::exp(std::complex<double>(0.0, -t * s));
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        worst = std::max(worst, std::abs(lhs[k] - w * rhs[k]));
    }
    return worst;
}

} // namespace hyperlin

#endif
