#ifndef HYPERLIN_LINALG_HPP
#define HYPERLIN_LINALG_HPP

#include "hyperlin/errors.hpp"
#include "hyperlin/hyper.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hyperlin {

template <class R>
class gvector {
public:
    gvector() = default;
    explicit gvector(std::size_t n) : v_(n) {}
    gvector(std::initializer_list<hyper<R>> init) : v_(init) {}
    explicit gvector(std::vector<hyper<R>> entries) : v_(std::move(entries)) {}

    std::size_t size() const { return v_.size(); }
    const hyper<R>& operator[](std::size_t i) const { return v_[i]; }
    hyper<R>& operator[](std::size_t i) { return v_[i]; }
    const std::vector<hyper<R>>& entries() const { return v_; }

    friend bool operator==(const gvector& a, const gvector& b) { return a.v_ == b.v_; }

private:
    std::vector<hyper<R>> v_;
};

using gvectord = gvector<double>;
using gvectorq = gvector<rational>;

namespace detail {

template <class R>
void require_same_size(const gvector<R>& a, const gvector<R>& b) {
    if (a.size() != b.size()) {
        throw dimension_mismatch_error("vector lengths differ: " + std::to_string(a.size()) +
                                       " vs " + std::to_string(b.size()));
    }
}

} // namespace detail

/// (u, v) = sum_i conj(u_i) v_i. Conjugate-linear in the first slot,
/// linear in the second, and (u,v) = conj((v,u)). The self-product
/// (v, v) = sum (x_i^2 - y_i^2) + 0j: always real, possibly <= 0.
template <class R>
hyper<R> inner_product(const gvector<R>& u, const gvector<R>& v) {
    detail::require_same_size(u, v);
    hyper<R> acc{};
    for (std::size_t i = 0; i < u.size(); ++i) acc += conj(u[i]) * v[i];
    return acc;
}

/// Euclidean norm over all 2n real coordinates: sqrt(sum x_i^2 + y_i^2).
template <class R>
double norm(const gvector<R>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += to_double(norm_sq(v[i]));
    return std::sqrt(s);
}

template <class R>
gvector<R> operator*(const hyper<R>& a, const gvector<R>& x) {
    gvector<R> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
    return out;
}

template <class R>
gvector<R> operator+(const gvector<R>& a, const gvector<R>& b) {
    detail::require_same_size(a, b);
    gvector<R> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

template <class R>
gvector<R> operator-(const gvector<R>& a, const gvector<R>& b) {
    detail::require_same_size(a, b);
    gvector<R> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

/// ||a x|| / (||a|| ||x||); bounded by sqrt(2), attained at a = x = 1 + j.
template <class R>
double scalar_bound_check(const hyper<R>& a, const gvector<R>& x) {
    return norm(a * x) / (norm(a) * norm(x));
}

/// ||(x, y)|| / (||x|| ||y||); the inner-product analogue of the same bound.
template <class R>
double inner_bound_check(const gvector<R>& x, const gvector<R>& y) {
    return norm(inner_product(x, y)) / (norm(x) * norm(y));
}

template <class R>
class gmatrix {
public:
    gmatrix() : rows_(0), cols_(0) {}
    gmatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    gmatrix(std::size_t rows, std::size_t cols, std::vector<hyper<R>> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) {
            throw dimension_mismatch_error("entry count does not match matrix shape");
        }
    }
    gmatrix(std::initializer_list<std::initializer_list<hyper<R>>> rows)
        : rows_(rows.size()), cols_(rows.begin() == rows.end() ? 0 : rows.begin()->size()) {
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw dimension_mismatch_error("ragged matrix initializer");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static gmatrix identity(std::size_t n) {
        gmatrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = hyper<R>(R(1));
        return I;
    }

    static gmatrix diagonal(std::initializer_list<hyper<R>> diag) {
        gmatrix D(diag.size(), diag.size());
        std::size_t i = 0;
        for (const auto& d : diag) { D(i, i) = d; ++i; }
        return D;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const hyper<R>& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    hyper<R>& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    friend bool operator==(const gmatrix& a, const gmatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<hyper<R>> a_;
};

using gmatrixd = gmatrix<double>;
using gmatrixq = gmatrix<rational>;

template <class R>
gmatrix<R> operator+(const gmatrix<R>& A, const gmatrix<R>& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw dimension_mismatch_error("matrix shapes differ in addition");
    }
    gmatrix<R> C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j) + B(i, j);
    return C;
}

template <class R>
gmatrix<R> operator-(const gmatrix<R>& A, const gmatrix<R>& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw dimension_mismatch_error("matrix shapes differ in subtraction");
    }
    gmatrix<R> C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j) - B(i, j);
    return C;
}

template <class R>
gmatrix<R> operator*(const gmatrix<R>& A, const gmatrix<R>& B) {
    if (A.cols() != B.rows()) throw dimension_mismatch_error("matrix shapes do not chain");
    gmatrix<R> C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            hyper<R> acc{};
            for (std::size_t k = 0; k < A.cols(); ++k) acc += A(i, k) * B(k, j);
            C(i, j) = acc;
        }
    return C;
}

template <class R>
gmatrix<R> operator*(const hyper<R>& s, const gmatrix<R>& A) {
    gmatrix<R> C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = s * A(i, j);
    return C;
}

template <class R>
gvector<R> operator*(const gmatrix<R>& A, const gvector<R>& x) {
    if (A.cols() != x.size()) throw dimension_mismatch_error("matrix/vector shapes do not chain");
    gvector<R> y(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        hyper<R> acc{};
        for (std::size_t k = 0; k < A.cols(); ++k) acc += A(i, k) * x[k];
        y[i] = acc;
    }
    return y;
}

/// Conjugate transpose.
template <class R>
gmatrix<R> adjoint(const gmatrix<R>& A) {
    gmatrix<R> B(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) B(j, i) = conj(A(i, j));
    return B;
}

/// Frobenius-style norm over all 2 n m real coordinates.
template <class R>
double norm(const gmatrix<R>& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) s += to_double(norm_sq(A(i, j)));
    return std::sqrt(s);
}

template <class R>
double max_entry_norm(const gmatrix<R>& A) {
    double m = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) m = std::max(m, norm(A(i, j)));
    return m;
}

/// A == adjoint(A); exact on rationals, <= 1e-12 max entry deviation on floats.
template <class R>
bool is_self_adjoint(const gmatrix<R>& A) {
    if (!A.square()) throw dimension_mismatch_error("self-adjointness needs a square matrix");
    if constexpr (is_exact_v<R>) {
        return A == adjoint(A);
    } else {
        return max_entry_norm(A - adjoint(A)) <= 1e-12;
    }
}

/// a11 a22 - a12 a21; unambiguous because the scalars commute.
template <class R>
hyper<R> det2(const gmatrix<R>& A) {
    if (A.rows() != 2 || A.cols() != 2) {
        throw dimension_mismatch_error("det2 is defined for 2x2 matrices");
    }
    return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
}

/// Entrywise relabeling x + j y -> x + i y, a bijection onto complex
/// matrices. Not an algebra homomorphism: T([[j]])^2 = [[-1]] while
/// T([[j]]^2) = [[1]].
struct cmatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::complex<double>> a;

    const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
        return a[i * cols + j];
    }
    std::complex<double>& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }

    friend cmatrix operator*(const cmatrix& A, const cmatrix& B) {
        cmatrix C{A.rows, B.cols, std::vector<std::complex<double>>(A.rows * B.cols)};
        for (std::size_t i = 0; i < A.rows; ++i)
            for (std::size_t j = 0; j < B.cols; ++j) {
                std::complex<double> acc{};
                for (std::size_t k = 0; k < A.cols; ++k) acc += A(i, k) * B(k, j);
                C(i, j) = acc;
            }
        return C;
    }
};

inline cmatrix t_map(const gmatrix<double>& A) {
    cmatrix C{A.rows(), A.cols(), std::vector<std::complex<double>>(A.rows() * A.cols())};
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            C(i, j) = std::complex<double>(A(i, j).re, A(i, j).hy);
        }
    return C;
}

/// Eigenvalues of a 2x2 Hermitian complex matrix, ascending.
inline std::pair<double, double> hermitian_eigen_2x2(const cmatrix& H) {
    const double a = H(0, 0).real();
    const double b = H(1, 1).real();
    const double c = H(0, 1).real();
    const double d = H(0, 1).imag();
    const double disc = (a - b) * (a - b) + 4.0 * (c * c + d * d);
    const double root = std::sqrt(disc);
    return {(a + b - root) / 2.0, (a + b + root) / 2.0};
}

/// sum_n (scale * t)^n A^n / n!, truncated when the term's max entry norm
/// drops below 1e-15 or after 200 terms (convergence_error past that).
template <class R>
gmatrix<R> exp_series(const gmatrix<R>& A, double t, const hyper<R>& scale,
                      int max_terms = 200, double term_tolerance = 1e-15) {
    if (!A.square()) throw dimension_mismatch_error("matrix exponential needs a square matrix");
    const std::size_t n = A.rows();
    gmatrix<R> sum = gmatrix<R>::identity(n);
    gmatrix<R> term = gmatrix<R>::identity(n);
    const gmatrix<R> step = (scale * hyper<R>(R(t))) * A;
    for (int k = 1; k <= max_terms; ++k) {
        term = term * step;
        // divide by k
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                term(i, j).re /= R(k);
                term(i, j).hy /= R(k);
            }
        sum = sum + term;
        if (max_entry_norm(term) < term_tolerance) return sum;
    }
    throw convergence_error("matrix exponential series did not converge within " +
                            std::to_string(max_terms) + " terms");
}

/// E_psi(O) = (psi, O psi) / (psi, psi). Requires (psi, psi) to be
/// invertible, which rules out the nonzero null vectors as states.
template <class R>
hyper<R> expected_value(const gmatrix<R>& O, const gvector<R>& psi) {
    hyper<R> denom = inner_product(psi, psi);
    if (on_light_cone(denom)) {
        throw light_cone_error("state has non-invertible self inner product");
    }
    return inner_product(psi, O * psi) * inverse(denom);
}

/// Solution of j psi' = H psi: psi(t) = exp(j t H) psi0, using 1/j = j.
template <class R>
gvector<R> evolve(const gmatrix<R>& H, const gvector<R>& psi0, double t) {
    if (H.cols() != psi0.size()) {
        throw dimension_mismatch_error("generator and state dimensions differ");
    }
    return exp_series(H, t, hyper<R>::unit_j()) * psi0;
}

} // namespace hyperlin

#endif
