#ifndef HYPERLIN_ALGEBRA_HPP
#define HYPERLIN_ALGEBRA_HPP

#include "hyperlin/errors.hpp"
#include "hyperlin/hyper.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hyperlin {

/// A finite-dimensional real algebra with unit, given by its structure
/// constants f[i][j][k]: e_i * e_j = sum_k f_ijk e_k. The unit e_0 forces
/// f_0ij = f_i0j = delta_ij; builders and the JSON loader enforce that.
/// Dimension is capped at 8 (the octonions); the tensor is stored dense.
class algebra_spec {
public:
    static constexpr std::size_t max_dim = 8;

    algebra_spec(std::string name, std::size_t dim)
        : name_(std::move(name)), dim_(dim), f_(dim * dim * dim, 0.0) {
        if (dim_ < 1 || dim_ > max_dim) {
            throw config_error("algebra dimension must be in [1, 8], got " +
                               std::to_string(dim_));
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            at(0, i, i) = 1.0;
            at(i, 0, i) = 1.0;
        }
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }

    double f(std::size_t i, std::size_t j, std::size_t k) const {
        return f_[(i * dim_ + j) * dim_ + k];
    }

    /// Set a structure constant; rejects writes that would break the unit rows.
    void set_f(std::size_t i, std::size_t j, std::size_t k, double value) {
        if (i >= dim_ || j >= dim_ || k >= dim_) {
            throw config_error("structure constant index out of range");
        }
        if (i == 0 || j == 0) {
            double required = (i == 0 ? (j == k) : (i == k)) ? 1.0 : 0.0;
            if (value != required) {
                throw config_error("triple [" + std::to_string(i) + "," + std::to_string(j) +
                                   "," + std::to_string(k) + "] conflicts with the unit element");
            }
            return;
        }
        at(i, j, k) = value;
    }

    bool same_table(const algebra_spec& o) const {
        return dim_ == o.dim_ && f_ == o.f_;
    }

private:
    double& at(std::size_t i, std::size_t j, std::size_t k) {
        return f_[(i * dim_ + j) * dim_ + k];
    }

    std::string name_;
    std::size_t dim_;
    std::vector<double> f_;
};

using algebra_spec_ptr = std::shared_ptr<const algebra_spec>;

namespace detail {

// Sign of the permutation taking (a,b,c) to sorted order; 0 on repeats.
inline int triple_parity(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    int sign = 1;
    if (a > b) { std::swap(a, b); sign = -sign; }
    if (b > c) { std::swap(b, c); sign = -sign; }
    if (a > b) { std::swap(a, b); sign = -sign; }
    return sign;
}

} // namespace detail

/// The real numbers: dim 1, unit only.
inline algebra_spec_ptr real_spec() {
    return std::make_shared<algebra_spec>("R", 1);
}

/// The complex numbers: e_1^2 = -1.
inline algebra_spec_ptr complex_spec() {
    auto s = std::make_shared<algebra_spec>("C", 2);
    s->set_f(1, 1, 0, -1.0);
    return s;
}

/// The hyperbolic ring: e_1^2 = +1. Same table as hyper<R> multiplication.
inline algebra_spec_ptr hyperbolic_spec() {
    auto s = std::make_shared<algebra_spec>("G", 2);
    s->set_f(1, 1, 0, 1.0);
    return s;
}

/// Quaternions: e_i e_j = -delta_ij + eps_ijk e_k over i,j in 1..3.
inline algebra_spec_ptr quaternion_spec() {
    auto s = std::make_shared<algebra_spec>("H", 4);
    for (int i = 1; i <= 3; ++i) s->set_f(i, i, 0, -1.0);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                int sign = detail::triple_parity(i, j, k);
                // eps_123 = +1 and (1,2,3) is already sorted, so parity is eps.
                if (sign != 0) s->set_f(i, j, k, static_cast<double>(sign));
            }
    return s;
}

/// Octonions from the seven oriented generator triples; every other
/// component of gamma follows by total antisymmetry and is zero otherwise.
inline algebra_spec_ptr octonion_spec() {
    static constexpr std::array<std::array<int, 3>, 7> generators{{
        {1, 2, 3}, {2, 4, 6}, {4, 3, 5}, {3, 6, 7}, {6, 5, 1}, {5, 7, 2}, {7, 1, 4},
    }};
    auto s = std::make_shared<algebra_spec>("O", 8);
    for (int i = 1; i <= 7; ++i) s->set_f(i, i, 0, -1.0);
    for (const auto& g : generators) {
        // gamma over all permutations of the oriented triple (a,b,c) = +1.
        const int a = g[0], b = g[1], c = g[2];
        const std::array<std::array<int, 3>, 6> perms{{
            {a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a},
        }};
        for (std::size_t p = 0; p < 6; ++p) {
            double sign = p < 3 ? 1.0 : -1.0;
            s->set_f(perms[p][0], perms[p][1], perms[p][2], sign);
        }
    }
    return s;
}

/// Coefficient vector in a structure-constant algebra.
class algebra_element {
public:
    algebra_element(algebra_spec_ptr spec, std::vector<double> coeffs)
        : spec_(std::move(spec)), r_(std::move(coeffs)) {
        if (r_.size() != spec_->dim()) {
            throw dimension_mismatch_error("coefficient count does not match algebra dimension");
        }
    }

    static algebra_element basis(algebra_spec_ptr spec, std::size_t i) {
        std::vector<double> r(spec->dim(), 0.0);
        r.at(i) = 1.0;
        return algebra_element(std::move(spec), std::move(r));
    }

    const algebra_spec_ptr& spec() const { return spec_; }
    const std::vector<double>& coeffs() const { return r_; }
    double operator[](std::size_t i) const { return r_[i]; }

    friend bool operator==(const algebra_element& a, const algebra_element& b) {
        return a.spec_ == b.spec_ && a.r_ == b.r_;
    }

private:
    algebra_spec_ptr spec_;
    std::vector<double> r_;
};

namespace detail {

inline void require_same_spec(const algebra_element& a, const algebra_element& b) {
    if (a.spec() == b.spec()) return;
    // Distinct handles to the same table still combine.
    if (a.spec() && b.spec() && a.spec()->same_table(*b.spec())) return;
    throw spec_mismatch_error("elements of different algebras cannot combine");
}

} // namespace detail

inline algebra_element algebra_mul(const algebra_element& a, const algebra_element& b) {
    detail::require_same_spec(a, b);
    const auto& spec = *a.spec();
    const std::size_t n = spec.dim();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0.0) continue;
            for (std::size_t k = 0; k < n; ++k) {
                double f = spec.f(i, j, k);
                if (f != 0.0) out[k] += a[i] * b[j] * f;
            }
        }
    }
    return algebra_element(a.spec(), std::move(out));
}

inline algebra_element operator*(const algebra_element& a, const algebra_element& b) {
    return algebra_mul(a, b);
}

inline algebra_element operator+(const algebra_element& a, const algebra_element& b) {
    detail::require_same_spec(a, b);
    std::vector<double> out(a.coeffs());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return algebra_element(a.spec(), std::move(out));
}

inline algebra_element operator-(const algebra_element& a, const algebra_element& b) {
    detail::require_same_spec(a, b);
    std::vector<double> out(a.coeffs());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return algebra_element(a.spec(), std::move(out));
}

namespace detail {

inline double coeff_norm_sq(const algebra_element& a) {
    double s = 0.0;
    for (double r : a.coeffs()) s += r * r;
    return s;
}

} // namespace detail

/// Euclidean modulus N(sum r_i e_i) = sqrt(sum r_i^2).
inline double modulus(const algebra_element& a) {
    return std::sqrt(detail::coeff_norm_sq(a));
}

/// |N(ab) - N(a) N(b)|. Vanishes on the four composition algebras; the
/// hyperbolic table has zero-divisor pairs where it does not. The product
/// of moduli is computed under a single square root, which keeps clean
/// witnesses such as N(1+j) N(1-j) = sqrt(4) = 2 exact.
inline double multiplicativity_defect(const algebra_element& a, const algebra_element& b) {
    const double product = std::sqrt(detail::coeff_norm_sq(a) * detail::coeff_norm_sq(b));
    return std::fabs(modulus(algebra_mul(a, b)) - product);
}

// --- JSON table format: {"dim": n, "triples": [[i, j, k, value], ...]} ---
// Unlisted triples are zero; unit-row/column entries are implied and any
// listed ones are validated against delta_ij.

inline algebra_spec_ptr algebra_from_json(const nlohmann::json& doc, std::string name = "custom") {
    if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw config_error("algebra file must be an object with an integer \"dim\"");
    }
    const auto dim = doc["dim"].get<long long>();
    if (dim < 1 || dim > static_cast<long long>(algebra_spec::max_dim)) {
        throw config_error("algebra \"dim\" must be in [1, 8]");
    }
    auto spec = std::make_shared<algebra_spec>(std::move(name), static_cast<std::size_t>(dim));
    if (doc.contains("triples")) {
        if (!doc["triples"].is_array()) throw config_error("\"triples\" must be an array");
        for (const auto& t : doc["triples"]) {
            if (!t.is_array() || t.size() != 4) {
                throw config_error("each triple must be [i, j, k, value]");
            }
            const auto i = t[0].get<long long>();
            const auto j = t[1].get<long long>();
            const auto k = t[2].get<long long>();
            if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim) {
                throw config_error("triple index out of range for dim " + std::to_string(dim));
            }
            spec->set_f(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                        static_cast<std::size_t>(k), t[3].get<double>());
        }
    }
    return spec;
}

inline nlohmann::json algebra_to_json(const algebra_spec& spec) {
    nlohmann::json triples = nlohmann::json::array();
    for (std::size_t i = 1; i < spec.dim(); ++i)
        for (std::size_t j = 1; j < spec.dim(); ++j)
            for (std::size_t k = 0; k < spec.dim(); ++k)
                if (spec.f(i, j, k) != 0.0) {
                    triples.push_back({i, j, k, spec.f(i, j, k)});
                }
    return nlohmann::json{{"dim", spec.dim()}, {"triples", std::move(triples)}};
}

} // namespace hyperlin

#endif
