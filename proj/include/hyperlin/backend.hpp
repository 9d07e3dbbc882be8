#ifndef HYPERLIN_BACKEND_HPP
#define HYPERLIN_BACKEND_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <type_traits>

namespace hyperlin {

/// Exact scalar backend used for the algebraic identity suites.
using rational = boost::multiprecision::cpp_rational;

template <class R>
struct is_exact : std::false_type {};

template <>
struct is_exact<rational> : std::true_type {};

template <class R>
inline constexpr bool is_exact_v = is_exact<R>::value;

inline double to_double(double x) { return x; }
inline double to_double(const rational& q) { return q.template convert_to<double>(); }

inline double abs_value(double x) { return std::fabs(x); }
inline rational abs_value(const rational& q) { return boost::multiprecision::abs(q); }

} // namespace hyperlin

#endif
