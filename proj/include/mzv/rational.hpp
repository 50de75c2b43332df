#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mzv {

/// Arbitrary-precision integer and rational types. Rationals are kept in
/// lowest terms with positive denominator by the backend; zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is a binomial prefix
    }
    return r;
}

/// "p/q" with "/q" omitted when q = 1.
inline std::string to_string(const Rational& q) {
    return q.str();
}

inline double to_double(const Rational& q) {
    return q.template convert_to<double>();
}

} // namespace mzv
