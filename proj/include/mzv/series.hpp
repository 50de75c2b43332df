#pragma once

#include "mzv/combination.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

/// Formal power series over the harmonic algebra, truncated at a fixed order
/// N: degrees 0..N are stored, everything above is discarded. The order is
/// fixed at construction and all binary operations require equal orders.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1) {}

    /// The unit series 1.
    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = Combination::unit();
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Combination& coefficient(int n) const {
        if (n < 0 || n > order())
            throw std::out_of_range("TruncatedSeries: degree out of range");
        return coeffs_[static_cast<std::size_t>(n)];
    }

    void set_coefficient(int n, Combination c) {
        if (n < 0 || n > order())
            throw std::out_of_range("TruncatedSeries: degree out of range");
        coeffs_[static_cast<std::size_t>(n)] = std::move(c);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& other) {
        require_same_order(other);
        for (int n = 0; n <= order(); ++n)
            coeffs_[n] += other.coeffs_[n];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& other) {
        require_same_order(other);
        for (int n = 0; n <= order(); ++n)
            coeffs_[n] -= other.coeffs_[n];
        return *this;
    }

    TruncatedSeries& operator*=(const Rational& s) {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
    friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }

    bool operator==(const TruncatedSeries&) const = default;

  private:
    static int check_order(int order) {
        if (order < 0)
            throw std::invalid_argument("TruncatedSeries: order must be >= 0");
        return order;
    }

    void require_same_order(const TruncatedSeries& other) const {
        if (order() != other.order())
            throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
    }

    std::vector<Combination> coeffs_;
};

inline Combination series_coefficient(const TruncatedSeries& f, int n) {
    return f.coefficient(n);
}

/// Cauchy product with coefficientwise stuffle; degrees above the common
/// truncation order are discarded.
inline TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("series_mul: mismatched truncation orders");
    const int N = f.order();
    TruncatedSeries h(N);
    for (int n = 0; n <= N; ++n) {
        Combination c;
        for (int i = 0; i <= n; ++i) {
            const Combination& a = f.coefficient(i);
            const Combination& b = g.coefficient(n - i);
            if (!a.is_zero() && !b.is_zero())
                c += stuffle(a, b);
        }
        h.set_coefficient(n, std::move(c));
    }
    return h;
}

/// exp of a series with zero constant term: sum over n of f^n/n!, truncated.
/// f^n has no term below degree n, so powers up to the order suffice.
inline TruncatedSeries series_exp(const TruncatedSeries& f) {
    if (!f.coefficient(0).is_zero())
        throw std::domain_error("series_exp: constant term must be zero");
    const int N = f.order();
    TruncatedSeries result = TruncatedSeries::one(N);
    TruncatedSeries term = result; // f^n/n!, built incrementally
    for (int n = 1; n <= N; ++n) {
        term = series_mul(term, f);
        term *= Rational(1, n);
        result += term;
    }
    return result;
}

/// Substitution x -> -x: degree-n coefficient scaled by (-1)^n.
inline TruncatedSeries series_flip(const TruncatedSeries& f) {
    TruncatedSeries g = f;
    for (int n = 1; n <= g.order(); n += 2)
        g.set_coefficient(n, -g.coefficient(n));
    return g;
}

/// True when every degree-n coefficient is supported on weight-n indices.
/// Holds for every series built by this library's generators and is
/// preserved by series_mul and series_exp.
inline bool is_weight_homogeneous(const TruncatedSeries& f) {
    for (int n = 0; n <= f.order(); ++n)
        for (const auto& [ix, c] : f.coefficient(n).terms())
            if (ix.weight() != n)
                return false;
    return true;
}

/// "c0 + (C1)x + (C2)x^2 + ..." with zero-coefficient degrees omitted.
inline std::string to_string(const TruncatedSeries& f) {
    std::string s;
    for (int n = 0; n <= f.order(); ++n) {
        const Combination& c = f.coefficient(n);
        if (c.is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        if (n == 0) {
            s += to_string(c);
        } else {
            s += "(" + to_string(c) + ")x";
            if (n > 1)
                s += "^" + std::to_string(n);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace mzv
