#pragma once

#include "mzv/report.hpp"
#include "mzv/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

/// All ordered compositions of k into parts >= 2, in lexicographic order of
/// the part sequences. Empty for k < 2. Counts follow the Fibonacci
/// recurrence c(k) = c(k-1) + c(k-2).
inline std::vector<std::vector<int>> compositions_min2(int k) {
    if (k < 0)
        throw std::invalid_argument("compositions_min2: negative weight");
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            if (!acc.empty())
                out.push_back(acc);
            return;
        }
        for (int p = 2; p <= rem; ++p) {
            acc.push_back(p);
            self(self, rem - p);
            acc.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

/// All ordered compositions of k into parts >= 1 (2^(k-1) of them for k >= 1;
/// just the empty composition for k = 0).
inline std::vector<std::vector<int>> compositions(int k) {
    if (k < 0)
        throw std::invalid_argument("compositions: negative weight");
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(acc);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            acc.push_back(p);
            self(self, rem - p);
            acc.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

/// The weight-k symbol polynomial
///   S(k) = sum over compositions k1+...+kr = k, parts >= 2, of
///          (-1)^r * prod (kj - 1)/kj! * [k1,...,kr],
/// with S(0) = 1 and S(1) = 0.
inline Combination s_poly(int k) {
    if (k < 0)
        throw std::invalid_argument("s_poly: negative weight");
    if (k == 0)
        return Combination::unit();
    Combination out;
    for (const auto& parts : compositions_min2(k)) {
        Rational coeff = (parts.size() % 2) ? -1 : 1;
        for (int p : parts)
            coeff *= Rational(p - 1, factorial(p));
        out.add_term(Index(parts), coeff);
    }
    return out;
}

/// The exp argument A = sum over n >= 2 of ((-1)^(n-1)/n) [n] x^n, truncated.
/// Its flip gives the second exp argument -sum [m]/m x^m.
inline TruncatedSeries log_gamma_series(int order) {
    TruncatedSeries a(order);
    for (int n = 2; n <= order; ++n) {
        Rational c{(n % 2) ? 1 : -1, n};
        a.set_coefficient(n, Combination::single(Index({n}), c));
    }
    return a;
}

/// 1 + sum over n >= 1 of (-1)^n [2,...,2] (n twos) x^(2n), truncated.
inline TruncatedSeries rhs_main(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int n = 1; 2 * n <= order; ++n) {
        Index twos(std::vector<int>(static_cast<std::size_t>(n), 2));
        s.set_coefficient(2 * n, Combination::single(twos, (n % 2) ? -1 : 1));
    }
    return s;
}

/// 1 + sum over k >= 2 of (-1)^k S(k) x^k, truncated.
inline TruncatedSeries sakata_rhs(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int k = 2; k <= order; ++k) {
        Combination c = s_poly(k);
        if (k % 2)
            c *= Rational(-1);
        s.set_coefficient(k, std::move(c));
    }
    return s;
}

/// Coefficientwise comparison of two equal-order series; every disagreeing
/// term becomes one mismatch (expected from `expected`, actual from `actual`).
inline Report compare_series(const std::string& identity, long long parameter,
                             const TruncatedSeries& actual, const TruncatedSeries& expected) {
    std::vector<Mismatch> mismatches;
    for (int n = 0; n <= actual.order(); ++n) {
        const Combination& a = actual.coefficient(n);
        const Combination& e = expected.coefficient(n);
        if (a == e)
            continue;
        Combination support = a + e; // visit the union of both supports
        for (const auto& [ix, unused] : support.terms()) {
            Rational va = a.coefficient_of(ix);
            Rational ve = e.coefficient_of(ix);
            if (va != ve)
                mismatches.push_back({n, ix, to_string(ve), to_string(va)});
        }
    }
    return Report(identity, parameter, std::move(mismatches));
}

/// exp of the log series against its closed coefficient form 1 + sum (-1)^k S(k) x^k.
inline Report verify_sakata(int order) {
    if (order < 2)
        throw std::invalid_argument("verify_sakata: order must be >= 2");
    return compare_series("sakata", order, series_exp(log_gamma_series(order)),
                          sakata_rhs(order));
}

/// The reflection identity: exp(A) * exp(flip A) against 1 + sum (-1)^n [2,..,2] x^2n.
inline Report verify_main(int order) {
    if (order < 2)
        throw std::invalid_argument("verify_main: order must be >= 2");
    TruncatedSeries a = log_gamma_series(order);
    TruncatedSeries lhs = series_mul(series_exp(a), series_exp(series_flip(a)));
    return compare_series("main", order, lhs, rhs_main(order));
}

namespace detail {

/// sum over k = 0..w of (-1)^k S(k) * S(w-k).
inline Combination alternating_s_convolution(int w) {
    Combination out;
    for (int k = 0; k <= w; ++k) {
        Combination t = stuffle(s_poly(k), s_poly(w - k));
        if (k % 2)
            t *= Rational(-1);
        out += t;
    }
    return out;
}

} // namespace detail

/// sum over k = 0..2n of (-1)^k S(k) * S(2n-k), the even-weight convolution.
inline Combination eq2_lhs(int n) {
    if (n < 1)
        throw std::invalid_argument("eq2_lhs: n must be >= 1");
    return detail::alternating_s_convolution(2 * n);
}

/// One-combination comparison helper shared by the convolution verifiers.
inline Report compare_combination(const std::string& identity, long long parameter, int degree,
                                  const Combination& actual, const Combination& expected) {
    std::vector<Mismatch> mismatches;
    Combination support = actual + expected;
    for (const auto& [ix, unused] : support.terms()) {
        Rational va = actual.coefficient_of(ix);
        Rational ve = expected.coefficient_of(ix);
        if (va != ve)
            mismatches.push_back({degree, ix, to_string(ve), to_string(va)});
    }
    return Report(identity, parameter, std::move(mismatches));
}

/// Even-weight convolution against its closed form (-1)^n [2,...,2] (n twos).
inline Report verify_eq2(int n) {
    if (n < 1)
        throw std::invalid_argument("verify_eq2: n must be >= 1");
    Index twos(std::vector<int>(static_cast<std::size_t>(n), 2));
    Combination expected = Combination::single(twos, (n % 2) ? -1 : 1);
    return compare_combination("eq2", n, 2 * n, eq2_lhs(n), expected);
}

/// Odd-weight convolution sum over k = 0..n of (-1)^k S(k) * S(n-k) vanishes.
inline Report verify_odd_vanishing(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("verify_odd_vanishing: n must be odd and >= 1");
    return compare_combination("odd", n, n, detail::alternating_s_convolution(n),
                               Combination::zero());
}

/// LHS - RHS of the binomial identity
///   sum over m = 2..k-2 of (-1)^m C(k,m)(m-1)(k-m-1) = (1+(-1)^k)(k-1),
/// as an exact integer; 0 means the identity holds at k.
inline Integer binomial_lemma_residual(int k) {
    if (k < 4)
        throw std::invalid_argument("binomial_lemma_residual: k must be >= 4");
    Integer lhs = 0;
    for (int m = 2; m <= k - 2; ++m) {
        Integer t = binomial(k, m) * (m - 1) * (k - m - 1);
        lhs += (m % 2) ? -t : t;
    }
    Integer rhs = Integer((k % 2) ? 0 : 2) * (k - 1);
    return lhs - rhs;
}

/// Residual check over every k in 4..kmax.
inline Report verify_binomial(int kmax) {
    if (kmax < 4)
        throw std::invalid_argument("verify_binomial: kmax must be >= 4");
    std::vector<Mismatch> mismatches;
    for (int k = 4; k <= kmax; ++k) {
        Integer r = binomial_lemma_residual(k);
        if (r != 0)
            mismatches.push_back({k, Index{}, "0", r.str()});
    }
    return Report("binomial", kmax, std::move(mismatches));
}

/// The closed-form coefficient of an even-weight index in the even-weight
/// convolution: 0 if any part is 1 (outside every S(k) support), 0 if any
/// part is >= 4, 0 if any part equals 3, else (-1)^n where 2n is the weight.
inline Rational predicted_coefficient(const Index& ix) {
    int w = ix.weight();
    if (w <= 0 || w % 2)
        throw std::invalid_argument("predicted_coefficient: weight must be even and positive");
    bool has_one = false, has_big = false, has_three = false;
    for (int p : ix.parts()) {
        has_one |= p == 1;
        has_big |= p >= 4;
        has_three |= p == 3;
    }
    if (has_one || has_big || has_three)
        return 0;
    return (w / 2 % 2) ? -1 : 1;
}

/// Compares the convolution coefficient of every composition of 2n (parts
/// >= 1, so the no-part-equals-1 prediction is itself exercised) against
/// predicted_coefficient.
inline Report verify_case_analysis(int n) {
    if (n < 1)
        throw std::invalid_argument("verify_case_analysis: n must be >= 1");
    Combination lhs = eq2_lhs(n);
    std::vector<Mismatch> mismatches;
    for (const auto& parts : compositions(2 * n)) {
        Index ix(parts);
        Rational actual = lhs.coefficient_of(ix);
        Rational expected = predicted_coefficient(ix);
        if (actual != expected)
            mismatches.push_back({2 * n, ix, to_string(expected), to_string(actual)});
    }
    return Report("cases", n, std::move(mismatches));
}

} // namespace mzv
