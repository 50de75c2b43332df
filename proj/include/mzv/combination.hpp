#pragma once

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <utility>

namespace mzv {

/// Finite sparse rational linear combination of indices, the elements of the
/// harmonic algebra. Stored coefficients are never zero, so equality is
/// equality of term maps. The empty combination (zero) is distinct from the
/// combination {[] -> 1} (the unit).
class Combination {
  public:
    using TermMap = std::map<Index, Rational, CanonicalLess>;

    Combination() = default;

    static Combination zero() { return Combination(); }

    static Combination unit() { return single(Index{}); }

    static Combination single(Index ix, Rational coeff = 1) {
        Combination c;
        if (coeff != 0)
            c.terms_.emplace(std::move(ix), std::move(coeff));
        return c;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Stored coefficient, or 0 if the index is absent.
    Rational coefficient_of(const Index& ix) const {
        auto it = terms_.find(ix);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c * ix, erasing the term if the result cancels.
    void add_term(const Index& ix, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(ix, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Combination& operator+=(const Combination& other) {
        for (const auto& [ix, c] : other.terms_)
            add_term(ix, c);
        return *this;
    }

    Combination& operator-=(const Combination& other) {
        for (const auto& [ix, c] : other.terms_)
            add_term(ix, -c);
        return *this;
    }

    Combination& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [ix, c] : terms_)
            c *= s;
        return *this;
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
    friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
    friend Combination operator-(Combination a) { return a *= Rational(-1); }

    bool operator==(const Combination&) const = default;

  private:
    TermMap terms_;
};

inline Rational coefficient_of(const Combination& u, const Index& ix) {
    return u.coefficient_of(ix);
}

/// a*u + b*v in canonical sparse form.
inline Combination linear_combine(const Rational& a, const Combination& u,
                                  const Rational& b, const Combination& v) {
    Combination r = u * a;
    for (const auto& [ix, c] : v.terms())
        r.add_term(ix, b * c);
    return r;
}

namespace detail {

/// Each index of u with one entry appended.
inline Combination append_entry(const Combination& u, int entry) {
    Combination r;
    for (const auto& [ix, c] : u.terms())
        r.add_term(ix.appended(entry), c);
    return r;
}

struct IndexPairHash {
    std::size_t operator()(const std::pair<Index, Index>& p) const {
        IndexHash h;
        return h(p.first) * 0x100000001b3ull ^ h(p.second);
    }
};

} // namespace detail

/// Harmonic (stuffle) product of two indices via the three-term recursion
///   [k]*[l] = [[k-]*[l], kr] + [[k]*[l-], ls] + [[k-]*[l-], kr+ls].
/// Results are memoized per thread, keyed by the canonically ordered pair,
/// since the recursion revisits identical subproducts exponentially often.
inline Combination stuffle(const Index& u, const Index& v) {
    if (u.empty())
        return Combination::single(v);
    if (v.empty())
        return Combination::single(u);

    thread_local std::unordered_map<std::pair<Index, Index>, Combination,
                                    detail::IndexPairHash>
        cache;

    CanonicalLess less;
    std::pair<Index, Index> key = less(v, u) ? std::make_pair(v, u) : std::make_pair(u, v);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    const Index& a = key.first;
    const Index& b = key.second;
    Combination r = detail::append_entry(stuffle(a.parent(), b), a.last());
    r += detail::append_entry(stuffle(a, b.parent()), b.last());
    r += detail::append_entry(stuffle(a.parent(), b.parent()), a.last() + b.last());
    return cache.emplace(std::move(key), std::move(r)).first->second;
}

/// Bilinear extension of the stuffle product to combinations.
inline Combination stuffle(const Combination& u, const Combination& v) {
    Combination r;
    for (const auto& [iu, cu] : u.terms())
        for (const auto& [iv, cv] : v.terms()) {
            Rational s = cu * cv;
            for (const auto& [ix, c] : stuffle(iu, iv).terms())
                r.add_term(ix, s * c);
        }
    return r;
}

/// Signed sum of "p/q*[...]" terms in canonical order; "p/q" omitted when
/// the coefficient is +-1 and "/q" omitted when q = 1. Zero prints as "0".
inline std::string to_string(const Combination& u) {
    if (u.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [ix, c] : u.terms()) {
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (mag != 1)
            s += to_string(mag) + "*";
        s += to_string(ix);
        first = false;
    }
    return s;
}

} // namespace mzv
