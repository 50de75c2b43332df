#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

/// A finite (possibly empty) sequence of positive integers. The empty index
/// is the unit symbol of the harmonic algebra.
class Index {
  public:
    Index() = default;

    explicit Index(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("Index: entries must be >= 1");
    }

    Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Sum of entries; 0 for the empty index.
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Number of entries.
    int depth() const { return static_cast<int>(parts_.size()); }

    /// Empty, or last entry >= 2. Exactly the indices whose nested sum converges.
    bool admissible() const { return parts_.empty() || parts_.back() >= 2; }

    /// New index with one entry appended (used by the product recursion).
    Index appended(int entry) const {
        std::vector<int> p = parts_;
        p.push_back(entry);
        return Index(std::move(p));
    }

    /// All entries but the last; precondition: non-empty.
    Index parent() const {
        return Index(std::vector<int>(parts_.begin(), parts_.end() - 1));
    }

    int last() const { return parts_.back(); }

    bool operator==(const Index&) const = default;

    private:
    std::vector<int> parts_;
};

inline int weight(const Index& ix) { return ix.weight(); }
inline int depth(const Index& ix) { return ix.depth(); }
inline bool is_admissible(const Index& ix) { return ix.admissible(); }

/// Canonical term order: by weight, then depth, then lexicographically on
/// entries. Used for display and deterministic serialization.
struct CanonicalLess {
    bool operator()(const Index& a, const Index& b) const {
        if (a.weight() != b.weight())
            return a.weight() < b.weight();
        if (a.depth() != b.depth())
            return a.depth() < b.depth();
        return a.parts() < b.parts();
    }
};

struct IndexHash {
    std::size_t operator()(const Index& ix) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int p : ix.parts())
            h = h * 1099511628211ull + static_cast<std::size_t>(p);
        return h;
    }
};

/// "[k1,k2,...,kr]"; "[]" for the empty index.
inline std::string to_string(const Index& ix) {
    std::string s = "[";
    for (std::size_t i = 0; i < ix.parts().size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(ix.parts()[i]);
    }
    s += ']';
    return s;
}

} // namespace mzv
