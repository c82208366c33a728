#pragma once

// Incidence matrix of a combinatorial batch code: servers are rows, items
// are columns.  Column supports are stored as bitsets over the rows.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbc/errors.hpp"

namespace cbc {

// Fixed-size bitset over [0, size) backed by 64-bit words.
class DynBits {
public:
    DynBits() = default;
    explicit DynBits(int size) : size_(size), w_((size + 63) / 64, 0) {}

    int size() const { return size_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    DynBits& operator|=(const DynBits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bool subset_of(const DynBits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool operator==(const DynBits& o) const = default;

    std::vector<int> ones() const {
        std::vector<int> out;
        for (int i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }
    // Low word; valid view of the whole set when size <= 64.
    std::uint64_t word0() const { return w_.empty() ? 0 : w_[0]; }

private:
    int size_ = 0;
    std::vector<std::uint64_t> w_;
};

struct CodeParams {
    long long n = 0;
    long long N = 0;
    std::optional<long long> k;
    long long m = 0;
    std::optional<long long> c;  // uniform column weight, if uniform
};

// A column set S whose row neighborhood N(S) is smaller than S, certifying
// that the matrix is not a CBC for batch size |S|.
struct DeficiencyWitness {
    std::vector<int> column_set;
    std::vector<int> neighborhood;

    bool valid() const { return neighborhood.size() < column_set.size(); }
};

struct IncidenceMatrix {
    int m = 0;
    int n = 0;
    std::vector<DynBits> columns;  // n supports over [0, m)
    // Parallel classes plus (optionally, as the last entry) a special class.
    std::optional<std::vector<std::vector<int>>> class_partition;
    std::string label;

    bool get(int row, int col) const { return columns[col].test(row); }

    long long total_weight() const {
        long long s = 0;
        for (const auto& c : columns) s += c.count();
        return s;
    }
    int column_weight(int col) const { return columns[col].count(); }
    int row_weight(int row) const {
        int s = 0;
        for (const auto& c : columns) s += c.test(row) ? 1 : 0;
        return s;
    }
    std::optional<int> uniform_weight() const {
        if (n == 0) return std::nullopt;
        int w = columns[0].count();
        for (const auto& c : columns)
            if (c.count() != w) return std::nullopt;
        return w;
    }
    DynBits neighborhood(const std::vector<int>& cols) const {
        DynBits u(m);
        for (int c : cols) u |= columns[c];
        return u;
    }

    bool has_empty_column() const {
        for (const auto& c : columns)
            if (c.none()) return true;
        return false;
    }
};

// Recompute the witness neighborhood against a matrix and check deficiency.
inline bool witness_revalidates(const IncidenceMatrix& mat, const DeficiencyWitness& w) {
    DynBits u = mat.neighborhood(w.column_set);
    if (static_cast<size_t>(u.count()) != w.neighborhood.size()) return false;
    for (int r : w.neighborhood)
        if (!u.test(r)) return false;
    return u.count() < static_cast<int>(w.column_set.size());
}

}  // namespace cbc
