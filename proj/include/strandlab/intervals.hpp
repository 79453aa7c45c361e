#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandlab/errors.hpp"

namespace strandlab {

/// The indecomposable with support on vertices i+1..j, stored as its endpoint
/// pair 0 <= i < j <= n.
struct IntervalRep {
    int i = 0;
    int j = 1;

    auto operator<=>(const IntervalRep&) const = default;
};

inline IntervalRep make_interval(int i, int j) {
    if (!(0 <= i && i < j))
        throw invalid_input_error("interval needs 0 <= i < j, got (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
    return IntervalRep{i, j};
}

/// Dimension vector e_{i+1} + ... + e_j as a length-n vector indexed by vertex-1.
inline std::vector<int> dimension_vector(IntervalRep r, int n) {
    if (r.j > n)
        throw invalid_input_error("interval endpoint exceeds n");
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (int v = r.i + 1; v <= r.j; ++v) d[static_cast<std::size_t>(v - 1)] = 1;
    return d;
}

/// All intervals over points 0..n in lexicographic order.
inline std::vector<IntervalRep> all_intervals(int n) {
    std::vector<IntervalRep> out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(IntervalRep{i, j});
    return out;
}

/// A c-matrix: one sign-coherent +-interval row per mutable vertex.
using CMatrix = std::vector<std::vector<int>>;

inline bool row_sign_coherent(const std::vector<int>& row) {
    bool pos = false, neg = false, nonzero = false;
    for (int x : row) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
        if (x != 0) nonzero = true;
    }
    return nonzero && !(pos && neg);
}

/// Recognizes a row of the form +-(e_{i+1}+...+e_j); returns (interval, sign).
inline std::optional<std::pair<IntervalRep, int>> interval_of_row(const std::vector<int>& row) {
    int first = -1, last = -1, sign = 0;
    for (int v = 0; v < static_cast<int>(row.size()); ++v) {
        int x = row[static_cast<std::size_t>(v)];
        if (x == 0) continue;
        if (x != 1 && x != -1) return std::nullopt;
        if (first < 0) {
            first = v;
            sign = x;
        } else if (x != sign || v != last + 1) {
            return std::nullopt;
        }
        last = v;
    }
    if (first < 0) return std::nullopt;
    return std::make_pair(IntervalRep{first, last + 1}, sign);
}

inline CMatrix sorted_rows(CMatrix m) {
    std::sort(m.begin(), m.end());
    return m;
}

} // namespace strandlab
