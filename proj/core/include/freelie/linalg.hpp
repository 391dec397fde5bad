#pragma once

#include <map>
#include <optional>
#include <vector>

#include "freelie/errors.hpp"
#include "freelie/rational.hpp"

namespace freelie {

/// Incremental row-echelon span of sparse rational vectors over an ordered
/// key type. Pivot rows have pairwise distinct leading (smallest) keys and
/// are normalized to leading coefficient 1, so membership and rank are exact.
template <class Key>
class SparseSpan {
public:
    using Row = std::map<Key, Rational>;

    /// Adds v to the span. Returns true when the rank grew.
    bool add(Row v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Rational lead = v.begin()->second;
        for (auto& [k, c] : v) c /= lead;
        Key lk = v.begin()->first;
        pivots_.emplace(std::move(lk), std::move(v));
        return true;
    }

    bool contains(Row v) const { return reduce(std::move(v)).empty(); }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    // Any span element has a pivot key as its leading key, so reducing the
    // leading term until it misses every pivot decides membership.
    Row reduce(Row v) const {
        while (!v.empty()) {
            auto it = pivots_.find(v.begin()->first);
            if (it == pivots_.end()) break;
            Rational c = v.begin()->second;
            for (const auto& [k, pc] : it->second) {
                auto [vt, inserted] = v.try_emplace(k, Rational());
                vt->second -= c * pc;
                if (vt->second.is_zero()) v.erase(vt);
            }
        }
        return v;
    }

    std::map<Key, Row> pivots_;
};

/// Dense exact solver for tall systems A c = v with full column rank:
/// row-reduces [A | I] once, then answers many right-hand sides. Pivot rows
/// are chosen as the first row with a nonzero entry in the current column.
class LinearSolver {
public:
    /// rows x cols matrix, rows >= cols expected.
    explicit LinearSolver(std::vector<std::vector<Rational>> a);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool full_column_rank() const { return static_cast<int>(pivot_rows_.size()) == cols_; }
    int rank() const { return static_cast<int>(pivot_rows_.size()); }

    /// Unique exact solution, or nullopt when the system is inconsistent.
    /// Requires full column rank.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& v) const;

private:
    int rows_, cols_;
    std::vector<std::vector<Rational>> m_;  // reduced [A | I]
    std::vector<int> pivot_rows_;           // pivot row of each column
};

}  // namespace freelie
