#include "freelie/linalg.hpp"

namespace freelie {

LinearSolver::LinearSolver(std::vector<std::vector<Rational>> a)
    : rows_(static_cast<int>(a.size())), cols_(a.empty() ? 0 : static_cast<int>(a[0].size())) {
    m_ = std::move(a);
    for (int i = 0; i < rows_; ++i) {
        if (static_cast<int>(m_[static_cast<size_t>(i)].size()) != cols_)
            throw Error("LinearSolver: ragged matrix");
        m_[static_cast<size_t>(i)].resize(static_cast<size_t>(cols_ + rows_));
        m_[static_cast<size_t>(i)][static_cast<size_t>(cols_ + i)] = Rational(1);
    }
    std::vector<bool> used(static_cast<size_t>(rows_), false);
    for (int col = 0; col < cols_; ++col) {
        int pr = -1;
        for (int i = 0; i < rows_; ++i) {
            if (!used[static_cast<size_t>(i)] && !m_[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        used[static_cast<size_t>(pr)] = true;
        pivot_rows_.push_back(pr);
        auto& prow = m_[static_cast<size_t>(pr)];
        Rational inv = Rational(1) / prow[static_cast<size_t>(col)];
        for (auto& x : prow) x *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == pr) continue;
            Rational f = m_[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            auto& row = m_[static_cast<size_t>(i)];
            for (int j = 0; j < cols_ + rows_; ++j) {
                if (!prow[static_cast<size_t>(j)].is_zero())
                    row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
            }
        }
    }
}

std::optional<std::vector<Rational>> LinearSolver::solve(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != rows_) throw Error("LinearSolver: rhs size mismatch");
    if (!full_column_rank()) throw SingularSystem("LinearSolver: matrix lacks full column rank");
    // w = E v where E is the recorded row-operation matrix.
    auto transformed = [&](int i) {
        Rational acc;
        const auto& row = m_[static_cast<size_t>(i)];
        for (int k = 0; k < rows_; ++k) {
            const Rational& e = row[static_cast<size_t>(cols_ + k)];
            if (!e.is_zero() && !v[static_cast<size_t>(k)].is_zero()) acc += e * v[static_cast<size_t>(k)];
        }
        return acc;
    };
    std::vector<Rational> c(static_cast<size_t>(cols_));
    for (int col = 0; col < cols_; ++col) c[static_cast<size_t>(col)] = transformed(pivot_rows_[static_cast<size_t>(col)]);
    // Consistency: the non-pivot rows now encode pure constraints on v.
    std::vector<bool> is_pivot(static_cast<size_t>(rows_), false);
    for (int pr : pivot_rows_) is_pivot[static_cast<size_t>(pr)] = true;
    for (int i = 0; i < rows_; ++i) {
        if (is_pivot[static_cast<size_t>(i)]) continue;
        if (!transformed(i).is_zero()) return std::nullopt;
    }
    return c;
}

}  // namespace freelie
