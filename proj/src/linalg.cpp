#include "picod/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace picod {

Matrix Matrix::column_submatrix(std::span<const int> cols) const {
    Matrix out(rows_, static_cast<int>(cols.size()), *field_);
    for (int r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out.set(r, static_cast<int>(j), at(r, cols[j]));
        }
    }
    return out;
}

Matrix Matrix::row_submatrix(std::span<const int> rows) const {
    Matrix out(static_cast<int>(rows.size()), cols_, *field_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int c = 0; c < cols_; ++c) {
            out.set(static_cast<int>(i), c, at(rows[i], c));
        }
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_, *field_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    }
    return out;
}

Matrix Matrix::with_row_appended(std::span<const std::uint16_t> row) const {
    if (static_cast<int>(row.size()) != cols_) {
        throw std::invalid_argument("appended row has wrong width");
    }
    Matrix out(rows_ + 1, cols_, *field_);
    out.entries_ = entries_;
    out.entries_.insert(out.entries_.end(), row.begin(), row.end());
    return out;
}

Matrix rref(const Matrix& m, std::vector<int>* pivot_cols) {
    Matrix a = m;
    const Field& f = a.field();
    if (pivot_cols) pivot_cols->clear();
    int pivot_row = 0;
    for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < a.rows(); ++r) {
            if (a.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            for (int c = 0; c < a.cols(); ++c) {
                const std::uint16_t tmp = a.at(sel, c);
                a.set(sel, c, a.at(pivot_row, c));
                a.set(pivot_row, c, tmp);
            }
        }
        const std::uint16_t scale = f.inv(a.at(pivot_row, col));
        for (int c = col; c < a.cols(); ++c) {
            a.set(pivot_row, c, f.mul(scale, a.at(pivot_row, c)));
        }
        for (int r = 0; r < a.rows(); ++r) {
            if (r == pivot_row) continue;
            const std::uint16_t factor = a.at(r, col);
            if (factor == 0) continue;
            for (int c = col; c < a.cols(); ++c) {
                a.set(r, c, f.add(a.at(r, c), f.mul(factor, a.at(pivot_row, c))));
            }
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++pivot_row;
    }
    return a;
}

int rank(const Matrix& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return static_cast<int>(pivots.size());
}

std::set<int> solve_for_unit_rows(const Matrix& m) {
    std::vector<int> pivots;
    const Matrix r = rref(m, &pivots);
    const Field& f = m.field();
    std::set<int> out;
    // e_j is in the row space iff reducing it against the RREF rows leaves 0.
    std::vector<std::uint16_t> v(static_cast<std::size_t>(m.cols()), 0);
    for (int j = 0; j < m.cols(); ++j) {
        std::fill(v.begin(), v.end(), 0);
        v[static_cast<std::size_t>(j)] = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            const std::uint16_t coef = v[static_cast<std::size_t>(pivots[p])];
            if (coef == 0) continue;
            for (int c = pivots[p]; c < m.cols(); ++c) {
                v[static_cast<std::size_t>(c)] =
                    f.add(v[static_cast<std::size_t>(c)],
                          f.mul(coef, r.at(static_cast<int>(p), c)));
            }
        }
        bool zero = true;
        for (const std::uint16_t x : v) {
            if (x != 0) {
                zero = false;
                break;
            }
        }
        if (zero) out.insert(j);
    }
    return out;
}

std::optional<std::vector<std::uint16_t>> left_solve(const Matrix& m,
                                                     std::span<const std::uint16_t> target) {
    if (static_cast<int>(target.size()) != m.cols()) {
        throw std::invalid_argument("target row has wrong width");
    }
    // c * m = target  <=>  m^T * c^T = target^T: eliminate on [m^T | target].
    const Field& f = m.field();
    Matrix aug(m.cols(), m.rows() + 1, f);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.set(c, r, m.at(r, c));
    }
    for (int c = 0; c < m.cols(); ++c) aug.set(c, m.rows(), target[static_cast<std::size_t>(c)]);

    std::vector<int> pivots;
    const Matrix red = rref(aug, &pivots);
    std::vector<std::uint16_t> solution(static_cast<std::size_t>(m.rows()), 0);
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        if (pivots[p] == m.rows()) return std::nullopt; // pivot in the target column
        solution[static_cast<std::size_t>(pivots[p])] = red.at(static_cast<int>(p), m.rows());
    }
    return solution;
}

bool for_each_combination(int n, int k,
                          const std::function<bool(std::span<const int>)>& fn) {
    if (k < 0 || k > n) throw std::invalid_argument("combination size out of range");
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::optional<SubmatrixWitness> find_rank_deficient_submatrix(const Matrix& m, int k) {
    if (k < 1 || k > m.rows() || k > m.cols()) {
        throw std::invalid_argument("submatrix order outside matrix shape");
    }
    std::optional<SubmatrixWitness> witness;
    auto check_cols = [&](std::span<const int> rows_sel) {
        const Matrix base = (static_cast<int>(rows_sel.size()) == m.rows())
                                ? m
                                : m.row_submatrix(rows_sel);
        return for_each_combination(m.cols(), k, [&](std::span<const int> cols_sel) {
            if (rank(base.column_submatrix(cols_sel)) < k) {
                witness = SubmatrixWitness{{rows_sel.begin(), rows_sel.end()},
                                           {cols_sel.begin(), cols_sel.end()}};
                return false;
            }
            return true;
        });
    };
    if (m.rows() == k) {
        std::vector<int> all_rows(static_cast<std::size_t>(k));
        std::iota(all_rows.begin(), all_rows.end(), 0);
        check_cols(all_rows);
    } else {
        for_each_combination(m.rows(), k, check_cols);
    }
    return witness;
}

bool all_square_submatrices_full_rank(const Matrix& m, int k) {
    return !find_rank_deficient_submatrix(m, k).has_value();
}

} // namespace picod
