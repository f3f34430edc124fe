#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "picod/gf.hpp"

namespace picod {

/// Dense row-major matrix over a GF(2^b) field. Entries are raw element
/// values; the field pointer identifies the arithmetic. Matrices from
/// different fields never mix (operations throw std::invalid_argument).
class Matrix {
public:
    Matrix(int rows, int cols, const Field& field)
        : rows_(rows), cols_(cols), field_(&field),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static Matrix identity(int n, const Field& field) {
        Matrix m(n, n, field);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *field_; }

    std::uint16_t at(int r, int c) const { return entries_[index(r, c)]; }

    void set(int r, int c, std::uint16_t v) {
        if (v > field_->max_value()) {
            throw std::invalid_argument("matrix entry outside field");
        }
        entries_[index(r, c)] = v;
    }

    std::span<const std::uint16_t> row(int r) const {
        return {entries_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
    }

    /// Columns picked in the given order (indices may repeat).
    Matrix column_submatrix(std::span<const int> cols) const;
    Matrix row_submatrix(std::span<const int> rows) const;

    Matrix transposed() const;

    /// This matrix with one extra row appended.
    Matrix with_row_appended(std::span<const std::uint16_t> row) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.field_->spec() == b.field_->spec() && a.entries_ == b.entries_;
    }

private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
            throw std::out_of_range("matrix index out of range");
        }
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_;
    int cols_;
    const Field* field_;
    std::vector<std::uint16_t> entries_;
};

/// Rank via Gaussian elimination. Pivots are chosen as the first nonzero
/// entry in column order, so the result is deterministic.
int rank(const Matrix& m);

/// Reduced row echelon form. Optionally reports the pivot columns.
Matrix rref(const Matrix& m, std::vector<int>* pivot_cols = nullptr);

/// Column indices j such that the unit row e_j lies in the row space of m.
/// Equivalent to rank(m) == rank(m with e_j appended) for each j.
std::set<int> solve_for_unit_rows(const Matrix& m);

/// Coefficients c with c * m == target (one solution), or nullopt if target
/// is not in the row space of m. Used to cross-check solve_for_unit_rows by
/// explicit recovery of the combining coefficients.
std::optional<std::vector<std::uint16_t>> left_solve(const Matrix& m,
                                                     std::span<const std::uint16_t> target);

/// First k-row x k-column submatrix (subsets in lexicographic order) that is
/// rank deficient, or nullopt when every one is invertible. When m.rows == k
/// only column subsets are enumerated.
struct SubmatrixWitness {
    std::vector<int> rows;
    std::vector<int> cols;
};
std::optional<SubmatrixWitness> find_rank_deficient_submatrix(const Matrix& m, int k);

/// True when every k x k submatrix is invertible (early exit on the first
/// counterexample). Pre: 1 <= k <= min(m.rows, m.cols).
bool all_square_submatrices_full_rank(const Matrix& m, int k);

/// Calls fn with each size-k subset of {0..n-1} in lexicographic order until
/// fn returns false. Returns false iff some call returned false.
bool for_each_combination(int n, int k, const std::function<bool(std::span<const int>)>& fn);

} // namespace picod
