#include "derange/int_matrix.hpp"

#include <limits>
#include <stdexcept>

namespace derange {

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::times(const IntMatrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("IntMatrix::times: shape mismatch");
    IntMatrix out(rows_, other.cols());
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < other.cols(); ++c) {
            __int128 acc = 0;
            for (int k = 0; k < cols_; ++k)
                acc += static_cast<__int128>(at(r, k)) * other.at(k, c);
            if (acc > std::numeric_limits<long long>::max() || acc < std::numeric_limits<long long>::min())
                throw std::overflow_error("IntMatrix::times: entry overflow");
            out.at(r, c) = static_cast<long long>(acc);
        }
    }
    return out;
}

IntMatrix IntMatrix::gram() const { return transpose().times(*this); }

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (long long v : a_)
        if (v) return false;
    return true;
}

int rank_exact(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> w(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) w[r][c] = static_cast<long>(m.at(r, c));

    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (w[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[rank], w[pivot]);
        // fraction-free update: all divisions below are exact
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                w[r][c] = (w[r][c] * w[rank][col] - w[r][col] * w[rank][c]) / prev;
            w[r][col] = 0;
        }
        prev = w[rank][col];
        ++rank;
    }
    return rank;
}

int rank_via_gram(const IntMatrix& m) { return rank_exact(m.gram()); }

RationalSolver::RationalSolver(const IntMatrix& a) : a_(a) {
    const int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<mpq_class>> w(rows, std::vector<mpq_class>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) w[r][c] = static_cast<long>(a.at(r, c));
    std::vector<int> row_of(rows);
    for (int r = 0; r < rows; ++r) row_of[r] = r;

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (w[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[rank], w[pivot]);
        std::swap(row_of[rank], row_of[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (w[r][col] == 0) continue;
            mpq_class f = w[r][col] / w[rank][col];
            for (int c = col; c < cols; ++c) w[r][c] -= f * w[rank][c];
        }
        pivot_rows_.push_back(row_of[rank]);
        pivot_cols_.push_back(col);
        ++rank;
    }
}

bool RationalSolver::solve(const std::vector<mpq_class>& b, std::vector<mpq_class>& x) const {
    const int n = rank();
    if (static_cast<int>(b.size()) != a_.rows()) throw std::invalid_argument("RationalSolver::solve: bad rhs size");

    // square subsystem on the pivot rows/columns
    std::vector<std::vector<mpq_class>> w(n, std::vector<mpq_class>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = static_cast<long>(a_.at(pivot_rows_[i], pivot_cols_[j]));
        w[i][n] = b[pivot_rows_[i]];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (w[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("RationalSolver: pivot submatrix is singular");
        std::swap(w[col], w[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || w[r][col] == 0) continue;
            mpq_class f = w[r][col] / w[col][col];
            for (int c = col; c <= n; ++c) w[r][c] -= f * w[col][c];
        }
    }
    x.assign(a_.cols(), 0);
    for (int i = 0; i < n; ++i) x[pivot_cols_[i]] = w[i][n] / w[i][i];

    // consistency on every row (free columns are zero in x)
    for (int r = 0; r < a_.rows(); ++r) {
        mpq_class acc = 0;
        for (int c = 0; c < a_.cols(); ++c)
            if (x[c] != 0) acc += x[c] * static_cast<long>(a_.at(r, c));
        if (acc != b[r]) return false;
    }
    return true;
}

}  // namespace derange
