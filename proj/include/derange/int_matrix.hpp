#pragma once

#include <gmpxx.h>

#include <vector>

namespace derange {

// Dense integer matrix.  Entries stay in long long; every rank / solve
// decision is done in exact arbitrary-precision arithmetic on a copy.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    long long at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix times(const IntMatrix& other) const;  // overflow-checked
    IntMatrix gram() const;                         // AᵀA
    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<long long> a_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination with
// deterministic first-nonzero pivoting.
int rank_exact(const IntMatrix& m);

// rank(MᵀM), which equals rank(M) over the rationals; keeps elimination on
// the small side for tall matrices
int rank_via_gram(const IntMatrix& m);

// Exact linear-system tool for a fixed matrix A: echelonizes once over the
// rationals, then solves A x = b for arbitrary right-hand sides, reporting
// inconsistency exactly.
class RationalSolver {
public:
    explicit RationalSolver(const IntMatrix& a);

    int rank() const { return static_cast<int>(pivot_rows_.size()); }

    // On success returns true and fills x (one entry per column of A; free
    // columns, if any, are set to zero).  Returns false if b is not in the
    // column space.
    bool solve(const std::vector<mpq_class>& b, std::vector<mpq_class>& x) const;

private:
    IntMatrix a_;
    std::vector<int> pivot_rows_;  // original row index per pivot
    std::vector<int> pivot_cols_;
};

}  // namespace derange
