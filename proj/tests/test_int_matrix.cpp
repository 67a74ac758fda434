#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "derange/int_matrix.hpp"
#include "derange/rational.hpp"

using namespace derange;

namespace {

// reference rank: plain Gauss over mpq, an independent route from Bareiss
int rank_reference(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpq_class>> w(rows, std::vector<mpq_class>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) w[r][c] = static_cast<long>(m.at(r, c));
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (w[r][col] != 0) pivot = pivot < 0 ? r : pivot;
        if (pivot < 0) continue;
        std::swap(w[rank], w[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (w[r][col] == 0) continue;
            mpq_class f = w[r][col] / w[rank][col];
            for (int c = col; c < cols; ++c) w[r][c] -= f * w[rank][c];
        }
        ++rank;
    }
    return rank;
}

IntMatrix random_matrix_of_rank(int rows, int cols, int rank, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    IntMatrix left(rows, rank), right(rank, cols);
    // retry until the factors have full rank
    do {
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < rank; ++c) left.at(r, c) = d(rng);
    } while (rank_reference(left) != rank);
    do {
        for (int r = 0; r < rank; ++r)
            for (int c = 0; c < cols; ++c) right.at(r, c) = d(rng);
    } while (rank_reference(right) != rank);
    return left.times(right);
}

}  // namespace

TEST_CASE("bareiss rank on constructed ranks") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 3 + static_cast<int>(rng() % 8);
        int cols = 3 + static_cast<int>(rng() % 8);
        int rank = 1 + static_cast<int>(rng() % std::min(rows, cols));
        auto m = random_matrix_of_rank(rows, cols, rank, rng);
        CHECK(rank_exact(m) == rank);
        CHECK(rank_exact(m) == rank_reference(m));
        CHECK(rank_via_gram(m) == rank);  // rank(MᵀM) = rank(M) over Q
        CHECK(rank_exact(m.transpose()) == rank);
    }
    IntMatrix zero(4, 6);
    CHECK(rank_exact(zero) == 0);
}

TEST_CASE("checked product") {
    IntMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = 1LL << 62;
    b.at(0, 0) = 4;
    CHECK_THROWS_AS(a.times(b), std::overflow_error);
}

TEST_CASE("rational solver") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 6 + static_cast<int>(rng() % 5);
        int cols = 3 + static_cast<int>(rng() % 3);
        int rank = 1 + static_cast<int>(rng() % cols);
        auto m = random_matrix_of_rank(rows, cols, rank, rng);
        RationalSolver solver(m);
        CHECK(solver.rank() == rank);

        // rhs in the column space: A * y for random rational y
        std::vector<mpq_class> y(cols);
        for (auto& v : y) v = mpq_from(d(rng), 1 + static_cast<int>(rng() % 3));
        std::vector<mpq_class> b(rows, 0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) b[r] += static_cast<long>(m.at(r, c)) * y[c];
        std::vector<mpq_class> x;
        REQUIRE(solver.solve(b, x));
        for (int r = 0; r < rows; ++r) {
            mpq_class acc = 0;
            for (int c = 0; c < cols; ++c) acc += static_cast<long>(m.at(r, c)) * x[c];
            CHECK(acc == b[r]);
        }
    }

    // inconsistent rhs is rejected
    IntMatrix m(3, 1);
    m.at(0, 0) = 1;
    m.at(1, 0) = 1;
    m.at(2, 0) = 1;
    RationalSolver solver(m);
    std::vector<mpq_class> x;
    CHECK_FALSE(solver.solve({mpq_class(1), mpq_class(2), mpq_class(1)}, x));
    CHECK(solver.solve({mpq_class(2), mpq_class(2), mpq_class(2)}, x));
    CHECK(x[0] == 2);
}
