#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "derange/derangement_graph.hpp"
#include "derange/matrix_analysis.hpp"

using namespace derange;

namespace {

struct Fixture {
    GaloisField field;
    PglGroup group;
    IncidenceSystem sys;
    Fixture(int p, int k) : field(p, k), group(field), sys(build_incidence(group)) {}
};

Fixture& fixture(int q) {
    static std::map<int, Fixture*> cache;
    auto it = cache.find(q);
    if (it == cache.end()) {
        auto [p, k] = prime_power(q).value();
        it = cache.emplace(q, new Fixture(p, k)).first;
    }
    return *it->second;
}

}  // namespace

TEST_CASE("incidence matrix shape and sums") {
    auto& fx = fixture(3);
    CHECK(fx.sys.a.rows() == 24);
    CHECK(fx.sys.a.cols() == 16);

    for (int q : {2, 3, 4, 5}) {
        auto& f = fixture(q);
        const auto& a = f.sys.a;
        for (int r = 0; r < a.rows(); ++r) {
            long long sum = 0;
            for (int c = 0; c < a.cols(); ++c) sum += a.at(r, c);
            CHECK(sum == q + 1);  // each point has one image
        }
        for (int c = 0; c < a.cols(); ++c) {
            long long sum = 0;
            for (int r = 0; r < a.rows(); ++r) sum += a.at(r, c);
            CHECK(sum == q * (q - 1));  // sharp transitivity
        }
        // block shape: identity row hits exactly the diagonal columns,
        // derangement rows avoid them
        for (int c = 0; c < a.cols(); ++c) {
            auto [p1, p2] = f.sys.cols.pair(c);
            CHECK(a.at(0, c) == (p1 == p2 ? 1 : 0));
        }
        for (int r = 1; r <= f.sys.n_derangements; ++r)
            for (int d = 0; d < f.sys.cols.n_diag(); ++d) CHECK(a.at(r, d) == 0);
    }
}

TEST_CASE("gram closed form") {
    for (int q : {2, 3, 4, 5, 7}) {
        std::string why;
        CHECK_MESSAGE(gram_closed_form_check(fixture(q).sys, &why), why);
    }
}

TEST_CASE("rank of A and its kernel") {
    for (int q : {2, 3, 4, 5}) {
        auto& fx = fixture(q);
        int rank = rank_via_gram(fx.sys.a);
        CHECK(rank == q * q + 1);
        CHECK(rank_exact(fx.sys.a.gram()) == rank);  // gram rank identity
        std::string why;
        CHECK_MESSAGE(kernel_check(fx.sys, &why), why);
        // dim ker = (q+1)^2 - rank = 2q
        CHECK(fx.sys.cols.n_cols() - rank == 2 * q);
    }
}

TEST_CASE("derangement gram matrix N against the cross-ratio formula") {
    for (int q : {2, 3, 4, 5}) {
        auto& fx = fixture(q);
        auto n = build_gram_n(fx.sys);
        CHECK(n.rows() == q * (q + 1));
        CHECK(n.is_symmetric());
        for (int i = 0; i < n.rows(); ++i) CHECK(n.at(i, i) == q * (q - 1) / 2);

        auto rep = cross_ratio_formula_check(fx.sys, n, 1);
        CHECK_MESSAGE(rep.pass, rep.first_mismatch);
        CHECK(rep.checked == static_cast<long long>(q) * (q + 1) * q * (q + 1));

        // row sums are constant
        long long expected_row_sum = -1;
        for (int i = 0; i < n.rows(); ++i) {
            long long sum = 0;
            for (int j = 0; j < n.cols(); ++j) sum += n.at(i, j);
            if (expected_row_sum < 0) expected_row_sum = sum;
            CHECK(sum == expected_row_sum);
        }

        CHECK(rank_exact(n) == q * (q - 1));
        CHECK(rank_via_gram(fx.sys.derangement_block()) == q * (q - 1));
    }
}

TEST_CASE("specific N entries") {
    {
        auto& fx = fixture(5);
        auto n = build_gram_n(fx.sys);
        // ((0,1),(inf,3)): cross-ratio 1-3 = 3, not a square mod 5 -> (q+1)/2
        int i = fx.sys.cols.distinct_index(0, 1);
        int j = fx.sys.cols.distinct_index(5, 3);
        CHECK(n.at(i, j) == 3);
        // swapped pair with square cross-ratio -> (q-1)/2
        CHECK(n.at(fx.sys.cols.distinct_index(0, 5), fx.sys.cols.distinct_index(5, 0)) == 2);
    }
    {
        auto& fx = fixture(4);
        auto n = build_gram_n(fx.sys);
        CHECK(n.at(fx.sys.cols.distinct_index(0, 4), fx.sys.cols.distinct_index(4, 0)) == 0);
    }
}

TEST_CASE("N is invariant under the diagonal group action") {
    auto& fx = fixture(5);
    auto n = build_gram_n(fx.sys);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> el(0, fx.group.size() - 1);
    std::uniform_int_distribution<int> idx(0, fx.sys.cols.n_distinct() - 1);
    for (int t = 0; t < 500; ++t) {
        int i = idx(rng), j = idx(rng), g = el(rng);
        auto [a, b] = fx.sys.cols.pair(fx.sys.cols.n_diag() + i);
        auto [c, d] = fx.sys.cols.pair(fx.sys.cols.n_diag() + j);
        int ig = fx.sys.cols.distinct_index(fx.group.apply(g, a), fx.group.apply(g, b));
        int jg = fx.sys.cols.distinct_index(fx.group.apply(g, c), fx.group.apply(g, d));
        CHECK(n.at(ig, jg) == n.at(i, j));
    }
}

TEST_CASE("N has exactly 4 distinct eigenvalues for even q") {
    for (int q : {4, 8}) {
        auto& fx = fixture(q);
        auto n = build_gram_n(fx.sys);
        Eigen::MatrixXd m(n.rows(), n.cols());
        for (int i = 0; i < n.rows(); ++i)
            for (int j = 0; j < n.cols(); ++j) m(i, j) = static_cast<double>(n.at(i, j));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        std::set<long long> distinct;
        for (int i = 0; i < es.eigenvalues().size(); ++i)
            distinct.insert(std::llround(es.eigenvalues()[i] * 2));
        CHECK(distinct.size() == 4);
        const long long Q = q;
        CHECK(distinct == std::set<long long>{0, Q * (Q - 1), Q * (Q + 1), Q * (Q * Q - 1)});
    }
}

TEST_CASE("eigenvector positivity") {
    for (int q : {4, 5}) {
        auto& fx = fixture(q);
        CharacterTable table(fx.group);
        auto n = build_gram_n(fx.sys);
        auto rep = eigenvector_positivity(table, fx.sys, n);
        CHECK(rep.pass);
        for (const auto& e : rep.entries) {
            CHECK(e.eigen_ok);
            CHECK(e.positive);
            CHECK(e.snap_ok);
        }
        if (q == 4) {
            for (const auto& e : rep.entries) {
                if (e.character == "nu_1") CHECK(e.s_value == doctest::Approx(6.0));
                if (e.character == "eta_1") CHECK(e.s_value == doctest::Approx(10.0));
                if (e.character == "lambda_1") CHECK(e.s_value == doctest::Approx(30.0));
            }
        }
    }
}

TEST_CASE("reduced system ranks and the column identity") {
    {
        auto& fx = fixture(3);
        auto red = build_reduced(fx.sys);
        CHECK(red.abar.rows() == 24);
        CHECK(red.abar.cols() == 10);
        auto rep = reduced_rank_check(fx.sys, red);
        CHECK(rep.rank_abar == 10);
        CHECK(rep.pass);
    }
    {
        auto& fx = fixture(5);
        auto red = build_reduced(fx.sys);
        CHECK(red.mbar.rows() == 50);
        CHECK(red.mbar.cols() == 20);
        auto rep = reduced_rank_check(fx.sys, red);
        CHECK(rep.rank_mbar == 20);
        CHECK(rep.pass);
    }
    {
        auto& fx = fixture(4);
        auto red = build_reduced(fx.sys);
        auto rep = reduced_rank_check(fx.sys, red);
        CHECK(rep.identity_ok);
        CHECK(rep.deleted_in_span);
        CHECK(rep.pass);
    }
}

TEST_CASE("coset certification") {
    for (int q : {4, 5}) {
        auto& fx = fixture(q);
        auto red = build_reduced(fx.sys);
        CosetCertifier cert(fx.group, fx.sys, red);

        // the stabilizer of 0 certifies as (0, 0)
        std::vector<int> stab0;
        for (int g = 0; g < fx.group.size(); ++g)
            if (fx.group.apply(g, 0) == 0) stab0.push_back(g);
        std::string why;
        auto res = cert.certify(stab0, &why);
        REQUIRE_MESSAGE(res.has_value(), why);
        CHECK(*res == std::make_pair(0, 0));

        // a random translate certifies as some coset pair consistent with it
        std::mt19937_64 rng(5);
        int h = static_cast<int>(rng() % fx.group.size());
        std::vector<int> moved;
        for (int g : stab0) moved.push_back(fx.group.compose(h, g));
        std::sort(moved.begin(), moved.end());
        auto res2 = cert.certify(moved, &why);
        REQUIRE_MESSAGE(res2.has_value(), why);
        auto [p, pp] = *res2;
        for (int g : moved) CHECK(fx.group.apply(g, p) == pp);

        // a near miss is rejected: drop one member, add a non-member
        auto broken = stab0;
        broken.pop_back();
        for (int g = 0; g < fx.group.size(); ++g)
            if (fx.group.apply(g, 0) != 0) {
                broken.push_back(g);
                break;
            }
        std::sort(broken.begin(), broken.end());
        CHECK_FALSE(cert.certify(broken, &why).has_value());
    }
}

TEST_CASE("certifier agrees with direct coset recognition on search output") {
    auto& fx = fixture(5);
    auto red = build_reduced(fx.sys);
    CosetCertifier cert(fx.group, fx.sys, red);
    auto pg = fx.group.permutation_group();
    DerangementGraph graph(pg);
    auto fam = enumerate_max_independent_sets(graph, 20);
    CHECK(fam.sets.size() == 36);
    for (const auto& s : fam.sets) {
        auto direct = is_stabilizer_coset(s, pg);
        std::string why;
        auto linear = cert.certify(s, &why);
        REQUIRE(direct.has_value());
        REQUIRE_MESSAGE(linear.has_value(), why);
        CHECK(*direct == *linear);
    }
}

TEST_CASE("text grid export") {
    auto& fx = fixture(2);
    std::ostringstream os;
    std::vector<std::string> rows(fx.sys.a.rows()), cols(fx.sys.a.cols());
    for (int r = 0; r < fx.sys.a.rows(); ++r) rows[r] = "g" + std::to_string(fx.sys.row_to_element[r]);
    for (int c = 0; c < fx.sys.a.cols(); ++c) {
        auto [p1, p2] = fx.sys.cols.pair(c);
        cols[c] = "(" + std::to_string(p1) + "," + std::to_string(p2) + ")";
    }
    write_text_grid(os, fx.sys.a, rows, cols);
    CHECK(os.str().starts_with("6 9\n"));
}
