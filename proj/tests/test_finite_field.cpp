#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "derange/finite_field.hpp"

using namespace derange;

namespace {

// Independent irreducibility oracle: f has no factorization g*h with
// deg g, deg h >= 1, checked by multiplying out all candidate pairs over
// GF(p).  Used to derive the expected modulus for small fields.
bool oracle_irreducible(const std::vector<int>& f, int p) {
    int k = static_cast<int>(f.size()) - 1;
    auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        return c;
    };
    for (int dg = 1; dg < k; ++dg) {
        int dh = k - dg;
        long long ng = 1, nh = 1;
        for (int i = 0; i < dg; ++i) ng *= p;
        for (int i = 0; i < dh; ++i) nh *= p;
        for (long long mg = 0; mg < ng; ++mg) {
            std::vector<int> g(dg + 1, 1);
            long long t = mg;
            for (int i = 0; i < dg; ++i, t /= p) g[i] = static_cast<int>(t % p);
            for (long long mh = 0; mh < nh; ++mh) {
                std::vector<int> h(dh + 1, 1);
                long long u = mh;
                for (int i = 0; i < dh; ++i, u /= p) h[i] = static_cast<int>(u % p);
                if (mul(g, h) == f) return false;
            }
        }
    }
    return true;
}

// lexicographically smallest (low-degree-first) monic irreducible of degree
// k over GF(p), found by the oracle above
std::vector<int> oracle_smallest_modulus(int p, int k) {
    long long n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    // lex order: coefficient c0 is the most significant position
    std::vector<int> best;
    for (long long m = 0; m < n; ++m) {
        std::vector<int> f(k + 1, 1);
        long long t = m;
        for (int i = k - 1; i >= 0; --i, t /= p) f[i] = static_cast<int>(t % p);
        if (oracle_irreducible(f, p)) return f;
    }
    return best;
}

}  // namespace

TEST_CASE("prime and prime power helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(6));
    CHECK(prime_power(8) == std::make_pair(2, 3));
    CHECK(prime_power(9) == std::make_pair(3, 2));
    CHECK(prime_power(7) == std::make_pair(7, 1));
    CHECK_FALSE(prime_power(6).has_value());
    CHECK_FALSE(prime_power(12).has_value());
    CHECK_FALSE(prime_power(1).has_value());
}

TEST_CASE("field construction picks the smallest irreducible modulus") {
    GaloisField f5(5, 1);
    CHECK(f5.q() == 5);

    GaloisField f4(2, 2);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // t^2 + t + 1
    CHECK(f4.modulus() == oracle_smallest_modulus(2, 2));

    for (auto [p, k] : {std::pair{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
        GaloisField f(p, k);
        CHECK(f.modulus() == oracle_smallest_modulus(p, k));
    }

    CHECK_THROWS_AS(GaloisField(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(2, 30), std::length_error);
}

TEST_CASE("arithmetic examples") {
    GaloisField f5(5, 1);
    CHECK(f5.mul(2, 3) == 1);

    GaloisField f4(2, 2);
    int theta = f4.element({0, 1});
    CHECK(theta == 2);
    CHECK(f4.mul(theta, theta) == f4.element({1, 1}));  // t^2 = t + 1

    GaloisField f7(7, 1);
    CHECK(f7.inv(3) == 5);
    CHECK_THROWS_AS(f7.inv(0), std::domain_error);
    CHECK_THROWS_AS(f7.div(1, 0), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively for small q") {
    for (auto [p, k] : {std::pair{2, 2}, {3, 1}, {2, 3}, {3, 2}, {7, 1}}) {
        GaloisField f(p, k);
        const int q = f.q();
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c)
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

TEST_CASE("discrete log is a bijection with gen^log(x) = x") {
    for (auto [p, k] : {std::pair{5, 1}, {2, 3}, {3, 2}, {13, 1}}) {
        GaloisField f(p, k);
        std::set<int> logs;
        for (int x = 1; x < f.q(); ++x) {
            CHECK(f.exp(f.log(x)) == x);
            logs.insert(f.log(x));
        }
        CHECK(static_cast<int>(logs.size()) == f.q() - 1);
        CHECK(f.log(1) == 0);
    }
}

TEST_CASE("square detection") {
    GaloisField f7(7, 1);
    std::set<int> squares;
    for (int y = 1; y < 7; ++y) squares.insert(f7.mul(y, y));
    CHECK(squares == std::set<int>{1, 2, 4});
    for (int x = 1; x < 7; ++x) CHECK(f7.is_square(x) == (squares.count(x) > 0));

    GaloisField f5(5, 1);
    CHECK(f5.is_square(4));
    CHECK_THROWS_AS(f5.is_square(0), std::domain_error);

    GaloisField f4(2, 2);
    CHECK(f4.is_square(f4.element({0, 1})));

    // counts: (q-1)/2 squares for odd q, all for even q
    for (auto [p, k] : {std::pair{3, 2}, {7, 1}, {11, 1}}) {
        GaloisField f(p, k);
        int n = 0;
        for (int x = 1; x < f.q(); ++x) n += f.is_square(x);
        CHECK(n == (f.q() - 1) / 2);
    }
    GaloisField f8(2, 3);
    int n8 = 0;
    for (int x = 1; x < 8; ++x) n8 += f8.is_square(x);
    CHECK(n8 == 7);
}

TEST_CASE("quadratic extension embeds the base field") {
    for (auto [p, k] : {std::pair{5, 1}, {2, 2}, {3, 1}, {7, 1}, {3, 2}, {13, 1}}) {
        GaloisField f(p, k);
        QuadExt e(f);
        const int q = f.q();
        CHECK(e.q2() == q * q);
        // the embedding is a field homomorphism (exhaustive at this scale)
        for (int a = 0; a < q; ++a) {
            CHECK(e.in_base(e.embed(a)));
            for (int b = 0; b < q; ++b) {
                CHECK(e.add(e.embed(a), e.embed(b)) == e.embed(f.add(a, b)));
                CHECK(e.mul(e.embed(a), e.embed(b)) == e.embed(f.mul(a, b)));
            }
        }
        // frobenius fixes exactly the base field
        for (int x = 1; x < e.q2(); ++x) CHECK((e.frobenius(x) == x) == e.in_base(x));
    }
}

TEST_CASE("coset log") {
    GaloisField f5(5, 1);
    QuadExt e(f5);
    const int q = 5;
    CHECK(e.coset_log(1) == 0);
    CHECK(e.coset_log(e.generator()) == 1);
    // embedded field elements all land in coset 0, and nothing else does
    for (int x = 1; x < e.q2(); ++x) CHECK((e.coset_log(x) == 0) == (e.in_base(x)));
    // multiplicativity mod q+1
    for (int x = 1; x < e.q2(); ++x)
        for (int y = 1; y < e.q2(); y += 3)
            CHECK(e.coset_log(e.mul(x, y)) == (e.coset_log(x) + e.coset_log(y)) % (q + 1));
    CHECK_THROWS_AS(e.coset_log(0), std::domain_error);
}
