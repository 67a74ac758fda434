#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace derange {

bool is_prime(long long n);

// q -> (p, k) with q = p^k, or nullopt if q is not a prime power (or < 2)
std::optional<std::pair<int, int>> prime_power(long long q);

std::vector<long long> prime_factors(long long n);  // distinct primes, ascending

// GF(p^k) in the polynomial basis: an element with coefficients
// c0..c_{k-1} (low degree first) is encoded as the integer sum ci * p^i.
// Code order is the fixed enumeration order used everywhere: point labels,
// modulus selection, group enumeration, report listings.
//
// The modulus is the lexicographically smallest monic irreducible polynomial
// of degree k over GF(p), coefficients compared low-degree-first.
class GaloisField {
public:
    GaloisField(int p, int k, long long size_limit = kDefaultSizeLimit);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    // k+1 coefficients, low degree first, monic
    const std::vector<int>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int mul(int a, int b) const;
    int div(int a, int b) const;  // throws std::domain_error on b == 0
    int neg(int a) const;
    int inv(int a) const;  // throws std::domain_error on a == 0
    int pow(int a, long long e) const;

    int generator() const { return generator_; }
    int log(int a) const;            // discrete log base generator(), a != 0
    int exp(long long e) const;      // generator()^e
    bool is_square(int a) const;     // a != 0; always true for p == 2

    std::vector<int> coeffs(int a) const;
    int element(const std::vector<int>& coeffs) const;

    static constexpr long long kDefaultSizeLimit = 4096;

private:
    int p_, k_, q_;
    std::vector<int> modulus_;
    // t^k reduced mod the modulus, as an element code (k-digit base-p number)
    int tk_reduced_;
    int generator_;
    std::vector<int> log_;  // log_[0] unused
    std::vector<int> exp_;

    int mul_raw(int a, int b) const;
};

// GF(q^2) as GF(q)[t]/(m(t)) for the lexicographically smallest monic
// irreducible quadratic m over GF(q).  An element lo + hi*t is encoded as
// lo + hi*q, so codes [0, q) are exactly the embedded base field.
class QuadExt {
public:
    explicit QuadExt(const GaloisField& base);

    const GaloisField& base() const { return *base_; }
    int q() const { return base_->q(); }
    int q2() const { return q2_; }

    // 3 coefficients over base-field codes, low degree first, monic
    const std::vector<int>& modulus() const { return modulus_; }

    int embed(int a) const { return a; }
    bool in_base(int x) const { return x < q(); }
    int lo(int x) const { return x % q(); }
    int hi(int x) const { return x / q(); }
    int make(int lo, int hi) const { return lo + hi * q(); }

    int add(int x, int y) const;
    int sub(int x, int y) const;
    int mul(int x, int y) const;
    int neg(int x) const;
    int inv(int x) const;  // throws std::domain_error on x == 0
    int pow(int x, long long e) const;
    int frobenius(int x) const { return pow(x, q()); }

    int generator() const { return generator_; }
    int log(int x) const;  // in [0, q^2 - 1), x != 0

    // log(x) mod (q+1); constant on cosets x * GF(q)^*, zero iff x is in
    // the embedded GF(q)^*.  Throws std::domain_error on x == 0.
    int coset_log(int x) const;

private:
    const GaloisField* base_;
    int q2_;
    std::vector<int> modulus_;
    int generator_;
    std::vector<int> log_;
    std::vector<int> exp_;
};

}  // namespace derange
