#include "derange/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace derange {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<int, int>> prime_power(long long q) {
    if (q < 2) return std::nullopt;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        int k = 0;
        long long m = q;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m != 1) return std::nullopt;
        return std::make_pair(static_cast<int>(p), k);
    }
    return std::make_pair(static_cast<int>(q), 1);  // q itself prime
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first, used only
// during modulus selection.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

Poly poly_mod(Poly a, const Poly& b, int p) {
    int db = poly_deg(b);
    for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
        // b is monic in every call site
        int c = a[da];
        for (int i = 0; i <= db; ++i) {
            a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p) % p;
        }
    }
    return a;
}

// Irreducibility over GF(p) by root check (degree <= 3) plus trial division
// by all monic polynomials of degree 2..deg/2.
bool poly_irreducible(const Poly& f, int p) {
    int d = poly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int r = 0; r < p; ++r) {
        long long v = 0, x = 1;
        for (int i = 0; i <= d; ++i) {
            v = (v + f[i] * x) % p;
            x = (x * r) % p;
        }
        if (v == 0) return false;
    }
    if (d <= 3) return true;
    for (int dd = 2; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long m = 0; m < count; ++m) {
            Poly g(dd + 1, 0);
            g[dd] = 1;
            long long t = m;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            if (poly_deg(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(int p, int k, long long size_limit) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("GaloisField: p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("GaloisField: k must be positive");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > size_limit) throw std::length_error("GaloisField: p^k exceeds size limit");
    }
    q_ = static_cast<int>(q);

    // Lexicographically smallest monic irreducible modulus, coefficients
    // compared low-degree-first (c0 is the most significant position).
    modulus_.assign(k + 1, 0);
    modulus_[k] = 1;
    bool found = false;
    std::vector<int> c(k, 0);
    while (!found) {
        for (int i = 0; i < k; ++i) modulus_[i] = c[i];
        if (poly_irreducible(modulus_, p)) {
            found = true;
            break;
        }
        int i = k - 1;  // low-degree-first lex order: increment the last slot
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    if (!found) throw std::logic_error("GaloisField: no irreducible modulus found");

    // t^k = -(c0 + c1 t + ... + c_{k-1} t^{k-1})
    int tk = 0, pw = 1;
    for (int i = 0; i < k; ++i) {
        tk += ((p - modulus_[i]) % p) * pw;
        pw *= p;
    }
    tk_reduced_ = tk;

    // generator: smallest code of multiplicative order q-1
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    auto factors = prime_factors(q_ - 1);
    generator_ = 0;
    for (int g = 1; g < q_ && !generator_; ++g) {
        bool ok = true;
        for (long long f : factors)
            if (pow(g, (q_ - 1) / f) == 1) {
                ok = false;
                break;
            }
        if (ok) generator_ = g;
    }
    int x = 1;
    for (int e = 0; e < q_ - 1; ++e) {
        exp_[e] = x;
        log_[x] = e;
        x = mul_raw(x, generator_);
    }
}

int GaloisField::mul_raw(int a, int b) const {
    if (k_ == 1) return static_cast<int>((static_cast<long long>(a) * b) % p_);
    // schoolbook product of the coefficient vectors, reducing t^k on the fly
    std::vector<int> prod(2 * k_ - 1, 0);
    {
        int ai = a;
        for (int i = 0; i < k_; ++i, ai /= p_) {
            int ca = ai % p_;
            if (!ca) continue;
            int bj = b;
            for (int j = 0; j < k_; ++j, bj /= p_) {
                prod[i + j] = (prod[i + j] + ca * (bj % p_)) % p_;
            }
        }
    }
    // reduce degrees k..2k-2 using t^k = tk_reduced_
    std::vector<int> tk(k_);
    {
        int t = tk_reduced_;
        for (int i = 0; i < k_; ++i, t /= p_) tk[i] = t % p_;
    }
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        // t^d = t^(d-k) * t^k
        for (int i = 0; i < k_; ++i) prod[d - k_ + i] = (prod[d - k_ + i] + c * tk[i]) % p_;
        // t^k piece may itself still sit at degree >= k_ only if d-k_+i >= k_,
        // which the loop order (d descending) handles.
    }
    int code = 0, pw = 1;
    for (int i = 0; i < k_; ++i) {
        code += prod[i] * pw;
        pw *= p_;
    }
    return code;
}

int GaloisField::add(int a, int b) const {
    if (k_ == 1) return (a + b) % p_;
    int code = 0, pw = 1;
    for (int i = 0; i < k_; ++i) {
        code += ((a % p_) + (b % p_)) % p_ * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return code;
}

int GaloisField::neg(int a) const {
    if (k_ == 1) return (p_ - a) % p_;
    int code = 0, pw = 1;
    for (int i = 0; i < k_; ++i) {
        code += ((p_ - (a % p_)) % p_) * pw;
        a /= p_;
        pw *= p_;
    }
    return code;
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::mul(int a, int b) const { return mul_raw(a, b); }

int GaloisField::inv(int a) const {
    if (a == 0) throw std::domain_error("GaloisField: division by zero");
    if (a == 1) return 1;
    return exp_[q_ - 1 - log_[a]];
}

int GaloisField::div(int a, int b) const { return mul(a, inv(b)); }

int GaloisField::pow(int a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("GaloisField: division by zero");
        return e == 0 ? 1 : 0;
    }
    long long m = q_ - 1;
    e %= m;
    if (e < 0) e += m;
    int r = 1, base = a;
    while (e) {
        if (e & 1) r = mul_raw(r, base);
        base = mul_raw(base, base);
        e >>= 1;
    }
    return r;
}

int GaloisField::log(int a) const {
    if (a == 0) throw std::domain_error("GaloisField: log of zero");
    return log_[a];
}

int GaloisField::exp(long long e) const {
    long long m = q_ - 1;
    e %= m;
    if (e < 0) e += m;
    return exp_[e];
}

bool GaloisField::is_square(int a) const {
    if (a == 0) throw std::domain_error("GaloisField: square test on zero");
    if (p_ == 2) return true;  // squaring is a bijection
    return log_[a] % 2 == 0;
}

std::vector<int> GaloisField::coeffs(int a) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i, a /= p_) c[i] = a % p_;
    return c;
}

int GaloisField::element(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != k_) throw std::invalid_argument("GaloisField: bad coefficient count");
    int code = 0, pw = 1;
    for (int i = 0; i < k_; ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= p_) throw std::invalid_argument("GaloisField: coefficient out of range");
        code += coeffs[i] * pw;
        pw *= p_;
    }
    return code;
}

std::string GaloisField::modulus_string() const {
    std::string s = "t^" + std::to_string(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        if (!modulus_[i]) continue;
        s += "+";
        if (i == 0 || modulus_[i] != 1) s += std::to_string(modulus_[i]);
        if (i >= 1) s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s;
}

QuadExt::QuadExt(const GaloisField& base) : base_(&base) {
    int q = base.q();
    q2_ = q * q;

    // smallest (c0, c1) in code order with t^2 + c1 t + c0 irreducible over
    // GF(q); degree 2, so irreducible == no root
    modulus_.assign(3, 0);
    modulus_[2] = 1;
    bool found = false;
    for (int c0 = 0; c0 < q && !found; ++c0) {
        for (int c1 = 0; c1 < q && !found; ++c1) {
            bool has_root = false;
            for (int x = 0; x < q && !has_root; ++x) {
                int v = base.add(base.add(base.mul(x, x), base.mul(c1, x)), c0);
                has_root = (v == 0);
            }
            if (!has_root) {
                modulus_[0] = c0;
                modulus_[1] = c1;
                found = true;
            }
        }
    }
    if (!found) throw std::logic_error("QuadExt: no irreducible quadratic found");

    auto factors = prime_factors(static_cast<long long>(q2_) - 1);
    generator_ = 0;
    for (int g = 1; g < q2_ && !generator_; ++g) {
        bool ok = true;
        for (long long f : factors)
            if (pow(g, (static_cast<long long>(q2_) - 1) / f) == 1) {
                ok = false;
                break;
            }
        if (ok) generator_ = g;
    }

    log_.assign(q2_, 0);
    exp_.assign(q2_ - 1, 0);
    int x = 1;
    for (int e = 0; e < q2_ - 1; ++e) {
        exp_[e] = x;
        log_[x] = e;
        x = mul(x, generator_);
    }
}

int QuadExt::add(int x, int y) const {
    const auto& F = *base_;
    return make(F.add(lo(x), lo(y)), F.add(hi(x), hi(y)));
}

int QuadExt::sub(int x, int y) const { return add(x, neg(y)); }

int QuadExt::neg(int x) const {
    const auto& F = *base_;
    return make(F.neg(lo(x)), F.neg(hi(x)));
}

int QuadExt::mul(int x, int y) const {
    const auto& F = *base_;
    int a = lo(x), b = hi(x), c = lo(y), d = hi(y);
    // (a + b t)(c + d t) with t^2 = -c0 - c1 t
    int bd = F.mul(b, d);
    int l = F.sub(F.mul(a, c), F.mul(bd, modulus_[0]));
    int h = F.sub(F.add(F.mul(a, d), F.mul(b, c)), F.mul(bd, modulus_[1]));
    return make(l, h);
}

int QuadExt::inv(int x) const {
    if (x == 0) throw std::domain_error("QuadExt: division by zero");
    if (x == 1) return 1;
    long long e = log_[x];
    return exp_[q2_ - 1 - e];
}

int QuadExt::pow(int x, long long e) const {
    if (x == 0) {
        if (e < 0) throw std::domain_error("QuadExt: division by zero");
        return e == 0 ? 1 : 0;
    }
    long long m = static_cast<long long>(q2_) - 1;
    e %= m;
    if (e < 0) e += m;
    int r = 1, base = x;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int QuadExt::log(int x) const {
    if (x == 0) throw std::domain_error("QuadExt: log of zero");
    return log_[x];
}

int QuadExt::coset_log(int x) const {
    if (x == 0) throw std::domain_error("QuadExt: coset log of zero");
    return log_[x] % (q() + 1);
}

}  // namespace derange
