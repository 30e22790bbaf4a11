#include "pellkit/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pellkit/pell.hpp"

namespace pellkit::arith {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128)a * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_square(u64 n) {
    u64 r = isqrt(n);
    return r * r == n;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    u64 q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    // deterministic witness set for n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    // Brent's cycle finding
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 ys = y, q = 1;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<u64> factor(u64 n) {
    if (n == 0) throw domain_error("factor: n must be positive");
    std::vector<u64> out;
    for (u64 p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) { out.push_back(p); n /= p; }
    }
    // wheel mod 30 up to 10^6, Pollard rho for the rest
    static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 p = 7;
    int w = 0;
    while (p <= 1000000 && p * p <= n) {
        while (n % p == 0) { out.push_back(p); n /= p; }
        p += wheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) {
        if (p * p > n) {
            out.push_back(n);
        } else {
            factor_rec(n, out);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    auto f = factor(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

bool is_squarefree(u64 n) {
    auto f = factor(n);
    return std::adjacent_find(f.begin(), f.end()) == f.end();
}

u64 squarefree_part(u64 n) {
    auto f = factor(n);
    u64 r = 1;
    for (std::size_t i = 0; i < f.size();) {
        std::size_t j = i;
        while (j < f.size() && f[j] == f[i]) ++j;
        if ((j - i) % 2 == 1) r *= f[i];
        i = j;
    }
    return r;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int t = 0;
        while (n % 2 == 0) { n /= 2; ++t; }
        i64 am8 = ((a % 8) + 8) % 8;
        if ((t & 1) && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    // Jacobi symbol (a/n) for odd n > 0
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

int quartic_symbol(i64 q, i64 p) {
    if (p == 8) {
        // (q/8)_4 for primes q = 1 mod 8
        i64 qm = ((q % 16) + 16) % 16;
        if (qm % 8 != 1 || !is_prime(static_cast<u64>(q)))
            throw domain_error("quartic_symbol: (q/8)_4 needs a prime q = 1 mod 8");
        return qm == 1 ? 1 : -1;
    }
    if (p < 3 || p % 4 != 1 || !is_prime(static_cast<u64>(p)))
        throw domain_error("quartic_symbol: p must be a prime = 1 mod 4 (or 8)");
    if (kronecker(q, p) != 1)
        throw domain_error("quartic_symbol: symbol undefined, (q/p) != +1");
    u64 up = static_cast<u64>(p);
    u64 uq = static_cast<u64>(((q % p) + p) % p);
    u64 r = powmod(uq, (up - 1) / 4, up);
    if (r == 1) return 1;
    if (r == up - 1) return -1;
    throw internal_error("quartic_symbol: q^((p-1)/4) not +-1 despite (q/p) = +1");
}

int unit_symbol(i64 delta1, i64 q) {
    if (delta1 <= 1) throw domain_error("unit_symbol: delta1 must be a positive prime discriminant");
    pell::OrderUnit eps = pell::order_unit(delta1);
    if (q == 8) {
        // (eps/8) = (-1)^(T/4) for integral eps = T + U*sqrt(delta1)
        if (delta1 % 8 != 1)
            throw domain_error("unit_symbol: modulus 8 needs delta1 = 1 mod 8");
        if (eps.t % 2 != 0)
            throw internal_error("unit_symbol: unit of delta1 = 1 mod 8 should be integral");
        mpz_class t_int = eps.t / 2;
        if (t_int % 4 != 0)
            throw internal_error("unit_symbol: T not divisible by 4 in the modulus-8 branch");
        return mpz_class(t_int / 4) % 2 == 0 ? 1 : -1;
    }
    if (q < 3 || q % 2 == 0 || !is_prime(static_cast<u64>(q)))
        throw domain_error("unit_symbol: q must be an odd prime or 8");
    if (kronecker(delta1, q) != 1)
        throw domain_error("unit_symbol: (delta1/q) != +1");
    u64 uq = static_cast<u64>(q);
    u64 s = *sqrt_mod(static_cast<u64>(delta1 % q), uq);
    if (s > uq - s) s = uq - s;  // fixed choice of the prime above q
    u64 t = mpz_fdiv_ui(eps.t.get_mpz_t(), uq);
    u64 u = mpz_fdiv_ui(eps.u.get_mpz_t(), uq);
    u64 inv2 = powmod(2, uq - 2, uq);
    u64 v = mulmod((t + mulmod(u, s, uq)) % uq, inv2, uq);
    if (v == 0) throw internal_error("unit_symbol: unit evaluated to 0 mod q");
    return kronecker(static_cast<i64>(v), q);
}

bool is_fundamental_discriminant(i64 d) {
    if (d == 0) return false;
    i64 m4 = ((d % 4) + 4) % 4;
    if (m4 == 1) return is_squarefree(static_cast<u64>(d < 0 ? -d : d));
    if (m4 != 0) return false;
    i64 m = d / 4;
    i64 mm4 = ((m % 4) + 4) % 4;
    if (mm4 != 2 && mm4 != 3) return false;
    return is_squarefree(static_cast<u64>(m < 0 ? -m : m));
}

DiscriminantFactorization prime_discriminant_factorization(i64 d) {
    if (!is_fundamental_discriminant(d))
        throw domain_error("prime_discriminant_factorization: d not a fundamental discriminant");
    DiscriminantFactorization out;
    out.d = d;
    if (d == 1) return out;
    u64 ad = static_cast<u64>(d < 0 ? -d : d);
    i64 odd_product = 1;
    std::vector<PrimeDiscriminant> odd_parts;
    for (u64 p : distinct_prime_factors(ad)) {
        if (p == 2) continue;
        i64 part = (p % 4 == 1) ? static_cast<i64>(p) : -static_cast<i64>(p);
        odd_parts.push_back({part, p});
        odd_product *= part;
    }
    if (d % 2 == 0) {
        i64 two_part = d / odd_product;
        if (two_part != -4 && two_part != 8 && two_part != -8)
            throw internal_error("prime_discriminant_factorization: bad 2-part");
        out.parts.push_back({two_part, 2});
    } else if (odd_product != d) {
        throw internal_error("prime_discriminant_factorization: parts do not multiply back");
    }
    out.parts.insert(out.parts.end(), odd_parts.begin(), odd_parts.end());
    return out;
}

bool is_sum_of_two_squares_disc(i64 d) {
    auto f = prime_discriminant_factorization(d);
    return std::all_of(f.parts.begin(), f.parts.end(),
                       [](const PrimeDiscriminant& p) { return p.value > 0; });
}

i64 discriminant_radicand(i64 d) {
    if (!is_fundamental_discriminant(d))
        throw domain_error("discriminant_radicand: d not fundamental");
    return d % 2 == 0 ? d / 4 : d;
}

}  // namespace pellkit::arith
