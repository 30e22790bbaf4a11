#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pellkit/errors.hpp"

namespace pellkit::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// ---- modular helpers ----------------------------------------------------

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 isqrt(u64 n);
bool is_square(u64 n);
// square root of a mod odd prime p, if one exists
std::optional<u64> sqrt_mod(u64 a, u64 p);

// ---- primes and factorization (desk scale: n < 2^64) --------------------

// deterministic Miller-Rabin, valid for all n < 2^64
bool is_prime(u64 n);

// prime factors with multiplicity, sorted; trial division + Pollard rho
std::vector<u64> factor(u64 n);
std::vector<u64> distinct_prime_factors(u64 n);
bool is_squarefree(u64 n);
u64 squarefree_part(u64 n);

// ---- residue symbols -----------------------------------------------------

// full Kronecker symbol (a/n); agrees with Legendre for odd prime n
int kronecker(i64 a, i64 n);

/// Rational quartic residue symbol (q/p)_4 in {-1,+1}.
///
/// For an odd prime p = 1 mod 4 with (q/p) = +1 this is the residue of
/// q^((p-1)/4) mod p.  The denominator p = 8 is allowed for primes
/// q = 1 mod 8, where (q/8)_4 = +1 iff q = 1 mod 16.
int quartic_symbol(i64 q, i64 p);

/// Quadratic character of the fundamental unit of the real quadratic order
/// of prime discriminant delta1 > 0, evaluated at a prime q with
/// (delta1/q) = +1; q = 8 selects the (-1)^(T/4) convention, which needs
/// delta1 = 1 mod 8.
///
/// For odd q the unit (T + U*sqrt(delta1))/2 is evaluated at a square root
/// s of delta1 mod q (we fix s <= q/2; for q = 1 mod 4 the answer does not
/// depend on the choice).
int unit_symbol(i64 delta1, i64 q);

// ---- discriminants -------------------------------------------------------

struct PrimeDiscriminant {
    i64 value = 0;          // -4, 8, -8, or (-1)^((p-1)/2) * p
    u64 ramified_prime = 0; // the unique prime dividing value
    friend bool operator==(const PrimeDiscriminant&, const PrimeDiscriminant&) = default;
};

struct DiscriminantFactorization {
    i64 d = 0;
    std::vector<PrimeDiscriminant> parts; // 2-part first, then odd primes ascending
    int n() const { return static_cast<int>(parts.size()); }
};

bool is_fundamental_discriminant(i64 d);
DiscriminantFactorization prime_discriminant_factorization(i64 d);
// true iff every prime discriminant part of d is positive
bool is_sum_of_two_squares_disc(i64 d);
// the squarefree radicand m of the discriminant: d itself if d is odd, d/4 otherwise
i64 discriminant_radicand(i64 d);

}  // namespace pellkit::arith
