#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "pellkit/errors.hpp"

namespace pellkit::pell {

using i64 = std::int64_t;

/// Periodic continued fraction of sqrt(d): [a0; period repeated].
struct ContinuedFractionExpansion {
    i64 d = 0;
    i64 a0 = 0;
    std::vector<i64> period;
    std::size_t period_length() const { return period.size(); }
    friend bool operator==(const ContinuedFractionExpansion&,
                           const ContinuedFractionExpansion&) = default;
};

/// Solution of x^2 - d y^2 = norm with nonnegative coordinates.
struct PellSolution {
    i64 d = 0;
    mpz_class x, y;
    int norm = 1;  // +1 or -1
    bool fundamental = false;
};

/// d = a^2 + r with 0 < |r| <= a and r | 2a (Richaud-Degert form).
struct RDForm {
    i64 d = 0;
    i64 a = 0;
    i64 r = 0;
};

/// Fundamental unit (t + u*sqrt(disc))/2 of the real quadratic order of
/// discriminant disc; t^2 - disc*u^2 = 4*norm.
struct OrderUnit {
    i64 disc = 0;
    mpz_class t, u;
    int norm = 1;
};

enum class RDFamily {
    kSqPlusK,       // d = k^2 + k,        sqrt(d) = [k; 2, 2k]
    kSqPlus2K,      // d = k^2 + 2k,       sqrt(d) = [k; 1, 2k]
    aSqKSqPlusA,    // d = a^2 k^2 + a,    sqrt(d) = [ak; 2k, 2ak]
    aSqKSqPlus2A,   // d = a^2 k^2 + 2a,   sqrt(d) = [ak; k, 2ak]
};

bool is_square(i64 n);

/// Expansion of sqrt(d) with the period detected by repetition of the
/// (P, Q) state; asserts the palindrome and a_l = 2*a0 invariants.
ContinuedFractionExpansion cf_expand(i64 d);

/// Parity of the period of sqrt(d), without materializing the expansion.
bool negative_pell_solvable(i64 d);

/// Solution of minimal y > 0 of x^2 - d y^2 = -1 if the period is odd,
/// else of x^2 - d y^2 = +1; from the convergent at the end of the period.
PellSolution fundamental_unit(i64 d);

/// Minimal solution of x^2 - d y^2 = +1.
PellSolution fundamental_solution_plus(i64 d);

std::optional<RDForm> rd_recognize(i64 d);
PellSolution rd_unit(const RDForm& form);

/// Closed-form expansion for one of the four listed families; k is the
/// family parameter, a the extra parameter of the last two families.
/// Degenerate parameters that collapse the 2-term period to a 1-term one
/// are canonicalized, so the result always equals cf_expand(d).
ContinuedFractionExpansion rd_cf_closed_form(RDFamily family, i64 k, i64 a = 1);

/// Brahmagupta composition: from a^2 - n b^2 = k produce (X, Y) with
/// X^2 - n Y^2 = 1, X = |(a^2 + n b^2)/k|, Y = |2ab/k|.
PellSolution brahmagupta_lift(const mpz_class& a, const mpz_class& b, i64 k, i64 n);

/// m-th power of a fundamental solution in Z[sqrt(d)].
PellSolution solution_power(const PellSolution& fund, unsigned m);

/// Fundamental unit of the order of discriminant disc > 0 (maximal order
/// when disc is fundamental); exact, via the cube-root refinement of the
/// Z[sqrt(m)] unit when disc = 1 mod 4.
OrderUnit order_unit(i64 disc);

}  // namespace pellkit::pell
