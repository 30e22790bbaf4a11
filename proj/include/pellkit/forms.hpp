#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <vector>

#include "pellkit/errors.hpp"

namespace pellkit::forms {

using i64 = std::int64_t;

/// Primitive integral binary quadratic form a x^2 + b xy + c y^2.
struct Qform {
    i64 a = 0, b = 0, c = 0;
    auto operator<=>(const Qform&) const = default;
};

i64 disc_of(const Qform& f);
bool is_reduced(const Qform& f, i64 disc);
Qform principal_form(i64 disc);

/// Reduce to a reduced form in the same proper equivalence class.
Qform reduce(Qform f, i64 disc);

/// All reduced primitive forms of the given fundamental discriminant.
std::vector<Qform> enumerate_reduced(i64 disc);

/// disc > 0: rho-operator cycles partitioning the reduced forms;
/// one cycle per proper class.
std::vector<std::vector<Qform>> rho_cycles(i64 disc);

/// Canonical representative of the proper (narrow) class of f.
Qform class_key(const Qform& f, i64 disc);

/// One representative per proper class.
std::vector<Qform> class_representatives(i64 disc);

/// Gauss composition (Dirichlet united forms), reduced output.
Qform compose(const Qform& f, const Qform& g, i64 disc);
Qform compose_pow(Qform f, unsigned long e, i64 disc);

/// h^+(disc) for disc > 0: number of rho cycles.
i64 class_number_strict(i64 disc);

/// Wide class number h(disc); for disc > 0 decided by the unit norm.
i64 class_number_wide(i64 disc);

struct TwoPart {
    int e2 = 0, e4 = 0, e8 = 0;
};

/// Ranks of C/C^2, C^2/C^4, C^4/C^8 for C = Cl^+(disc), by building the
/// class group by composition.  Guard: h^+ <= 10^4.
TwoPart class_group_structure_2part(i64 disc);

/// Invariant factors d_1 | d_2 | ... of Cl^+(disc), listed descending.
std::vector<i64> invariant_factors(i64 disc);

}  // namespace pellkit::forms
