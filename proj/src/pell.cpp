#include "pellkit/pell.hpp"

#include <algorithm>
#include <cmath>

#include "pellkit/arith.hpp"

namespace pellkit::pell {

bool is_square(i64 n) {
    if (n < 0) return false;
    return arith::is_square(static_cast<arith::u64>(n));
}

namespace {

i64 floor_sqrt(i64 n) { return static_cast<i64>(arith::isqrt(static_cast<arith::u64>(n))); }

void check_d(i64 d) {
    if (d < 2) throw domain_error("d must be >= 2");
    if (is_square(d)) throw domain_error("d must not be a perfect square");
}

// One step of the (P, Q) recurrence for sqrt(d); returns the partial quotient.
struct CfState {
    i64 d, a0, p, q;
    i64 step() {
        i64 a = (a0 + p) / q;
        i64 p2 = a * q - p;
        i64 q2 = (d - p2 * p2) / q;
        if (q2 * q != d - p2 * p2) throw internal_error("cf: inexact division");
        p = p2;
        q = q2;
        return a;
    }
};

}  // namespace

ContinuedFractionExpansion cf_expand(i64 d) {
    check_d(d);
    ContinuedFractionExpansion out;
    out.d = d;
    out.a0 = floor_sqrt(d);
    CfState st{d, out.a0, 0, 1};
    (void)st.step();  // consume a0; state is now (P1, Q1)
    i64 p1 = st.p, q1 = st.q;
    do {
        out.period.push_back(st.step());
    } while (st.p != p1 || st.q != q1);
    // The textbook structure of the period, kept as assertions.
    if (out.period.back() != 2 * out.a0)
        throw internal_error("cf_expand: terminator != 2*a0");
    for (std::size_t i = 0; i + 2 < out.period.size(); ++i)
        if (out.period[i] != out.period[out.period.size() - 2 - i])
            throw internal_error("cf_expand: period block not a palindrome");
    return out;
}

bool negative_pell_solvable(i64 d) {
    check_d(d);
    i64 a0 = floor_sqrt(d);
    CfState st{d, a0, 0, 1};
    (void)st.step();
    i64 p1 = st.p, q1 = st.q;
    std::size_t len = 0;
    do {
        (void)st.step();
        ++len;
    } while (st.p != p1 || st.q != q1);
    return len % 2 == 1;
}

PellSolution fundamental_unit(i64 d) {
    check_d(d);
    i64 a0 = floor_sqrt(d);
    CfState st{d, a0, 0, 1};
    (void)st.step();
    i64 p1 = st.p, q1 = st.q;
    // convergents of [a0; a1, a2, ...]
    mpz_class xprev = 1, x = a0, yprev = 0, y = 1;
    std::size_t len = 0;
    do {
        i64 a = st.step();
        ++len;
        if (st.p == p1 && st.q == q1) break;  // a was the terminator a_l
        mpz_class x2 = a * x + xprev;
        mpz_class y2 = a * y + yprev;
        xprev = x; x = x2;
        yprev = y; y = y2;
    } while (true);
    PellSolution out;
    out.d = d;
    out.x = x;
    out.y = y;
    out.norm = (len % 2 == 1) ? -1 : 1;
    out.fundamental = true;
    if (out.x * out.x - d * out.y * out.y != out.norm)
        throw internal_error("fundamental_unit: convergent does not solve Pell");
    return out;
}

PellSolution fundamental_solution_plus(i64 d) {
    PellSolution u = fundamental_unit(d);
    if (u.norm == 1) return u;
    PellSolution out;
    out.d = d;
    out.x = u.x * u.x + d * u.y * u.y;
    out.y = 2 * u.x * u.y;
    out.norm = 1;
    out.fundamental = true;
    return out;
}

std::optional<RDForm> rd_recognize(i64 d) {
    check_d(d);
    i64 fl = floor_sqrt(d);
    for (i64 a : {fl, fl + 1}) {
        i64 r = d - a * a;
        if (r == 0) continue;
        i64 ar = r < 0 ? -r : r;
        if (ar <= a && (2 * a) % ar == 0) return RDForm{d, a, r};
    }
    return std::nullopt;
}

PellSolution rd_unit(const RDForm& form) {
    i64 d = form.d, a = form.a, r = form.r;
    if (d != a * a + r || r == 0) throw domain_error("rd_unit: not an RD form");
    i64 ar = r < 0 ? -r : r;
    PellSolution out;
    out.d = d;
    out.fundamental = false;
    if (ar == 1) {
        out.x = a;
        out.y = 1;
        out.norm = static_cast<int>(-r);
    } else {
        if ((2 * a) % ar != 0 || (2 * a * a + r) % ar != 0)
            throw internal_error("rd_unit: r | 2a violated");
        out.x = (2 * a * a + r) / ar;
        out.y = 2 * a / ar;
        out.norm = 1;
    }
    if (out.x * out.x - d * out.y * out.y != out.norm)
        throw internal_error("rd_unit: result is not a solution");
    return out;
}

ContinuedFractionExpansion rd_cf_closed_form(RDFamily family, i64 k, i64 a) {
    if (k < 1 || a < 1) throw domain_error("rd_cf_closed_form: parameters must be positive");
    ContinuedFractionExpansion out;
    switch (family) {
        case RDFamily::kSqPlusK:
            out.d = k * k + k;
            out.a0 = k;
            out.period = {2, 2 * k};
            break;
        case RDFamily::kSqPlus2K:
            out.d = k * k + 2 * k;
            out.a0 = k;
            out.period = {1, 2 * k};
            break;
        case RDFamily::aSqKSqPlusA:
            out.d = a * a * k * k + a;
            out.a0 = a * k;
            out.period = {2 * k, 2 * a * k};
            break;
        case RDFamily::aSqKSqPlus2A:
            out.d = a * a * k * k + 2 * a;
            out.a0 = a * k;
            out.period = {k, 2 * a * k};
            break;
    }
    if (out.d < 2 || is_square(out.d)) throw domain_error("rd_cf_closed_form: d degenerate");
    // a 2-term period (x, x) is the 1-term period (x) written twice
    if (out.period[0] == out.period[1]) out.period.pop_back();
    return out;
}

PellSolution brahmagupta_lift(const mpz_class& a, const mpz_class& b, i64 k, i64 n) {
    if (k == 0) throw domain_error("brahmagupta_lift: k = 0");
    if (a * a - n * b * b != k) throw domain_error("brahmagupta_lift: a^2 - n b^2 != k");
    bool small_k = (k == 1 || k == -1 || k == 2 || k == -2);
    if (!small_k) {
        if (n % k != 0 || !arith::is_squarefree(static_cast<arith::u64>(n)))
            throw domain_error("brahmagupta_lift: k not in {+-1,+-2} and k does not divide squarefree n");
    }
    mpz_class xn = 2 * a * b;
    mpz_class yn = a * a + n * b * b;
    if (xn % k != 0 || yn % k != 0)
        throw domain_error("brahmagupta_lift: non-integral division");
    PellSolution out;
    out.d = n;
    out.x = abs(mpz_class(yn / k));
    out.y = abs(mpz_class(xn / k));
    out.norm = 1;
    if (out.x * out.x - n * out.y * out.y != 1)
        throw internal_error("brahmagupta_lift: lifted pair is not a +1 solution");
    return out;
}

PellSolution solution_power(const PellSolution& fund, unsigned m) {
    if (m < 1) throw domain_error("solution_power: m >= 1 required");
    mpz_class x = fund.x, y = fund.y;
    for (unsigned i = 1; i < m; ++i) {
        mpz_class x2 = x * fund.x + fund.d * y * fund.y;
        mpz_class y2 = x * fund.y + y * fund.x;
        x = x2;
        y = y2;
    }
    PellSolution out;
    out.d = fund.d;
    out.x = x;
    out.y = y;
    out.norm = (fund.norm == -1 && m % 2 == 1) ? -1 : 1;
    out.fundamental = (m == 1) && fund.fundamental;
    return out;
}

OrderUnit order_unit(i64 disc) {
    if (disc < 5) throw domain_error("order_unit: disc must be a positive nonsquare discriminant");
    i64 m4 = disc % 4;
    if (m4 != 0 && m4 != 1) throw domain_error("order_unit: disc must be 0 or 1 mod 4");
    if (is_square(disc)) throw domain_error("order_unit: disc is a square");
    OrderUnit out;
    out.disc = disc;
    if (m4 == 0) {
        PellSolution u = fundamental_unit(disc / 4);
        out.t = 2 * u.x;
        out.u = u.y;
        out.norm = u.norm;
        return out;
    }
    PellSolution base = fundamental_unit(disc);
    out.t = 2 * base.x;
    out.u = 2 * base.y;
    out.norm = base.norm;
    // The unit group of Z[sqrt(disc)] has index 1 or 3 in the maximal
    // order's; a proper cube root (t + u*sqrt(disc))/2 satisfies
    //   disc*u^3 + 3*norm*u = 2*y,  t^2 = disc*u^2 + 4*norm.
    mpz_class target = 2 * base.y;
    mpz_class u_guess;
    mpz_class num = target / disc;
    mpz_root(u_guess.get_mpz_t(), num.get_mpz_t(), 3);
    for (mpz_class u = std::max(mpz_class(u_guess - 2), mpz_class(1)); u <= u_guess + 2; ++u) {
        if (disc * u * u * u + 3 * out.norm * u != target) continue;
        mpz_class t2 = disc * u * u + 4 * out.norm;
        if (t2 <= 0 || !mpz_perfect_square_p(t2.get_mpz_t())) continue;
        mpz_class t = sqrt(t2);
        // confirm ((t + u sqrt(disc))/2)^3 = x + y sqrt(disc)
        if (t * (t * t + 3 * disc * u * u) != 8 * base.x) continue;
        out.t = t;
        out.u = u;
        break;
    }
    if (out.t * out.t - disc * out.u * out.u != 4 * out.norm)
        throw internal_error("order_unit: norm equation violated");
    return out;
}

}  // namespace pellkit::pell
