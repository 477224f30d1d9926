// Double-double arithmetic (~31-digit precision) for the test-suite oracle.
// Self-contained: error-free transforms via FMA, renormalized compound ops,
// and the handful of transcendentals the Mellin-Barnes integrator needs.
#ifndef FSORELAY_TESTS_ORACLE_DD_HPP
#define FSORELAY_TESTS_ORACLE_DD_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace oracle {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

namespace detail {

inline dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}
inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
    const double s = a + b;
    return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline dd dd_from(double a) { return {a, 0.0}; }

inline dd add(const dd& a, const dd& b) {
    dd s = detail::two_sum(a.hi, b.hi);
    dd t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}
inline dd neg(const dd& a) { return {-a.hi, -a.lo}; }
inline dd sub(const dd& a, const dd& b) { return add(a, neg(b)); }
inline dd mul(const dd& a, const dd& b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}
inline dd div(const dd& a, const dd& b) {
    const double q1 = a.hi / b.hi;
    dd r = sub(a, mul(dd_from(q1), b));
    const double q2 = r.hi / b.hi;
    r = sub(r, mul(dd_from(q2), b));
    const double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return add(q, dd_from(q3));
}

inline dd add(const dd& a, double b) { return add(a, dd_from(b)); }
inline dd sub(const dd& a, double b) { return sub(a, dd_from(b)); }
inline dd mul(const dd& a, double b) { return mul(a, dd_from(b)); }
inline dd div(const dd& a, double b) { return div(a, dd_from(b)); }

inline bool less(const dd& a, const dd& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}

inline dd dd_sqrt(const dd& a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    const double s = std::sqrt(a.hi);
    const dd e = div(sub(a, mul(dd_from(s), dd_from(s))), 2.0 * s);
    return add(dd_from(s), e);
}

// Constants (hi/lo split of the 50-digit values).
inline constexpr dd kPi{0x1.921fb54442d18p+1, 0x1.1a62633145c07p-53};
inline constexpr dd kTwoPi{0x1.921fb54442d18p+2, 0x1.1a62633145c07p-52};
inline constexpr dd kHalfPi{0x1.921fb54442d18p+0, 0x1.1a62633145c07p-54};
inline constexpr dd kLn2{0x1.62e42fefa39efp-1, 0x1.abc9e3b39803fp-56};
inline constexpr dd kHalfLn2Pi{0x1.d67f1c864beb5p-1, -0x1.65b5a1b7ff5dfp-55};

namespace detail {

inline const dd* inv_factorials() {  // 1/k! for k = 0..31
    static const auto table = [] {
        std::array<dd, 32> t{};
        t[0] = dd_from(1.0);
        for (int k = 1; k < 32; ++k) t[k] = div(t[k - 1], (double)k);
        return t;
    }();
    return table.data();
}

}  // namespace detail

inline dd dd_exp(const dd& a) {
    if (a.hi > 709.0) return {HUGE_VAL, 0.0};
    if (a.hi < -800.0) return {0.0, 0.0};
    const double m = std::round(a.hi / kLn2.hi);
    dd r = sub(a, mul(kLn2, m));
    // Taylor on |r| <= ln2/2 with tabulated 1/k!
    const dd* inv_fact = detail::inv_factorials();
    dd sum = add(dd_from(1.0), r);
    dd p = r;
    for (int k = 2; k < 32; ++k) {
        p = mul(p, r);
        const dd term = mul(p, inv_fact[k]);
        sum = add(sum, term);
        if (std::fabs(term.hi) < 1e-36 * std::fabs(sum.hi)) break;
    }
    const int im = (int)m;
    return {std::ldexp(sum.hi, im), std::ldexp(sum.lo, im)};
}

inline dd dd_log(const dd& a) {
    // Newton iteration on y -> y + a*exp(-y) - 1 from the double seed.
    dd y = dd_from(std::log(a.hi));
    for (int it = 0; it < 2; ++it) {
        const dd e = dd_exp(neg(y));
        y = add(y, sub(mul(a, e), dd_from(1.0)));
    }
    return y;
}

namespace detail {

inline dd sin_taylor(const dd& r) {
    const dd* inv_fact = inv_factorials();
    const dd r2 = mul(r, r);
    dd p = r, sum = r;
    for (int k = 3; k < 32; k += 2) {
        p = mul(p, r2);
        dd term = mul(p, inv_fact[k]);
        if (k % 4 == 3) term = neg(term);
        sum = add(sum, term);
        if (std::fabs(term.hi) < 1e-36 * (std::fabs(sum.hi) + 1e-300)) break;
    }
    return sum;
}
inline dd cos_taylor(const dd& r) {
    const dd* inv_fact = inv_factorials();
    const dd r2 = mul(r, r);
    dd p = dd_from(1.0), sum = dd_from(1.0);
    for (int k = 2; k < 32; k += 2) {
        p = mul(p, r2);
        dd term = mul(p, inv_fact[k]);
        if (k % 4 == 2) term = neg(term);
        sum = add(sum, term);
        if (std::fabs(term.hi) < 1e-36 * (std::fabs(sum.hi) + 1e-300)) break;
    }
    return sum;
}

}  // namespace detail

inline void dd_sincos(const dd& a, dd& s, dd& c) {
    const double m = std::round(a.hi / kTwoPi.hi);
    dd r = sub(a, mul(kTwoPi, m));
    const double q = std::round(r.hi / kHalfPi.hi);
    r = sub(r, mul(kHalfPi, q));
    const int quadrant = ((int)q % 4 + 4) % 4;
    const dd sr = detail::sin_taylor(r), cr = detail::cos_taylor(r);
    switch (quadrant) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = neg(sr); break;
        case 2: s = neg(sr); c = neg(cr); break;
        default: s = neg(cr); c = sr; break;
    }
}

inline dd dd_atan2(const dd& y, const dd& x) {
    dd th = dd_from(std::atan2(y.hi, x.hi));
    const dd r = dd_sqrt(add(mul(x, x), mul(y, y)));
    for (int it = 0; it < 2; ++it) {
        dd s, c;
        dd_sincos(th, s, c);
        // th += sin(phi - th) = (y cos th - x sin th)/r
        th = add(th, div(sub(mul(y, c), mul(x, s)), r));
    }
    return th;
}

}  // namespace oracle

#endif
