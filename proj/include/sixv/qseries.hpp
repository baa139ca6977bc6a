#pragma once

#include <vector>

#include "sixv/scalar.hpp"

namespace sixv {

// (x; q^2)_n.  Negative n goes through the reciprocal product
// (x; q^2)_{-n} = 1 / (x q^{-2n}; q^2)_n, which raises Resonance when a
// denominator factor vanishes within the guard.
template <class T>
std::complex<T> qpoch(std::complex<T> x, long n, const std::complex<T>& q) {
    using C = std::complex<T>;
    const C q2 = q * q;
    if (n >= 0) {
        C out(1);
        C xq = x;
        for (long j = 0; j < n; ++j) {
            out *= C(1) - xq;
            xq *= q2;
        }
        return out;
    }
    // (x;q^2)_{-m} with m = -n > 0
    const long m = -n;
    C out(1);
    C xq = x * ipow(q2, n);  // x q^{2n} = x q^{-2m}
    for (long j = 0; j < m; ++j) {
        const C factor = C(1) - xq;
        if (std::abs(factor) < kResonanceGuard)
            throw Resonance("negative-index q-Pochhammer factor vanished");
        out *= factor;
        xq *= q2;
    }
    return C(1) / out;
}

// (x; q^2)_infinity, truncated once the running factor is within 1e-16 of 1.
template <class T>
std::complex<T> qpoch_inf(std::complex<T> x, const std::complex<T>& q) {
    using C = std::complex<T>;
    if (std::abs(q) >= 1.0)
        throw ConvergenceDomain("(x;q^2)_infinity needs |q| < 1");
    const C q2 = q * q;
    C out(1);
    C xq = x;
    for (int j = 0; j < 100000; ++j) {
        if (std::abs(xq) < 1e-16) break;
        out *= C(1) - xq;
        xq *= q2;
    }
    return out;
}

// V_x(n) = (q/x)^n (x^2;q^2)_n / (q^2;q^2)_n for n >= 0, identically 0 for n < 0.
template <class T>
std::complex<T> weight_v(const std::complex<T>& x, long n, const std::complex<T>& q) {
    using C = std::complex<T>;
    if (n < 0) return C(0);
    if (n == 0) return C(1);
    if (std::abs(x) < kResonanceGuard)
        throw ZeroArgument("weight_v at x = 0 with n > 0");
    const C den = qpoch(q * q, n, q);
    if (std::abs(den) < kResonanceGuard)
        throw Resonance("(q^2;q^2)_n vanished in weight_v (q near root of unity)");
    return ipow(q / x, n) * qpoch(x * x, n, q) / den;
}

// W_{x,y}(n) = (y/x)^n (x^2;q^2)_n / (y^2;q^2)_n, any integer n.
template <class T>
std::complex<T> weight_w(const std::complex<T>& x, const std::complex<T>& y, long n,
                         const std::complex<T>& q) {
    using C = std::complex<T>;
    if (n == 0) return C(1);
    const C den = qpoch(y * y, n, q);
    if (std::abs(den) < kResonanceGuard)
        throw Resonance("(y^2;q^2)_n vanished in weight_w");
    return ipow(y / x, n) * qpoch(x * x, n, q) / den;
}

// Terminating basic hypergeometric sum
//   sum_{k=0}^{n} (q^{-2n}, a_1, ..., a_r; q^2)_k / (q^2, b_1, ..., b_r; q^2)_k q^{2k}.
// `upper` carries a_1..a_r; the terminating parameter q^{-2n} is implied.
// `max_term` (when given) receives the largest term magnitude, so callers can
// detect cancellation-dominated evaluations and resample.
template <class T>
std::complex<T> phi_series(const std::vector<std::complex<T>>& upper,
                           const std::vector<std::complex<T>>& lower, long n,
                           const std::complex<T>& q, double* max_term = nullptr) {
    using C = std::complex<T>;
    if (n < 0) throw ZeroArgument("phi_series needs n >= 0");
    const C q2 = q * q;
    const C qm2n = ipow(q, -2 * n);
    C term(1);
    C sum(1);
    if (max_term) *max_term = 1.0;
    for (long k = 0; k < n; ++k) {
        const C qk = ipow(q2, k);
        C ratio = (C(1) - qm2n * qk);
        for (const auto& a : upper) ratio *= C(1) - a * qk;
        C den = C(1) - q2 * qk;
        for (const auto& b : lower) den *= C(1) - b * qk;
        if (std::abs(den) < kResonanceGuard)
            throw Resonance("lower-parameter Pochhammer vanished in phi_series");
        term *= ratio / den * q2;
        sum += term;
        if (max_term) *max_term = std::max(*max_term, std::abs(term));
    }
    return sum;
}

// F(a,b,c) = sum_{n=0}^{min(a,b)} (-1)^n q^{n(n-1)} (q^2;q^2)_{c-n}
//            / [ (q^2;q^2)_n (q^2;q^2)_{a-n} (q^2;q^2)_{b-n} ].
// Finite only for c >= min(a,b); smaller c makes individual terms divergent.
template <class T>
std::complex<T> f_sum(long a, long b, long c, const std::complex<T>& q) {
    using C = std::complex<T>;
    if (a < 0 || b < 0 || c < 0) throw ZeroArgument("f_sum needs a,b,c >= 0");
    if (c < std::min(a, b))
        throw Resonance("f_sum diverges for c < min(a,b)");
    C sum(0);
    for (long n = 0; n <= std::min(a, b); ++n) {
        const C num = qpoch(q * q, c - n, q);
        const C den = qpoch(q * q, n, q) * qpoch(q * q, a - n, q) * qpoch(q * q, b - n, q);
        if (std::abs(den) < kResonanceGuard)
            throw Resonance("q-factorial vanished in f_sum");
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        sum += sign * ipow(q, n * (n - 1)) * num / den;
    }
    return sum;
}

// Closed form of F(a,b,c): q^{2ab} (q^2;q^2)_{c-a} (q^2;q^2)_{c-b}
//                          / [ (q^2;q^2)_a (q^2;q^2)_b (q^2;q^2)_{c-a-b} ].
// The divergent-factor cancellation between (q^2;q^2)_{c-max} and
// (q^2;q^2)_{c-a-b} is performed algebraically via the cocycle property, so
// the value is finite (and exact 0 for max(a,b) <= c < a+b) whenever
// c >= min(a,b).
template <class T>
std::complex<T> f_sum_closed(long a, long b, long c, const std::complex<T>& q) {
    using C = std::complex<T>;
    if (a < 0 || b < 0 || c < 0) throw ZeroArgument("f_sum_closed needs a,b,c >= 0");
    if (c < std::min(a, b))
        throw Resonance("f_sum closed form diverges for c < min(a,b)");
    const long lo = std::min(a, b);
    // (q^2;q^2)_{c-hi} / (q^2;q^2)_{c-a-b} = (q^{2(c-a-b+1)}; q^2)_{lo},
    // built factor by factor from integer exponents so the vanishing factor
    // (1 - q^0) in the window max(a,b) <= c < a+b comes out exactly zero.
    C ratio(1);
    for (long j = 0; j < lo; ++j) ratio *= C(1) - ipow(q, 2 * (c - a - b + 1 + j));
    const C den = qpoch(q * q, a, q) * qpoch(q * q, b, q);
    if (std::abs(den) < kResonanceGuard)
        throw Resonance("q-factorial vanished in f_sum_closed");
    return ipow(q, 2 * a * b) * ratio * qpoch(q * q, c - lo, q) / den;
}

// Both sides of the Pfaff-Saalschutz-Jackson summation:
//   3phi2(q^{-2n}, a, b; c, q^{2-2n} a b / c | q^2, q^2)
//     = (c/a, c/b; q^2)_n / (c, c/(ab); q^2)_n.
template <class T>
std::complex<T> pfaff_lhs(const std::complex<T>& a, const std::complex<T>& b,
                          const std::complex<T>& c, long n, const std::complex<T>& q,
                          double* max_term = nullptr) {
    using C = std::complex<T>;
    const C d2 = ipow(q, 2 - 2 * n) * a * b / c;
    return phi_series<T>({a, b}, {c, d2}, n, q, max_term);
}

template <class T>
std::complex<T> pfaff_rhs(const std::complex<T>& a, const std::complex<T>& b,
                          const std::complex<T>& c, long n, const std::complex<T>& q) {
    using C = std::complex<T>;
    const C den = qpoch(c, n, q) * qpoch(c / (a * b), n, q);
    if (std::abs(den) < kResonanceGuard) throw Resonance("pfaff rhs denominator");
    return qpoch(c / a, n, q) * qpoch(c / b, n, q) / den;
}

// Both sides of the second Sears transformation for a terminating,
// constrained 4phi3: the constraint a b c = q^{2n-2} d e f fixes d.
template <class T>
std::complex<T> sears_lhs(const std::complex<T>& a, const std::complex<T>& b,
                          const std::complex<T>& c, const std::complex<T>& e,
                          const std::complex<T>& f, long n, const std::complex<T>& q,
                          double* max_term = nullptr) {
    using C = std::complex<T>;
    const C d = a * b * c * ipow(q, 2 - 2 * n) / (e * f);
    return phi_series<T>({a, b, c}, {d, e, f}, n, q, max_term);
}

template <class T>
std::complex<T> sears_rhs(const std::complex<T>& a, const std::complex<T>& b,
                          const std::complex<T>& c, const std::complex<T>& e,
                          const std::complex<T>& f, long n, const std::complex<T>& q,
                          double* max_term = nullptr) {
    using C = std::complex<T>;
    const C ef_ab = e * f / (a * b);
    const C ef_ac = e * f / (a * c);
    const C ef_abc = e * f / (a * b * c);
    const C den = qpoch(e, n, q) * qpoch(f, n, q) * qpoch(ef_abc, n, q);
    if (std::abs(den) < kResonanceGuard) throw Resonance("sears rhs prefactor");
    const C pref = qpoch(a, n, q) * qpoch(ef_ab, n, q) * qpoch(ef_ac, n, q) / den;
    const C series = phi_series<T>({e / a, f / a, ef_abc},
                                   {ef_ab, ef_ac, ipow(q, 2 - 2 * n) / a}, n, q, max_term);
    if (max_term) *max_term *= std::abs(pref);
    return pref * series;
}

}  // namespace sixv
