#pragma once

#include <algorithm>

#include "sixv/qseries.hpp"

namespace sixv {

// A (x, x') rapidity pair; weights depend on ratios of its members.
struct SpectralPair {
    Scalar x;
    Scalar x_prime;
};

// Corner spins plus the two spectral pairs of a four-edge star.
struct IrfArgs {
    long a, b, c, d;
    SpectralPair px;  // (x, x')
    SpectralPair py;  // (y, y')
    Scalar q;
};

inline bool star_admissible(long a, long b, long c, long d) {
    return a >= b && b >= d && a >= c && c >= d;
}

// S(a,b,c,d | x,x',y,y') =
//   sum_{n=max(b,c)}^{a} V_{x/y'}(a-n) V_{y'/x'}(n-b) V_{y/x}(n-c) / V_{y/x'}(n-d).
// Exact 0 outside a >= b,c >= d.
inline Scalar star_s(const IrfArgs& g) {
    if (!star_admissible(g.a, g.b, g.c, g.d)) return Scalar(0);
    const Scalar x = g.px.x, xp = g.px.x_prime, y = g.py.x, yp = g.py.x_prime;
    Scalar sum(0);
    for (long n = std::max(g.b, g.c); n <= g.a; ++n) {
        const Scalar den = weight_v(y / xp, n - g.d, g.q);
        if (std::abs(den) < kResonanceGuard)
            throw Resonance("V_{y/x'} vanished inside star_s");
        sum += weight_v(x / yp, g.a - n, g.q) * weight_v(yp / xp, n - g.b, g.q) *
               weight_v(y / x, n - g.c, g.q) / den;
    }
    return sum;
}

enum class StarForm { sum, closed };

// Black-centered star weight W = V_{y/y'}(b-d)/V_{y/y'}(a-c) * S, or its
// closed 4phi3 form.
inline Scalar star_w(const IrfArgs& g, StarForm form = StarForm::sum) {
    if (!star_admissible(g.a, g.b, g.c, g.d)) return Scalar(0);
    const Scalar x = g.px.x, xp = g.px.x_prime, y = g.py.x, yp = g.py.x_prime;
    const Scalar q = g.q;
    if (form == StarForm::sum) {
        const Scalar den = weight_v(y / yp, g.a - g.c, q);
        if (std::abs(den) < kResonanceGuard) throw Resonance("prefactor V_{y/y'}(a-c) vanished");
        return weight_v(y / yp, g.b - g.d, q) / den * star_s(g);
    }
    // closed form: prefactor times
    // 4phi3(q^{-2(a-b)}, q^{-2(a-c)}, (x/y')^2, q^{2(1-a+d)}(x'/y)^2 ;
    //       q^{2(1-a+b)}(x'/y')^2, q^{-2(a-d)}, q^{2(1-a+c)}(x/y)^2)
    const Scalar denp = weight_v(y / yp, g.a - g.c, q) * weight_v(y / xp, g.a - g.d, q);
    if (std::abs(denp) < kResonanceGuard) throw Resonance("closed-form prefactor vanished");
    const Scalar pref = weight_v(y / yp, g.b - g.d, q) * weight_v(yp / xp, g.a - g.b, q) *
                        weight_v(y / x, g.a - g.c, q) / denp;
    const long nterm = g.a - g.b;
    const std::vector<Scalar> upper{ipow(q, -2 * (g.a - g.c)), (x / yp) * (x / yp),
                                    ipow(q, 2 * (1 - g.a + g.d)) * (xp / y) * (xp / y)};
    const std::vector<Scalar> lower{ipow(q, 2 * (1 - g.a + g.b)) * (xp / yp) * (xp / yp),
                                    ipow(q, -2 * (g.a - g.d)),
                                    ipow(q, 2 * (1 - g.a + g.c)) * (x / y) * (x / y)};
    return pref * phi_series(upper, lower, nterm, q);
}

// White-centered star weight Wbar = V_{x/x'}(a-b)/V_{x/x'}(c-d) *
//   sum_{n=d}^{min(b,c)} V_{x/y'}(n-d) V_{y'/x'}(c-n) V_{y/x}(b-n) / V_{y/x'}(a-n),
// or its closed 4phi3 form.
inline Scalar star_w_bar(const IrfArgs& g, StarForm form = StarForm::sum) {
    if (!star_admissible(g.a, g.b, g.c, g.d)) return Scalar(0);
    const Scalar x = g.px.x, xp = g.px.x_prime, y = g.py.x, yp = g.py.x_prime;
    const Scalar q = g.q;
    if (form == StarForm::sum) {
        const Scalar denp = weight_v(x / xp, g.c - g.d, q);
        if (std::abs(denp) < kResonanceGuard) throw Resonance("prefactor V_{x/x'}(c-d) vanished");
        Scalar sum(0);
        for (long n = g.d; n <= std::min(g.b, g.c); ++n) {
            const Scalar den = weight_v(y / xp, g.a - n, q);
            if (std::abs(den) < kResonanceGuard)
                throw Resonance("V_{y/x'} vanished inside star_w_bar");
            sum += weight_v(x / yp, n - g.d, q) * weight_v(yp / xp, g.c - n, q) *
                   weight_v(y / x, g.b - n, q) / den;
        }
        return weight_v(x / xp, g.a - g.b, q) / denp * sum;
    }
    const Scalar denp = weight_v(x / xp, g.c - g.d, q) * weight_v(y / xp, g.a - g.d, q);
    if (std::abs(denp) < kResonanceGuard) throw Resonance("closed-form prefactor vanished");
    const Scalar pref = weight_v(x / xp, g.a - g.b, q) * weight_v(yp / xp, g.c - g.d, q) *
                        weight_v(y / x, g.b - g.d, q) / denp;
    const long nterm = g.c - g.d;
    const std::vector<Scalar> upper{ipow(q, -2 * (g.b - g.d)), (x / yp) * (x / yp),
                                    ipow(q, 2 * (1 - g.a + g.d)) * (xp / y) * (xp / y)};
    const std::vector<Scalar> lower{ipow(q, 2 * (1 - g.c + g.d)) * (xp / yp) * (xp / yp),
                                    ipow(q, -2 * (g.a - g.d)),
                                    ipow(q, 2 * (1 - g.b + g.d)) * (x / y) * (x / y)};
    return pref * phi_series(upper, lower, nterm, q);
}

// App-B variant weights. (1,1) is the plain star_w; the others mix V and W
// edges with theta prefactors as printed. Summation ranges are forced by the
// vanishing of V at negative arguments.
inline Scalar variant_weight(int i, int j, const IrfArgs& g) {
    const Scalar x = g.px.x, xp = g.px.x_prime, y = g.py.x, yp = g.py.x_prime;
    const Scalar q = g.q;
    if (i == 1 && j == 1) return star_w(g);
    if (i == 2 && j == 1) {
        if (g.a < g.c) return Scalar(0);
        Scalar sum(0);
        for (long n = g.d; n <= g.b; ++n)
            sum += weight_w(x, y, g.a - n, q) * weight_v(y / xp, g.b - n, q) *
                   weight_w(yp, x, g.c - n, q) * weight_v(xp / yp, n - g.d, q);
        return sum;
    }
    if (i == 1 && j == 2) {
        if (g.a < g.b) return Scalar(0);
        Scalar sum(0);
        for (long n = g.c; n <= g.d; ++n)
            sum += weight_w(x, y, g.a - n, q) * weight_w(y, xp, g.b - n, q) *
                   weight_v(yp / x, n - g.c, q) * weight_v(xp / yp, g.d - n, q);
        return sum;
    }
    if (i == 2 && j == 2) {
        Scalar sum(0);
        for (long n = g.c; n <= g.b; ++n)
            sum += weight_w(x, y, g.a - n, q) * weight_v(y / xp, g.b - n, q) *
                   weight_v(yp / x, n - g.c, q) * weight_w(xp, yp, n - g.d, q);
        return sum;
    }
    throw ZeroArgument("variant_weight indices must be 1 or 2");
}

// Both star-triangle relations. `forward` is
//   sum_d V_{y/z}(d-a) W_{z,x}(b-d) V_{x/y}(c-d) = W_{z,y}(b-c) V_{x/z}(c-a) W_{y,x}(b-a),
// `reverse` the arrow-flipped partner.
inline Scalar star_triangle_lhs(bool forward, long a, long b, long c, const Scalar& x,
                                const Scalar& y, const Scalar& z, const Scalar& q) {
    Scalar sum(0);
    if (forward) {
        for (long d = a; d <= c; ++d)
            sum += weight_v(y / z, d - a, q) * weight_w(z, x, b - d, q) *
                   weight_v(x / y, c - d, q);
    } else {
        for (long d = c; d <= a; ++d)
            sum += weight_v(y / z, a - d, q) * weight_w(z, x, d - b, q) *
                   weight_v(x / y, d - c, q);
    }
    return sum;
}

inline Scalar star_triangle_rhs(bool forward, long a, long b, long c, const Scalar& x,
                                const Scalar& y, const Scalar& z, const Scalar& q) {
    if (forward)
        return weight_w(z, y, b - c, q) * weight_v(x / z, c - a, q) * weight_w(y, x, b - a, q);
    return weight_w(z, y, c - b, q) * weight_v(x / z, a - c, q) * weight_w(y, x, a - b, q);
}

}  // namespace sixv
