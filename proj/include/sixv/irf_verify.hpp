#pragma once

#include <optional>
#include <sstream>

#include "sixv/irf.hpp"
#include "sixv/trial.hpp"

namespace sixv {

enum class IrfRelation {
    star_star,
    star_triangle_fwd,
    star_triangle_rev,
    str_implies_ss,
    irf_ybe,
    variant_ybe,
    gauge_invariance,
};

inline const char* to_string(IrfRelation r) {
    switch (r) {
        case IrfRelation::star_star: return "star_star";
        case IrfRelation::star_triangle_fwd: return "star_triangle_fwd";
        case IrfRelation::star_triangle_rev: return "star_triangle_rev";
        case IrfRelation::str_implies_ss: return "str_implies_ss";
        case IrfRelation::irf_ybe: return "irf_ybe";
        case IrfRelation::variant_ybe: return "variant_ybe";
        case IrfRelation::gauge_invariance: return "gauge_invariance";
    }
    return "?";
}

namespace detail {

// Admissibility interval of the spin sitting in slot `t` of
// W^{(i,j)}(s0,s1,s2,s3), from the vanishing rules of each variant.
struct SpinBounds {
    std::optional<long> lo, hi;
    void meet_lo(long v) { lo = lo ? std::max(*lo, v) : v; }
    void meet_hi(long v) { hi = hi ? std::min(*hi, v) : v; }
};

inline void variant_slot_bounds(int i, int j, int slot, const long s[4], SpinBounds& b) {
    if (i == 1 && j == 1) {
        switch (slot) {
            case 0: b.meet_lo(std::max(s[1], s[2])); break;
            case 1: b.meet_lo(s[3]); b.meet_hi(s[0]); break;
            case 2: b.meet_lo(s[3]); b.meet_hi(s[0]); break;
            case 3: b.meet_hi(std::min(s[1], s[2])); break;
        }
    } else if (i == 2 && j == 1) {
        switch (slot) {
            case 0: b.meet_lo(s[2]); break;
            case 1: b.meet_lo(s[3]); break;
            case 2: b.meet_hi(s[0]); break;
            case 3: b.meet_hi(s[1]); break;
        }
    } else if (i == 1 && j == 2) {
        switch (slot) {
            case 0: b.meet_lo(s[1]); break;
            case 1: b.meet_hi(s[0]); break;
            case 2: b.meet_hi(s[3]); break;
            case 3: b.meet_lo(s[2]); break;
        }
    } else {
        switch (slot) {
            case 1: b.meet_lo(s[2]); break;
            case 2: b.meet_hi(s[1]); break;
            default: break;
        }
    }
}

struct VariantYbeSpins {
    long b, c, d, e, f, g;
};

// One side of the (variant) IRF Yang-Baxter equation; W11 falls out as the
// plain Eq-(ybe) case.
inline Scalar variant_ybe_side(bool lhs, int i, int j, int k, const VariantYbeSpins& s,
                               const SpectralPair& px, const SpectralPair& py,
                               const SpectralPair& pz, const Scalar& q) {
    SpinBounds bounds;
    if (lhs) {
        const long f1[4] = {s.g, 0, s.b, s.f};
        const long f2[4] = {s.c, s.e, s.g, 0};
        const long f3[4] = {s.e, s.d, 0, s.f};
        variant_slot_bounds(i, j, 1, f1, bounds);
        variant_slot_bounds(i, k, 3, f2, bounds);
        variant_slot_bounds(j, k, 2, f3, bounds);
    } else {
        const long f1[4] = {s.c, 0, s.g, s.b};
        const long f2[4] = {0, s.d, s.b, s.f};
        const long f3[4] = {s.c, s.e, 0, s.d};
        variant_slot_bounds(j, k, 1, f1, bounds);
        variant_slot_bounds(i, k, 0, f2, bounds);
        variant_slot_bounds(i, j, 2, f3, bounds);
    }
    if (!bounds.lo || !bounds.hi)
        throw TruncationFailure("variant YBE internal sum is unbounded");
    Scalar sum(0);
    for (long u = *bounds.lo; u <= *bounds.hi; ++u) {
        if (lhs) {
            sum += variant_weight(i, j, {s.g, u, s.b, s.f, px, py, q}) *
                   variant_weight(i, k, {s.c, s.e, s.g, u, px, pz, q}) *
                   variant_weight(j, k, {s.e, s.d, u, s.f, py, pz, q});
        } else {
            sum += variant_weight(j, k, {s.c, u, s.g, s.b, py, pz, q}) *
                   variant_weight(i, k, {u, s.d, s.b, s.f, px, pz, q}) *
                   variant_weight(i, j, {s.c, s.e, u, s.d, px, py, q});
        }
    }
    return sum;
}

// Eq-(W-tilde) rescaling with g_x(a,b) = x^b / x'^a.
inline Scalar rescaled_w(const IrfArgs& g) {
    auto gauge = [](const SpectralPair& p, long a, long b) {
        return ipow(p.x, b) / ipow(p.x_prime, a);
    };
    const Scalar factor = gauge(g.px, g.c, g.d) * gauge(g.py, g.a, g.c) /
                          (gauge(g.px, g.a, g.b) * gauge(g.py, g.b, g.d));
    return factor * star_w(g);
}

inline VariantYbeSpins sample_ybe_spins(TrialRng& rng, long spread) {
    VariantYbeSpins s;
    s.f = 0;
    s.b = rng.uniform_int(0, spread);
    s.d = rng.uniform_int(0, spread);
    s.g = s.b + rng.uniform_int(0, spread);
    s.e = s.d + rng.uniform_int(0, spread);
    s.c = std::max(s.g, s.e) + rng.uniform_int(0, spread);
    return s;
}

}  // namespace detail

struct VariantIndices {
    int i = 1, j = 1, k = 1;
};

inline ResidualReport verify_irf(IrfRelation rel, TrialRng& rng, double tol = 1e-9,
                                 VariantIndices v = {}) {
    return with_resampling(rng, [&](TrialRng& r) {
        std::ostringstream ps;
        double worst = 0.0;
        const Scalar q = r.q();
        const SpectralPair px{r.spectral(), r.spectral()};
        const SpectralPair py{r.spectral(), r.spectral()};
        ps << "q=" << q << " x=" << px.x << " x'=" << px.x_prime << " y=" << py.x
           << " y'=" << py.x_prime;
        switch (rel) {
            case IrfRelation::star_star: {
                // W(sum) = W(closed) = Wbar(sum) = Wbar(closed), spins a-d <= 6
                for (long a = 0; a <= 6; ++a)
                    for (long b = 0; b <= a; ++b)
                        for (long c = 0; c <= a; ++c) {
                            const IrfArgs g{a, b, c, 0, px, py, q};
                            const Scalar w = star_w(g);
                            worst = std::max(worst, residual(w, star_w(g, StarForm::closed)));
                            worst = std::max(worst, residual(w, star_w_bar(g)));
                            worst = std::max(worst,
                                             residual(w, star_w_bar(g, StarForm::closed)));
                        }
                break;
            }
            case IrfRelation::star_triangle_fwd:
            case IrfRelation::star_triangle_rev: {
                const bool fwd = rel == IrfRelation::star_triangle_fwd;
                const Scalar x = px.x, y = py.x, z = r.spectral();
                ps << " z=" << z;
                for (int t = 0; t < 12; ++t) {
                    long a = r.uniform_int(0, 4);
                    long c = a + r.uniform_int(0, 8);
                    if (!fwd) std::swap(a, c);  // str2 needs a >= c
                    const long b = r.uniform_int(std::min(a, c) - 4, std::max(a, c) + 4);
                    const Scalar lhs = star_triangle_lhs(fwd, a, b, c, x, y, z, q);
                    const Scalar rhs = star_triangle_rhs(fwd, a, b, c, x, y, z, q);
                    worst = std::max(worst, residual(lhs, rhs));
                }
                break;
            }
            case IrfRelation::str_implies_ss: {
                // y = q specializations (both corollaries), division-free form
                const Scalar x = px.x, z = py.x;
                ps << " z=" << z;
                for (long a = 0; a <= 3; ++a)
                    for (long c = a; c <= a + 4; ++c)
                        for (long b = a; b <= c + 4; ++b) {
                            Scalar rhs1(0);
                            for (long k = a; k <= c; ++k)
                                rhs1 += weight_v(q / z, k - a, q) * weight_w(z, x, b - k, q) *
                                        weight_v(x / q, c - k, q);
                            const Scalar lhs = weight_v(z, b - c, q) * weight_v(x / z, c - a, q);
                            worst = std::max(worst,
                                             residual(lhs, weight_v(x, b - a, q) * rhs1));
                            Scalar rhs2(0);
                            for (long k = c; k <= b; ++k)
                                rhs2 += weight_w(x / z, x, k - a, q) *
                                        weight_v(q * z / x, b - k, q) *
                                        weight_v(x / q, k - c, q);
                            worst = std::max(worst,
                                             residual(lhs, weight_v(x, b - a, q) * rhs2));
                        }
                break;
            }
            case IrfRelation::irf_ybe: {
                const SpectralPair pz{r.spectral(), r.spectral()};
                ps << " z=" << pz.x << " z'=" << pz.x_prime;
                const auto s = detail::sample_ybe_spins(r, 2);
                ps << " spins(b,c,d,e,f,g)=" << s.b << "," << s.c << "," << s.d << "," << s.e
                   << "," << s.f << "," << s.g;
                const Scalar lhs = detail::variant_ybe_side(true, 1, 1, 1, s, px, py, pz, q);
                const Scalar rhs = detail::variant_ybe_side(false, 1, 1, 1, s, px, py, pz, q);
                worst = residual(lhs, rhs);
                break;
            }
            case IrfRelation::variant_ybe: {
                const SpectralPair pz{r.spectral(), r.spectral()};
                ps << " z=" << pz.x << " z'=" << pz.x_prime << " (i,j,k)=" << v.i << v.j << v.k;
                const auto s = detail::sample_ybe_spins(r, 2);
                ps << " spins(b,c,d,e,f,g)=" << s.b << "," << s.c << "," << s.d << "," << s.e
                   << "," << s.f << "," << s.g;
                const Scalar lhs = detail::variant_ybe_side(true, v.i, v.j, v.k, s, px, py, pz, q);
                const Scalar rhs =
                    detail::variant_ybe_side(false, v.i, v.j, v.k, s, px, py, pz, q);
                worst = residual(lhs, rhs);
                break;
            }
            case IrfRelation::gauge_invariance: {
                const SpectralPair pz{r.spectral(), r.spectral()};
                ps << " z=" << pz.x << " z'=" << pz.x_prime;
                const auto s = detail::sample_ybe_spins(r, 2);
                Scalar lhs(0), rhs(0);
                for (long a = s.f; a <= std::min(s.g, s.e); ++a)
                    lhs += detail::rescaled_w({s.g, a, s.b, s.f, px, py, q}) *
                           detail::rescaled_w({s.c, s.e, s.g, a, px, pz, q}) *
                           detail::rescaled_w({s.e, s.d, a, s.f, py, pz, q});
                for (long h = std::max(s.b, s.d); h <= s.c; ++h)
                    rhs += detail::rescaled_w({s.c, h, s.g, s.b, py, pz, q}) *
                           detail::rescaled_w({h, s.d, s.b, s.f, px, pz, q}) *
                           detail::rescaled_w({s.c, s.e, h, s.d, px, py, q});
                worst = residual(lhs, rhs);
                break;
            }
        }
        return make_report(to_string(rel), ps.str(), worst, tol);
    });
}

}  // namespace sixv
