#pragma once

#include <sstream>

#include "sixv/qseries.hpp"
#include "sixv/trial.hpp"

namespace sixv {

enum class QKernelRelation { v_inversion, pfaff_saalschutz, sears, w_symmetry, f_closed_form };

inline const char* to_string(QKernelRelation r) {
    switch (r) {
        case QKernelRelation::v_inversion: return "v_inversion";
        case QKernelRelation::pfaff_saalschutz: return "pfaff_saalschutz";
        case QKernelRelation::sears: return "sears";
        case QKernelRelation::w_symmetry: return "w_symmetry";
        case QKernelRelation::f_closed_form: return "f_closed_form";
    }
    return "?";
}

// One randomized trial of a classical q-series identity. Both sides are
// evaluated independently; the report carries the worst residual seen.
inline ResidualReport verify_qkernel(QKernelRelation rel, TrialRng& rng, double tol = 1e-9) {
    return with_resampling(rng, [&](TrialRng& r) {
        std::ostringstream ps;
        double worst = 0.0;
        const Scalar q = r.q();
        ps << "q=" << q;
        switch (rel) {
            case QKernelRelation::v_inversion: {
                // sum_n V_{1/x}(a-n) V_x(n-b) = delta_{a,b}, 0 <= b <= a <= 10
                const Scalar x = r.spectral();
                ps << " x=" << x;
                for (long a = 0; a <= 10; ++a)
                    for (long b = 0; b <= a; ++b) {
                        Scalar sum(0);
                        for (long n = b; n <= a; ++n)
                            sum += weight_v(Scalar(1) / x, a - n, q) * weight_v(x, n - b, q);
                        const Scalar expect = (a == b) ? Scalar(1) : Scalar(0);
                        worst = std::max(worst, residual(sum, expect));
                    }
                break;
            }
            case QKernelRelation::pfaff_saalschutz: {
                const Scalar a = r.spectral() * r.spectral();
                const Scalar b = r.spectral() * r.spectral();
                const Scalar c = r.spectral() * r.spectral();
                const long n = r.uniform_int(0, 8);
                ps << " a=" << a << " b=" << b << " c=" << c << " n=" << n;
                double amp = 1.0;
                const Scalar lhs = pfaff_lhs(a, b, c, n, q, &amp);
                const Scalar rhs = pfaff_rhs(a, b, c, n, q);
                if (amp > 1e4 * (1.0 + std::abs(lhs)))
                    throw Resonance("cancellation-dominated pfaff trial");
                worst = residual(lhs, rhs);
                break;
            }
            case QKernelRelation::sears: {
                const Scalar a = r.spectral() * r.spectral();
                const Scalar b = r.spectral() * r.spectral();
                const Scalar c = r.spectral() * r.spectral();
                const Scalar e = r.spectral() * r.spectral();
                const Scalar f = r.spectral() * r.spectral();
                const long n = r.uniform_int(0, 8);
                ps << " a=" << a << " b=" << b << " c=" << c << " e=" << e << " f=" << f
                   << " n=" << n;
                double amp_l = 1.0, amp_r = 1.0;
                const Scalar lhs = sears_lhs(a, b, c, e, f, n, q, &amp_l);
                const Scalar rhs = sears_rhs(a, b, c, e, f, n, q, &amp_r);
                const double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
                if (std::max(amp_l, amp_r) > 1e4 * scale)
                    throw Resonance("cancellation-dominated sears trial");
                worst = residual(lhs, rhs);
                break;
            }
            case QKernelRelation::w_symmetry: {
                // W_{x,y}(n) W_{y,x}(n) = 1 and W_{x,y}(n) = W_{q/y,q/x}(-n)
                const Scalar x = r.spectral();
                const Scalar y = r.spectral();
                ps << " x=" << x << " y=" << y;
                for (long n = -6; n <= 6; ++n) {
                    const Scalar w = weight_w(x, y, n, q);
                    worst = std::max(worst, residual(w * weight_w(y, x, n, q), Scalar(1)));
                    worst = std::max(worst, residual(w, weight_w(q / y, q / x, -n, q)));
                }
                break;
            }
            case QKernelRelation::f_closed_form: {
                for (long a = 0; a <= 6; ++a)
                    for (long b = 0; b <= 6; ++b)
                        for (long c = std::min(a, b); c <= 14; ++c)
                            worst = std::max(worst,
                                             residual(f_sum(a, b, c, q), f_sum_closed(a, b, c, q)));
                break;
            }
        }
        return make_report(to_string(rel), ps.str(), worst, tol);
    });
}

}  // namespace sixv
