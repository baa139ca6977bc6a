#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sixv/scalar.hpp"

namespace sixv {

// Per-trial record of an identity check.
struct ResidualReport {
    std::string relation;
    std::string params;     // reproduction data, human/JSON-readable
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Shared sampler for all verify_* operations: |q| uniform in [0.3, 0.7],
// spectral moduli uniform in [0.5, 2.0], phases uniform in [0, 2pi).
// Callers resample on Resonance, at most 100 attempts.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    long uniform_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    Scalar phase() {
        const double t = uniform(0.0, 6.283185307179586);
        return {std::cos(t), std::sin(t)};
    }

    Scalar q() { return uniform(0.3, 0.7) * phase(); }

    Scalar spectral() { return uniform(0.5, 2.0) * phase(); }

    // omega_h chosen so that |omega_h w| lands in [0.2, 0.7] for a given w.
    Scalar omega_for(const Scalar& w) {
        if (std::abs(w) < kResonanceGuard) throw Resonance("omega_for with w near 0");
        return uniform(0.2, 0.7) / std::abs(w) * phase();
    }

    std::uint64_t derive_seed() {
        return std::uniform_int_distribution<std::uint64_t>()(gen_);
    }

private:
    std::mt19937_64 gen_;
};

// Runs `trial` up to 100 times, resampling when the guarded parameters hit a
// resonance. Anything other than Resonance propagates.
template <class F>
auto with_resampling(TrialRng& rng, F&& trial) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        try {
            return trial(rng);
        } catch (const Resonance&) {
            continue;
        }
    }
    throw Resonance("trial failed 100 resampling attempts");
}

inline ResidualReport make_report(std::string relation, std::string params, double max_residual,
                                  double tolerance) {
    ResidualReport r;
    r.relation = std::move(relation);
    r.params = std::move(params);
    r.max_residual = max_residual;
    r.tolerance = tolerance;
    r.pass = max_residual <= tolerance;
    return r;
}

}  // namespace sixv
