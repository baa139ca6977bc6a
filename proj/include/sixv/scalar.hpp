#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sixv {

// All weights and matrix entries live in double-precision complex numbers.
// Everything below is written against std::complex<T>, so a wider scalar
// can be dropped in without touching the call sites.
using Scalar = std::complex<double>;

inline constexpr double kResonanceGuard = 1e-12;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A denominator factor fell inside the resonance guard.
struct Resonance : Error {
    explicit Resonance(const std::string& what) : Error("resonance: " + what) {}
};

struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& what) : Error("zero argument: " + what) {}
};

struct SizeLimit : Error {
    explicit SizeLimit(const std::string& what) : Error("size limit: " + what) {}
};

// |omega_h * w| >= 1 (or |q| >= 1 where an infinite product needs |q| < 1).
struct ConvergenceDomain : Error {
    explicit ConvergenceDomain(const std::string& what) : Error("convergence domain: " + what) {}
};

struct TruncationFailure : Error {
    explicit TruncationFailure(const std::string& what) : Error("truncation failure: " + what) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error("no convergence: " + what) {}
};

struct SingularNormalizer : Error {
    explicit SingularNormalizer(const std::string& what) : Error("singular normalizer: " + what) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error("degenerate input: " + what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io error: " + what) {}
};

// [x] = x - 1/x
template <class T>
std::complex<T> bracket(const std::complex<T>& x) {
    if (std::abs(x) < kResonanceGuard)
        throw ZeroArgument("bracket of zero");
    return x - std::complex<T>(1) / x;
}

inline Scalar bracket(double x) { return bracket(Scalar(x, 0.0)); }

// Integer power of a complex number, valid for negative exponents.
template <class T>
std::complex<T> ipow(std::complex<T> base, long n) {
    if (n == 0) return std::complex<T>(1);
    if (n < 0) {
        if (std::abs(base) == T(0)) throw ZeroArgument("ipow of zero with negative exponent");
        base = std::complex<T>(1) / base;
        n = -n;
    }
    std::complex<T> out(1);
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

// Scale-aware residual |L-R| / (1 + max(|L|,|R|)) used by every verify_*.
inline double residual(const Scalar& lhs, const Scalar& rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

inline bool is_finite(const Scalar& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace sixv
