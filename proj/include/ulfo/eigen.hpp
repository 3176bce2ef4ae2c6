#pragma once

#include <array>
#include <span>
#include <stdexcept>

#include "ulfo/linalg.hpp"

// Eigenvalues of the 4x4 state matrices, computed self-contained: the
// characteristic polynomial via the Faddeev-LeVerrier recurrence and its
// roots via Aberth-Ehrlich simultaneous iteration. The char-poly residual
// doubles as an independent correctness oracle in the tests.

namespace ulfo {

struct NoOscillatoryMode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A complex eigenvalue with its oscillation interpretation.
struct ModeEstimate {
    enum class Source { full_eigen, torque_formula };
    Complex lambda;        // 1/s
    double frequency_hz;   // im(lambda)/2pi
    double damping_ratio;  // -re(lambda)/|lambda|
    Source source;
};

// Monic characteristic polynomial det(sI - M), coefficients in descending
// powers: c[0]=1, c[1]..c[4]. Throws std::invalid_argument on non-finite M.
std::array<double, 5> char_poly(const Mat4& m);

struct RootResult {
    std::array<Complex, 4> roots;
    int iterations;
    // max last correction relative to root magnitude; a crude conditioning
    // indicator, near eps^(1/m) for an m-fold root
    double max_correction;
};

// All four roots of a monic degree-4 real polynomial (descending
// coefficients, c[0] must be 1). Aberth-Ehrlich from perturbed-circle
// starting points, iterated in extended precision, capped at 200 sweeps.
// Complex roots are returned as exact conjugate pairs. Multiple roots carry
// reduced accuracy (about 1e-4 for a quadruple root).
// Throws std::runtime_error on non-convergence.
RootResult poly_roots_detailed(const std::array<double, 5>& coeffs);
std::array<Complex, 4> poly_roots(const std::array<double, 5>& coeffs);

// Eigenvalues of M, sorted by descending real part, ties by descending
// imaginary part.
std::array<Complex, 4> eigenvalues(const Mat4& m);

// The conjugate-pair member with positive imaginary part and the largest
// real part. Throws NoOscillatoryMode when the spectrum is entirely real
// (|im| <= 1e-9 for every eigenvalue).
ModeEstimate dominant_oscillatory_mode(std::span<const Complex> eigs);

}  // namespace ulfo
