#ifndef CORRLAT_CLASSICAL_HPP
#define CORRLAT_CLASSICAL_HPP

#include "corrlat/constants.hpp"
#include "corrlat/moments.hpp"
#include "corrlat/numerics.hpp"
#include "corrlat/profiles.hpp"

namespace corrlat {

/// Sinusoidal corrugation geometry: particle height z0 over the mean plane,
/// corrugation amplitude a and period lambda, lateral position x0.
struct Geometry {
    double z0 = 0.0;
    double amplitude = 0.0;
    double lambda = 0.0;
    double x0 = 0.0;
    bool allow_large_amplitude = false;

    double k() const { return 2.0 * kPi / lambda; }
    double u() const { return k() * z0; }

    /// DomainError for nonpositive lengths; PerturbativityViolation when
    /// amplitude/z0 exceeds the first-order validity guard.
    void validate() const;
};

/// First-order validity guard a/z0 <= 0.1 (override via allow_large_amplitude).
inline constexpr double kPerturbativityGuard = 0.1;

/// Relative threshold below which the lateral-force amplitude counts as null.
inline constexpr double kNullThresholdFactor = 1e-9;

/// |delta mod pi| tolerance separating exact peak/valley from intermediate.
inline constexpr double kPeakValleyTolRad = 1e-9;

enum class Regime { Peak, Valley, Intermediate, Null };

struct RegimeResult {
    double B = 0.0, C = 0.0, A = 0.0; // C^2 m^2
    double delta = 0.0;               // radians in [0, 2pi); NaN when Null
    Regime regime = Regime::Null;
    double x_min = 0.0; // length in [0, lambda); NaN when Null
};

struct BcCoefficients {
    double B = 0.0, C = 0.0, A = 0.0;
};

/// Flat-plane energy -(D_xx + D_yy + 2 D_zz) / (64 pi eps0 z0^3).
double u0_classical(const SecondMoments& D, double z0);

/// B = -2 D_xz R_xz, C = D_xx R_xx + D_yy R_yy + D_zz R_zz, A = sqrt(B^2+C^2).
BcCoefficients bc_coefficients(const SecondMoments& D, double u);

/// delta = atan2(B, C) normalized to [0, 2pi). Throws NullAmplitude when both
/// vanish.
double phase_delta(double B, double C);

/// Closed-form first-order correction for h = a cos(k x):
/// -(3a / 512 pi eps0 z0^4) * A * cos(k x0 - delta).
double u1_classical_sinusoid(const SecondMoments& D, const Geometry& geom);

/// General-profile first-order correction: sum over the profile's spectral
/// lines weighted by kernel_I.
double u1_classical_general(const SecondMoments& D, const RoughnessProfile& profile,
                            double z0, double x0, double y0,
                            bool allow_large_amplitude = false);

/// Independent slow path: the first-order image-Green-function correction
/// evaluated as a real-space surface integral (differentiated analytically
/// under the integral sign, then integrated numerically over the plane).
/// `rel_accuracy` is relative to the dimensional scale
/// max|h| * trace(D) / (8 pi^2 eps0 z0^4).
double oracle_u1_realspace(const SecondMoments& D, const RoughnessProfile& profile,
                           double z0, double x0, double y0,
                           double rel_accuracy = 1e-7, long max_evals = 400'000'000);

/// Regime label plus representative minimum x_min = delta * lambda / (2 pi).
RegimeResult classify_regime(const SecondMoments& D, double u, double lambda = 1.0);

/// x_min in [0, lambda); throws NullAmplitude in the null regime.
double xmin(const SecondMoments& D, double u, double lambda);

/// lambda/z0 at which C(u; M) = 0, located by a descending log-grid scan over
/// lambda/z0 in [lo, hi] refined with the root finder. The scan runs from the
/// small-u side, where all R limits are positive, toward large u; the border
/// is scale invariant in M. Throws NoSignChange when C keeps its sign.
double c_border_lambda_over_z0(const SecondMoments& M, double lo = 0.01,
                               double hi = 1.0);

/// Largest lambda/z0 for which the lateral force can vanish at in-plane
/// dipole orientation phi (theta = pi/2): the root of
/// cos^2(phi) R_xx + sin^2(phi) R_yy = 0. Throws NoSignChange when no such
/// border exists for that phi.
double classical_border_lambda_over_z0(double phi);

} // namespace corrlat

#endif
