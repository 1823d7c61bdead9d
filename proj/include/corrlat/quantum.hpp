#ifndef CORRLAT_QUANTUM_HPP
#define CORRLAT_QUANTUM_HPP

#include "corrlat/classical.hpp"
#include "corrlat/polarizability.hpp"

namespace corrlat {

/// Particle-over-sinusoid scenario. Geometry carries z0, a, lambda; the
/// nonretarded-validity range of (z0, lambda) is reported, not enforced.
struct CpScenario {
    SpheroidParticle particle;
    Geometry geom;
};

/// Flat-plane nonretarded CP energy -(M_xx + M_yy + 2 M_zz)/(64 pi eps0 z0^3).
double u0_cp(const MomentMatrix& M, double z0);

/// First-order sinusoid correction, Eq.-(5)-shaped with <d_i d_j> in place of
/// d_i d_j (shared code path with the classical module).
double u1_cp_sinusoid(const CpScenario& scenario, double x0);

/// General-profile first-order CP correction.
double u1_cp_general(const SpheroidParticle& particle, const RoughnessProfile& profile,
                     double z0, double x0, double y0,
                     bool allow_large_amplitude = false);

/// Peak/valley transition value g: the lambda/z0 with C = 0 for the particle
/// axis along x (theta = pi/2, phi = 0). aspect = 1 returns exactly 0.
double transition_g(double aspect, const LorentzOscillator& material);

/// Border lambda/z0 at fixed in-plane orientation phi (theta = pi/2).
double border_phi(double aspect, const LorentzOscillator& material, double phi);

/// z0 at which the lateral CP amplitude A vanishes for the given particle and
/// corrugation period. Requires a B = 0 orientation (otherwise A never
/// crosses zero and NoSignChange is thrown).
double null_z0(const SpheroidParticle& particle, double lambda);

/// Small-oscillation frequency about x_min:
/// f = (1/2pi) sqrt(3 a pi A / (128 lambda^2 z0^4 eps0 m_p)).
double oscillation_frequency(const CpScenario& scenario);

} // namespace corrlat

#endif
