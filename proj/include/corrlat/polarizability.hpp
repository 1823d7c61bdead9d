#ifndef CORRLAT_POLARIZABILITY_HPP
#define CORRLAT_POLARIZABILITY_HPP

#include <string>
#include <vector>

#include "corrlat/moments.hpp"
#include "corrlat/numerics.hpp"

namespace corrlat {

/// Single-pole permittivity model eps(i xi) = 1 + B1 w1^2 / (xi^2 + w1^2).
/// omega1 is used as an angular frequency in rad/s.
struct LorentzOscillator {
    double B1 = 0.0;
    double omega1 = 0.0; // rad/s
};

/// Diamond parameters used throughout the worked examples.
inline constexpr LorentzOscillator kDiamond{4.91, 1.777e16};
inline constexpr double kDiamondDensity = 3510.0; // kg/m^3, bulk

/// The 1e-6 scale printed in the spheroid polarizability formula; kept as
/// published. It cancels from every regime boundary and only rescales
/// absolute energies and frequencies.
inline constexpr double kPrintedAlphaScale = 1e-6;

double epsilon_imag_axis(const LorentzOscillator& material, double xi);

struct DepolarizationFactors {
    double parallel = 0.0;   // n_p along the symmetry axis, in (0, 1/3]
    double transverse = 0.0; // n_t = (1 - n_p) / 2
};

/// Prolate-spheroid depolarization factors for aspect = semi_major/semi_minor.
DepolarizationFactors depolarization_factors(double aspect);

/// Prolate spheroid (or sphere): dispersion model, semi-axes, mass density,
/// symmetry-axis orientation n = (sin t cos p, sin t sin p, cos t).
struct SpheroidParticle {
    double semi_major = 0.0; // length/2
    double semi_minor = 0.0; // width/2
    LorentzOscillator material;
    double density = 0.0; // kg/m^3
    double phi = 0.0;
    double theta = 0.0;

    double aspect() const { return semi_major / semi_minor; }
    double volume() const;
    double mass() const { return density * volume(); }
    void validate() const;
};

struct AlphaComponents {
    double parallel = 0.0;   // SI polarizability along the axis
    double transverse = 0.0;
};

/// alpha_{p,t}(i xi) = eps0 V 1e-6 (eps-1) / (1 + (eps-1) n_{p,t}).
AlphaComponents alpha_components(const SpheroidParticle& particle, double xi);

struct PrincipalMoments {
    double parallel = 0.0;   // <d^2> along the axis, C^2 m^2
    double transverse = 0.0;
};

/// Closed form: (hbar/pi) * eps0 V 1e-6 * pi B1 w1 / (2 sqrt(1 + n B1)).
PrincipalMoments principal_moments(const SpheroidParticle& particle);

/// Same moments by semi-infinite quadrature of alpha(i xi); kept as an
/// independent cross-check of the closed form.
PrincipalMoments principal_moments_quadrature(const SpheroidParticle& particle,
                                              const Tolerance& tol);

/// Orientation-rotated moment matrix M = I_t Id + (I_p - I_t) n n^T.
MomentMatrix moment_matrix(const SpheroidParticle& particle);
MomentMatrix moment_matrix_quadrature(const SpheroidParticle& particle,
                                      const Tolerance& tol);

struct MaterialRecord {
    std::string name;
    LorentzOscillator material;
    double density = 0.0;
};

/// JSON catalog: [{"name":..., "B1":..., "omega1_rad_s":..., "density_kg_m3":...}].
std::vector<MaterialRecord> load_material_catalog(const std::string& path);

} // namespace corrlat

#endif
