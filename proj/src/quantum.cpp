#include "corrlat/quantum.hpp"

#include <cmath>
#include <string>

#include "corrlat/constants.hpp"
#include "corrlat/response.hpp"

namespace corrlat {

double u0_cp(const MomentMatrix& M, double z0) { return u0_classical(M, z0); }

double u1_cp_sinusoid(const CpScenario& scenario, double x0) {
    Geometry g = scenario.geom;
    g.x0 = x0;
    return u1_classical_sinusoid(moment_matrix(scenario.particle), g);
}

double u1_cp_general(const SpheroidParticle& particle, const RoughnessProfile& profile,
                     double z0, double x0, double y0, bool allow_large_amplitude) {
    return u1_classical_general(moment_matrix(particle), profile, z0, x0, y0,
                                allow_large_amplitude);
}

namespace {

SecondMoments moments_for_shape(double aspect, const LorentzOscillator& material,
                                double phi, double theta) {
    SpheroidParticle p;
    p.semi_minor = 1e-9; // regime boundaries are scale invariant in the moments
    p.semi_major = aspect * p.semi_minor;
    p.material = material;
    p.density = 0.0;
    p.phi = phi;
    p.theta = theta;
    return moment_matrix(p);
}

} // namespace

double transition_g(double aspect, const LorentzOscillator& material) {
    if (!(aspect >= 1.0)) throw DomainError("transition_g: aspect must be >= 1");
    if (aspect == 1.0) return 0.0; // isotropic: C > 0 everywhere
    return c_border_lambda_over_z0(moments_for_shape(aspect, material, 0.0, 0.5 * kPi));
}

double border_phi(double aspect, const LorentzOscillator& material, double phi) {
    if (!(aspect >= 1.0)) throw DomainError("border_phi: aspect must be >= 1");
    if (!std::isfinite(std::tan(phi)))
        throw DomainError("border_phi: tan(phi) must be finite");
    return c_border_lambda_over_z0(moments_for_shape(aspect, material, phi, 0.5 * kPi));
}

double null_z0(const SpheroidParticle& particle, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("null_z0: lambda must be > 0");
    const MomentMatrix M = moment_matrix(particle);
    // A = sqrt(B^2 + C^2) can only reach zero when B vanishes identically.
    if (std::abs(M.xz) > 1e-12 * M.trace())
        throw NoSignChange("null_z0: orientation has B != 0, A never vanishes");
    const double border = c_border_lambda_over_z0(M);
    return lambda / border;
}

double oscillation_frequency(const CpScenario& scenario) {
    scenario.geom.validate();
    const MomentMatrix M = moment_matrix(scenario.particle);
    const double u = scenario.geom.u();
    const RegimeResult regime = classify_regime(M, u, scenario.geom.lambda);
    if (regime.regime == Regime::Null)
        throw NullAmplitude("oscillation_frequency: lateral amplitude is null");
    const double m_p = scenario.particle.mass();
    if (!(m_p > 0.0))
        throw DomainError("oscillation_frequency: particle mass must be > 0 "
                          "(set the density)");
    const double z0 = scenario.geom.z0;
    const double lam = scenario.geom.lambda;
    const double arg = 3.0 * scenario.geom.amplitude * kPi * regime.A /
                       (128.0 * lam * lam * z0 * z0 * z0 * z0 * kEpsilon0 * m_p);
    return std::sqrt(arg) / (2.0 * kPi);
}

} // namespace corrlat
