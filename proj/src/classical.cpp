#include "corrlat/classical.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "corrlat/constants.hpp"
#include "corrlat/response.hpp"

namespace corrlat {

void Geometry::validate() const {
    if (!(z0 > 0.0)) throw DomainError("Geometry: z0 must be > 0");
    if (!(lambda > 0.0)) throw DomainError("Geometry: lambda must be > 0");
    if (amplitude < 0.0) throw DomainError("Geometry: amplitude must be >= 0");
    if (!allow_large_amplitude && amplitude / z0 > kPerturbativityGuard)
        throw PerturbativityViolation("Geometry: a/z0 = " + std::to_string(amplitude / z0) +
                                      " exceeds the first-order guard " +
                                      std::to_string(kPerturbativityGuard));
}

double u0_classical(const SecondMoments& D, double z0) {
    if (!(z0 > 0.0)) throw DomainError("u0_classical: z0 must be > 0");
    return -(D.xx + D.yy + 2.0 * D.zz) / (64.0 * kPi * kEpsilon0 * z0 * z0 * z0);
}

BcCoefficients bc_coefficients(const SecondMoments& D, double u) {
    if (!(u > 0.0)) throw DomainError("bc_coefficients: u must be > 0");
    BcCoefficients bc;
    bc.B = -2.0 * D.xz * response_r(Response::Xz, u);
    bc.C = D.xx * response_r(Response::Xx, u) + D.yy * response_r(Response::Yy, u) +
           D.zz * response_r(Response::Zz, u);
    bc.A = std::hypot(bc.B, bc.C);
    return bc;
}

double phase_delta(double B, double C) {
    if (B == 0.0 && C == 0.0)
        throw NullAmplitude("phase_delta: B and C both vanish");
    double delta = std::atan2(B, C);
    if (delta < 0.0) delta += 2.0 * kPi;
    return delta;
}

double u1_classical_sinusoid(const SecondMoments& D, const Geometry& geom) {
    geom.validate();
    const double u = geom.u();
    if (bessel_k_underflows(u)) return 0.0; // roughness effect vanishes
    const BcCoefficients bc = bc_coefficients(D, u);
    if (bc.A == 0.0) return 0.0;
    const double delta = phase_delta(bc.B, bc.C);
    const double z4 = geom.z0 * geom.z0 * geom.z0 * geom.z0;
    return -(3.0 * geom.amplitude) / (512.0 * kPi * kEpsilon0 * z4) * bc.A *
           std::cos(geom.k() * geom.x0 - delta);
}

double u1_classical_general(const SecondMoments& D, const RoughnessProfile& profile,
                            double z0, double x0, double y0,
                            bool allow_large_amplitude) {
    if (!(z0 > 0.0)) throw DomainError("u1_classical_general: z0 must be > 0");
    if (!allow_large_amplitude && profile.max_height() / z0 > kPerturbativityGuard)
        throw PerturbativityViolation(
            "u1_classical_general: max|h|/z0 exceeds the first-order guard");

    std::complex<double> sum(0.0, 0.0);
    for (const SpectralLine& line : profile.fourier_modes()) {
        if (bessel_k_underflows(z0 * line.q.norm())) continue;
        const KernelMatrix I = kernel_I(z0, line.q);
        const std::complex<double> weighted =
            D.xx * I.xx + D.yy * I.yy + D.zz * I.zz + 2.0 * D.xy * I.xy +
            2.0 * D.xz * I.xz() + 2.0 * D.yz * I.yz();
        const double arg = line.q.qx * x0 + line.q.qy * y0;
        sum += line.amplitude * std::complex<double>(std::cos(arg), std::sin(arg)) *
               weighted;
    }
    // Imaginary parts cancel by the +-q conjugate pairing.
    return -sum.real() / (64.0 * kPi * kEpsilon0);
}

namespace {

// Gradient (wrt the particle position) of the image-source influence
// F = z0 / rho^3 with rho^2 = |r0_par - s|^2 + z0^2.
struct InfluenceGradient {
    double gx, gy, gz;
};

InfluenceGradient influence_gradient(double wx, double wy, double z0) {
    const double rho2 = wx * wx + wy * wy + z0 * z0;
    const double rho = std::sqrt(rho2);
    const double rho5 = rho2 * rho2 * rho;
    return {-3.0 * z0 * wx / rho5, -3.0 * z0 * wy / rho5, (rho2 - 3.0 * z0 * z0) / rho5};
}

} // namespace

double oracle_u1_realspace(const SecondMoments& D, const RoughnessProfile& profile,
                           double z0, double x0, double y0, double rel_accuracy,
                           long max_evals) {
    if (!(z0 > 0.0)) throw DomainError("oracle_u1_realspace: z0 must be > 0");
    if (profile.max_height() / z0 > kPerturbativityGuard)
        throw PerturbativityViolation(
            "oracle_u1_realspace: max|h|/z0 exceeds the first-order guard");
    const double trace_abs = std::abs(D.xx) + std::abs(D.yy) + std::abs(D.zz);
    if (trace_abs == 0.0) return 0.0;

    const double prefactor = 1.0 / (8.0 * kPi * kPi * kEpsilon0);
    const double z4 = z0 * z0 * z0 * z0;
    const double integral_scale = profile.max_height() * trace_abs / z4;
    if (integral_scale == 0.0) return 0.0;

    auto integrand = [&](double sx, double sy) {
        const InfluenceGradient g = influence_gradient(x0 - sx, y0 - sy, z0);
        const double quad = D.xx * g.gx * g.gx + D.yy * g.gy * g.gy +
                            D.zz * g.gz * g.gz + 2.0 * D.xy * g.gx * g.gy +
                            2.0 * D.xz * g.gx * g.gz + 2.0 * D.yz * g.gy * g.gz;
        return profile.evaluate(sx, sy) * quad;
    };

    Tolerance tol;
    tol.rel = 0.0;
    tol.abs = rel_accuracy * integral_scale;
    tol.max_evals = max_evals;
    // |integrand| <= max|h| * 6 * trace|D| / rho^6 at large rho. The cap at
    // 40 z0 relies on the oscillatory cancellation of corrugated profiles
    // (and keeps the residual smooth-profile tail below ~4e-6 relative).
    TruncatedPlane plane;
    plane.cx = x0;
    plane.cy = y0;
    plane.decay = 6.0;
    plane.tail_coefficient = 6.0 * profile.max_height() * trace_abs;
    plane.min_radius = 15.0 * z0;
    plane.max_radius = 40.0 * z0;
    const double integral = integrate_2d(integrand, plane, tol);
    return -prefactor * integral;
}

RegimeResult classify_regime(const SecondMoments& D, double u, double lambda) {
    if (!(u > 0.0)) throw DomainError("classify_regime: u must be > 0");
    if (!(lambda > 0.0)) throw DomainError("classify_regime: lambda must be > 0");
    RegimeResult res;
    if (bessel_k_underflows(u)) {
        res.regime = Regime::Null;
        res.delta = std::nan("");
        res.x_min = std::nan("");
        return res;
    }
    const BcCoefficients bc = bc_coefficients(D, u);
    res.B = bc.B;
    res.C = bc.C;
    res.A = bc.A;
    const double null_threshold =
        kNullThresholdFactor * std::abs(D.trace()) * response_scale(u);
    if (bc.A <= null_threshold) {
        res.regime = Regime::Null;
        res.delta = std::nan("");
        res.x_min = std::nan("");
        return res;
    }
    res.delta = phase_delta(bc.B, bc.C);
    const double mod_pi = std::fmod(res.delta, kPi);
    const double off_axis = std::min(mod_pi, kPi - mod_pi);
    if (off_axis < kPeakValleyTolRad) {
        const bool near_pi = std::abs(res.delta - kPi) < 0.5 * kPi;
        res.regime = near_pi ? Regime::Valley : Regime::Peak;
        res.delta = near_pi ? kPi : (res.delta > 1.5 * kPi ? 0.0 : res.delta);
    } else {
        res.regime = Regime::Intermediate;
    }
    res.x_min = res.delta * lambda / (2.0 * kPi);
    return res;
}

double xmin(const SecondMoments& D, double u, double lambda) {
    const RegimeResult res = classify_regime(D, u, lambda);
    if (res.regime == Regime::Null)
        throw NullAmplitude("xmin: lateral-force amplitude is null");
    return res.x_min;
}

double c_border_lambda_over_z0(const SecondMoments& M, double lo, double hi) {
    if (!(lo > 0.0) || !(hi > lo))
        throw DomainError("c_border_lambda_over_z0: need 0 < lo < hi");
    const double tr = M.trace();
    if (!(tr > 0.0))
        throw DomainError("c_border_lambda_over_z0: moments must have trace > 0");
    const SecondMoments Mn = M.scaled(1.0 / tr);
    auto c_at = [&Mn](double lambda_over_z0) {
        return bc_coefficients(Mn, 2.0 * kPi / lambda_over_z0).C;
    };
    // Descend in lambda/z0 (ascend in u); C starts positive near the PFA side
    // and the first sign change is the border.
    const int n_scan = 600;
    double prev_l = hi;
    double prev_c = c_at(prev_l);
    for (int i = 1; i <= n_scan; ++i) {
        const double cur_l = hi * std::pow(lo / hi, double(i) / n_scan);
        const double cur_c = c_at(cur_l);
        if (cur_c == 0.0) return cur_l;
        if ((prev_c > 0.0) != (cur_c > 0.0)) {
            Tolerance tol{1e-13, 0.0, 200};
            return find_root(c_at, {cur_l, prev_l}, tol);
        }
        prev_l = cur_l;
        prev_c = cur_c;
    }
    throw NoSignChange("c_border_lambda_over_z0: C does not change sign on the scan");
}

double classical_border_lambda_over_z0(double phi) {
    const SecondMoments D =
        SecondMoments::from_dipole_spherical(1.0, phi, 0.5 * kPi);
    return c_border_lambda_over_z0(D, 0.01, 30.0);
}

} // namespace corrlat
