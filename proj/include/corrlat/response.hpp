#ifndef CORRLAT_RESPONSE_HPP
#define CORRLAT_RESPONSE_HPP

#include <cmath>
#include <complex>

#include "corrlat/constants.hpp"
#include "corrlat/errors.hpp"

namespace corrlat {

struct WaveVector {
    double qx = 0.0;
    double qy = 0.0;
    double norm() const { return std::hypot(qx, qy); }
};

/// Fourier-space response of the corrugation at height z0, units 1/length^4.
/// Diagonal entries and xy are real; xz and yz are purely imaginary and
/// stored as their imaginary parts.
struct KernelMatrix {
    double xx = 0.0, yy = 0.0, zz = 0.0, xy = 0.0;
    double xz_im = 0.0, yz_im = 0.0;

    std::complex<double> xz() const { return {0.0, xz_im}; }
    std::complex<double> yz() const { return {0.0, yz_im}; }
};

/// Geometric kernel I_ij(z0, q): Bessel K2/K3 combinations weighting each
/// dipole-moment component. q = 0 returns the analytic flat-offset limit.
KernelMatrix kernel_I(double z0, const WaveVector& q);

enum class Response { Xx, Yy, Zz, Xz };

/// Sinusoid response functions R_ij(u), u = k*z0 = 2*pi*z0/lambda.
/// Evaluated in the factored u^3 * (K combination) form; returns 0 for u in
/// the Bessel underflow regime. Throws DomainError for u <= 0.
double response_r(Response which, double u);

/// max(|R_xx|, R_yy, R_zz, |R_xz|) at u; the scale used by the null test.
double response_scale(double u);

} // namespace corrlat

#endif
