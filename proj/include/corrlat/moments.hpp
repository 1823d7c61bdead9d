#ifndef CORRLAT_MOMENTS_HPP
#define CORRLAT_MOMENTS_HPP

#include <array>
#include <cmath>

namespace corrlat {

/// Symmetric 3x3 dipole second-moment matrix in C^2 m^2. Classically this is
/// the outer product d_i d_j of a permanent dipole vector; for a polarizable
/// particle it holds the ground-state expectation values <d_i d_j>.
struct SecondMoments {
    double xx = 0.0, yy = 0.0, zz = 0.0;
    double xy = 0.0, xz = 0.0, yz = 0.0;

    static SecondMoments from_dipole_vector(double dx, double dy, double dz) {
        return {dx * dx, dy * dy, dz * dz, dx * dy, dx * dz, dy * dz};
    }

    /// d_x = |d| sin(theta) cos(phi), d_y = |d| sin(theta) sin(phi),
    /// d_z = |d| cos(theta).
    static SecondMoments from_dipole_spherical(double magnitude, double phi,
                                               double theta) {
        const double st = std::sin(theta);
        return from_dipole_vector(magnitude * st * std::cos(phi),
                                  magnitude * st * std::sin(phi),
                                  magnitude * std::cos(theta));
    }

    static SecondMoments isotropic(double m) { return {m, m, m, 0.0, 0.0, 0.0}; }

    double trace() const { return xx + yy + zz; }

    SecondMoments scaled(double s) const {
        return {s * xx, s * yy, s * zz, s * xy, s * xz, s * yz};
    }
};

using DipoleState = SecondMoments;
using MomentMatrix = SecondMoments;

} // namespace corrlat

#endif
