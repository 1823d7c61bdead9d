#include "corrlat/response.hpp"

#include <algorithm>
#include <string>

#include "corrlat/numerics.hpp"

namespace corrlat {

KernelMatrix kernel_I(double z0, const WaveVector& q) {
    if (!(z0 > 0.0)) throw DomainError("kernel_I: z0 must be > 0");
    const double qn = q.norm();
    KernelMatrix m;
    if (qn == 0.0) {
        // Small-argument limits: u^3 K3 -> 8, u^2 K2 -> 2, higher powers -> 0.
        const double z4 = z0 * z0 * z0 * z0;
        m.xx = 3.0 / z4;
        m.yy = 3.0 / z4;
        m.zz = 6.0 / z4;
        return m;
    }
    const double u = z0 * qn;
    const double k2 = bessel_k(2, u);
    const double k3 = bessel_k(3, u);
    const double q2 = qn * qn;
    const double q3 = q2 * qn;

    m.xx = -0.375 * q.qx * q.qx * q2 * k2 + 0.375 * q3 / z0 * k3;
    m.yy = -0.375 * q.qy * q.qy * q2 * k2 + 0.375 * q3 / z0 * k3;
    m.zz = (2.0 + 0.375 * u * u) * q2 / (z0 * z0) * k2 + 0.25 * q3 / z0 * k3;
    m.xy = -0.375 * q.qx * q.qy * q2 * k2;
    m.xz_im = q.qx * q2 / z0 * k2 - 0.375 * q.qx * q3 * k3;
    m.yz_im = q.qy * q2 / z0 * k2 - 0.375 * q.qy * q3 * k3;
    return m;
}

double response_r(Response which, double u) {
    if (!(u > 0.0)) throw DomainError("response_r: u must be > 0, got " + std::to_string(u));
    if (bessel_k_underflows(u)) return 0.0;
    const double k2 = bessel_k(2, u);
    const double k3 = bessel_k(3, u);
    const double u2 = u * u;
    const double u3 = u2 * u;
    switch (which) {
        case Response::Xx: return u3 * (k3 - u * k2);
        case Response::Yy: return u3 * k3;
        case Response::Zz: return u2 * ((u2 + 16.0 / 3.0) * k2 + (2.0 / 3.0) * u * k3);
        case Response::Xz: return u3 * ((8.0 / 3.0) * k2 - u * k3);
    }
    throw DomainError("response_r: unknown component");
}

double response_scale(double u) {
    if (bessel_k_underflows(u)) return 0.0;
    return std::max({std::abs(response_r(Response::Xx, u)), response_r(Response::Yy, u),
                     response_r(Response::Zz, u), std::abs(response_r(Response::Xz, u))});
}

} // namespace corrlat
