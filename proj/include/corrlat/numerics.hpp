#ifndef CORRLAT_NUMERICS_HPP
#define CORRLAT_NUMERICS_HPP

#include <functional>
#include <variant>

#include "corrlat/errors.hpp"

namespace corrlat {

/// Accuracy request for quadrature and root finding. At least one of
/// rel/abs must be strictly positive.
struct Tolerance {
    double rel = 1e-10;
    double abs = 0.0;
    long max_evals = 2'000'000;
};

/// Sign-change interval for find_root (requires lo < hi).
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Arguments above this make K_nu underflow in double precision; bessel_k
/// returns exactly 0 there (see bessel_k_underflows).
inline constexpr double kBesselUnderflowArg = 700.0;

/// Modified Bessel function of the second kind, K_order(u), order in {1,2,3}.
/// Throws DomainError for u <= 0 or an unsupported order. For
/// u > kBesselUnderflowArg the result underflows and exactly 0 is returned.
double bessel_k(int order, double u);

/// True when bessel_k(., u) is in the flagged-underflow regime.
bool bessel_k_underflows(double u);

/// Adaptive Gauss-Kronrod (G7,K15) quadrature on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Tolerance& tol);

/// Integral of f over [0, inf), mapped to [0, 1] by xi = scale*t/(1-t).
/// `scale` should sit near the knee of the integrand (the default suits
/// O(1)-width integrands; pass the oscillator frequency for material models).
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const Tolerance& tol, double scale = 1.0);

struct Rect {
    double x0, x1, y0, y1;
};

/// Full plane truncated to a disk-bounding square around (cx, cy).
/// The integrand must satisfy |f| <= coeff / r^decay for r = |s - c| >= R,
/// with decay > 2; the truncation radius is chosen so the analytic tail
/// bound falls below tol.abs (tol.abs must be > 0 for this domain).
struct TruncatedPlane {
    double cx = 0.0, cy = 0.0;
    double tail_coefficient = 1.0;
    double decay = 4.0;
    double min_radius = 0.0;
    double max_radius = 0.0; // 0 = uncapped; callers may cap when the
                             // worst-case tail bound ignores known cancellation
};

using Domain2D = std::variant<Rect, TruncatedPlane>;

/// Nested adaptive quadrature over a rectangle or truncated plane.
double integrate_2d(const std::function<double(double, double)>& f,
                    const Domain2D& domain, const Tolerance& tol);

/// Bracketing bisection/secant hybrid. The bracket always contains the root;
/// stops when |f| <= tol.abs or the bracket width falls below
/// max(tol.abs, tol.rel * |x|). Throws NoSignChange, ConvergenceError.
double find_root(const std::function<double(double)>& f, Bracket bracket,
                 const Tolerance& tol);

} // namespace corrlat

#endif
