#include "corrlat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>

namespace corrlat {

bool bessel_k_underflows(double u) { return u > kBesselUnderflowArg; }

double bessel_k(int order, double u) {
    if (order < 1 || order > 3)
        throw DomainError("bessel_k: order must be 1, 2 or 3, got " + std::to_string(order));
    if (!(u > 0.0))
        throw DomainError("bessel_k: argument must be > 0, got " + std::to_string(u));
    if (bessel_k_underflows(u)) return 0.0;
    return boost::math::cyl_bessel_k(order, u);
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double integral;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(c);
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        fv[j] = f(c - x);
        fv[14 - j] = f(c + x);
    }
    double gauss = fv[7] * kWg[3];
    double kron = fv[7] * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        kron += (fv[j] + fv[14 - j]) * kWgk[j];
        if (j % 2 == 1) gauss += (fv[j] + fv[14 - j]) * kWg[j / 2];
    }
    kron *= h;
    gauss *= h;
    // QUADPACK error sharpening, scale-invariant via the variation resasc.
    const double mean = kron / (b - a);
    double resasc = std::abs(fv[7] - mean) * kWgk[7];
    for (int j = 0; j < 7; ++j)
        resasc += (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean)) * kWgk[j];
    resasc *= std::abs(h);
    double err = std::abs(kron - gauss);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, kron, err};
}

double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   const Tolerance& tol, long* shared_evals, long shared_max) {
    if (!(tol.rel > 0.0) && !(tol.abs > 0.0))
        throw DomainError("integrate: tolerance must have rel > 0 or abs > 0");
    if (tol.max_evals < 1) throw DomainError("integrate: max_evals must be >= 1");
    if (a == b) return 0.0;

    long local_evals = 0;
    long* evals = shared_evals ? shared_evals : &local_evals;
    const long max_evals = shared_evals ? shared_max : tol.max_evals;

    std::priority_queue<Segment> queue;
    Segment whole = gk15(f, a, b);
    *evals += 15;
    double total = whole.integral;
    double total_err = whole.error;
    queue.push(whole);

    while (true) {
        const double target = std::max(tol.abs, tol.rel * std::abs(total));
        if (total_err <= target) return total;
        if (*evals + 30 > max_evals)
            throw ConvergenceError("integrate: eval budget exhausted before tolerance");
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval at machine resolution; accept its estimate as-is.
            if (queue.empty())
                throw ConvergenceError("integrate: interval collapsed before tolerance");
            total_err -= worst.error;
            continue;
        }
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        *evals += 30;
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Tolerance& tol) {
    return adaptive_gk(f, a, b, tol, nullptr, 0);
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               const Tolerance& tol, double scale) {
    if (!(scale > 0.0)) throw DomainError("integrate_semi_infinite: scale must be > 0");
    auto mapped = [&f, scale](double t) {
        const double om = 1.0 - t;
        if (om <= 0.0) return 0.0;
        const double xi = scale * t / om;
        if (!std::isfinite(xi)) return 0.0;
        return f(xi) * scale / (om * om);
    };
    return adaptive_gk(mapped, 0.0, 1.0, tol, nullptr, 0);
}

double integrate_2d(const std::function<double(double, double)>& f,
                    const Domain2D& domain, const Tolerance& tol) {
    Rect rect{};
    if (const auto* plane = std::get_if<TruncatedPlane>(&domain)) {
        if (!(tol.abs > 0.0))
            throw DomainError("integrate_2d: plane domain requires tol.abs > 0");
        if (!(plane->decay > 2.0))
            throw DomainError("integrate_2d: tail decay exponent must exceed 2");
        // Tail over r > R of coeff/r^decay is 2*pi*coeff / ((decay-2) R^(decay-2)).
        const double p = plane->decay;
        const double r = std::pow(2.0 * 3.14159265358979323846 * plane->tail_coefficient /
                                      ((p - 2.0) * tol.abs),
                                  1.0 / (p - 2.0));
        double radius = std::max(r, plane->min_radius);
        if (plane->max_radius > 0.0) radius = std::min(radius, plane->max_radius);
        rect = {plane->cx - radius, plane->cx + radius, plane->cy - radius,
                plane->cy + radius};
    } else {
        rect = std::get<Rect>(domain);
    }

    long evals = 0;
    const double height = std::abs(rect.y1 - rect.y0);
    Tolerance inner = tol;
    inner.rel = tol.rel > 0.0 ? 0.1 * tol.rel : 0.0;
    inner.abs = tol.abs > 0.0 && height > 0.0 ? 0.02 * tol.abs / height : 0.0;
    if (!(inner.rel > 0.0) && !(inner.abs > 0.0)) inner.rel = 1e-12;

    auto row = [&](double y) {
        return adaptive_gk([&f, y](double x) { return f(x, y); }, rect.x0, rect.x1,
                           inner, &evals, tol.max_evals);
    };
    Tolerance outer = tol;
    outer.abs = 0.5 * tol.abs;
    return adaptive_gk(row, rect.y0, rect.y1, outer, &evals, tol.max_evals);
}

double find_root(const std::function<double(double)>& f, Bracket bracket,
                 const Tolerance& tol) {
    double lo = bracket.lo, hi = bracket.hi;
    if (!(lo < hi)) throw DomainError("find_root: bracket requires lo < hi");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoSignChange("find_root: f has the same sign at both bracket ends");

    long evals = 2;
    double x = lo, fx = flo;
    while (true) {
        const double width = hi - lo;
        if (width <= std::max(tol.abs, tol.rel * std::max(std::abs(lo), std::abs(hi))))
            return 0.5 * (lo + hi);
        if (std::abs(fx) <= tol.abs && evals > 2) return x;
        if (evals >= tol.max_evals)
            throw ConvergenceError("find_root: eval budget exhausted");

        // Secant proposal, clamped well inside the bracket; otherwise bisect.
        double trial = lo - flo * (hi - lo) / (fhi - flo);
        const double margin = 0.01 * width;
        if (!(trial > lo + margin) || !(trial < hi - margin)) trial = 0.5 * (lo + hi);
        x = trial;
        fx = f(x);
        ++evals;
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
}

} // namespace corrlat
