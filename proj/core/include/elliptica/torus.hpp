#ifndef ELLIPTICA_TORUS_HPP
#define ELLIPTICA_TORUS_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "elliptica/errors.hpp"

namespace elliptica {

using Complex = std::complex<double>;

/// Lattice datum for E = C/(Z + Z eta) plus series precision controls.
struct TorusParams {
    Complex eta{0.0, 1.0};
    double trunc_tol = 1e-14;
    double denom_guard = 1e-10;

    void validate() const {
        if (!(eta.imag() > 0.0))
            throw InvalidParams("Im(eta) must be > 0");
        if (!(trunc_tol > 0.0) || !(denom_guard > 0.0))
            throw InvalidParams("trunc_tol and denom_guard must be > 0");
    }
};

/// Point of E stored as lattice coordinates: z = u + v*eta with u, v in [0,1).
struct TorusPoint {
    double u = 0.0;
    double v = 0.0;

    static double wrap(double x) {
        double r = x - std::floor(x);
        if (r >= 1.0) r -= 1.0; // floor rounding at the boundary
        return r;
    }

    TorusPoint normalized() const { return {wrap(u), wrap(v)}; }

    TorusPoint operator+(const TorusPoint& o) const { return {wrap(u + o.u), wrap(v + o.v)}; }
    TorusPoint operator-(const TorusPoint& o) const { return {wrap(u - o.u), wrap(v - o.v)}; }
    TorusPoint operator-() const { return {wrap(-u), wrap(-v)}; }

    /// Integer multiple under the group law.
    TorusPoint scaled(long c) const {
        return {wrap(static_cast<double>(c) * u), wrap(static_cast<double>(c) * v)};
    }
};

inline Complex torus_to_complex(const TorusPoint& p, const TorusParams& params) {
    return Complex(p.u, 0.0) + Complex(p.v, 0.0) * params.eta;
}

/// Lattice coordinates of a complex number, reduced mod Lambda.
inline TorusPoint complex_to_torus(Complex z, const TorusParams& params) {
    double v = z.imag() / params.eta.imag();
    double u = z.real() - v * params.eta.real();
    return TorusPoint{u, v}.normalized();
}

inline double wrap_dist(double a, double b) {
    double d = std::fabs(TorusPoint::wrap(a - b));
    return std::min(d, 1.0 - d);
}

/// Wraparound-aware distance in lattice coordinates.
inline double torus_distance(const TorusPoint& a, const TorusPoint& b) {
    return std::max(wrap_dist(a.u, b.u), wrap_dist(a.v, b.v));
}

using TorusVector = std::vector<TorusPoint>;

} // namespace elliptica

#endif
