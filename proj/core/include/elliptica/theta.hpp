#ifndef ELLIPTICA_THETA_HPP
#define ELLIPTICA_THETA_HPP

#include <utility>

#include "elliptica/torus.hpp"

namespace elliptica {

/// Half-characteristic offsets for the level-n theta basis.
struct Chars {
    double a = 0.0;
    double b = 0.0;
};

/// Basis {theta_alpha} of the n-dimensional space of order-n theta functions,
///
///   theta_alpha(z) = sum_m exp(pi i n eta (m + a + alpha/n)^2
///                              + 2 pi i (m + a + alpha/n)(n z + b)),
///
/// which transforms cyclically under translation by 1/n and eta/n.
struct ThetaBasis {
    int n = 1;
    Chars chars{};
    TorusParams params{};

    void validate() const {
        if (n < 1) throw InvalidParams("theta basis order n must be >= 1");
        params.validate();
    }
};

/// Truncated series value; tail bounded by params.trunc_tol.
Complex theta(const ThetaBasis& basis, long alpha, Complex z);

/// Relative residuals of the two lattice functional equations:
///   r1: theta(z+1)   vs e^{2 pi i n a} theta(z)
///   r2: theta(z+eta) vs e^{-pi i n eta - 2 pi i (n z + b)} theta(z)
/// each normalized by max(1, |lhs|, |rhs|).
std::pair<double, double> quasiperiodicity_residuals(const ThetaBasis& basis, long alpha, Complex z);

/// Relative residuals of the Heisenberg covariance laws:
///   h1: theta_alpha(z+1/n)   vs e^{2 pi i (a + alpha/n)} theta_alpha(z)
///   h2: theta_alpha(z+eta/n) vs e^{-pi i eta/n - 2 pi i z - 2 pi i b/n} theta_{alpha+1}(z)
std::pair<double, double> heisenberg_residuals(const ThetaBasis& basis, long alpha, Complex z);

} // namespace elliptica

#endif
