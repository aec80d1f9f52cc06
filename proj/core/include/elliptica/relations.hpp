#ifndef ELLIPTICA_RELATIONS_HPP
#define ELLIPTICA_RELATIONS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "elliptica/theta.hpp"

namespace elliptica {

using MatrixC = Eigen::MatrixXcd;

/// The n^2 x n^2 coefficient matrix of the quadratic relations of
/// Q_{n,k}(E,tau).  Row (i,j) holds the relation
///   sum_r c_r^{(i,j)} x_{j-r} x_{i+r},
///   c_r^{(i,j)} = theta_{j-i+r(k-1)}(0) / (theta_{j-i-r}(-tau) theta_{kr}(tau)),
/// columns indexed by ordered monomials x_a x_b at position a*n + b.
struct RelationSystem {
    int n = 0;
    int k = 0;
    Complex tau{};
    ThetaBasis basis{};
    MatrixC coeffs;
    Eigen::VectorXd singular_values;
};

/// Belavin R-matrix R(z) on V tensor V, stored with columns as inputs:
/// op.col(i*n+j) = R(z)(e_i tensor e_j).
struct RMatrix {
    int n = 0;
    int k = 0;
    Complex z{};
    MatrixC op;
};

RelationSystem build_relations(int n, int k, const ThetaBasis& basis, Complex tau);

struct RankResult {
    int rank = 0;
    double gap = 0.0; // sigma_rank / sigma_{rank+1}
};

/// Count of singular values above rel_tol * sigma_max; throws RankAmbiguous
/// when the spectral gap at the threshold is < 10.
RankResult relation_rank(const RelationSystem& sys, double rel_tol = 1e-8);

RMatrix build_rmatrix(int n, int k, const ThetaBasis& basis, Complex tau, Complex z);

/// Relative Frobenius-norm defect of
///   R(u)_12 R(u+v)_23 R(v)_12 = R(v)_23 R(u+v)_12 R(u)_23
/// on V^{tensor 3}.  Zero (to rounding) when k = 1.
double ybe_residual(int n, int k, const ThetaBasis& basis, Complex tau, Complex u, Complex v);

/// Max over random z and rows (i,j) of the normalized value of the relation
/// evaluated at (z, z + (2-n)tau); k = 1 only.  shift_coeff overrides the
/// translation multiplier (2-n) for control experiments.
double graph_vanishing_residual(int n, const ThetaBasis& basis, Complex tau, int samples,
                                std::uint64_t seed);
double graph_vanishing_residual_shifted(int n, const ThetaBasis& basis, Complex tau, int samples,
                                        std::uint64_t seed, long shift_coeff);

/// Exhaustive search over (a,b) in {0,1/2}^2 minimizing the graph-vanishing
/// residual; throws CalibrationFailed when nothing reaches 1e-6.
Chars calibrate_characteristics(int n, const TorusParams& params, Complex tau,
                                int samples = 20, std::uint64_t seed = 0);

struct OrbitEntry {
    TorusPoint point;
    Eigen::VectorXcd eval; // (theta_0(z), ..., theta_{n-1}(z))
};

/// Points sigma^{-j} p for j = 0..N with their evaluation vectors (k = 1,
/// where sigma is translation by (2-n)tau).
std::vector<OrbitEntry> point_module_orbit(int n, const ThetaBasis& basis, Complex tau,
                                           const TorusPoint& p, int N);

} // namespace elliptica

#endif
