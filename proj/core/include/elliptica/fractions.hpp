#ifndef ELLIPTICA_FRACTIONS_HPP
#define ELLIPTICA_FRACTIONS_HPP

#include <span>
#include <string>
#include <vector>

#include "elliptica/torus.hpp"

namespace elliptica {

/// Exact combinatorial data attached to a coprime pair n > k >= 1:
/// the negative continued fraction [n_1,...,n_g] of n/k, the determinant
/// sequences k_i, l_i, the inverse k' of k mod n, and the translation
/// coefficients c_i with tau_i = c_i * tau.
struct FractionData {
    long n = 0;
    long k = 0;
    std::vector<long> cf;           // [n_1,...,n_g]
    std::vector<long> kseq;         // k_0..k_{g+1}
    std::vector<long> lseq;         // l_0..l_{g+1}
    long kprime = 0;                // l_g, with k*kprime == 1 (mod n)
    std::vector<long> sigma_coeffs; // c_i = k_i + l_i - n, i = 1..g
    long g() const { return static_cast<long>(cf.size()); }
};

struct VarietyKind {
    enum class Tag { PowerOfE, SymmetricPower, ProjectiveSpace, GeneralQuotient };
    enum class Side { first, last };
    Tag tag = Tag::GeneralQuotient;
    long g = 0;
    long m = 0;          // SymmetricPower only: n = (m-1)g + 1
    Side side = Side::first;
    long proj_dim = 0;   // ProjectiveSpace only: n - 1

    std::string label() const;
};

struct StandardDivisorType {
    std::vector<long> entries;       // [n_1,...,n_g]
    std::vector<long> point_degrees; // d_i = n_i - 2 + [i==1] + [i==g]
};

/// Negative continued fraction of n/k; all entries >= 2.
std::vector<long> negcf(long n, long k);

/// Determinant of the tridiagonal matrix with the given diagonal and -1
/// off-diagonals; d() = 1 by convention.
long tridiag_det(std::span<const long> seq);

FractionData fraction_data(long n, long k);

VarietyKind classify_variety(long n, long k);

/// 1-based indices i with n_i = 2 (the generators s_i of Sigma_{n/k}).
std::vector<long> sigma_group_generators(long n, long k);

/// s_i(z_1,...,z_g) replaces z_i by z_{i-1} - z_i + z_{i+1}, with z_0 = z_{g+1} = 0.
TorusVector apply_s(long i, const TorusVector& z);

/// sigma(z)_i = z_i + c_i * tau.
TorusVector apply_sigma(const FractionData& fd, const TorusPoint& tau, const TorusVector& z);

/// Quotient map E^g -> S^gE for the SymmetricPower cases; returns the
/// unordered multiset as a lexicographically sorted vector.
TorusVector rho_map(const VarietyKind& kind, const TorusVector& z);

/// Greedy matching under torus distance.
bool multiset_equal(const TorusVector& a, const TorusVector& b, double tol = 1e-12);

StandardDivisorType standard_divisor(long n, long k);

} // namespace elliptica

#endif
