#ifndef ELLIPTICA_HILBERT_HPP
#define ELLIPTICA_HILBERT_HPP

#include <vector>

#include "elliptica/fractions.hpp"

namespace elliptica {

/// Neron-Severi class a*D + b*F on S^gE.
struct NSClass {
    long a = 0;
    long b = 0;
};

/// dim Q_j: the polynomial-ring Hilbert function C(n-1+j, j).
long long hilbert_Q(long n, long j);

/// dim H^0(S^gE, L) for [L] = aD + bF via (a + g b)/g! * prod_{i=1}^{g-1}(a+i);
/// requires a >= 0 and a + g*b > 0.
long long caci_h0(long g, long a, long b);

/// Degree-j dimension of the twisted homogeneous coordinate ring B for the
/// PowerOfE and SymmetricPower cases (side=last mapped to first).
long long hilbert_B(long n, long k, long j);

/// Per-degree dim ker(Psi) = hilbert_Q - hilbert_B for degrees 1..maxdeg;
/// the polynomial-ring (ProjectiveSpace) case is identically zero.
std::vector<long long> kernel_profile(long n, long k, long maxdeg);

/// (aD + bF)^g = a^g + g a^{g-1} b under F.F = 0, F.D^{g-1} = 1, D^g = 1.
long long ns_selfintersection(const NSClass& c, long g);

/// NS class of L'_{n/k} = D + (m-1)F for SymmetricPower(first) pairs.
NSClass ns_class_of_Lprime(long n, long k);

struct GushelFlags {
    bool globally_generated = false;
    bool ample = false;
    bool very_ample = false;
};

/// Positivity of aD + bF: globally generated iff a>=0, b>=2; ample iff
/// a>=1, b>=1; very ample iff a>=1, b>=3.
GushelFlags gushel_flags(const NSClass& c);

} // namespace elliptica

#endif
