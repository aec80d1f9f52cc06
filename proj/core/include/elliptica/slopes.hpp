#ifndef ELLIPTICA_SLOPES_HPP
#define ELLIPTICA_SLOPES_HPP

#include <boost/rational.hpp>
#include <span>

#include "elliptica/fractions.hpp"

namespace elliptica {

using Rational = boost::rational<long long>;

/// Numerical class (rank, degree) of a locally free sheaf on E.
struct SheafClass {
    long long rank = 1;
    long long deg = 0;

    Rational slope() const { return Rational(deg, rank); }

    void validate() const {
        if (rank < 1) throw InvalidParams("sheaf class rank must be >= 1");
    }
};

/// Fold [n_1,...,n_g] as a negative continued fraction into an exact rational.
Rational fold_negcf(std::span<const long> cf);

/// deg(U x V) = deg(U)rank(V) + deg(V)rank(U); slopes add.
SheafClass tensor(const SheafClass& c1, const SheafClass& c2);

/// Strict criterion 1/mu1 + 1/mu2 < 1 for surjectivity of
/// H^0(U) x H^0(V) -> H^0(U x V); both slopes must be positive.
bool surjectivity_criterion(const SheafClass& c1, const SheafClass& c2);

/// Class (k', n) of the pushforward of L_{n/k} along E^g -> E; requires all
/// n_i >= 3.  Slope n/k' equals the folded reversed continued fraction and
/// exceeds 2.
SheafClass pushforward_class(long n, long k);

/// Kernel of the evaluation 0 -> K -> H^0(U) x O -> U -> 0, at the class
/// level: (deg - rank, -deg); requires deg > rank.
SheafClass evaluation_kernel_class(const SheafClass& c);

/// (h^0, h^1) for a semistable class of nonzero degree.
std::pair<long long, long long> h0_h1(const SheafClass& c);

/// mu(ker alpha) = (s muE + t)/(1 - s muE - t) + p muE + q.
Rational ker_alpha_slope(const Rational& muE, long p, long q, long s, long t);

/// mu(ker beta) = (p+s) muE + q + t; always >= ker_alpha_slope.
Rational ker_beta_slope(const Rational& muE, long p, long q, long s, long t);

struct SeesawResult {
    SheafClass total;
    Rational lo;
    Rational hi;
};

/// Middle class of an extension plus the seesaw slope bounds.
SeesawResult exact_sequence_bounds(const SheafClass& cA, const SheafClass& cB);

} // namespace elliptica

#endif
