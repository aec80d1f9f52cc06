#ifndef ELLIPTICA_ERRORS_HPP
#define ELLIPTICA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace elliptica {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
    using Error::Error;
};

// Theta series would need more than the hard cap of terms to meet trunc_tol.
struct NonConvergent : Error {
    using Error::Error;
};

// A theta value in a denominator fell below the configured guard.
// Signals tau too close to a zero of the basis (the excluded set).
struct DenominatorNearZero : Error {
    DenominatorNearZero(int index_, double value_)
        : Error("denominator theta_" + std::to_string(index_) +
                " near zero: |theta| = " + std::to_string(value_)),
          index(index_), value(value_) {}
    int index;
    double value;
};

// Spectral gap at the rank threshold is too small to certify a rank.
struct RankAmbiguous : Error {
    explicit RankAmbiguous(double gap_)
        : Error("numerical rank ambiguous: spectral gap " + std::to_string(gap_) + " < 10"),
          gap(gap_) {}
    double gap;
};

struct NotApplicable : Error {
    using Error::Error;
};

struct DegreeZero : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct CalibrationFailed : Error {
    explicit CalibrationFailed(double best_)
        : Error("no characteristic choice achieves graph-vanishing residual < 1e-6 (best " +
                std::to_string(best_) + ")"),
          best(best_) {}
    double best;
};

} // namespace elliptica

#endif
