#ifndef LOOPDEC_SPACE_HPP
#define LOOPDEC_SPACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "loopdec/series.hpp"

namespace loopdec {

/* A simply connected space presented by its reduced homology Poincare
 * series, truncated at an inclusive cutoff. Simple connectivity is what
 * licenses the loop-series recurrence below, so the constructor rejects
 * any nonzero coefficient in degrees 0 or 1. */
class SpaceDescriptor {
public:
    SpaceDescriptor(std::string name, TruncatedSeries reduced);

    /* S^n for n >= 2: a single homology class in degree n. */
    static SpaceDescriptor sphere(int n, int cutoff);

    /* Suspension of infinite complex projective space: one class in each
     * odd degree 3, 5, 7, ... */
    static SpaceDescriptor suspended_cp_infinity(int cutoff);

    const std::string& name() const { return name_; }
    const TruncatedSeries& reduced_series() const { return reduced_; }
    int cutoff() const { return reduced_.cutoff(); }

    /* Largest c with trivial reduced homology through degree c, so a
     * sphere S^n has connectivity n - 1. Empty when the whole truncated
     * series vanishes. */
    std::optional<int> connectivity() const;

    /* The series of the desuspension, shift(reduced, -1). For Y = Sigma X
     * this is the reduced series of X. */
    TruncatedSeries desuspended() const;

private:
    std::string name_;
    TruncatedSeries reduced_;
};

/* Poincare series of the loop space, geometric_inverse(shift(reduced, -1)).
 * The result's cutoff is one below the descriptor's, spent on the
 * desuspension. */
TruncatedSeries loop_series(const SpaceDescriptor& y);

/* Reduced series of the first max_terms summands in the stable splitting
 * of Sigma Omega Y: the n-th entry (1-based) is shift(desuspended^n, +1).
 * Their sum recovers t * loop_series(y) - t through the common cutoff. */
std::vector<TruncatedSeries> james_summands(const SpaceDescriptor& y, int max_terms);

}  // namespace loopdec

#endif
