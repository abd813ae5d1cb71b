#ifndef LOOPDEC_MOMENT_ANGLE_HPP
#define LOOPDEC_MOMENT_ANGLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "loopdec/series.hpp"
#include "loopdec/space.hpp"

namespace loopdec {

/* One looped coordinate space for the fiber formula. The series is that
 * of Omega X, so its constant term must be 1. It can come from looping a
 * simply connected co-H descriptor or be supplied directly for spaces
 * whose loop series is known by other means. */
struct LoopFactor {
    std::string name;
    TruncatedSeries omega;
};

LoopFactor looped(const SpaceDescriptor& y);
LoopFactor direct_loop(std::string name, TruncatedSeries omega);

/* One wedge summand of the fiber F^m_k: the coordinate subset, its
 * multiplicity binom(j-1, m-k), and the series t^{m-k} * prod_{i in S}
 * (omega_i - 1) without the multiplicity applied. */
struct PorterSummand {
    std::vector<int> subset;  // ascending 0-based indices into the input list
    Int multiplicity;
    TruncatedSeries series;
};

/* All summands of the fiber of the inclusion of the k-th coordinate
 * subspace arrangement into the full product: subsets of size j for
 * j = m-k+1 .. m, ordered by size and then lexicographically. Requires
 * m >= 2 and 1 <= k <= m. */
std::vector<PorterSummand> porter_fiber_summands(const std::vector<LoopFactor>& xs, int k);

/* Reduced series of F^m_k: the multiplicity-weighted sum of the summands
 * above. */
TruncatedSeries porter_fiber_series(const std::vector<LoopFactor>& xs, int k);

struct PorterHmReport {
    bool skipped;  // one space has no fiber term; nothing to check
    std::string note;
    TruncatedSeries lhs;  // loop series of the wedge
    TruncatedSeries rhs;  // product of the coordinate loop series times the looped fiber
    std::optional<int> first_mismatch;
    bool ok;
};

/* Check the series shadow of the first decomposition stage: the loop
 * series of the wedge equals prod_i 1/(1 - s_i) times the loop series of
 * the fiber F at k = m-1. The fiber's desuspension is formed before the
 * final suspension shift, keeping the comparison certified through the
 * cutoff. */
PorterHmReport porter_hm_consistency(const std::vector<SpaceDescriptor>& ys, int cutoff);

}  // namespace loopdec

#endif
