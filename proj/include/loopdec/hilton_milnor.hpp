#ifndef LOOPDEC_HILTON_MILNOR_HPP
#define LOOPDEC_HILTON_MILNOR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "loopdec/series.hpp"
#include "loopdec/space.hpp"

namespace loopdec {

/* One factor in the loop-space decomposition of a finite wedge. The index
 * alpha assigns an exponent to each wedge summand; the factor stands for
 * all Lyndon words of that multidegree at once, hence the Witt
 * multiplicity. The summand series is shift(prod_i s_i^{alpha_i}, +1)
 * with zero exponents skipped, and the loop series is the geometric
 * inverse of its desuspension. */
struct HMFactor {
    std::vector<int> alpha;
    Int multiplicity;
    int bottom;  // bottom degree of the summand series
    TruncatedSeries summand;
    TruncatedSeries loop;
};

/* Enumerate every factor whose summand series has bottom degree at most
 * the cutoff, sorted by ascending bottom degree and then lexicographic
 * alpha. Multidegrees carried entirely by one wedge summand (other than
 * the unit vectors) have Witt count zero and are omitted. Descriptors
 * must share cutoffs at least cutoff + 1 so each summand series is
 * certified down to its bottom degree. */
std::vector<HMFactor> hm_index(const std::vector<SpaceDescriptor>& ys, int cutoff);

struct HmReport {
    TruncatedSeries lhs;  // loop series of the wedge
    TruncatedSeries rhs;  // product of factor loop series, with multiplicity
    std::size_t factor_count;
    std::optional<int> first_mismatch;
    bool ok;
};

/* Check 1/(1 - sum_i s_i) = prod_alpha [1/(1 - prod_i s_i^{alpha_i})]^{N(alpha)}
 * through the cutoff, N(alpha) the Witt multiplicity. The product
 * internally includes every factor whose loop series moves before or at
 * the cutoff, so both sides are exact in the compared range. */
HmReport verify_hm(const std::vector<SpaceDescriptor>& ys, int cutoff);

struct StageRecord {
    int stage;       // 1-based
    Int wedge_size;  // summands fed to this stage, counted with multiplicity
    /* Bottom degree of this stage's fiber series; empty when the fiber
     * clears the cutoff (or the wedge is too small to have a fiber),
     * which ends the iteration. */
    std::optional<int> fiber_bottom;
};

struct StageReport {
    std::vector<StageRecord> stages;
    /* Accumulated factors, keyed by multidegree over the original wedge. */
    std::map<std::vector<int>, Int> factor_multiset;
    /* First fiber computed by the moment-angle engine (only for m >= 2);
     * its bottom degree must agree with the stage-1 record. */
    std::optional<TruncatedSeries> f1_series;
    bool bottoms_strictly_increase;
    bool matches_hm_index;
};

/* Simulate the stagewise proof of the decomposition: split off the loop
 * spaces of the current wedge list, expand the fiber of its inclusion
 * into the product as a new wedge via the James splitting of each smash
 * factor, and repeat until the fiber bottom degree passes the cutoff.
 * Summands whose series move only beyond the cutoff are pruned; every
 * piece they would generate lies even deeper, so the surviving multiset
 * is exact and must equal hm_index at the same cutoff. */
StageReport iterate_stages(const std::vector<SpaceDescriptor>& ys, int cutoff);

}  // namespace loopdec

#endif
