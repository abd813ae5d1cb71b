#ifndef LOOPDEC_SUBHOPF_HPP
#define LOOPDEC_SUBHOPF_HPP

#include <optional>
#include <utility>
#include <vector>

#include "loopdec/series.hpp"
#include "loopdec/space.hpp"
#include "loopdec/tensor_hopf.hpp"

namespace loopdec {

/* Homogeneous generating data for a subalgebra: (tensor length, span). */
using GeneratingFamily = std::vector<std::pair<int, Subspace>>;

/* The Lie powers L_n(V) for every length 2 <= n <= max_length that is not
 * a power of the field characteristic. Over F_p this family generates the
 * maximal natural coalgebra-split sub-Hopf algebra of T(V); here that is
 * a hypothesis under test, not an assumption, so the checks in
 * analyze_family are what give the output its meaning. */
GeneratingFamily lie_power_family(const TensorContext& ctx, int max_length);

struct FiltrationCheck {
    int length;
    bool passed;
};

/* Output of analyze_family. The series b, q, a are graded by tensor
 * length: b counts B itself, q = 1 - 1/b counts its indecomposables (a
 * sub-Hopf algebra that is a tensor algebra on its indecomposables has
 * series 1/(1 - q)), and a = series(T(V))/b counts the complement, so
 * b * a recovers the full tensor algebra series. quotient_dims holds the
 * independently computed dimensions of B_n modulo products; they must
 * reproduce q's coefficients. */
struct SubHopfResult {
    DegreewiseSubspaces basis;
    TruncatedSeries b;
    TruncatedSeries q;
    TruncatedSeries a;
    std::vector<Int> quotient_dims;  // indexed by tensor length, 0..max_length
    bool coalgebra_closed;
    std::vector<FiltrationCheck> filtration_checks;
};

/* Build the subalgebra generated by the family and derive the splitting
 * data. A negative coefficient in q or a means the family cannot span a
 * coalgebra-split tensor factor at this truncation; that is reported as a
 * domain_error naming the offending degree. filtration_checks record, for
 * each n, whether the series of the subalgebra generated by the family
 * components of length <= n factors over the previous one with the
 * expected gap in degrees 1..n-1 and the expected generator count in
 * degree n. */
SubHopfResult analyze_family(const TensorContext& ctx, const GeneratingFamily& family);

/* The complement series a for the Lie power family: the candidate
 * dimension series of the minimal coalgebra retract of T(V). */
TruncatedSeries minimal_complement_series(const TensorContext& ctx, int max_length);

struct LengthVerdict {
    int length;
    bool passed;
};

struct LocalizationReport {
    std::vector<LengthVerdict> lengths;
    bool ok;
};

/* Check that every primitive of tensor length n lies inside the Lie power
 * subalgebra, for each 2 <= n <= max_length that is not a power of the
 * characteristic. At those lengths the primitives are exactly Lie
 * elements, so they must land in the subalgebra generated by the family. */
LocalizationReport primitive_localization_check(const TensorContext& ctx, int max_length);

struct SeriesIdentityReport {
    TruncatedSeries lhs;
    TruncatedSeries rhs;
    std::optional<int> first_mismatch;
    bool ok;
};

/* Series shadow of the loop-space splitting off the minimal retract: model
 * V on the desuspended reduced homology of y (even mode, so h must live in
 * odd degrees), run the Lie power analysis, and compare loop_series(y)
 * against a(t) / (1 - q(t)) with both a and q reweighted by internal
 * degree. The q weights come from the explicit product quotients, so the
 * check exercises the freeness of B on its indecomposables rather than
 * assuming it. */
SeriesIdentityReport loop_splitting_check(const SpaceDescriptor& y, long long p, int cutoff);

}  // namespace loopdec

#endif
