#include "loopdec/hilton_milnor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "loopdec/free_lie.hpp"
#include "loopdec/moment_angle.hpp"

namespace loopdec {

namespace {

void check_descriptors(const std::vector<SpaceDescriptor>& ys, int cutoff,
                       int needed_cutoff)
{
    if (ys.empty())
        throw std::invalid_argument("need at least one descriptor");
    if (cutoff < 0)
        throw std::invalid_argument("cutoff must be nonnegative");
    for (const auto& y : ys)
        if (y.cutoff() < needed_cutoff)
            throw std::invalid_argument(
                "descriptor " + y.name() + " is only certified through degree " +
                std::to_string(y.cutoff()) + "; this computation needs " +
                std::to_string(needed_cutoff));
}

/* Bottom degree of each desuspended series, with -1 marking a summand
 * whose reduced series vanishes (it contributes no factor at all). */
std::vector<int> desuspended_bottoms(const std::vector<SpaceDescriptor>& ys)
{
    std::vector<int> bottoms;
    bottoms.reserve(ys.size());
    for (const auto& y : ys) {
        auto b = y.reduced_series().bottom_degree();
        bottoms.push_back(b ? *b - 1 : -1);
    }
    return bottoms;
}

int weighted_bottom(const std::vector<int>& alpha, const std::vector<int>& bottoms)
{
    int total = 0;
    for (size_t i = 0; i < alpha.size(); ++i)
        total += alpha[i] * bottoms[i];
    return total;
}

TruncatedSeries series_power(TruncatedSeries base, Int e)
{
    TruncatedSeries out = TruncatedSeries::one(base.cutoff());
    while (e > 0) {
        if (e % 2 == 1)
            out = mul(out, base);
        e /= 2;
        if (e > 0)
            base = mul(base, base);
    }
    return out;
}

/* C(n, r) for a big n; the running product passes through zero exactly
 * when n < r, so no separate case is needed. */
Int binomial_big(const Int& n, int r)
{
    Int out = 1;
    for (int i = 0; i < r; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

using WedgeList = std::map<std::vector<int>, Int>;

/* Expand the fiber of (wedge -> product) over the current list into its
 * own wedge summands, collected by multidegree. A piece is indexed by a
 * sub-multiset of size >= 2 together with one exponent >= 1 for each
 * chosen copy; it carries multiplicity (size - 1) and multidegree the
 * exponent-weighted sum of its members'. Pieces whose series would start
 * beyond the cutoff are dropped, and everything they would later generate
 * starts deeper still. */
WedgeList expand_fiber(const WedgeList& list, const std::vector<int>& bottoms,
                       int cutoff)
{
    struct Type {
        const std::vector<int>* alpha;
        Int count;
        int bottom;
    };
    std::vector<Type> types;
    types.reserve(list.size());
    for (const auto& [alpha, count] : list)
        types.push_back({&alpha, count, weighted_bottom(alpha, bottoms)});

    WedgeList out;
    if (types.empty())
        return out;
    const int budget = cutoff - 1;  // cap on a piece's desuspended bottom
    const size_t m = types.front().alpha->size();
    std::vector<int> acc(m, 0);

    /* copies: members of type t already given exponents; picked and used:
     * total membership and consumed budget so far; ways: product of
     * C(count, copies) over the closed types. */
    std::function<void(size_t, int, int, int, const Int&)> descend =
        [&](size_t t, int copies, int picked, int used, const Int& ways) {
            Int closed = ways * binomial_big(types[t].count, copies);
            if (closed != 0) {
                if (t + 1 < types.size())
                    descend(t + 1, 0, picked, used, closed);
                else if (picked >= 2)
                    out[acc] += closed * (picked - 1);
            }
            const int tb = types[t].bottom;
            const auto& ta = *types[t].alpha;
            for (int n = 1; used + n * tb <= budget; ++n) {
                for (size_t i = 0; i < m; ++i)
                    acc[i] += n * ta[i];
                descend(t, copies + 1, picked + 1, used + n * tb, ways);
                for (size_t i = 0; i < m; ++i)
                    acc[i] -= n * ta[i];
            }
        };
    descend(0, 0, 0, 0, 1);
    return out;
}

}  // namespace

std::vector<HMFactor> hm_index(const std::vector<SpaceDescriptor>& ys, int cutoff)
{
    check_descriptors(ys, cutoff, cutoff);
    const auto bottoms = desuspended_bottoms(ys);
    const size_t m = ys.size();

    int series_cutoff = ys.front().cutoff() - 1;
    for (const auto& y : ys)
        series_cutoff = std::min(series_cutoff, y.cutoff() - 1);
    std::vector<TruncatedSeries> s;
    s.reserve(m);
    for (const auto& y : ys)
        s.push_back(y.desuspended().truncated(series_cutoff));

    std::vector<HMFactor> factors;
    std::vector<int> alpha(m, 0);
    const int budget = cutoff - 1;  // summand bottom is 1 + weighted bottom

    std::function<void(size_t, int)> descend = [&](size_t i, int used) {
        if (i == m) {
            if (std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; }))
                return;
            Int mult = witt_count_multi(alpha);
            if (mult == 0)
                return;
            TruncatedSeries u = TruncatedSeries::one(series_cutoff);
            for (size_t j = 0; j < m; ++j)
                if (alpha[j] > 0)
                    u = mul(u, pow(s[j], alpha[j]));
            factors.push_back({alpha, std::move(mult), 1 + used, shift(u, 1),
                               geometric_inverse(u)});
            return;
        }
        if (bottoms[i] < 0) {
            descend(i + 1, used);  // vanishing summand: exponent stays 0
            return;
        }
        for (int a = 0; used + a * bottoms[i] <= budget; ++a) {
            alpha[i] = a;
            descend(i + 1, used + a * bottoms[i]);
        }
        alpha[i] = 0;
    };
    descend(0, 0);

    std::stable_sort(factors.begin(), factors.end(),
                     [](const HMFactor& a, const HMFactor& b) { return a.bottom < b.bottom; });
    return factors;
}

HmReport verify_hm(const std::vector<SpaceDescriptor>& ys, int cutoff)
{
    check_descriptors(ys, cutoff, cutoff + 1);

    TruncatedSeries wedge_s = TruncatedSeries::zero(cutoff);
    for (const auto& y : ys)
        wedge_s += y.desuspended().truncated(cutoff);
    auto lhs = geometric_inverse(wedge_s);

    /* Every factor whose loop series moves at or before the cutoff has
     * summand bottom at most cutoff + 1; beyond that the product is
     * constant 1 in the compared range. */
    auto factors = hm_index(ys, cutoff + 1);
    auto rhs = TruncatedSeries::one(cutoff);
    for (const auto& f : factors)
        rhs = mul(rhs, series_power(f.loop.truncated(cutoff), f.multiplicity));

    auto mismatch = first_difference(lhs, rhs);
    return {std::move(lhs), std::move(rhs), factors.size(), mismatch,
            !mismatch.has_value()};
}

StageReport iterate_stages(const std::vector<SpaceDescriptor>& ys, int cutoff)
{
    check_descriptors(ys, cutoff, cutoff + 1);
    const auto bottoms = desuspended_bottoms(ys);
    const size_t m = ys.size();

    StageReport report;
    report.bottoms_strictly_increase = true;

    if (m >= 2) {
        std::vector<LoopFactor> xs;
        xs.reserve(m);
        for (const auto& y : ys)
            xs.push_back(looped(y));
        report.f1_series = porter_fiber_series(xs, static_cast<int>(m) - 1);
    }

    WedgeList list;
    for (size_t i = 0; i < m; ++i) {
        if (bottoms[i] < 0 || 1 + bottoms[i] > cutoff)
            continue;
        std::vector<int> alpha(m, 0);
        alpha[i] = 1;
        list[alpha] = 1;
    }

    int stage = 1;
    std::optional<int> previous_bottom;
    while (true) {
        Int wedge_size = 0;
        for (const auto& [alpha, count] : list) {
            wedge_size += count;
            report.factor_multiset[alpha] += count;
        }
        if (wedge_size < 2) {
            report.stages.push_back({stage, wedge_size, std::nullopt});
            break;
        }
        auto next = expand_fiber(list, bottoms, cutoff);
        if (next.empty()) {
            report.stages.push_back({stage, wedge_size, std::nullopt});
            break;
        }
        int fiber_bottom = cutoff + 1;
        for (const auto& [alpha, count] : next)
            fiber_bottom = std::min(fiber_bottom, 1 + weighted_bottom(alpha, bottoms));
        report.stages.push_back({stage, wedge_size, fiber_bottom});
        if (previous_bottom && *previous_bottom >= fiber_bottom)
            report.bottoms_strictly_increase = false;
        previous_bottom = fiber_bottom;
        list = std::move(next);
        ++stage;
    }

    std::map<std::vector<int>, Int> expected;
    for (auto& f : hm_index(ys, cutoff))
        expected[f.alpha] = f.multiplicity;
    report.matches_hm_index = report.factor_multiset == expected;
    return report;
}

}  // namespace loopdec
