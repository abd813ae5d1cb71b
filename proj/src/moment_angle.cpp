#include "loopdec/moment_angle.hpp"

#include <stdexcept>
#include <utility>

namespace loopdec {

namespace {

Int binomial(int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    Int out = 1;
    for (int i = 0; i < r; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

void check_input(const std::vector<LoopFactor>& xs, int k)
{
    const int m = static_cast<int>(xs.size());
    if (m < 2)
        throw std::invalid_argument("fiber formula needs at least two spaces, got " +
                                    std::to_string(m));
    if (k < 1 || k > m)
        throw std::invalid_argument("k must lie in 1.." + std::to_string(m) +
                                    ", got " + std::to_string(k));
}

int common_cutoff(const std::vector<LoopFactor>& xs)
{
    int cutoff = xs.front().omega.cutoff();
    for (const auto& x : xs)
        cutoff = std::min(cutoff, x.omega.cutoff());
    return cutoff;
}

/* Sum over subsets of size m-k+1 .. m of binom(|S|-1, m-k) times the
 * product of the reduced omega series, without the final t^{m-k} shift.
 * Splitting the shift off lets the consistency check desuspend by one
 * degree less and keep its full certified range. */
TruncatedSeries fiber_core(const std::vector<LoopFactor>& xs, int k,
                           std::vector<PorterSummand>* table)
{
    const int m = static_cast<int>(xs.size());
    const int cutoff = common_cutoff(xs);

    std::vector<TruncatedSeries> reduced;
    reduced.reserve(xs.size());
    for (const auto& x : xs) {
        if (x.omega.coeff(0) != 1)
            throw std::invalid_argument("loop series of " + x.name +
                                        " does not have constant term 1");
        reduced.push_back(sub(x.omega.truncated(cutoff), TruncatedSeries::one(cutoff)));
    }

    TruncatedSeries total = TruncatedSeries::zero(cutoff);
    std::vector<int> subset;
    // Enumerate subsets in ascending size and lexicographic order.
    for (int j = m - k + 1; j <= m; ++j) {
        const Int mult = binomial(j - 1, m - k);
        auto descend = [&](auto&& self, int next, TruncatedSeries prod) -> void {
            if (static_cast<int>(subset.size()) == j) {
                auto contribution = prod;
                contribution *= mult;
                total += contribution;
                if (table) {
                    auto shifted = shift(prod, m - k);
                    table->push_back({subset, mult, std::move(shifted)});
                }
                return;
            }
            const int missing = j - static_cast<int>(subset.size());
            for (int i = next; i <= m - missing; ++i) {
                subset.push_back(i);
                self(self, i + 1, mul(prod, reduced[static_cast<size_t>(i)]));
                subset.pop_back();
            }
        };
        descend(descend, 0, TruncatedSeries::one(cutoff));
    }
    return total;
}

}  // namespace

LoopFactor looped(const SpaceDescriptor& y)
{
    return {y.name(), loop_series(y)};
}

LoopFactor direct_loop(std::string name, TruncatedSeries omega)
{
    if (omega.coeff(0) != 1)
        throw std::invalid_argument("loop series of " + name +
                                    " does not have constant term 1");
    return {std::move(name), std::move(omega)};
}

std::vector<PorterSummand> porter_fiber_summands(const std::vector<LoopFactor>& xs, int k)
{
    check_input(xs, k);
    std::vector<PorterSummand> table;
    fiber_core(xs, k, &table);
    return table;
}

TruncatedSeries porter_fiber_series(const std::vector<LoopFactor>& xs, int k)
{
    check_input(xs, k);
    const int m = static_cast<int>(xs.size());
    return shift(fiber_core(xs, k, nullptr), m - k);
}

PorterHmReport porter_hm_consistency(const std::vector<SpaceDescriptor>& ys, int cutoff)
{
    if (ys.empty())
        throw std::invalid_argument("need at least one descriptor");
    if (cutoff < 0)
        throw std::invalid_argument("cutoff must be nonnegative");
    for (const auto& y : ys)
        if (y.cutoff() < cutoff + 1)
            throw std::invalid_argument(
                "descriptor " + y.name() + " is only certified through degree " +
                std::to_string(y.cutoff()) + "; the check needs " +
                std::to_string(cutoff + 1));

    const int m = static_cast<int>(ys.size());
    if (m == 1) {
        auto loops = loop_series(ys.front()).truncated(cutoff);
        return {true,
                "one wedge summand loops to itself; there is no fiber term",
                loops,
                loops,
                std::nullopt,
                true};
    }

    std::vector<LoopFactor> xs;
    std::vector<TruncatedSeries> desuspensions;
    xs.reserve(ys.size());
    desuspensions.reserve(ys.size());
    for (const auto& y : ys) {
        xs.push_back(looped(y));
        desuspensions.push_back(y.desuspended());
    }

    TruncatedSeries wedge_s = TruncatedSeries::zero(cutoff);
    for (const auto& s : desuspensions)
        wedge_s += s.truncated(cutoff);
    auto lhs = geometric_inverse(wedge_s);

    // At k = m-1 the fiber series is t times fiber_core, so the core IS
    // the desuspended fiber.
    auto rhs = geometric_inverse(fiber_core(xs, m - 1, nullptr).truncated(cutoff));
    for (const auto& s : desuspensions)
        rhs = mul(rhs, geometric_inverse(s.truncated(cutoff)));

    auto mismatch = first_difference(lhs, rhs);
    return {false, "", lhs, rhs, mismatch, !mismatch.has_value()};
}

}  // namespace loopdec
