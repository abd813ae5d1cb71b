#include "loopdec/space.hpp"

#include <stdexcept>
#include <utility>

namespace loopdec {

SpaceDescriptor::SpaceDescriptor(std::string name, TruncatedSeries reduced)
    : name_(std::move(name)), reduced_(std::move(reduced))
{
    for (int deg = 0; deg <= std::min(1, reduced_.cutoff()); ++deg)
        if (reduced_.coeff(deg) != 0)
            throw std::invalid_argument(
                "space " + name_ + " has reduced homology in degree " +
                std::to_string(deg) + "; descriptors must be simply connected");
}

SpaceDescriptor SpaceDescriptor::sphere(int n, int cutoff)
{
    if (n < 2)
        throw std::invalid_argument("sphere dimension must be at least 2, got " +
                                    std::to_string(n));
    return SpaceDescriptor("S" + std::to_string(n),
                           TruncatedSeries::monomial(n, cutoff));
}

SpaceDescriptor SpaceDescriptor::suspended_cp_infinity(int cutoff)
{
    TruncatedSeries h(cutoff);
    for (int deg = 3; deg <= cutoff; deg += 2)
        h.set_coeff(deg, 1);
    return SpaceDescriptor("SigmaCPinf", std::move(h));
}

std::optional<int> SpaceDescriptor::connectivity() const
{
    auto bottom = reduced_.bottom_degree();
    if (!bottom)
        return std::nullopt;
    return *bottom - 1;
}

TruncatedSeries SpaceDescriptor::desuspended() const
{
    return shift(reduced_, -1);
}

TruncatedSeries loop_series(const SpaceDescriptor& y)
{
    return geometric_inverse(y.desuspended());
}

std::vector<TruncatedSeries> james_summands(const SpaceDescriptor& y, int max_terms)
{
    if (max_terms < 1)
        throw std::invalid_argument("james_summands needs at least one term");
    const TruncatedSeries s = y.desuspended();
    std::vector<TruncatedSeries> out;
    out.reserve(static_cast<size_t>(max_terms));
    TruncatedSeries power = TruncatedSeries::one(s.cutoff());
    for (int n = 1; n <= max_terms; ++n) {
        power = mul(power, s);
        out.push_back(shift(power, 1));
    }
    return out;
}

}  // namespace loopdec
