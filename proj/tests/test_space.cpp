#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "loopdec/space.hpp"

using namespace loopdec;

TEST_CASE("descriptor validation")
{
    CHECK_THROWS_AS(SpaceDescriptor("point", TruncatedSeries::one(4)),
                    std::invalid_argument);
    TruncatedSeries circle(4);
    circle.set_coeff(1, 1);
    CHECK_THROWS_AS(SpaceDescriptor("circle", circle), std::invalid_argument);
    CHECK_THROWS_AS(SpaceDescriptor::sphere(1, 6), std::invalid_argument);

    auto s2 = SpaceDescriptor::sphere(2, 6);
    CHECK(s2.name() == "S2");
    CHECK(s2.reduced_series().coeff(2) == 1);
    CHECK(s2.connectivity() == 1);
    CHECK(s2.desuspended() == TruncatedSeries::monomial(1, 5));

    auto empty = SpaceDescriptor("trivial", TruncatedSeries::zero(6));
    CHECK(!empty.connectivity().has_value());
}

TEST_CASE("suspended infinite projective space")
{
    auto y = SpaceDescriptor::suspended_cp_infinity(10);
    for (int d = 0; d <= 10; ++d)
        CHECK(y.reduced_series().coeff(d) == ((d >= 3 && d % 2 == 1) ? 1 : 0));
    CHECK(y.connectivity() == 2);
}

TEST_CASE("loop series")
{
    // Loops on S3: the desuspension is t^2 and the loop series its
    // geometric series.
    auto omega_s3 = loop_series(SpaceDescriptor::sphere(3, 11));
    for (int d = 0; d <= 10; ++d)
        CHECK(omega_s3.coeff(d) == (d % 2 == 0 ? 1 : 0));

    // Loops on the suspension of CP^infinity: one generator in each even
    // positive degree, so every monomial in them appears once.
    auto omega = loop_series(SpaceDescriptor::suspended_cp_infinity(11));
    TruncatedSeries even(10);
    for (int d = 2; d <= 10; d += 2)
        even.set_coeff(d, 1);
    CHECK(omega == geometric_inverse(even));
    CHECK(omega.coeff(6) == 4);  // 6 = 6, 2+4, 4+2, 2+2+2

    CHECK(loop_series(SpaceDescriptor("trivial", TruncatedSeries::zero(8))) ==
          TruncatedSeries::one(7));
}

TEST_CASE("james summands")
{
    auto y = SpaceDescriptor::sphere(3, 12);
    auto pieces = james_summands(y, 5);
    REQUIRE(pieces.size() == 5);
    // S3 = Sigma S2, so the n-th piece is the suspended n-fold smash of
    // S2 with itself.
    for (int n = 1; n <= 5; ++n)
        CHECK(pieces[static_cast<size_t>(n - 1)] ==
              TruncatedSeries::monomial(2 * n + 1, 11));
    CHECK(pieces[0] == y.reduced_series().truncated(11));

    CHECK_THROWS_AS(james_summands(y, 0), std::invalid_argument);
}

TEST_CASE("james summands add up to the looped suspension")
{
    for (int cut : {9, 12}) {
        auto y = SpaceDescriptor::suspended_cp_infinity(cut);
        auto pieces = james_summands(y, cut);  // deeper pieces vanish below the cutoff
        TruncatedSeries total(cut - 1);
        for (const auto& p : pieces)
            total += p;
        auto expected = shift(loop_series(y), 1);
        expected.set_coeff(1, expected.coeff(1) - 1);  // drop the suspended unit
        CHECK(total == expected);
    }
}
