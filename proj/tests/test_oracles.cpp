#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopdec/oracles.hpp"

using namespace loopdec;

TEST_CASE("oracle_lyndon counts")
{
    auto two = oracle_lyndon(2, 4);
    CHECK(two.by_length[4] == 3);  // aaab, aabb, abbb
    CHECK(two.by_length[1] == 2);
    CHECK(oracle_lyndon(1, 3).by_length[2] == 0);
    CHECK(oracle_lyndon(3, 2).by_length[2] == 3);  // ab, ac, bc
    CHECK(two.by_multidegree[{2, 2}] == 1);
}

TEST_CASE("oracle_series_product")
{
    CHECK(oracle_series_product({}, 4) == std::vector<Int>{1, 0, 0, 0, 0});

    std::vector<Int> f{1, 2, 3};
    CHECK(oracle_series_product({f}, 2) == f);

    /* The free-Lie product formula collapses to the two-letter word count:
     * Π_n (1 - t^n)^{-W(n)} with W = 2,1,2,3,6,9,18,30 equals 1/(1-2t). */
    const int witt[] = {2, 1, 2, 3, 6, 9, 18, 30};
    std::vector<std::vector<Int>> factors;
    for (int n = 1; n <= 8; ++n)
        factors.push_back(oracle_inverse_power_factor(n, witt[n - 1], 8));
    auto prod = oracle_series_product(factors, 8);
    Int power = 1;
    for (int d = 0; d <= 8; ++d) {
        CHECK(prod[static_cast<size_t>(d)] == power);
        power *= 2;
    }
}

TEST_CASE("oracle_inverse_power_factor")
{
    CHECK(oracle_inverse_power_factor(1, 1, 3) == std::vector<Int>{1, 1, 1, 1});
    CHECK(oracle_inverse_power_factor(2, 3, 6) == std::vector<Int>{1, 0, 3, 0, 6, 0, 10});
    CHECK(oracle_inverse_power_factor(3, 0, 5) == std::vector<Int>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("oracle_primitives")
{
    CHECK(oracle_primitives(1, 3, 3) == 1);
    CHECK(oracle_primitives(2, 5, 2) == 1);
    CHECK(oracle_primitives(2, 3, 1) == 2);
    CHECK(oracle_primitives(1, 3, 4) == 0);
}
