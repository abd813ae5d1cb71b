#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopdec/fplinalg.hpp"

using namespace loopdec;

namespace {

FpMatrix from_rows(const PrimeField& f, const std::vector<std::vector<long long>>& rows)
{
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    FpMatrix m(f, static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.set(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
    return m;
}

FpMatrix random_matrix(std::mt19937_64& rng, const PrimeField& f, int rows, int cols)
{
    std::uniform_int_distribution<long long> entry(0, f.p() - 1);
    FpMatrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, entry(rng));
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic")
{
    PrimeField f(7);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.sub(2, 5) == 4);
    for (long long a = 1; a < 7; ++a)
        CHECK(f.mul(a, f.inv(a)) == 1);

    CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK(PrimeField(2).characteristic_two());
    CHECK(!PrimeField(3).characteristic_two());
    CHECK_THROWS_AS(PrimeField(7).inv(0), std::domain_error);
}

TEST_CASE("rref")
{
    PrimeField f3(3);
    auto id = FpMatrix::identity(f3, 3);
    CHECK(rref(id).mat == id);

    auto ones = from_rows(f3, {{1, 1}, {1, 1}});
    auto r = rref(ones);
    CHECK(r.mat == from_rows(f3, {{1, 1}, {0, 0}}));
    CHECK(r.pivots == std::vector<int>{0});

    auto m = from_rows(f3, {{0, 2}, {1, 0}});
    CHECK(rref(m).mat == FpMatrix::identity(f3, 2));
}

TEST_CASE("property: rref is idempotent")
{
    std::mt19937_64 rng(551);
    PrimeField f5(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(rng, f5, 5, 7);
        auto once = rref(m);
        auto twice = rref(once.mat);
        CHECK(once.mat == twice.mat);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("kernel")
{
    PrimeField f5(5);
    CHECK(kernel(FpMatrix(f5, 2, 2)).dim() == 2);
    CHECK(kernel(FpMatrix::identity(f5, 3)).dim() == 0);

    auto k = kernel(from_rows(f5, {{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.contains({1, 4}));
    CHECK(!k.contains({1, 1}));
}

TEST_CASE("property: rank + nullity = columns")
{
    std::mt19937_64 rng(88);
    PrimeField f7(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(rng, f7, 4, 6);
        auto r = rref(m);
        CHECK(static_cast<int>(r.pivots.size()) + kernel(m).dim() == 6);
    }
}

TEST_CASE("kernel vectors really are in the null space")
{
    std::mt19937_64 rng(123);
    PrimeField f3(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix(rng, f3, 5, 8);
        auto k = kernel(m);
        for (int i = 0; i < k.dim(); ++i) {
            for (int row = 0; row < m.rows(); ++row) {
                long long acc = 0;
                for (int c = 0; c < m.cols(); ++c)
                    acc = f3.add(acc, f3.mul(m.at(row, c), k.basis().at(i, c)));
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("sum_and_intersect")
{
    PrimeField f5(5);
    auto a = Subspace::span(from_rows(f5, {{1, 0, 0}, {0, 1, 0}}));
    auto b = Subspace::span(from_rows(f5, {{0, 1, 0}, {0, 0, 1}}));
    auto [sum, inter] = sum_and_intersect(a, b);
    CHECK(sum == Subspace::full(f5, 3));
    CHECK(inter == Subspace::span(from_rows(f5, {{0, 1, 0}})));

    auto [s2, i2] = sum_and_intersect(a, a);
    CHECK(s2 == a);
    CHECK(i2 == a);

    auto x = Subspace::span(from_rows(f5, {{1, 0}}));
    auto y = Subspace::span(from_rows(f5, {{0, 1}}));
    auto [s3, i3] = sum_and_intersect(x, y);
    CHECK(s3 == Subspace::full(f5, 2));
    CHECK(i3.dim() == 0);

    CHECK_THROWS_AS(sum_and_intersect(a, x), std::invalid_argument);
}

TEST_CASE("property: Grassmann identity on random subspaces")
{
    std::mt19937_64 rng(31337);
    PrimeField f3(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = Subspace::span(random_matrix(rng, f3, 3, 6));
        auto b = Subspace::span(random_matrix(rng, f3, 3, 6));
        auto [sum, inter] = sum_and_intersect(a, b);
        CHECK(a.dim() + b.dim() == sum.dim() + inter.dim());
        /* Every intersection basis vector lies in both inputs. */
        for (int i = 0; i < inter.dim(); ++i) {
            std::vector<long long> v(6);
            for (int c = 0; c < 6; ++c)
                v[static_cast<size_t>(c)] = inter.basis().at(i, c);
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
    }
}

TEST_CASE("member")
{
    PrimeField f3(3);
    auto line = Subspace::span(from_rows(f3, {{1, 1}}));
    CHECK(member({0, 0}, line));
    CHECK(member({2, 2}, line));
    CHECK(!member({1, 0}, Subspace::span(from_rows(f3, {{0, 1}}))));
    CHECK_THROWS_AS(member({1, 0, 0}, line), std::invalid_argument);
}

TEST_CASE("span is canonical")
{
    PrimeField f7(7);
    auto a = Subspace::span(from_rows(f7, {{2, 4, 6}, {1, 1, 1}}));
    auto b = Subspace::span(from_rows(f7, {{1, 1, 1}, {1, 2, 3}, {3, 5, 0}}));
    CHECK(a.dim() == 2);
    CHECK(a == b);
}
