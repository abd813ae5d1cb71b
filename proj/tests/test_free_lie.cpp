#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopdec/free_lie.hpp"
#include "loopdec/oracles.hpp"

using namespace loopdec;

namespace {

TensorContext named_ab(long long p, int max_length)
{
    return TensorContext({{"a", 1}, {"b", 1}}, PrimeField(p), max_length, max_length);
}

std::vector<Word> of_length(const std::vector<Word>& words, int n)
{
    std::vector<Word> out;
    for (const Word& w : words)
        if (static_cast<int>(w.size()) == n)
            out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("is_lyndon")
{
    CHECK(is_lyndon({0}));
    CHECK(is_lyndon({0, 1}));
    CHECK(is_lyndon({0, 0, 1}));
    CHECK(!is_lyndon({1, 0}));
    CHECK(!is_lyndon({0, 0}));
    CHECK(!is_lyndon({0, 1, 0, 1}));
    CHECK(!is_lyndon({}));
}

TEST_CASE("lyndon_words over two letters")
{
    auto words = lyndon_words(2, 5);
    CHECK(of_length(words, 3) == std::vector<Word>{{0, 0, 1}, {0, 1, 1}});
    CHECK(of_length(words, 1).size() == 2);
    CHECK(of_length(words, 2).size() == 1);
    CHECK(of_length(words, 4).size() == 3);
    CHECK(of_length(words, 5).size() == 6);

    /* length-then-lex order overall */
    for (size_t i = 0; i + 1 < words.size(); ++i)
        CHECK(LengthLexLess{}(words[i], words[i + 1]));

    CHECK(lyndon_words(1, 4) == std::vector<Word>{{0}});
}

TEST_CASE("lyndon_words agree with the rotation-minimality oracle")
{
    for (int m : {2, 3}) {
        const int max_len = m == 2 ? 8 : 7;
        auto words = lyndon_words(m, max_len);
        auto counts = oracle_lyndon(m, max_len);
        for (int n = 1; n <= max_len; ++n)
            CHECK(Int(of_length(words, n).size()) == counts.by_length[n]);
        for (const Word& w : words)
            CHECK(is_lyndon(w));
    }
}

TEST_CASE("witt_count")
{
    const int expected[] = {2, 1, 2, 3, 6, 9};
    for (int n = 1; n <= 6; ++n)
        CHECK(witt_count(2, n) == expected[n - 1]);
    CHECK(witt_count(2, 12) == 335);
    CHECK(witt_count(3, 12) == 44220);
    for (int n = 2; n <= 8; ++n)
        CHECK(witt_count(1, n) == 0);
    CHECK(witt_count(1, 1) == 1);
}

TEST_CASE("witt_count_multi")
{
    CHECK(witt_count_multi({1, 1}) == 1);
    CHECK(witt_count_multi({3, 2}) == 2);
    CHECK(witt_count_multi({2, 2}) == 1);
    CHECK(witt_count_multi({1, 0}) == 1);
    CHECK(witt_count_multi({4, 0}) == 0);
    CHECK_THROWS_AS(witt_count_multi({0, 0}), std::invalid_argument);
}

TEST_CASE("multidegree counts match Witt across the enumeration")
{
    for (int m : {2, 3}) {
        auto counts = oracle_lyndon(m, 7).by_multidegree;
        for (const auto& [alpha, count] : counts)
            CHECK(witt_count_multi(alpha) == count);
        /* and the sum over each total length matches the single-graded form */
        auto words = lyndon_words(m, 7);
        std::map<std::vector<int>, Int> observed;
        for (const Word& w : words)
            observed[multidegree(w, m)] += 1;
        CHECK(observed == counts);
    }
}

TEST_CASE("standard_bracketing")
{
    auto ctx = named_ab(3, 6);
    CHECK(to_string(standard_bracketing({0, 1}), ctx) == "[a,b]");
    CHECK(to_string(standard_bracketing({0, 0, 1}), ctx) == "[a,[a,b]]");
    CHECK(to_string(standard_bracketing({0, 1, 1}), ctx) == "[[a,b],b]");
    CHECK(to_string(standard_bracketing({0}), ctx) == "a");
    CHECK(bracketing_word(standard_bracketing({0, 0, 1, 1})) == Word{0, 0, 1, 1});
    CHECK_THROWS_AS(standard_bracketing({1, 0}), std::invalid_argument);
}

TEST_CASE("expand")
{
    auto ctx = named_ab(5, 6);
    auto ab = expand(standard_bracketing({0, 1}), ctx);
    TensorElement expect(ctx);
    expect.add_term({0, 1}, 1);
    expect.add_term({1, 0}, -1);
    CHECK(ab == expect);

    auto aab = expand(standard_bracketing({0, 0, 1}), ctx);
    CHECK(aab.coeff({0, 0, 1}) == 1);
    CHECK(aab.coeff({0, 1, 0}) == 3);  // -2 mod 5
    CHECK(aab.coeff({1, 0, 0}) == 1);
    CHECK(aab.terms().size() == 3);

    CHECK(expand(standard_bracketing({0}), ctx) == TensorElement::generator(ctx, 0));
}

TEST_CASE("expansions are primitive")
{
    auto ctx = named_ab(3, 5);
    for (const Word& w : lyndon_words(2, 5)) {
        auto x = expand(standard_bracketing(w), ctx);
        auto dx = coproduct(x);
        TensorSquareElement expect = tensor_pair(x, TensorElement::unit(ctx));
        for (const auto& [word, c] : x.terms())
            expect.add_term({}, word, c);
        CHECK(dx == expect);
    }
}

TEST_CASE("lie_power_subspace")
{
    auto ctx = named_ab(5, 4);
    auto l2 = lie_power_subspace(ctx, 2);
    CHECK(l2.dim() == 1);
    CHECK(l2.contains({0, 1, 4, 0}));  // ab - ba

    auto one = TensorContext({{"x", 1}}, PrimeField(5), 4, 4);
    CHECK(lie_power_subspace(one, 2).dim() == 0);

    CHECK(lie_power_subspace(ctx, 3).dim() == 2);
}

TEST_CASE("property: Lyndon expansions stay independent at every small prime")
{
    for (long long p : {3LL, 5LL, 7LL}) {
        for (int m : {2, 3}) {
            std::vector<Generator> gens;
            for (int i = 0; i < m; ++i)
                gens.push_back({std::string(1, static_cast<char>('a' + i)), 1});
            TensorContext ctx(gens, PrimeField(p), 6, 6);
            for (int n = 1; n <= 6; ++n)
                CHECK(lie_power_subspace(ctx, n).dim() == witt_count(m, n));
        }
    }
}

TEST_CASE("pbw_series_check in the length grading")
{
    auto r2 = pbw_series_check(2, 12);
    CHECK(r2.ok);
    CHECK(!r2.first_mismatch.has_value());
    CHECK(r2.lhs.coeff(12) == 4096);

    CHECK(pbw_series_check(1, 8).ok);
    CHECK(pbw_series_check(3, 12).ok);
}

TEST_CASE("pbw_series_check in the internal grading")
{
    auto even = TensorContext({{"u", 2}}, PrimeField(3), 10, 20);
    auto r = pbw_series_check(even, 20);
    CHECK(r.ok);
    CHECK(r.lhs == geometric_inverse(TruncatedSeries::monomial(2, 20)));

    auto mixed = TensorContext({{"u", 2}, {"v", 3}}, PrimeField(3), 5, 15);
    CHECK(pbw_series_check(mixed, 15).ok);
}
