#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "loopdec/corpus.hpp"
#include "loopdec/free_lie.hpp"
#include "loopdec/oracles.hpp"

using namespace loopdec;
using doctest::Contains;

namespace {

namespace fs = std::filesystem;

/* A throwaway corpus root that cleans up after itself. */
struct ScratchRoot {
    fs::path path;
    ScratchRoot() : path(fs::temp_directory_path() / "loopdec_corpus_test")
    {
        fs::remove_all(path);
    }
    ~ScratchRoot() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

void overwrite(const fs::path& file, const std::string& text)
{
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << text;
}

}  // namespace

TEST_CASE("oracle anchors: Lyndon counts at desk scale")
{
    const auto m2 = oracle_lyndon(2, 4);
    CHECK(m2.by_length.at(1) == 2);
    CHECK(m2.by_length.at(2) == 1);
    CHECK(m2.by_length.at(3) == 2);
    CHECK(m2.by_length.at(4) == 3);
    CHECK(oracle_lyndon(1, 2).by_length.at(2) == 0);
    CHECK(oracle_lyndon(3, 2).by_length.at(2) == 3);
    // the multidegree refinement adds up to the plain count
    Int total = 0;
    for (const auto& [alpha, c] : m2.by_multidegree)
        total += c;
    Int plain = 0;
    for (const auto& [len, c] : m2.by_length)
        plain += c;
    CHECK(total == plain);
}

TEST_CASE("oracle anchors: the binary Witt product telescopes to 1/(1-2t)")
{
    std::vector<std::vector<Int>> factors;
    for (int n = 1; n <= 8; ++n)
        factors.push_back(oracle_inverse_power_factor(n, witt_count(2, n), 8));
    const auto product = oracle_series_product(factors, 8);
    Int expected = 1;
    for (int d = 0; d <= 8; ++d) {
        CHECK(product[static_cast<size_t>(d)] == expected);
        expected *= 2;
    }
}

TEST_CASE("oracle anchors: primitive dimensions")
{
    CHECK(oracle_primitives(1, 3, 3) == 1);
    CHECK(oracle_primitives(2, 3, 2) == 1);
    CHECK(oracle_primitives(2, 5, 2) == 1);
    CHECK(oracle_primitives(1, 3, 1) == 1);
    CHECK(oracle_primitives(2, 3, 1) == 2);
}

TEST_CASE("oracle subalgebra dimensions from bracket spans")
{
    // The full length-1 family generates everything: 2^n words of length n.
    const auto everything = oracle_subalgebra_dims(2, 3, {1}, 6);
    Int power = 1;
    for (int n = 0; n <= 6; ++n) {
        CHECK(everything[static_cast<size_t>(n)] == power);
        power *= 2;
    }

    // The single bracket [a,b] spans one line, and its powers one line each.
    const auto commutator = oracle_subalgebra_dims(2, 3, {2}, 6);
    for (int n = 0; n <= 6; ++n)
        CHECK(commutator[static_cast<size_t>(n)] == ((n % 2 == 0) ? 1 : 0));

    // One length alone: the algebra in that degree is the Lie span itself,
    // whose dimension is the Witt count.
    for (int n : {3, 4, 5}) {
        const auto one = oracle_subalgebra_dims(2, 5, {n}, n);
        CHECK(one[static_cast<size_t>(n)] == witt_count(2, n));
    }

    CHECK_THROWS_WITH(oracle_subalgebra_dims(2, 3, {1}, 13), Contains("beyond desk scale"));
}

TEST_CASE("oracle reciprocal of a unit series")
{
    const auto inv = oracle_unit_inverse({1, 2, 0, 0, 0});
    Int sign = 1;
    for (int d = 0; d <= 4; ++d) {
        CHECK(inv[static_cast<size_t>(d)] == sign);
        sign *= -2;
    }
    const auto neg = oracle_unit_inverse({-1, 1});
    CHECK(neg[0] == -1);
    CHECK(neg[1] == -1);  // (-1 + t)(-1 - t - t^2 - ...) = 1
    CHECK_THROWS_WITH(oracle_unit_inverse({2, 1}), Contains("constant term"));
}

TEST_CASE("the fixture list covers every module once over")
{
    const auto fixtures = corpus_fixtures();
    CHECK(fixtures.size() == 10);
    std::set<std::string> modules;
    std::set<std::string> dirs;
    for (const auto& fx : fixtures) {
        modules.insert(fx.module);
        CHECK(dirs.insert(fx.dir("root")).second);  // ids never collide
        CHECK(!fx.oracle.empty());
        CHECK(fx.certified_cutoff > 0);
        const auto meta = fx.meta();
        CHECK(meta["id"] == fx.id);
        CHECK(meta["oracle"] == fx.oracle);
    }
    CHECK(modules ==
          std::set<std::string>{"free_lie", "qsymm", "series", "subhopf", "tensor_hopf"});
}

TEST_CASE("golden files round trip bit for bit")
{
    ScratchRoot root;
    CHECK(write_corpus(root.str()) == 10);
    const auto report = check_corpus(root.str());
    CHECK(report.fixtures_checked == 10);
    CHECK(report.input_issues.empty());
    CHECK(report.mismatch_issues.empty());
    CHECK(report.ok());

    // Writing again changes nothing: regeneration is deterministic.
    write_corpus(root.str());
    CHECK(check_corpus(root.str()).ok());
}

TEST_CASE("a stale expected file is flagged as a mismatch")
{
    ScratchRoot root;
    write_corpus(root.str());
    const auto fixtures = corpus_fixtures();
    overwrite(fs::path(fixtures[0].dir(root.str())) / "expected.json", "{\"by_length\":{}}\n");
    const auto report = check_corpus(root.str());
    CHECK(report.input_issues.empty());
    REQUIRE(report.mismatch_issues.size() == 1);
    CHECK(report.mismatch_issues[0].message.find("differs from its regenerated bytes") !=
          std::string::npos);
    CHECK(!report.ok());
}

TEST_CASE("a missing file is an input issue, not a mismatch")
{
    ScratchRoot root;
    write_corpus(root.str());
    const auto fixtures = corpus_fixtures();
    fs::remove(fs::path(fixtures[3].dir(root.str())) / "input.json");
    const auto report = check_corpus(root.str());
    REQUIRE(report.input_issues.size() == 1);
    CHECK(report.input_issues[0].message.find("missing") != std::string::npos);
    CHECK(!report.ok());
}

TEST_CASE("reformatted but equivalent json still counts as stale bytes")
{
    // The corpus contract is byte identity, not structural equality; a
    // hand-reindented golden file must fail until regenerated.
    ScratchRoot root;
    write_corpus(root.str());
    const auto fixtures = corpus_fixtures();
    const fs::path meta = fs::path(fixtures[5].dir(root.str())) / "meta.json";
    overwrite(meta, fixtures[5].meta().dump(4) + "\n");
    const auto report = check_corpus(root.str());
    CHECK(report.mismatch_issues.size() == 1);
}
