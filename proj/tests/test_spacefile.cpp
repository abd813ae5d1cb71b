#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "loopdec/spacefile.hpp"

using namespace loopdec;
using doctest::Contains;
using nlohmann::json;

namespace {

json parse(const char* text)
{
    return json::parse(text);
}

/* Writes text to a fresh file under the system temp directory and returns
 * its path; load tests need a real filesystem round trip. */
std::string scratch_file(const std::string& stem, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("loopdec_" + stem + ".json");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    return path.string();
}

}  // namespace

TEST_CASE("array form lists spaces in order")
{
    const auto file = parse_space_file(
        parse(R"([{"name":"S2","series":{"2":1}},{"name":"S5","series":{"5":1}}])"), "wedge");
    REQUIRE(file.spaces.size() == 2);
    CHECK(file.spaces[0].name == "S2");
    CHECK(file.spaces[0].dims.at(2) == 1);
    CHECK(file.spaces[1].name == "S5");
    CHECK(!file.prime);
    CHECK(!file.cutoff);
}

TEST_CASE("object form carries prime and cutoff")
{
    const auto file = parse_space_file(
        parse(R"({"spaces":[{"name":"S3","series":{"3":1}}],"prime":5,"cutoff":12})"), "wedge");
    CHECK(file.prime == 5);
    CHECK(file.cutoff == 12);
    REQUIRE(file.spaces.size() == 1);
}

TEST_CASE("zero entries are dropped, big ranks survive")
{
    const auto file = parse_space_file(
        parse(R"([{"name":"W","series":{"2":0,"4":"123456789012345678901234567890"}}])"), "wedge");
    CHECK(file.spaces[0].dims.count(2) == 0);
    CHECK(file.spaces[0].dims.at(4) == Int("123456789012345678901234567890"));
}

TEST_CASE("malformed documents are rejected with the source named")
{
    CHECK_THROWS_WITH_AS(parse_space_file(parse("[]"), "w.json"),
                         "w.json: no spaces listed", SpaceFileError);
    CHECK_THROWS_WITH_AS(parse_space_file(parse("3"), "w.json"),
                         "w.json: top level must be an array of spaces or an object",
                         SpaceFileError);
    CHECK_THROWS_WITH_AS(parse_space_file(parse(R"({"prime":3})"), "w.json"),
                         "w.json: missing \"spaces\" array", SpaceFileError);
    CHECK_THROWS_WITH_AS(parse_space_file(parse(R"({"spaces":[],"extra":1})"), "w.json"),
                         "w.json: unknown key \"extra\"", SpaceFileError);
    CHECK_THROWS_WITH_AS(parse_space_file(parse(R"([{"series":{"2":1}}])"), "w.json"),
                         "w.json: space #1 needs a nonempty \"name\"", SpaceFileError);
    CHECK_THROWS_WITH_AS(parse_space_file(parse(R"([{"name":"X"}])"), "w.json"),
                         "w.json: space X needs a \"series\" object keyed by degree",
                         SpaceFileError);
    CHECK_THROWS_WITH(parse_space_file(parse(R"([{"name":"X","series":{"two":1}}])"), "w.json"),
                      Contains("not an integer"));
    CHECK_THROWS_WITH(parse_space_file(parse(R"([{"name":"X","series":{"3":-1}}])"), "w.json"),
                      Contains("negative rank in degree 3"));
}

TEST_CASE("classes below degree two are refused by name")
{
    CHECK_THROWS_WITH_AS(
        parse_space_file(parse(R"([{"name":"circle","series":{"1":1}}])"), "w.json"),
        "w.json: space circle has a class in degree 1; descriptors must be simply connected "
        "(degrees >= 2)",
        SpaceFileError);
    CHECK_THROWS_WITH(parse_space_file(parse(R"([{"name":"pt","series":{"0":1}}])"), "w.json"),
                      Contains("degree 0"));
}

TEST_CASE("materialization pads, truncates, and honors the certified cutoff")
{
    const auto file = parse_space_file(
        parse(R"({"spaces":[{"name":"Y","series":{"3":1,"9":2}}],"cutoff":8})"), "wedge");
    const auto ys = materialize_spaces(file, 6);
    REQUIRE(ys.size() == 1);
    CHECK(ys[0].cutoff() == 6);
    CHECK(ys[0].reduced_series().coeff(3) == 1);
    CHECK(ys[0].reduced_series().coeff(4) == 0);  // absent degrees read as zero
    const auto full = materialize_spaces(file, 8);
    CHECK(full[0].reduced_series().coeff(8) == 0);  // degree 9 entry is beyond reach

    CHECK_THROWS_WITH_AS(materialize_spaces(file, 9),
                         "requested cutoff 9 exceeds the file's certified cutoff 8",
                         SpaceFileError);
}

TEST_CASE("files without a cutoff materialize to any depth")
{
    const auto file =
        parse_space_file(parse(R"([{"name":"S2","series":{"2":1}}])"), "wedge");
    const auto ys = materialize_spaces(file, 40);
    CHECK(ys[0].cutoff() == 40);
    CHECK(ys[0].reduced_series().coeff(2) == 1);
}

TEST_CASE("loading from disk reports missing and broken files")
{
    CHECK_THROWS_WITH(load_space_file("/nonexistent/wedge.json"),
                      Contains("cannot open space file"));

    const auto broken = scratch_file("broken_space", "{ not json");
    CHECK_THROWS_WITH(load_space_file(broken), Contains("parse error"));
    std::remove(broken.c_str());

    const auto good = scratch_file("good_space", R"([{"name":"S4","series":{"4":1}}])");
    const auto file = load_space_file(good);
    CHECK(file.spaces[0].name == "S4");
    std::remove(good.c_str());
}
