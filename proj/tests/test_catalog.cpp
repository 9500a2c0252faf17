#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace weylpsi;
namespace fs = std::filesystem;

namespace {

// Copy of the shipped data directory that a test may corrupt.
struct ScratchData {
    fs::path root;
    explicit ScratchData(const std::string& tag)
    {
        root = fs::temp_directory_path() / ("weylpsi-test-" + tag + "-" + std::to_string(::getpid()));
        fs::remove_all(root);
        fs::copy(data_directory(), root, fs::copy_options::recursive);
    }
    ~ScratchData() { fs::remove_all(root); }

    void replace(const std::string& file, const std::string& from, const std::string& to) const
    {
        fs::path p = root / file;
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        size_t pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), to);
        std::ofstream(p) << text;
    }
};

const TableRow& row_named(const std::vector<TableRow>& rows, const std::string& name)
{
    for (const auto& r : rows)
        if (r.record->name == name) return r;
    throw std::runtime_error("no row " + name);
}

}  // namespace

TEST_CASE("load_catalog examples")
{
    CHECK(load_type("G2").records.size() == 3);
    CHECK(load_type("E8").records.size() == 30);
    Catalog e6 = load_type("2E6");
    CHECK(e6.records.size() == 9);
    CHECK(e6.records.front().name == "1254");
    CHECK(format_word(e6.records.front().word, 6) == "1254");
    size_t total = 0;
    for (const auto& t : table_types()) total += load_type(t).records.size();
    CHECK(total == 72);
}

TEST_CASE("reference tables map printed strings to labels and back")
{
    for (const auto& t : table_types()) {
        Catalog c = load_type(t);
        for (const auto& row : c.reference.rows) {
            auto [printed, stacked] = c.reference.to_printed(row.labels);
            CHECK(printed == row.kac);
            CHECK(stacked == row.stacked);
            CHECK(KacDiagram{affine_diagram(c.rs), row.labels}.order() == row.lift_order);
        }
    }
    // d(D) = 30 for 3212123 with 1 on top
    Catalog e7 = load_type("E7");
    const ReferenceRow* a3 = e7.reference.find("E7(a3)");
    REQUIRE(a3);
    CHECK(a3->kac == "3212123");
    CHECK(a3->stacked == std::vector<int>{1});
    CHECK(KacDiagram{affine_diagram(e7.rs), a3->labels}.weighted_sum() == 30);
}

TEST_CASE("identify_class examples")
{
    Catalog e8 = load_type("E8");
    Identification a7 = identify_class(e8, test::element("E8", "2343654231435426543178"));
    REQUIRE(a7.unique());
    CHECK(a7.matches[0]->name == "E8(a7)");

    Identification g2 = identify_class(load_type("G2"), test::element("G2", "1212"));
    REQUIRE(g2.unique());
    CHECK(g2.matches[0]->name == "1212");
    CHECK(g2.matches[0]->reference.d == 3);

    std::mt19937_64 rng(21);
    Catalog f4 = load_type("F4");
    Identification four = identify_class(f4, test::random_conjugate(f4.find("4A1")->element, rng));
    REQUIRE(four.unique());
    CHECK(four.matches[0]->name == "4A1");

    CHECK_THROWS_AS(identify_class(f4, test::element("F4", "1")), std::invalid_argument);
    CHECK_THROWS_AS(identify_class(f4, test::element("E6", "123456")), std::invalid_argument);
}

TEST_CASE("random conjugates identify to their own class")
{
    std::mt19937_64 rng(22);
    for (const auto& t : table_types()) {
        Catalog c = load_type(t);
        for (const auto& rec : c.records)
            for (int k = 0; k < 3; ++k) {
                Identification id = identify_class(c, test::random_conjugate(rec.element, rng));
                REQUIRE_MESSAGE(id.unique(), t << " " << rec.name);
                CHECK(id.matches[0] == &rec);
            }
    }
    // the one colliding pair needs the disambiguator
    Catalog f4 = load_type("F4");
    Identification d4 = identify_class(f4, f4.find("D4")->element);
    CHECK(d4.charpoly == f4.find("C3+A1")->charpoly);
    CHECK(d4.disambiguator == "first_levi=~A2");
}

TEST_CASE("emit_tables examples")
{
    Catalog g2c = load_type("G2");
    auto g2 = emit_tables(g2c);
    REQUIRE(g2.size() == 3);
    CHECK(g2[0].record->name == "12");
    CHECK(g2[0].d == 6);
    CHECK(g2[0].kac.labels == std::vector<int>{1, 1, 1});
    CHECK(g2[1].d == 3);
    CHECK(g2[1].kac_printed == "110");
    CHECK(g2[2].record->name == "w0");
    CHECK(g2[2].d == 2);
    CHECK(g2[2].kac_printed == "010");

    Catalog d4c = load_type("3D4");
    auto d4 = emit_tables(d4c);
    const TableRow& r = row_named(d4, "1323");
    CHECK(r.d == 6);
    CHECK(r.kac.labels == std::vector<int>{1, 0, 1});

    Catalog f4c = load_type("F4");
    auto f4 = emit_tables(f4c);
    const TableRow& a = row_named(f4, "A3+~A1");
    CHECK(a.d == 4);
    CHECK(a.lift_adjoint == 8);
    CHECK(a.kac_printed == "02010");
    CHECK(a.good_computed);
    CHECK(a.good_holds);

    Catalog e8c = load_type("E8");
    auto e8 = emit_tables(e8c, {4, true, false, 1});
    CHECK_FALSE(e8.front().good_computed);
}

TEST_CASE("tables are identical for any worker count")
{
    Catalog c = load_type("E7");
    std::string one = format_rows(emit_tables(c, {1, true, false, 1}), TableFormat::csv);
    std::string eight = format_rows(emit_tables(c, {8, true, false, 1}), TableFormat::csv);
    CHECK(one == eight);
}

TEST_CASE("table formats")
{
    Catalog c = load_type("G2");
    auto rows = emit_tables(c);
    std::string csv = format_rows(rows, TableFormat::csv);
    CHECK(csv.rfind("type,name,word,d,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    std::string md = format_rows(rows, TableFormat::markdown);
    CHECK(md.find("| G2 | 1212 | 3 | 110 |") != std::string::npos);
    auto json = nlohmann::json::parse(format_rows(rows, TableFormat::json));
    REQUIRE(json.size() == 3);
    CHECK(json[0]["kac"] == "111");
    CHECK(json[0]["good_holds"] == true);
    CHECK(parse_table_format("md") == TableFormat::markdown);
    CHECK_THROWS_AS(parse_table_format("xml"), std::invalid_argument);
}

TEST_CASE("verify_against_reference on the shipped tables")
{
    for (const std::string t : {"G2", "3D4", "F4", "E6", "E7", "E8"}) {
        Catalog c = load_type(t);
        auto diffs = verify_against_reference(c, emit_tables(c, {4, true, false, 1}));
        CHECK_MESSAGE(diffs.empty(), t << ": " << (diffs.empty() ? "" : diffs.front().to_string()));
    }
}

TEST_CASE("a corrupted reference row gives a one line diff")
{
    ScratchData data("verify");
    data.replace("reference/G2.ref", "kac = 111", "kac = 101");
    Catalog c = load_catalog(data.root / "catalog" / "G2.cat");
    auto diffs = verify_against_reference(c, emit_tables(c));
    REQUIRE(diffs.size() == 1);
    CHECK(diffs[0].to_string() == "G2 12 kac: expected 101, got 111");
}

TEST_CASE("a corrupted d is reported")
{
    ScratchData data("order");
    data.replace("reference/3D4.ref", "name = 1323\nd = 6", "name = 1323\nd = 3");
    CHECK_THROWS_WITH_AS(load_catalog(data.root / "catalog" / "3D4.cat"), doctest::Contains("1323"), std::runtime_error);
}

TEST_CASE("load errors name the offending record")
{
    {
        ScratchData data("word");
        data.replace("catalog/F4.cat", "word = 2321343234", "word = 2321343233");
        CHECK_THROWS_WITH_AS(load_catalog(data.root / "catalog" / "F4.cat"), doctest::Contains("record D4"), std::runtime_error);
    }
    {
        ScratchData data("format");
        data.replace("catalog/G2.cat", "weylpsi-catalog/1", "weylpsi-catalog/9");
        CHECK_THROWS_AS(load_catalog(data.root / "catalog" / "G2.cat"), std::runtime_error);
    }
    {
        ScratchData data("missing");
        fs::remove(data.root / "reference" / "E6.ref");
        CHECK_THROWS_AS(load_catalog(data.root / "catalog" / "E6.cat"), std::runtime_error);
    }
    {
        ScratchData data("collision");
        data.replace("reference/F4.ref", "first_levi = ~A2", "first_levi = A2");
        CHECK_THROWS_AS(load_catalog(data.root / "catalog" / "F4.cat"), std::runtime_error);
    }
    CHECK_THROWS_AS(load_catalog("/nonexistent/catalog/G2.cat"), std::runtime_error);
}
