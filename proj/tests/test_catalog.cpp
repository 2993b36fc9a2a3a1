#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "logint/catalog.hpp"

using namespace logint;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string minimal(const std::string& entries)
{
    return R"({"schema_version": 1, "metadata": {"stirling_convention": "signed"}, "entries": [)" + entries + "]}";
}

const char* diekama_entry = R"({"id": "d", "family": "squared_log_shift", "params": {"a": 2},
  "tags": [], "reference": {"topic": "t", "quote": "q"}})";

std::string error_of(const std::string& text)
{
    try {
        parse_catalog(text, "test.json");
    } catch (const CatalogError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(Catalog, BundledCatalogLoads)
{
    const Catalog& c = bundled_catalog();
    EXPECT_GE(c.entries.size(), 30u);
    for (const char* id : {"thm1", "thm2", "eq-diekama", "ex4-a-epi-n0"})
        EXPECT_NE(c.find(id), nullptr) << id;
    EXPECT_EQ(c.metadata.stirling_convention, to_string(calibrated_stirling_convention));
}

TEST(Catalog, RoundTripIsLosslessAndByteStable)
{
    std::string text = read_file(default_catalog_path());
    Catalog c = parse_catalog(text);
    EXPECT_EQ(parse_catalog(dump_catalog(c)), c);
    EXPECT_EQ(dump_catalog(c), text);
}

TEST(Catalog, SaveAndLoad)
{
    Catalog c = parse_catalog(minimal(diekama_entry));
    std::string path = ::testing::TempDir() + "logint_catalog_roundtrip.json";
    save_catalog(c, path);
    EXPECT_EQ(load_catalog(path), c);
    std::remove(path.c_str());
    EXPECT_THROW(load_catalog("/nonexistent/catalog.json"), CatalogError);
}

TEST(Catalog, EmptyEntryListIsValid)
{
    Catalog c = parse_catalog(minimal(""));
    EXPECT_TRUE(c.entries.empty());
    EXPECT_TRUE(list_entries(c).empty());
}

TEST(Catalog, UnknownFamilyIsNamed)
{
    std::string e = error_of(minimal(R"({"id": "x", "family": "xyz", "params": {}, "reference": {"topic": "t", "quote": "q"}})"));
    EXPECT_NE(e.find("family"), std::string::npos) << e;
    EXPECT_NE(e.find("'xyz'"), std::string::npos) << e;
}

TEST(Catalog, SyntaxErrorReportsLine)
{
    std::string text = "{\n  \"schema_version\": 1,\n  \"entries\": [,]\n}\n";
    std::string e = error_of(text);
    EXPECT_NE(e.find("test.json:3:"), std::string::npos) << e;
}

TEST(Catalog, StructuralErrors)
{
    EXPECT_NE(error_of(R"({"schema_version": 2, "entries": []})").find("schema_version"), std::string::npos);
    EXPECT_NE(error_of(R"({"schema_version": 1, "metadata": {"stirling_convention": "unsigned"}, "entries": []})")
                  .find("stirling_convention"),
              std::string::npos);
    EXPECT_NE(error_of(minimal(std::string(diekama_entry) + "," + diekama_entry)).find("duplicate id"),
              std::string::npos);
    EXPECT_NE(error_of(minimal(R"({"id": "d", "family": "squared_log_shift", "params": {"a": 2}, "colour": 1,
        "reference": {"topic": "t", "quote": "q"}})"))
                  .find("unknown field 'colour'"),
              std::string::npos);
    EXPECT_NE(error_of(minimal(R"({"id": "d", "family": "squared_log_shift", "params": {"a": 2, "b": 1},
        "reference": {"topic": "t", "quote": "q"}})"))
                  .find("not a parameter"),
              std::string::npos);
    EXPECT_NE(error_of(minimal(R"({"id": "d", "family": "squared_log_shift", "params": {"a": 2}})")).find("reference"),
              std::string::npos);
}

TEST(Catalog, InvalidDefaultsAreRejected)
{
    std::string e = error_of(minimal(R"({"id": "d", "family": "squared_log_shift", "params": {"a": -1},
        "reference": {"topic": "t", "quote": "q"}})"));
    EXPECT_NE(e.find("invalid defaults"), std::string::npos) << e;
    EXPECT_NE(e.find("Re(a) > 0"), std::string::npos) << e;
}

TEST(Catalog, ComplexValueForms)
{
    EXPECT_EQ(complex_from_json(json(2.5), "x"), cx(2.5, 0.0));
    EXPECT_EQ(complex_from_json(json::array({1.0, -2.0}), "x"), cx(1.0, -2.0));
    EXPECT_EQ(complex_from_json(json{{"re", 0.5}, {"im", 3.0}}, "x"), cx(0.5, 3.0));
    EXPECT_THROW(complex_from_json(json("two"), "x"), CatalogError);
}

TEST(Bind, DefaultsAndOverrides)
{
    const Catalog& c = bundled_catalog();
    const CatalogEntry& t1 = c.entry("thm1");
    EXPECT_EQ(bind(t1, {}), t1.params);
    ParamSet p = bind(t1, {{"m", 0.5}});
    EXPECT_EQ(p["m"], cx(0.5));
    EXPECT_EQ(p["v"], t1.params["v"]);

    ParamSet d = bind(c.entry("eq-diekama"), {{"a", pi}});
    EXPECT_EQ(d["a"], cx(pi));
}

TEST(Bind, ViolationNamesTheCondition)
{
    const CatalogEntry& t1 = bundled_catalog().entry("thm1");
    try {
        bind(t1, {{"m", -1.0}});
        FAIL() << "expected CatalogError";
    } catch (const CatalogError& e) {
        EXPECT_NE(std::string(e.what()).find("Re(m) > 0"), std::string::npos) << e.what();
    }
    EXPECT_THROW(bind(t1, {{"zz", 1.0}}), CatalogError);
}

TEST(List, Filters)
{
    const Catalog& c = bundled_catalog();
    auto all = list_entries(c);
    EXPECT_EQ(all.size(), c.entries.size());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](auto* a, auto* b) { return a->id < b->id; }));

    auto malm = list_entries(c, "malmsten");
    EXPECT_GE(malm.size(), 10u);
    for (const CatalogEntry* e : malm)
        EXPECT_TRUE(e->id.find("malmsten") != std::string::npos || e->family.find("malmsten") != std::string::npos ||
                    e->has_tag("malmsten"))
            << e->id;

    auto cat = list_entries(c, "catalan");
    EXPECT_EQ(cat.size(), 5u);
    EXPECT_TRUE(list_entries(c, "no-such-thing").empty());
}

TEST(Catalog, EntrySettings)
{
    const Catalog& c = bundled_catalog();
    EXPECT_EQ(c.entry("ex4-a-epi-n0").side(), Side::above);
    EXPECT_EQ(c.entry("malmsten-double-pole").residue_side(), Side::below);
    EXPECT_EQ(c.entry("eq-diekama").side(), Side::none);
    CatalogEntry blank;
    EXPECT_EQ(blank.side(), Side::below);
    EXPECT_EQ(blank.residue_side(), Side::none);
    EXPECT_THROW(c.entry("nope"), CatalogError);
}

TEST(Catalog, QuotesAppearVerbatimInTheSourceText)
{
    std::string text = read_file(LOGINT_REFERENCE_TEXT);
    if (text.empty())
        GTEST_SKIP() << "reference text not available at " << LOGINT_REFERENCE_TEXT;
    for (const auto& e : bundled_catalog().entries) {
        EXPECT_FALSE(e.reference.topic.empty()) << e.id;
        EXPECT_NE(text.find(e.reference.quote), std::string::npos) << e.id << ": " << e.reference.quote;
    }
}
