#include "catch_amalgamated.hpp"

#include "fixture.hpp"
#include "reference_values.hpp"

#include <bj/error.hpp>
#include <bj/ingest.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using namespace bj;

namespace {

Dataset parse(const std::string& text) {
    std::istringstream in(text);
    return parse_csv(in, {}, "test.csv");
}

const std::string kHeader = "year_quarter,life_premium,nonlife_premium,total_premium,gdp\n";

}  // namespace

TEST_CASE("penetration rate", "[ingest]") {
    PremiumRecord r;
    r.life_premium = 103575423;
    r.nonlife_premium = 203013013;
    r.total_premium = 306588436;
    r.gdp = 28038900000;
    CHECK_THAT(compute_ipr(r, Component::total), WithinAbs(0.010934, 1e-6));
    CHECK_THAT(compute_ipr(r, Component::total), WithinAbs(306588436.0 / 28038900000.0, 1e-18));
    r.total_premium = 0;
    CHECK(compute_ipr(r, Component::total) == 0.0);
    r.gdp = 0;
    CHECK_THROWS_AS(compute_ipr(r, Component::life), DataError);
    r.gdp = -5;
    CHECK_THROWS_AS(compute_ipr(r, Component::life), DataError);
}

TEST_CASE("bundled dataset", "[ingest]") {
    const auto ds = load_fixture();
    REQUIRE(ds.records.size() == 39);
    CHECK(ds.records.front().year == 2013);
    CHECK(ds.records.front().quarter == 1);
    CHECK(ds.records.back().year == 2022);
    CHECK(ds.records.back().quarter == 3);
    CHECK(ds.records.back().source_label == "2023_Q3");

    const auto ts = to_timeseries(ds.records, Component::total);
    CHECK(ts.size() == 39);
    CHECK(ts.start() == Period{2013, 1});
    CHECK(ts.frequency() == 4);
    CHECK(ts.label_at(38) == "2022 Q3");

    // The series maximum is 2021 Q2.
    const std::size_t q2_2021 = (2021 - 2013) * 4 + 1;
    CHECK_THAT(ts[q2_2021], WithinAbs(0.014532, 1e-6));
    CHECK_THAT(ts[q2_2021], WithinAbs(1412881220.0 / 97227900000.0, 1e-15));
    const auto life = to_timeseries(ds.records, Component::life);
    CHECK_THAT(life[q2_2021], WithinAbs(0.007512, 1e-6));
}

TEST_CASE("bundled text equals the data file", "[ingest]") {
    std::ifstream in(BJ_FIXTURE_CSV, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == std::string(fixture_csv()));
    CHECK(load_csv(BJ_FIXTURE_CSV).records.size() == 39);
}

TEST_CASE("computed rates match the printed percent columns", "[ingest]") {
    const auto printed = testing::printed_rates();
    const auto records = load_fixture().records;
    REQUIRE(printed.total.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        INFO(printed.labels[i]);
        // Percent columns carry four decimals, so agreement is to rounding.
        CHECK_THAT(100.0 * compute_ipr(records[i], Component::life), WithinAbs(printed.life[i], 1e-4));
        CHECK_THAT(100.0 * compute_ipr(records[i], Component::nonlife), WithinAbs(printed.nonlife[i], 1e-4));
        CHECK_THAT(100.0 * compute_ipr(records[i], Component::total), WithinAbs(printed.total[i], 1e-4));
    }
}

TEST_CASE("quarter labels", "[ingest]") {
    CHECK(parse_quarter_label("2013_Q1") == Period{2013, 1});
    CHECK(parse_quarter_label("2013 Q4") == Period{2013, 4});
    CHECK(parse_quarter_label("2020-Q2") == Period{2020, 2});
    CHECK_THROWS_AS(parse_quarter_label("2013_Q5"), DataError);
    CHECK_THROWS_AS(parse_quarter_label("Q1 2013"), DataError);
    CHECK_THROWS_AS(parse_quarter_label(""), DataError);
}

TEST_CASE("csv parsing", "[ingest]") {
    SECTION("separators, percent signs and header case") {
        const auto ds = parse(
            "Year_Quarter,LIFE_PREMIUM,nonlife_premium,total_premium,GDP\n"
            "2020_Q1,\"1,000\",\"2,000\",\"3,000\",\"100,000\"\n"
            "2020_Q2,1500,2500,4000,200000\n");
        REQUIRE(ds.records.size() == 2);
        CHECK(ds.records[0].life_premium == 1000);
        CHECK(ds.records[0].gdp == 100000);
        CHECK(ds.records[1].total_premium == 4000);
        CHECK(ds.warnings.empty());
    }
    SECTION("single record") {
        const auto ds = parse(kHeader + "2020_Q1,1,2,3,100\n");
        const auto ts = to_timeseries(ds.records, Component::total);
        CHECK(ts.size() == 1);
    }
    SECTION("total mismatch is a warning") {
        const auto ds = parse(kHeader + "2020_Q1,100,200,400,1000\n");
        REQUIRE(ds.warnings.size() == 1);
        CHECK_THAT(ds.warnings[0], ContainsSubstring("2020_Q1"));
    }
}

TEST_CASE("csv errors", "[ingest]") {
    SECTION("empty input") {
        CHECK_THROWS_AS(parse(""), DataError);
        CHECK_THROWS_WITH(parse(""), ContainsSubstring("empty"));
    }
    SECTION("missing column") {
        CHECK_THROWS_WITH(parse("year_quarter,life_premium,total_premium,gdp\n2020_Q1,1,2,3\n"),
                          ContainsSubstring("nonlife_premium"));
    }
    SECTION("malformed number names line and column") {
        try {
            (void)parse(kHeader + "2020_Q1,1,2,3,100\n2020_Q2,1,abc,3,100\n");
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK_THAT(e.what(), ContainsSubstring("line 3"));
            CHECK_THAT(e.what(), ContainsSubstring("nonlife_premium"));
        }
    }
    SECTION("duplicate quarter") {
        CHECK_THROWS_WITH(parse(kHeader + "2020_Q1,1,2,3,100\n2020_Q1,1,2,3,100\n"),
                          ContainsSubstring("2020_Q1"));
    }
    SECTION("gap lists the missing quarters") {
        try {
            (void)parse(kHeader + "2020_Q1,1,2,3,100\n2020_Q4,1,2,3,100\n");
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK_THAT(e.what(), ContainsSubstring("2020_Q2"));
            CHECK_THAT(e.what(), ContainsSubstring("2020_Q3"));
        }
    }
    SECTION("wrong column count") {
        CHECK_THROWS_AS(parse(kHeader + "2020_Q1,1,2,3\n"), DataError);
    }
    SECTION("missing file") {
        CHECK_THROWS_AS(load_csv("/nonexistent/premiums.csv"), DataError);
    }
}

TEST_CASE("component names", "[ingest]") {
    CHECK(parse_component("life") == Component::life);
    CHECK(parse_component("non-life") == Component::nonlife);
    CHECK(parse_component("TOTAL") == Component::total);
    CHECK(to_string(Component::nonlife) == "nonlife");
    CHECK_THROWS_AS(parse_component("health"), InvalidArgument);
}
