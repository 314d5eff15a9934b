#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "rootposet/errors.hpp"
#include "rootposet/report.hpp"
#include "rootposet/tables.hpp"
#include "rootposet/verify.hpp"

using namespace rootposet;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("fixture tables") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(ad_table_count(sys("E7")) == 4160);
    CHECK(ad_product_formula(sys("F4")) == 105);
    CHECK(delta_covering_table(sys("E8")).coeffs() == std::vector<std::int64_t>{8, 21, 70, 21});
    CHECK(ab_covering_table(sys("G2")).coeffs() == std::vector<std::int64_t>{1, 3});
    CHECK(commutative_count_table(sys("E6")) == 25);
    CHECK_FALSE(commutative_count_table(sys("A4")).has_value());
    const auto e8 = tabulated_classes(sys("E8"));
    REQUIRE(e8.has_value());
    CHECK(e8->size() == 44);
}

TEST_CASE("text reports") {
    CHECK(report(sys("F4"), ReportTopic::Covering, ReportFormat::Text).find("Delta+: 4+7q+12q²+q³\n") != std::string::npos);
    CHECK(report(sys("G2"), ReportTopic::Ideals, ReportFormat::Text).find("G2: 8 ideals, 8 edges") == 0);
    CHECK(report(sys("A1"), ReportTopic::Abelian, ReportFormat::Text).find("A1: 2 Abelian ideals") == 0);
}

TEST_CASE("JSON schemas") {
    const auto ideals = nlohmann::json::parse(report(sys("A3"), ReportTopic::Ideals, ReportFormat::Json));
    CHECK(ideals["type"] == "A3");
    CHECK(ideals["rank"] == 3);
    CHECK(ideals["n_ideals"] == 14);
    CHECK(ideals["n_edges"] == 21);
    CHECK(ideals["per_type_counts"] == nlohmann::json({5, 6, 4, 6}));
    CHECK(ideals["narayana_coeffs"] == nlohmann::json({1, 6, 6, 1}));

    const auto ab = nlohmann::json::parse(report(sys("F4"), ReportTopic::Abelian, ReportFormat::Json));
    CHECK(ab["n_abelian"] == 16);
    CHECK(ab["n_edges"] == 20);
    CHECK(ab["covering_coeffs"] == nlohmann::json({1, 10, 5}));
    CHECK(ab["commutative_roots"].size() == 10);
    CHECK(ab["commutative_roots"][0].contains("coeffs"));
    CHECK(ab["commutative_roots"][0].contains("class"));

    const auto roots = nlohmann::json::parse(report(sys("E8"), ReportTopic::Roots, ReportFormat::Json));
    CHECK(roots["positive_roots"].size() == 120);
}

TEST_CASE("CSV reports") {
    const auto classes = report(sys("E6"), ReportTopic::Classes, ReportFormat::Csv);
    CHECK(classes.find("coeffs,class\n") == 0);
    CHECK(count(classes, "\n") == 26);
    const auto hasse = report(sys("F4"), ReportTopic::Hasse, ReportFormat::Csv);
    CHECK(count(hasse, "\n") == 35);
}

TEST_CASE("reports and exports are byte-stable") {
    const auto rs = sys("B3");
    for (auto t : {ReportTopic::Roots, ReportTopic::Hasse, ReportTopic::Ideals, ReportTopic::Abelian, ReportTopic::Classes,
                   ReportTopic::Covering})
        for (auto f : {ReportFormat::Text, ReportFormat::Json, ReportFormat::Csv}) CHECK(report(rs, t, f) == report(sys("B3"), t, f));
    for (auto d : {Diagram::Delta, Diagram::Ad, Diagram::Ab}) CHECK(export_diagram(rs, d) == export_diagram(sys("B3"), d));
}

TEST_CASE("DOT exports") {
    const auto ad = export_diagram(sys("A3"), Diagram::Ad);
    CHECK(count(ad, " [label=\"{") == 14);
    CHECK(count(ad, " -> ") == 21);
    const auto ab = export_diagram(sys("F4"), Diagram::Ab);
    CHECK(count(ab, " [label=\"{") == 16);
    CHECK(count(ab, " -> ") == 20);
    CHECK(count(export_diagram(sys("F4"), Diagram::Delta), " -> ") == 34);
}

TEST_CASE("name parsing") {
    CHECK(parse_topic("covering") == ReportTopic::Covering);
    CHECK(parse_format("csv") == ReportFormat::Csv);
    CHECK(parse_diagram("ab") == Diagram::Ab);
    CHECK_THROWS_AS(parse_topic("nope"), UnsupportedInput);
    CHECK_THROWS_AS(parse_format("xml"), UnsupportedInput);
    CHECK_THROWS_AS(parse_diagram("ba"), UnsupportedInput);
    CHECK(parse_suite("weights") == Suite::Weights);
    CHECK_THROWS_AS(parse_suite("everything"), UnsupportedInput);
}

TEST_CASE("verification harness at small rank") {
    VerifyOptions opt;
    opt.max_rank = 3;
    const auto r = run_verify(opt);
    CHECK(r.passed());
    CHECK(r.failures() == 0);
    CHECK(r.text() == run_verify(opt).text());
    opt.max_rank = 9;
    CHECK_THROWS_AS(run_verify(opt), UnsupportedInput);
    opt.max_rank = 0;
    CHECK_THROWS_AS(run_verify(opt), UnsupportedInput);
}
