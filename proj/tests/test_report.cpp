#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cydouble/errors.hpp"
#include "cydouble/report.hpp"
#include "helpers.hpp"

using namespace cydouble;

TEST_CASE("verification report covers every row and every check") {
    const Catalog& catalog = test_catalog();
    VerificationReport report = verify_all(catalog);

    // 17 families x 6 checks, plus one distinctness row per overlapping group
    CHECK(report.rows.size() == 17 * 6 + 3);
    for (const auto& f : catalog.families) {
        for (Check c : {Check::Hodge, Check::Cubic, Check::Kernel, Check::Lambda,
                        Check::C2Coeffs, Check::GeometricTensorAgreement}) {
            const CheckResult* r = report.find(f.id, c);
            REQUIRE(r != nullptr);
            if (in_published_table(f)) {
                bool applicable = r->status != CheckStatus::NotApplicable;
                CHECK(applicable);
            }
        }
    }
    for (const char* group : {"group(2,86)", "group(2,44)", "group(2,58)"}) {
        const CheckResult* r = report.find(group, Check::LambdaDistinct);
        REQUIRE(r != nullptr);
        CHECK(r->status == CheckStatus::Match);
    }
}

TEST_CASE("the one genuine discrepancy is flagged and carries both values") {
    VerificationReport report = verify_all(test_catalog());

    const CheckResult* lambda110 = report.find("1-10", Check::Lambda);
    REQUIRE(lambda110 != nullptr);
    CHECK(lambda110->status == CheckStatus::Mismatch);
    CHECK(lambda110->known);
    CHECK(lambda110->computed == "166698440");
    CHECK(lambda110->published == "122507896");

    // every lambda row other than 1-10 matches
    for (const char* id : {"1-2", "1-17", "1-8", "1-9", "1-4", "1-12", "1-14"})
        CHECK(report.find(id, Check::Lambda)->status == CheckStatus::Match);

    // non-strict verification passes, strict does not
    CHECK(report.pass_default());
    CHECK_FALSE(report.pass_strict());
}

TEST_CASE("geometric divergence is reported, never silently green") {
    VerificationReport report = verify_all(test_catalog());
    const std::set<std::string> diverging = {"1-4", "1-8", "1-9", "1-10", "1-12", "1-14"};
    for (const auto& f : test_catalog().families) {
        const CheckResult* r = report.find(f.id, Check::GeometricTensorAgreement);
        REQUIRE(r != nullptr);
        if (diverging.count(f.id)) {
            CHECK(r->status == CheckStatus::Mismatch);
            CHECK(r->known);
        } else if (f.tensor_provenance == TensorProvenance::Geometric) {
            CHECK(r->status == CheckStatus::NotApplicable);
        } else {
            CHECK(r->status == CheckStatus::Match);
        }
    }
}

TEST_CASE("renderers are deterministic and well-formed") {
    VerificationReport report = verify_all(test_catalog());
    std::string text = render_report_text(report);
    CHECK(text == render_report_text(report));
    CHECK(text.find("summary:") != std::string::npos);
    CHECK(text.find("MISMATCH (known)") != std::string::npos);

    std::string json = report_to_json_text(report);
    CHECK(json.find("\"lambda_distinct\"") != std::string::npos);
}

TEST_CASE("invariant table selects the published subset by default") {
    const Catalog& catalog = test_catalog();
    CHECK(invariant_table(catalog).size() == 8);
    CHECK(invariant_table(catalog, true).size() == 17);
}

TEST_CASE("record export round-trips through json") {
    auto records = invariant_table(test_catalog());
    std::string json = render_records(records, ExportFormat::Json);
    auto reparsed = records_from_json_text(json);
    REQUIRE(reparsed.size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) CHECK(reparsed[i] == records[i]);

    CHECK_THROWS_AS(records_from_json_text("{"), ParseError);
    CHECK_THROWS_AS(records_from_json_text("[{\"id\": \"x\"}]"), ParseError);
}

TEST_CASE("export formats") {
    CHECK(export_format_from_string("json") == ExportFormat::Json);
    CHECK(export_format_from_string("csv") == ExportFormat::Csv);
    CHECK(export_format_from_string("md") == ExportFormat::Markdown);
    CHECK_THROWS_AS(export_format_from_string("xml"), UnknownFormat);

    auto records = invariant_table(test_catalog());
    std::string md = render_records(records, ExportFormat::Markdown);
    CHECK(md.find("1-9 | (2,44) | (36,18,-306,-904) | 5529560") != std::string::npos);

    std::string csv = render_records(records, ExportFormat::Csv);
    CHECK(csv.find("id,h11,h21,c30,c21,c12,c03,ker_a,ker_b,lambda\n") == 0);
}
