#pragma once

// Verification of the catalog against its published reference values, plus
// the renderers and exporters behind the command-line surface.

#include <string>
#include <vector>

#include "cydouble/catalog.hpp"
#include "cydouble/invariants.hpp"

namespace cydouble {

enum class Check {
    Hodge,
    Cubic,
    Kernel,
    Lambda,
    C2Coeffs,
    GeometricTensorAgreement,
    LambdaDistinct,  // per Hodge-group pairwise distinctness
};

std::string to_string(Check c);

enum class CheckStatus { Match, Mismatch, NotApplicable };

struct CheckResult {
    std::string id;  // family id, or "group(h11,h21)" for lambda_distinct rows
    Check check;
    std::string computed;
    std::string published;
    CheckStatus status = CheckStatus::NotApplicable;
    bool known = false;  // mismatch listed in the catalog's known_discrepancies
};

struct VerificationReport {
    std::vector<CheckResult> rows;

    long matches() const;
    long mismatches() const;
    long unexpected_mismatches() const;
    long not_applicable() const;

    bool pass_strict() const { return mismatches() == 0; }
    bool pass_default() const { return unexpected_mismatches() == 0; }

    const CheckResult* find(const std::string& id, Check check) const;
};

// Runs every check over every row: hodge and c2 coefficients for all
// families, cubic/kernel/lambda against the published table where it exists,
// geometric-tensor agreement where the stored tensor is independent of the
// blow-up rules, and pairwise lambda-distinctness inside each overlapping
// Hodge group.
VerificationReport verify_all(const Catalog& catalog);

std::string render_report_text(const VerificationReport& report);
std::string report_to_json_text(const VerificationReport& report);

// The invariant table: the eight published rows, or every family when
// include_unpublished is set (records computed from the catalog tensors).
std::vector<InvariantRecord> invariant_table(const Catalog& catalog,
                                             bool include_unpublished = false);

enum class ExportFormat { Json, Csv, Markdown };

// "json" | "csv" | "md"; throws UnknownFormat otherwise.
ExportFormat export_format_from_string(const std::string& s);

std::string render_records(const std::vector<InvariantRecord>& records, ExportFormat format);

std::string record_to_json_text(const InvariantRecord& record);
std::vector<InvariantRecord> records_from_json_text(const std::string& text);

}  // namespace cydouble
