#include "cydouble/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cydouble/errors.hpp"
#include "json_util.hpp"

namespace cydouble {

namespace {

std::string pair_str(const std::pair<Int, Int>& p) {
    return "(" + str(p.first) + "," + str(p.second) + ")";
}

std::string cubic_str(const CubicForm& c) {
    return "(" + str(c.c30) + "," + str(c.c21) + "," + str(c.c12) + "," + str(c.c03) + ")";
}

std::string cubic_str(const std::array<Int, 4>& c) {
    return "(" + str(c[0]) + "," + str(c[1]) + "," + str(c[2]) + "," + str(c[3]) + ")";
}

std::string tensor_str(const TripleTensor& t) {
    return "(" + str(t.t30) + "," + str(t.t21) + "," + str(t.t12) + "," + str(t.t03) + ")";
}

std::string coeffs_str(const Rat& p, const Int& q) {
    return "(" + str(p) + ", " + str(q) + ")";
}

std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Match: return "match";
        case CheckStatus::Mismatch: return "MISMATCH";
        case CheckStatus::NotApplicable: return "n/a";
    }
    return "?";
}

CheckResult make_result(const Catalog& catalog, std::string id, Check check,
                        std::string computed, std::string published, CheckStatus status) {
    CheckResult r{std::move(id), check, std::move(computed), std::move(published), status};
    r.known = status == CheckStatus::Mismatch &&
              catalog.is_known_discrepancy(r.id, to_string(check));
    return r;
}

CheckStatus compare(bool equal) {
    return equal ? CheckStatus::Match : CheckStatus::Mismatch;
}

}  // namespace

std::string to_string(Check c) {
    switch (c) {
        case Check::Hodge: return "hodge";
        case Check::Cubic: return "cubic";
        case Check::Kernel: return "kernel";
        case Check::Lambda: return "lambda";
        case Check::C2Coeffs: return "c2_coeffs";
        case Check::GeometricTensorAgreement: return "geometric_tensor_agreement";
        case Check::LambdaDistinct: return "lambda_distinct";
    }
    throw Error("invalid check value");
}

long VerificationReport::matches() const {
    return std::count_if(rows.begin(), rows.end(),
                         [](const CheckResult& r) { return r.status == CheckStatus::Match; });
}

long VerificationReport::mismatches() const {
    return std::count_if(rows.begin(), rows.end(), [](const CheckResult& r) {
        return r.status == CheckStatus::Mismatch;
    });
}

long VerificationReport::unexpected_mismatches() const {
    return std::count_if(rows.begin(), rows.end(), [](const CheckResult& r) {
        return r.status == CheckStatus::Mismatch && !r.known;
    });
}

long VerificationReport::not_applicable() const {
    return std::count_if(rows.begin(), rows.end(), [](const CheckResult& r) {
        return r.status == CheckStatus::NotApplicable;
    });
}

const CheckResult* VerificationReport::find(const std::string& id, Check check) const {
    for (const auto& r : rows)
        if (r.id == id && r.check == check) return &r;
    return nullptr;
}

VerificationReport verify_all(const Catalog& catalog) {
    VerificationReport report;
    for (const FanoFamily& f : catalog.families) {
        InvariantRecord rec = invariant_record(f);

        report.rows.push_back(make_result(catalog, f.id, Check::Hodge, pair_str(rec.hodge),
                                          pair_str(f.published.hodge),
                                          compare(rec.hodge == f.published.hodge)));

        if (f.published.cubic) {
            const auto& pub = *f.published.cubic;
            bool equal = rec.cubic.c30 == pub[0] && rec.cubic.c21 == pub[1] &&
                         rec.cubic.c12 == pub[2] && rec.cubic.c03 == pub[3];
            report.rows.push_back(make_result(catalog, f.id, Check::Cubic,
                                              cubic_str(rec.cubic), cubic_str(pub),
                                              compare(equal)));
        } else {
            report.rows.push_back(make_result(catalog, f.id, Check::Cubic,
                                              cubic_str(rec.cubic), "-",
                                              CheckStatus::NotApplicable));
        }

        if (f.published.kernel_generator) {
            const auto& pub = *f.published.kernel_generator;
            std::pair<Int, Int> negated{-pub.first, -pub.second};
            bool equal = rec.kernel == pub || rec.kernel == negated;  // sign-free
            report.rows.push_back(make_result(catalog, f.id, Check::Kernel,
                                              pair_str(rec.kernel), pair_str(pub),
                                              compare(equal)));
        } else {
            report.rows.push_back(make_result(catalog, f.id, Check::Kernel,
                                              pair_str(rec.kernel), "-",
                                              CheckStatus::NotApplicable));
        }

        if (f.published.lambda) {
            report.rows.push_back(make_result(catalog, f.id, Check::Lambda, str(rec.lambda),
                                              str(*f.published.lambda),
                                              compare(rec.lambda == *f.published.lambda)));
        } else {
            report.rows.push_back(make_result(catalog, f.id, Check::Lambda, str(rec.lambda),
                                              "-", CheckStatus::NotApplicable));
        }

        auto [p, q] = derive_c2_coeffs(f.index_r, f.h3_geom, f.k);
        report.rows.push_back(make_result(catalog, f.id, Check::C2Coeffs, coeffs_str(p, q),
                                          coeffs_str(f.c2_p, f.c2_q),
                                          compare(p == f.c2_p && q == f.c2_q)));

        // Rows whose stored tensor already came from the blow-up rules would
        // compare the rules against themselves; report those as n/a.
        TripleTensor geo = geometric_tensor(f);
        if (f.tensor_provenance == TensorProvenance::Geometric) {
            report.rows.push_back(make_result(catalog, f.id, Check::GeometricTensorAgreement,
                                              tensor_str(geo), tensor_str(f.tensor),
                                              CheckStatus::NotApplicable));
        } else {
            report.rows.push_back(make_result(catalog, f.id, Check::GeometricTensorAgreement,
                                              tensor_str(geo), tensor_str(f.tensor),
                                              compare(geo == f.tensor)));
        }
    }

    // Pairwise lambda-distinctness inside each overlapping Hodge group of the
    // published table.
    std::vector<std::pair<std::pair<Int, Int>, std::vector<const FanoFamily*>>> groups;
    for (const FanoFamily& f : catalog.families) {
        if (!in_published_table(f)) continue;
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == f.published.hodge; });
        if (it == groups.end())
            groups.push_back({f.published.hodge, {&f}});
        else
            it->second.push_back(&f);
    }
    for (const auto& [hodge, members] : groups) {
        if (members.size() < 2) continue;
        std::vector<Int> lambdas;
        std::string joined;
        for (const FanoFamily* f : members) {
            InvariantRecord rec = invariant_record(*f);
            if (!joined.empty()) joined += " / ";
            joined += f->id + ":" + str(rec.lambda);
            lambdas.push_back(rec.lambda);
        }
        bool distinct = true;
        for (size_t i = 0; i < lambdas.size(); ++i)
            for (size_t j = i + 1; j < lambdas.size(); ++j)
                if (lambdas[i] == lambdas[j]) distinct = false;
        report.rows.push_back(make_result(catalog, "group" + pair_str(hodge),
                                          Check::LambdaDistinct, joined,
                                          "pairwise distinct", compare(distinct)));
    }
    return report;
}

std::string render_report_text(const VerificationReport& report) {
    size_t id_w = 2, check_w = 5, computed_w = 8;
    for (const auto& r : report.rows) {
        id_w = std::max(id_w, r.id.size());
        check_w = std::max(check_w, to_string(r.check).size());
        computed_w = std::max(computed_w, r.computed.size());
    }
    std::ostringstream out;
    auto pad = [](const std::string& s, size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 1, ' ');
    };
    out << pad("id", id_w + 2) << pad("check", check_w + 2) << pad("status", 18)
        << pad("computed", computed_w + 2) << "published\n";
    for (const auto& r : report.rows) {
        std::string status = status_str(r.status);
        if (r.status == CheckStatus::Mismatch && r.known) status += " (known)";
        out << pad(r.id, id_w + 2) << pad(to_string(r.check), check_w + 2)
            << pad(status, 18) << pad(r.computed, computed_w + 2) << r.published << "\n";
    }
    out << "summary: " << report.rows.size() << " checks, " << report.matches()
        << " match, " << report.mismatches() << " mismatch ("
        << report.mismatches() - report.unexpected_mismatches() << " known), "
        << report.not_applicable() << " n/a\n";
    return out.str();
}

std::string report_to_json_text(const VerificationReport& report) {
    Json out;
    out["summary"] = Json{{"checks", report.rows.size()},
                          {"match", report.matches()},
                          {"mismatch", report.mismatches()},
                          {"known_mismatch", report.mismatches() - report.unexpected_mismatches()},
                          {"not_applicable", report.not_applicable()}};
    out["results"] = Json::array();
    for (const auto& r : report.rows) {
        out["results"].push_back(Json{{"id", r.id},
                                      {"check", to_string(r.check)},
                                      {"computed", r.computed},
                                      {"published", r.published},
                                      {"status", status_str(r.status)},
                                      {"known", r.known}});
    }
    return out.dump(2) + "\n";
}

std::vector<InvariantRecord> invariant_table(const Catalog& catalog,
                                             bool include_unpublished) {
    std::vector<InvariantRecord> records;
    for (const FanoFamily& f : catalog.families)
        if (include_unpublished || in_published_table(f))
            records.push_back(invariant_record(f));
    return records;
}

ExportFormat export_format_from_string(const std::string& s) {
    if (s == "json") return ExportFormat::Json;
    if (s == "csv") return ExportFormat::Csv;
    if (s == "md") return ExportFormat::Markdown;
    throw UnknownFormat("unknown export format '" + s + "' (expected json, csv or md)");
}

namespace {

Json record_json(const InvariantRecord& r) {
    Json out;
    out["id"] = r.id;
    out["hodge"] = Json::array({int_json(r.hodge.first), int_json(r.hodge.second)});
    out["cubic"] = Json::array({int_json(r.cubic.c30), int_json(r.cubic.c21),
                                int_json(r.cubic.c12), int_json(r.cubic.c03)});
    out["chern"] = Json::array({int_json(r.chern.l1), int_json(r.chern.l2)});
    out["kernel"] = Json::array({int_json(r.kernel.first), int_json(r.kernel.second)});
    out["lambda"] = int_json(r.lambda);
    return out;
}

InvariantRecord record_from_json(const Json& v) {
    if (!v.is_object()) throw ParseError("invariant record must be an object");
    for (const char* field : {"id", "hodge", "cubic", "chern", "kernel", "lambda"})
        if (!v.contains(field))
            throw ParseError(std::string("invariant record is missing '") + field + "'");
    auto ints = [](const Json& a, size_t n, const char* where) {
        if (!a.is_array() || a.size() != n)
            throw ParseError(std::string(where) + " must be an array of " +
                             std::to_string(n) + " integers");
        std::vector<Int> out;
        for (const auto& x : a) {
            if (!x.is_number_integer())
                throw ParseError(std::string(where) + " must contain integers");
            out.emplace_back(x.get<long>());
        }
        return out;
    };
    InvariantRecord rec;
    rec.id = v["id"].get<std::string>();
    auto h = ints(v["hodge"], 2, "hodge");
    rec.hodge = {h[0], h[1]};
    auto c = ints(v["cubic"], 4, "cubic");
    rec.cubic = {c[0], c[1], c[2], c[3]};
    auto l = ints(v["chern"], 2, "chern");
    rec.chern = {l[0], l[1]};
    auto k = ints(v["kernel"], 2, "kernel");
    rec.kernel = {k[0], k[1]};
    if (!v["lambda"].is_number_integer()) throw ParseError("lambda must be an integer");
    rec.lambda = Int(v["lambda"].get<long>());
    return rec;
}

}  // namespace

std::string render_records(const std::vector<InvariantRecord>& records, ExportFormat format) {
    switch (format) {
        case ExportFormat::Json: {
            Json arr = Json::array();
            for (const auto& r : records) arr.push_back(record_json(r));
            return arr.dump(2) + "\n";
        }
        case ExportFormat::Csv: {
            std::ostringstream out;
            out << "id,h11,h21,c30,c21,c12,c03,ker_a,ker_b,lambda\n";
            for (const auto& r : records) {
                out << r.id << "," << str(r.hodge.first) << "," << str(r.hodge.second) << ","
                    << str(r.cubic.c30) << "," << str(r.cubic.c21) << "," << str(r.cubic.c12)
                    << "," << str(r.cubic.c03) << "," << str(r.kernel.first) << ","
                    << str(r.kernel.second) << "," << str(r.lambda) << "\n";
            }
            return out.str();
        }
        case ExportFormat::Markdown: {
            std::ostringstream out;
            out << "| ID | (h11,h21) | (e1^3, e1^2e2, e1e2^2, e2^3) | lambda |\n";
            out << "| --- | --- | --- | --- |\n";
            for (const auto& r : records)
                out << "| " << r.id << " | " << pair_str(r.hodge) << " | "
                    << cubic_str(r.cubic) << " | " << str(r.lambda) << " |\n";
            return out.str();
        }
    }
    throw Error("invalid export format value");
}

std::string record_to_json_text(const InvariantRecord& record) {
    return record_json(record).dump(2) + "\n";
}

std::vector<InvariantRecord> records_from_json_text(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invariant records: ") + e.what());
    }
    if (!root.is_array()) throw ParseError("invariant records must be a JSON array");
    std::vector<InvariantRecord> out;
    for (const auto& v : root) out.push_back(record_from_json(v));
    return out;
}

}  // namespace cydouble
