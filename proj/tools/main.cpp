// Command-line surface: list/show families, emit invariant tables, verify the
// catalog against its published values, compare invariant pairs, export.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cydouble/catalog.hpp"
#include "cydouble/equivalence.hpp"
#include "cydouble/errors.hpp"
#include "cydouble/invariants.hpp"
#include "cydouble/report.hpp"

namespace {

using cydouble::Catalog;
using cydouble::FanoFamily;
using cydouble::Int;
using cydouble::InvariantRecord;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string pair_str(const std::pair<Int, Int>& p) {
    return "(" + cydouble::str(p.first) + "," + cydouble::str(p.second) + ")";
}

std::string cubic_str(const cydouble::CubicForm& c) {
    return "(" + cydouble::str(c.c30) + "," + cydouble::str(c.c21) + "," +
           cydouble::str(c.c12) + "," + cydouble::str(c.c03) + ")";
}

std::string tensor_str(const cydouble::TripleTensor& t) {
    return "(" + cydouble::str(t.t30) + "," + cydouble::str(t.t21) + "," +
           cydouble::str(t.t12) + "," + cydouble::str(t.t03) + ")";
}

std::string matrix_str(const cydouble::UnimodularMatrix& m) {
    return "[[" + cydouble::str(m.m11) + "," + cydouble::str(m.m12) + "],[" +
           cydouble::str(m.m21) + "," + cydouble::str(m.m22) + "]]";
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

// Data payloads are deterministic; timestamps appear only behind --meta.
void emit_text(const std::string& body, bool meta, const std::string& catalog_path) {
    if (meta)
        std::cout << "# generated-at: " << utc_timestamp() << "\n# catalog: " << catalog_path
                  << "\n";
    std::cout << body;
}

void emit_json(const Json& payload, bool meta, const std::string& catalog_path) {
    if (meta) {
        Json wrapped;
        wrapped["meta"] = Json{{"generated_at", utc_timestamp()}, {"catalog", catalog_path}};
        wrapped["data"] = payload;
        std::cout << wrapped.dump(2) << "\n";
    } else {
        std::cout << payload.dump(2) << "\n";
    }
}

Json record_json(const InvariantRecord& r) {
    return Json::parse(cydouble::record_to_json_text(r));
}

Json family_json(const FanoFamily& f) {
    // reuse the catalog serializer for a single row
    Catalog one;
    one.schema_version = 1;
    one.families.push_back(f);
    return Json::parse(cydouble::serialize_catalog(one))["families"][0];
}

std::string family_text(const FanoFamily& f) {
    std::ostringstream out;
    out << "id:               " << f.id << "\n"
        << "description:      " << f.description << "\n"
        << "index_r:          " << cydouble::str(f.index_r) << "\n"
        << "k:                " << cydouble::str(f.k) << "\n"
        << "h3_geom:          " << cydouble::str(f.h3_geom) << "\n"
        << "minus_k3:         " << cydouble::str(f.minus_k3) << "\n"
        << "h12:              " << cydouble::str(f.h12) << "\n"
        << "genus_fano:       " << cydouble::str(f.genus_fano) << "\n"
        << "genus_center:     " << cydouble::str(f.genus_center) << "\n"
        << "deg_center:       " << cydouble::str(f.deg_center) << "\n"
        << "tau:              " << (f.tau ? cydouble::str(*f.tau) : std::string("-")) << "\n"
        << "tensor:           " << tensor_str(f.tensor) << "\n"
        << "c2:               " << cydouble::str(f.c2_p) << "*H^2 - "
        << cydouble::str(f.c2_q) << "*HE\n"
        << "provenance:       " << cydouble::to_string(f.tensor_provenance) << "\n"
        << "published hodge:  " << pair_str(f.published.hodge) << "\n";
    if (f.published.cubic) {
        const auto& c = *f.published.cubic;
        out << "published cubic:  (" << cydouble::str(c[0]) << "," << cydouble::str(c[1])
            << "," << cydouble::str(c[2]) << "," << cydouble::str(c[3]) << ")\n"
            << "published kernel: " << pair_str(*f.published.kernel_generator) << "\n"
            << "published lambda: " << cydouble::str(*f.published.lambda) << "\n";
    }
    return out.str();
}

std::string record_text(const InvariantRecord& r) {
    std::ostringstream out;
    out << "id:      " << r.id << "\n"
        << "hodge:   " << pair_str(r.hodge) << "\n"
        << "cubic:   " << cubic_str(r.cubic) << "\n"
        << "chern:   (" << cydouble::str(r.chern.l1) << "," << cydouble::str(r.chern.l2)
        << ")\n"
        << "kernel:  " << pair_str(r.kernel) << "\n"
        << "lambda:  " << cydouble::str(r.lambda) << "\n";
    return out.str();
}

std::string records_table_text(const std::vector<InvariantRecord>& records) {
    size_t id_w = 2, hodge_w = 9, cubic_w = 11, kernel_w = 6;
    std::vector<std::array<std::string, 5>> cells;
    for (const auto& r : records) {
        cells.push_back({r.id, pair_str(r.hodge), cubic_str(r.cubic), pair_str(r.kernel),
                         cydouble::str(r.lambda)});
        id_w = std::max(id_w, cells.back()[0].size());
        hodge_w = std::max(hodge_w, cells.back()[1].size());
        cubic_w = std::max(cubic_w, cells.back()[2].size());
        kernel_w = std::max(kernel_w, cells.back()[3].size());
    }
    auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size() + 2, ' '); };
    std::ostringstream out;
    out << pad("id", id_w) << pad("(h11,h21)", hodge_w) << pad("cubic", cubic_w)
        << pad("kernel", kernel_w) << "lambda\n";
    for (const auto& row : cells)
        out << pad(row[0], id_w) << pad(row[1], hodge_w) << pad(row[2], cubic_w)
            << pad(row[3], kernel_w) << row[4] << "\n";
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"diffeomorphism invariants of doubling Calabi-Yau threefolds"};
    app.require_subcommand(1);

    std::string catalog_path = cydouble::default_catalog_path();
    app.add_option("--catalog", catalog_path, "catalog JSON file")
        ->envname("CY_CATALOG");
    bool meta = false;
    app.add_flag("--meta", meta, "add generation metadata to the output");

    std::string format = "text";
    std::string filter, id_a, id_b, export_format, out_path;
    bool strict = false, force = false;
    long bound = 10;
    int jobs = 1;

    CLI::App* cmd_list = app.add_subcommand("list", "list catalog ids and descriptions");
    cmd_list->fallthrough();
    cmd_list->add_option("filter", filter, "show only matching ids");
    cmd_list->add_option("--format", format, "text or json");

    CLI::App* cmd_show = app.add_subcommand("show", "print one catalog row");
    cmd_show->fallthrough();
    cmd_show->add_option("id", id_a, "family id, e.g. 1-8")->required();
    cmd_show->add_option("--format", format, "text or json");

    CLI::App* cmd_invariants =
        app.add_subcommand("invariants", "invariant record of one family");
    cmd_invariants->fallthrough();
    cmd_invariants->add_option("id", id_a, "family id, e.g. 1-8")->required();
    cmd_invariants->add_flag("--force", force,
                             "also compute rows outside the published table");
    cmd_invariants->add_option("--format", format, "text or json");

    CLI::App* cmd_table = app.add_subcommand("table", "invariant table");
    cmd_table->fallthrough();
    cmd_table->add_flag("--force", force, "include rows outside the published table");
    cmd_table->add_option("--format", format, "text or json");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "recompute everything and compare with the published values");
    cmd_verify->fallthrough();
    cmd_verify->add_flag("--strict", strict, "fail on any mismatch, known or not");
    cmd_verify->add_option("--format", format, "text or json");

    CLI::App* cmd_compare = app.add_subcommand("compare", "decide invariant-pair equivalence");
    cmd_compare->fallthrough();
    cmd_compare->add_option("a", id_a, "first family id")->required();
    cmd_compare->add_option("b", id_b, "second family id")->required();
    cmd_compare->add_option("--bound", bound, "search bound for basis-change entries");
    cmd_compare->add_option("--jobs", jobs, "worker threads (never changes the verdict)");
    cmd_compare->add_option("--format", format, "text or json");

    CLI::App* cmd_export = app.add_subcommand("export", "write the invariant table to a file");
    cmd_export->fallthrough();
    cmd_export->add_option("--format", export_format, "json, csv or md")->required();
    cmd_export->add_option("--out", out_path, "output path")->required();
    cmd_export->add_flag("--force", force, "include rows outside the published table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Catalog catalog = cydouble::load_catalog(catalog_path);

    if (*cmd_list) {
        std::vector<const FanoFamily*> rows;
        for (const auto& f : catalog.families)
            if (filter.empty() || f.id == filter ||
                f.id.find(filter) != std::string::npos ||
                f.description.find(filter) != std::string::npos)
                rows.push_back(&f);
        if (const FanoFamily* exact = catalog.find(filter)) rows = {exact};
        if (rows.empty()) {
            std::cerr << "error: no families match filter '" << filter << "'\n";
            return kExitUsage;
        }
        if (format == "json") {
            Json arr = Json::array();
            for (const auto* f : rows)
                arr.push_back(Json{{"id", f->id}, {"description", f->description}});
            emit_json(arr, meta, catalog_path);
        } else {
            std::ostringstream out;
            for (const auto* f : rows) {
                std::string id = f->id;
                id.resize(6, ' ');
                out << id << f->description << "\n";
            }
            emit_text(out.str(), meta, catalog_path);
        }
        return kExitOk;
    }

    if (*cmd_show) {
        const FanoFamily& f = catalog.at(id_a);
        if (format == "json")
            emit_json(family_json(f), meta, catalog_path);
        else
            emit_text(family_text(f), meta, catalog_path);
        return kExitOk;
    }

    if (*cmd_invariants) {
        const FanoFamily& f = catalog.at(id_a);
        if (!cydouble::in_published_table(f) && !force) {
            std::cerr << "error: family " << f.id
                      << " is outside the published table; pass --force to compute its "
                         "record from the catalog tensor\n";
            return kExitUsage;
        }
        InvariantRecord rec = cydouble::invariant_record(f);
        if (format == "json")
            emit_json(record_json(rec), meta, catalog_path);
        else
            emit_text(record_text(rec), meta, catalog_path);
        return kExitOk;
    }

    if (*cmd_table) {
        auto records = cydouble::invariant_table(catalog, force);
        if (format == "json") {
            Json arr = Json::array();
            for (const auto& r : records) arr.push_back(record_json(r));
            emit_json(arr, meta, catalog_path);
        } else {
            emit_text(records_table_text(records), meta, catalog_path);
        }
        return kExitOk;
    }

    if (*cmd_verify) {
        cydouble::VerificationReport report = cydouble::verify_all(catalog);
        if (format == "json")
            emit_json(Json::parse(cydouble::report_to_json_text(report)), meta, catalog_path);
        else
            emit_text(cydouble::render_report_text(report), meta, catalog_path);
        bool ok = strict ? report.pass_strict() : report.pass_default();
        return ok ? kExitOk : kExitVerifyFailed;
    }

    if (*cmd_compare) {
        InvariantRecord a = cydouble::invariant_record(catalog.at(id_a));
        InvariantRecord b = cydouble::invariant_record(catalog.at(id_b));
        cydouble::Verdict verdict = cydouble::equivalence_search(a, b, bound, jobs);
        Json vj;
        std::ostringstream body;
        body << "a: " << a.id << " (lambda " << cydouble::str(a.lambda) << ")\n"
             << "b: " << b.id << " (lambda " << cydouble::str(b.lambda) << ")\n";
        if (const auto* d = std::get_if<cydouble::DistinctByLambda>(&verdict)) {
            body << "verdict: DistinctByLambda\n"
                 << "the lambda-invariants differ (" << cydouble::str(d->lambda_a) << " vs "
                 << cydouble::str(d->lambda_b)
                 << "), so the invariant pairs are not isomorphic\n";
            vj = Json{{"verdict", "DistinctByLambda"},
                      {"lambda_a", cydouble::str(d->lambda_a)},
                      {"lambda_b", cydouble::str(d->lambda_b)}};
        } else if (const auto* w = std::get_if<cydouble::EquivalentWitness>(&verdict)) {
            body << "verdict: EquivalentWitness\n"
                 << "matrix: " << matrix_str(w->matrix) << " (maps coordinates of " << b.id
                 << " into " << a.id << ")\n";
            vj = Json{{"verdict", "EquivalentWitness"},
                      {"matrix", Json::array({Json::array({cydouble::str(w->matrix.m11),
                                                           cydouble::str(w->matrix.m12)}),
                                              Json::array({cydouble::str(w->matrix.m21),
                                                           cydouble::str(w->matrix.m22)})})}};
        } else {
            const auto& i = std::get<cydouble::InconclusiveAtBound>(verdict);
            body << "verdict: InconclusiveAtBound\n"
                 << "no witness with entries bounded by " << i.bound
                 << "; absence of a small witness is not a proof\n";
            vj = Json{{"verdict", "InconclusiveAtBound"}, {"bound", i.bound}};
        }
        if (format == "json") {
            Json out = Json{{"a", a.id},
                            {"b", b.id},
                            {"lambda_a", cydouble::str(a.lambda)},
                            {"lambda_b", cydouble::str(b.lambda)}};
            out.update(vj);
            emit_json(out, meta, catalog_path);
        } else {
            emit_text(body.str(), meta, catalog_path);
        }
        return kExitOk;
    }

    if (*cmd_export) {
        cydouble::ExportFormat fmt = cydouble::export_format_from_string(export_format);
        auto records = cydouble::invariant_table(catalog, force);
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return kExitUsage;
        }
        out << cydouble::render_records(records, fmt);
        if (!out.flush()) {
            std::cerr << "error: failed writing '" << out_path << "'\n";
            return kExitUsage;
        }
        std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cydouble::ZeroChernClass& e) {
        std::cerr << "error: lambda is undefined here: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cydouble::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
