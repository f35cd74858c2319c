#include "cydouble/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "cydouble/errors.hpp"
#include "json_util.hpp"

#ifndef CYDOUBLE_SOURCE_CATALOG
#define CYDOUBLE_SOURCE_CATALOG "data/fano_rank1.json"
#endif

namespace cydouble {

namespace {

// The eight rows with published cubic tuples and lambda-invariants.
const std::set<std::string> kPublishedIds = {"1-2", "1-17", "1-8", "1-9",
                                             "1-10", "1-4", "1-12", "1-14"};

[[noreturn]] void fail_parse(const std::string& origin, const std::string& what) {
    throw ParseError(origin + ": " + what);
}

[[noreturn]] void fail_row(const std::string& id, const std::string& check,
                           const std::string& what) {
    throw ValidationError("family " + id + ": check '" + check + "' failed: " + what);
}

// Strict field check: every listed key must be present, nothing else allowed.
void require_fields(const Json& obj, const std::vector<std::string>& fields,
                    const std::string& origin, const std::string& where) {
    if (!obj.is_object()) fail_parse(origin, where + " is not an object");
    for (const auto& f : fields)
        if (!obj.contains(f)) fail_parse(origin, where + " is missing field '" + f + "'");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(fields.begin(), fields.end(), key) == fields.end())
            fail_parse(origin, where + " has unknown field '" + key + "'");
    }
}

Int as_int(const Json& v, const std::string& origin, const std::string& where) {
    if (!v.is_number_integer())
        fail_parse(origin, where + " must be an integer");
    return Int(v.get<long>());
}

std::string as_string(const Json& v, const std::string& origin, const std::string& where) {
    if (!v.is_string()) fail_parse(origin, where + " must be a string");
    return v.get<std::string>();
}

std::pair<Int, Int> as_int_pair(const Json& v, const std::string& origin,
                                const std::string& where) {
    if (!v.is_array() || v.size() != 2)
        fail_parse(origin, where + " must be an array of two integers");
    return {as_int(v[0], origin, where), as_int(v[1], origin, where)};
}

PublishedRow parse_published(const Json& obj, const std::string& origin,
                             const std::string& where) {
    require_fields(obj, {"hodge", "cubic", "lambda", "kernel_generator"}, origin, where);
    PublishedRow out;
    out.hodge = as_int_pair(obj["hodge"], origin, where + ".hodge");
    if (!obj["cubic"].is_null()) {
        const Json& c = obj["cubic"];
        if (!c.is_array() || c.size() != 4)
            fail_parse(origin, where + ".cubic must be an array of four integers");
        out.cubic = std::array<Int, 4>{as_int(c[0], origin, where + ".cubic"),
                                       as_int(c[1], origin, where + ".cubic"),
                                       as_int(c[2], origin, where + ".cubic"),
                                       as_int(c[3], origin, where + ".cubic")};
    }
    if (!obj["lambda"].is_null())
        out.lambda = as_int(obj["lambda"], origin, where + ".lambda");
    if (!obj["kernel_generator"].is_null())
        out.kernel_generator = as_int_pair(obj["kernel_generator"], origin,
                                           where + ".kernel_generator");
    return out;
}

FanoFamily parse_family(const Json& obj, const std::string& origin) {
    require_fields(obj,
                   {"id", "description", "index_r", "k", "h3_geom", "minus_k3", "h12",
                    "genus_fano", "genus_center", "deg_center", "tau", "tensor", "c2_p",
                    "c2_q", "tensor_provenance", "published"},
                   origin, "family");
    FanoFamily f;
    f.id = as_string(obj["id"], origin, "id");
    const std::string where = "family " + f.id;
    f.description = as_string(obj["description"], origin, where + ".description");
    f.index_r = as_int(obj["index_r"], origin, where + ".index_r");
    f.k = as_int(obj["k"], origin, where + ".k");
    f.h3_geom = as_int(obj["h3_geom"], origin, where + ".h3_geom");
    f.minus_k3 = as_int(obj["minus_k3"], origin, where + ".minus_k3");
    f.h12 = as_int(obj["h12"], origin, where + ".h12");
    f.genus_fano = as_int(obj["genus_fano"], origin, where + ".genus_fano");
    f.genus_center = as_int(obj["genus_center"], origin, where + ".genus_center");
    f.deg_center = as_int(obj["deg_center"], origin, where + ".deg_center");
    if (!obj["tau"].is_null()) f.tau = as_int(obj["tau"], origin, where + ".tau");

    const Json& t = obj["tensor"];
    if (!t.is_array() || t.size() != 4)
        fail_parse(origin, where + ".tensor must be an array of four integers");
    f.tensor = TripleTensor{as_int(t[0], origin, where + ".tensor"),
                            as_int(t[1], origin, where + ".tensor"),
                            as_int(t[2], origin, where + ".tensor"),
                            as_int(t[3], origin, where + ".tensor")};

    auto [p_num, p_den] = as_int_pair(obj["c2_p"], origin, where + ".c2_p");
    if (p_den < 1) fail_row(f.id, "c2_p", "denominator must be >= 1");
    if (gcd(p_num, p_den) != 1) fail_row(f.id, "c2_p", "fraction must be reduced");
    f.c2_p = make_rat(p_num, p_den);
    f.c2_q = as_int(obj["c2_q"], origin, where + ".c2_q");

    try {
        f.tensor_provenance =
            provenance_from_string(as_string(obj["tensor_provenance"], origin, where));
    } catch (const Error& e) {
        fail_parse(origin, where + ": " + e.what());
    }
    f.published = parse_published(obj["published"], origin, where + ".published");
    return f;
}

// "1-2" before "1-10": dash-separated segments compare numerically when both
// are digits, lexicographically otherwise.
bool natural_id_less(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        size_t ie = a.find('-', i), je = b.find('-', j);
        std::string sa = a.substr(i, (ie == std::string::npos ? a.size() : ie) - i);
        std::string sb = b.substr(j, (je == std::string::npos ? b.size() : je) - j);
        auto digits = [](const std::string& s) {
            return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
        };
        if (sa != sb) {
            if (digits(sa) && digits(sb))
                return sa.size() != sb.size() ? sa.size() < sb.size() : sa < sb;
            return sa < sb;
        }
        if (ie == std::string::npos || je == std::string::npos)
            return ie == std::string::npos && je != std::string::npos;
        i = ie + 1;
        j = je + 1;
    }
    return a.size() < b.size();
}

void validate_family(const FanoFamily& f) {
    if (f.index_r < 1) fail_row(f.id, "index_r", "must be positive");
    if (f.h3_geom < 1) fail_row(f.id, "h3_geom", "must be positive");
    if (f.minus_k3 < 1) fail_row(f.id, "minus_k3", "must be positive");
    if (f.h12 < 0) fail_row(f.id, "h12", "must be nonnegative");
    if (f.genus_fano < 1) fail_row(f.id, "genus_fano", "must be positive");
    if (f.genus_center < 1) fail_row(f.id, "genus_center", "must be positive");
    if (f.deg_center < 1) fail_row(f.id, "deg_center", "must be positive");

    if (f.k != f.index_r)
        fail_row(f.id, "k", "must equal index_r (got " + str(f.k) + " vs " + str(f.index_r) + ")");

    // Every worked computation in the source has H^2E = 0.
    if (f.tensor.t21 != 0)
        fail_row(f.id, "tensor", "t21 must be 0, got " + str(f.tensor.t21));

    // -K^3 = r^3.H^3, except the two rows whose published products use the
    // anticanonical normalization: there the tensor itself must carry
    // t30 = -K^3 (validated exceptions; the geometric H^3 stays in h3_geom).
    if (f.id == "1-12" || f.id == "1-14") {
        if (f.tensor.t30 != f.minus_k3)
            fail_row(f.id, "tensor", "t30 must equal minus_k3 for this row, got " +
                                         str(f.tensor.t30));
    } else if (f.minus_k3 != f.index_r * f.index_r * f.index_r * f.h3_geom) {
        fail_row(f.id, "minus_k3", "must equal index_r^3 * h3_geom");
    }

    const bool tabulated = kPublishedIds.count(f.id) > 0;
    if (f.published.cubic.has_value() != tabulated ||
        f.published.lambda.has_value() != tabulated ||
        f.published.kernel_generator.has_value() != tabulated)
        fail_row(f.id, "published",
                 tabulated ? "cubic, lambda and kernel_generator are required for this row"
                           : "cubic, lambda and kernel_generator must be null for this row");

    if (tabulated) {
        if (f.genus_fano * 2 != f.minus_k3 + 2)
            fail_row(f.id, "genus_fano", "must equal minus_k3/2 + 1");
        auto [p, q] = derive_c2_coeffs(f.index_r, f.h3_geom, f.k);
        if (p != f.c2_p || q != f.c2_q)
            fail_row(f.id, "c2_coeffs",
                     "stored (" + str(f.c2_p) + ", " + str(f.c2_q) +
                         ") disagrees with derived (" + str(p) + ", " + str(q) + ")");
        if (*f.published.lambda < 0) fail_row(f.id, "published", "lambda must be nonnegative");
    }
}

Json published_json(const PublishedRow& p) {
    Json out;
    out["hodge"] = Json::array({int_json(p.hodge.first), int_json(p.hodge.second)});
    if (p.cubic) {
        const auto& c = *p.cubic;
        out["cubic"] = Json::array({int_json(c[0]), int_json(c[1]), int_json(c[2]), int_json(c[3])});
    } else {
        out["cubic"] = nullptr;
    }
    out["lambda"] = p.lambda ? int_json(*p.lambda) : Json(nullptr);
    out["kernel_generator"] =
        p.kernel_generator
            ? Json::array({int_json(p.kernel_generator->first), int_json(p.kernel_generator->second)})
            : Json(nullptr);
    return out;
}

Json family_json(const FanoFamily& f) {
    Json out;
    out["id"] = f.id;
    out["description"] = f.description;
    out["index_r"] = int_json(f.index_r);
    out["k"] = int_json(f.k);
    out["h3_geom"] = int_json(f.h3_geom);
    out["minus_k3"] = int_json(f.minus_k3);
    out["h12"] = int_json(f.h12);
    out["genus_fano"] = int_json(f.genus_fano);
    out["genus_center"] = int_json(f.genus_center);
    out["deg_center"] = int_json(f.deg_center);
    out["tau"] = f.tau ? int_json(*f.tau) : Json(nullptr);
    out["tensor"] = Json::array({int_json(f.tensor.t30), int_json(f.tensor.t21),
                                 int_json(f.tensor.t12), int_json(f.tensor.t03)});
    out["c2_p"] = Json::array({int_json(f.c2_p.get_num()), int_json(f.c2_p.get_den())});
    out["c2_q"] = int_json(f.c2_q);
    out["tensor_provenance"] = to_string(f.tensor_provenance);
    out["published"] = published_json(f.published);
    return out;
}

}  // namespace

std::string to_string(TensorProvenance p) {
    switch (p) {
        case TensorProvenance::PaperStated: return "paper";
        case TensorProvenance::InvertedFromCubic: return "inverted";
        case TensorProvenance::Geometric: return "geometric";
    }
    throw Error("invalid provenance value");
}

TensorProvenance provenance_from_string(const std::string& s) {
    if (s == "paper") return TensorProvenance::PaperStated;
    if (s == "inverted") return TensorProvenance::InvertedFromCubic;
    if (s == "geometric") return TensorProvenance::Geometric;
    throw Error("unknown tensor_provenance '" + s + "'");
}

const FanoFamily* Catalog::find(const std::string& id) const {
    for (const auto& f : families)
        if (f.id == id) return &f;
    return nullptr;
}

const FanoFamily& Catalog::at(const std::string& id) const {
    const FanoFamily* f = find(id);
    if (!f) throw UnknownId("unknown family id '" + id + "'");
    return *f;
}

bool Catalog::is_known_discrepancy(const std::string& id, const std::string& check) const {
    for (const auto& d : known_discrepancies)
        if (d.id == id && d.check == check) return true;
    return false;
}

Catalog parse_catalog(const std::string& text, const std::string& origin) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail_parse(origin, e.what());
    }
    require_fields(root, {"schema_version", "families", "known_discrepancies"}, origin,
                   "catalog");
    Catalog catalog;
    if (!root["schema_version"].is_number_integer() || root["schema_version"] != 1)
        fail_parse(origin, "unsupported schema_version");
    catalog.schema_version = 1;

    if (!root["families"].is_array()) fail_parse(origin, "'families' must be an array");
    for (const Json& fj : root["families"]) {
        FanoFamily f = parse_family(fj, origin);
        if (catalog.find(f.id))
            throw ValidationError("family " + f.id + ": duplicate id");
        validate_family(f);
        catalog.families.push_back(std::move(f));
    }
    std::stable_sort(catalog.families.begin(), catalog.families.end(),
                     [](const FanoFamily& a, const FanoFamily& b) {
                         return natural_id_less(a.id, b.id);
                     });

    if (!root["known_discrepancies"].is_array())
        fail_parse(origin, "'known_discrepancies' must be an array");
    for (const Json& dj : root["known_discrepancies"]) {
        require_fields(dj, {"id", "check"}, origin, "known_discrepancy");
        KnownDiscrepancy d{as_string(dj["id"], origin, "known_discrepancy.id"),
                           as_string(dj["check"], origin, "known_discrepancy.check")};
        if (!catalog.find(d.id))
            throw ValidationError("known_discrepancy refers to unknown family '" + d.id + "'");
        catalog.known_discrepancies.push_back(std::move(d));
    }
    return catalog;
}

Catalog load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str(), path.string());
}

std::string serialize_catalog(const Catalog& catalog) {
    Json root;
    root["schema_version"] = catalog.schema_version;
    root["families"] = Json::array();
    for (const auto& f : catalog.families) root["families"].push_back(family_json(f));
    root["known_discrepancies"] = Json::array();
    for (const auto& d : catalog.known_discrepancies)
        root["known_discrepancies"].push_back(Json{{"id", d.id}, {"check", d.check}});
    return root.dump(2) + "\n";
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("CY_CATALOG"); env && *env) return env;
    return CYDOUBLE_SOURCE_CATALOG;
}

std::pair<Rat, Int> derive_c2_coeffs(const Int& index_r, const Int& h3_geom, const Int& k) {
    if (index_r < 1 || h3_geom < 1)
        throw Error("derive_c2_coeffs: index_r and h3_geom must be positive");
    Rat a = make_rat(24, index_r * h3_geom);
    return {a + Rat(k * k), index_r};
}

std::pair<Int, Rat> chern_series_ci(int ambient_dim, const std::vector<Int>& degrees) {
    // (1+H)^(n+1) truncated to order 2, then one series division per factor.
    Int n1 = ambient_dim + 1;
    Int c0 = 1;
    Int c1 = n1;
    Int c2 = n1 * (n1 - 1) / 2;
    for (const Int& d : degrees) {
        if (d < 1) throw Error("chern_series_ci: degrees must be >= 1");
        // multiply by (1 + dH)^-1 = 1 - dH + d^2 H^2 + O(H^3)
        Int nc2 = c2 - d * c1 + d * d * c0;
        Int nc1 = c1 - d * c0;
        c1 = nc1;
        c2 = nc2;
    }
    return {c1, Rat(c2)};
}

std::pair<Int, Int> hodge_numbers(const FanoFamily& family) {
    return {Int(2), 2 * family.h12 + family.minus_k3 + 22};
}

Int fano_genus(const Int& minus_k3) {
    if (minus_k3 % 2 != 0)
        throw OddDegree("fano_genus: -K^3 = " + str(minus_k3) + " is odd");
    return minus_k3 / 2 + 1;
}

bool in_published_table(const FanoFamily& family) {
    return family.published.cubic.has_value();
}

}  // namespace cydouble
