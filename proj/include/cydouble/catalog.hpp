#pragma once

// The database of the 17 Picard-rank-one Fano threefold families (ids 1-1
// through 1-17), its on-disk JSON schema, and the formulas deriving catalog
// fields from geometric inputs.

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cydouble/arith.hpp"
#include "cydouble/intersection.hpp"

namespace cydouble {

enum class TensorProvenance {
    PaperStated,        // all four triple products appear verbatim in the source
    InvertedFromCubic,  // recovered from the published cubic tuple (triangular inverse)
    Geometric,          // standard blow-up rules; rows without published products
};

std::string to_string(TensorProvenance p);
TensorProvenance provenance_from_string(const std::string& s);

// Published reference values carried for cross-checking.  The cubic tuple,
// lambda and kernel generator exist exactly for the eight tabulated rows.
struct PublishedRow {
    std::pair<Int, Int> hodge;  // (h11, h21) of the doubling Calabi-Yau
    std::optional<std::array<Int, 4>> cubic;
    std::optional<Int> lambda;
    std::optional<std::pair<Int, Int>> kernel_generator;

    bool operator==(const PublishedRow&) const = default;
};

struct FanoFamily {
    std::string id;           // database id, e.g. "1-8"
    std::string description;  // e.g. "V_{16} ⊂ CP^{10}"
    Int index_r;              // Fano index: -K_V = r.H
    Int k;                    // proper transform of D is kH - E; equals index_r
    Int h3_geom;              // H^3 of the ample generator
    Int minus_k3;             // -K_V^3
    Int h12;                  // h^{1,2}(V)
    Int genus_fano;           // -K^3/2 + 1
    Int genus_center;         // genus of the blow-up curve C
    Int deg_center;           // d = H.C
    std::optional<Int> tau;   // branches of the double curve, where stated
    TripleTensor tensor;
    Rat c2_p;                 // c2(Y) = p.H^2 - q.HE
    Int c2_q;
    TensorProvenance tensor_provenance = TensorProvenance::Geometric;
    PublishedRow published;

    bool operator==(const FanoFamily&) const = default;
};

// A mismatch the verifier is expected to find (kept next to the data so the
// default `verify` stays green while --strict still exposes it).
struct KnownDiscrepancy {
    std::string id;
    std::string check;

    bool operator==(const KnownDiscrepancy&) const = default;
};

struct Catalog {
    int schema_version = 0;
    std::vector<FanoFamily> families;
    std::vector<KnownDiscrepancy> known_discrepancies;

    const FanoFamily* find(const std::string& id) const;
    const FanoFamily& at(const std::string& id) const;  // throws UnknownId
    bool is_known_discrepancy(const std::string& id, const std::string& check) const;

    bool operator==(const Catalog&) const = default;
};

// Loads, parses and validates a catalog file.  Throws ParseError for schema
// problems and ValidationError (naming the row and the failed check) for
// invariant violations.
Catalog load_catalog(const std::filesystem::path& path);
Catalog parse_catalog(const std::string& text, const std::string& origin);
std::string serialize_catalog(const Catalog& catalog);

// $CY_CATALOG if set, otherwise the repository data file configured at build
// time.
std::string default_catalog_path();

// c2(V) = a.H^2 with a = 24/(r.h3) forced by (1/24) c1.c2 = chi(O_V) = 1;
// adding the class of the center gives c2(Y) = (a + k^2).H^2 - r.HE.
// Returns (p, q) = (a + k^2, r).
std::pair<Rat, Int> derive_c2_coeffs(const Int& index_r, const Int& h3_geom, const Int& k);

// (c1, c2) coefficients of a smooth complete intersection of the given
// degrees in CP^ambient_dim: expand (1+H)^(n+1) / prod(1+d_i.H) to order 2.
// Cross-check oracle for derive_c2_coeffs on the ordinary CI families.
std::pair<Int, Rat> chern_series_ci(int ambient_dim, const std::vector<Int>& degrees);

// (h11, h21) = (2, 2.h12 + (-K^3) + 22) of the doubling Calabi-Yau.
std::pair<Int, Int> hodge_numbers(const FanoFamily& family);

// -K^3/2 + 1; throws OddDegree when -K^3 is odd.
Int fano_genus(const Int& minus_k3);

// True for the eight rows with published cubic form and lambda.
bool in_published_table(const FanoFamily& family);

}  // namespace cydouble
