#pragma once

// Elliptic class catalog, transcribed reference tables, table regeneration
// and diffs against the reference.

#include "weylpsi/braid.hpp"
#include "weylpsi/kac.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace weylpsi {

/// One transcribed table row.
struct ReferenceRow {
    std::string name;
    int d = 0;
    int lift_order = 0;          // d unless printed as "d(lift)"
    std::string kac;             // digits in printed order
    std::vector<int> stacked;    // digits printed above the row
    std::vector<int> labels;     // canonical a_0, a_1, ..., a_r
    std::string good;
    std::string centralizer;
    std::string charpoly;        // cyclotomic signature, may be empty
    int min_length = -1;
    std::string first_levi;      // Levi type of Delta_1
    int line = 0;
};

struct ReferenceTable {
    std::string type;
    std::vector<int> node_order;     // printed position -> affine node
    std::vector<int> stacked_nodes;
    std::vector<ReferenceRow> rows;

    const ReferenceRow* find(const std::string& name) const;
    /// Canonical labels of a printed string.
    std::vector<int> to_labels(const std::string& kac, const std::vector<int>& stacked) const;
    /// Printed string and stacked digits of canonical labels.
    std::pair<std::string, std::vector<int>> to_printed(const std::vector<int>& labels) const;
};

/// Throws std::runtime_error with file and line on malformed input.
ReferenceTable load_reference(const std::filesystem::path& path);

struct ClassRecord {
    std::string type;
    std::string name;
    std::vector<int> word;
    std::string source;
    ReferenceRow reference;
    std::string charpoly;  // computed signature
    TwistedWeylElement element;
};

struct Catalog {
    std::string type;
    RootSystemPtr rs;
    ReferenceTable reference;
    std::vector<ClassRecord> records;

    const ClassRecord* find(const std::string& name) const;
};

/// WEYLPSI_DATA if set, else the data directory of the source tree.
std::filesystem::path data_directory();
/// G2, 3D4, F4, 2E6, E6, E7, E8.
const std::vector<std::string>& table_types();
std::filesystem::path catalog_path(const std::string& type);

/// Loads a catalog file and the reference table next to it
/// (../reference/<type>.ref). Every record is checked: elliptic, order d,
/// characteristic polynomial as in the reference, distinct polynomials or
/// min_length / first_levi keys separating each colliding group. Throws std::runtime_error naming the record.
Catalog load_catalog(const std::filesystem::path& path);
Catalog load_type(const std::string& type);

struct Identification {
    std::vector<const ClassRecord*> matches;
    std::string charpoly;
    std::string disambiguator;  // empty unless polynomials collide
    bool unique() const { return matches.size() == 1; }
};

/// Matches by characteristic polynomial, then by minimal class length and
/// the Levi type of Delta_1 where the reference carries them.
/// Throws std::invalid_argument if g is not elliptic or nothing matches.
Identification identify_class(const Catalog& catalog, const TwistedWeylElement& g);

struct TableOptions {
    int jobs = 1;
    bool good = true;       // compute the good column
    bool extended = false;  // good column also above rank 6
    std::uint64_t seed = 1;
};

struct TableRow {
    const ClassRecord* record = nullptr;
    int d = 0;
    int lift_adjoint = 0;
    int lift_sc = 0;
    int tits_sc = 0;
    KacDiagram kac;         // Omega-normalized, adjoint lattice
    std::string kac_printed;
    std::vector<int> stacked;
    bool good_computed = false;
    bool good_holds = false;
    std::string good;
    std::string error;
};

/// Recomputes every record; rows come back in catalog order and point into
/// the catalog, which must outlive them.
std::vector<TableRow> emit_tables(const Catalog& catalog, const TableOptions& options = {});

enum class TableFormat { human, csv, markdown, json };
TableFormat parse_table_format(const std::string& text);
std::string format_rows(const std::vector<TableRow>& rows, TableFormat format);

struct DiffEntry {
    std::string type;
    std::string name;
    std::string field;
    std::string expected;
    std::string actual;
    std::string to_string() const;
};

/// d, lift order and Kac diagram (after Omega-normalization) per row; the
/// good column when it was computed.
std::vector<DiffEntry> verify_against_reference(const Catalog& catalog, const std::vector<TableRow>& rows);

}  // namespace weylpsi
