#include "weylpsi/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace weylpsi {

namespace {

constexpr const char* kCatalogFormat = "weylpsi-catalog/1";
constexpr const char* kReferenceFormat = "weylpsi-reference/1";

struct Section {
    std::map<std::string, std::string> values;
    int line = 0;
};

struct KeyValueFile {
    Section header;
    std::vector<Section> sections;
};

std::string trim(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::filesystem::path& path, int line, const std::string& what)
{
    throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

KeyValueFile read_key_value(const std::filesystem::path& path, const std::string& section_name,
                            const std::string& format)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    KeyValueFile file;
    Section* current = &file.header;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string text = trim(raw);
        if (text.empty() || text[0] == '#') continue;
        if (text.front() == '[') {
            if (text != "[" + section_name + "]") fail(path, line, "unknown section " + text);
            file.sections.push_back({});
            current = &file.sections.back();
            current->line = line;
            continue;
        }
        size_t eq = text.find('=');
        if (eq == std::string::npos) fail(path, line, "expected key = value");
        std::string key = trim(text.substr(0, eq));
        if (key.empty()) fail(path, line, "empty key");
        if (!current->values.emplace(key, trim(text.substr(eq + 1))).second) fail(path, line, "duplicate key " + key);
    }
    auto it = file.header.values.find("format");
    if (it == file.header.values.end() || it->second != format)
        fail(path, 1, "expected format = " + std::string(format));
    if (!file.header.values.count("type")) fail(path, 1, "missing type");
    return file;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

std::string join(const std::vector<int>& v, const char* sep = ",")
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

const std::string& require(const Section& s, const std::string& key, const std::filesystem::path& path)
{
    auto it = s.values.find(key);
    if (it == s.values.end()) fail(path, s.line, "missing " + key);
    return it->second;
}

std::string optional(const Section& s, const std::string& key)
{
    auto it = s.values.find(key);
    return it == s.values.end() ? "" : it->second;
}

int class_min_length(const TwistedWeylElement& g)
{
    return minimal_length_shift(g).length();
}

std::string first_levi_type(const TwistedWeylElement& g)
{
    GoodPosition gp = good_position_conjugate(g);
    return gp.chain.size() > 1 ? g.root_system()->levi_type(gp.chain[1]) : "";
}

// Keys that tell apart records with one characteristic polynomial.
std::string class_key(const TwistedWeylElement& g, bool use_length, bool use_levi)
{
    std::string key;
    if (use_length) key += "min_length=" + std::to_string(class_min_length(g));
    if (use_levi) key += std::string(key.empty() ? "" : " ") + "first_levi=" + first_levi_type(g);
    return key;
}

std::string reference_key(const ReferenceRow& row, bool use_length, bool use_levi)
{
    std::string key;
    if (use_length) key += "min_length=" + std::to_string(row.min_length);
    if (use_levi) key += std::string(key.empty() ? "" : " ") + "first_levi=" + row.first_levi;
    return key;
}

}  // namespace

const ReferenceRow* ReferenceTable::find(const std::string& name) const
{
    for (const auto& r : rows)
        if (r.name == name) return &r;
    return nullptr;
}

std::vector<int> ReferenceTable::to_labels(const std::string& kac, const std::vector<int>& stacked) const
{
    if (kac.size() != node_order.size())
        throw std::invalid_argument("Kac string '" + kac + "' has " + std::to_string(kac.size()) + " digits, expected " +
                                    std::to_string(node_order.size()));
    if (stacked.size() != stacked_nodes.size()) throw std::invalid_argument("wrong number of stacked digits");
    std::vector<int> labels(node_order.size() + stacked_nodes.size(), -1);
    for (size_t i = 0; i < kac.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(kac[i]))) throw std::invalid_argument("bad Kac digit in '" + kac + "'");
        labels.at(static_cast<size_t>(node_order[i])) = kac[i] - '0';
    }
    for (size_t i = 0; i < stacked.size(); ++i) labels.at(static_cast<size_t>(stacked_nodes[i])) = stacked[i];
    if (std::count(labels.begin(), labels.end(), -1)) throw std::invalid_argument("node map does not cover every node");
    return labels;
}

std::pair<std::string, std::vector<int>> ReferenceTable::to_printed(const std::vector<int>& labels) const
{
    std::string kac;
    for (int node : node_order) {
        int v = labels.at(static_cast<size_t>(node));
        kac += v < 10 ? std::string(1, static_cast<char>('0' + v)) : "(" + std::to_string(v) + ")";
    }
    std::vector<int> stacked;
    for (int node : stacked_nodes) stacked.push_back(labels.at(static_cast<size_t>(node)));
    return {kac, stacked};
}

ReferenceTable load_reference(const std::filesystem::path& path)
{
    KeyValueFile file = read_key_value(path, "row", kReferenceFormat);
    ReferenceTable table;
    table.type = file.header.values.at("type");
    try {
        table.node_order = parse_int_list(require(file.header, "node_order", path));
        table.stacked_nodes = parse_int_list(optional(file.header, "stacked_nodes"));
    } catch (const std::invalid_argument& e) {
        fail(path, 1, e.what());
    }
    for (const auto& s : file.sections) {
        ReferenceRow row;
        row.line = s.line;
        try {
            row.name = require(s, "name", path);
            std::string d = require(s, "d", path);
            size_t open = d.find('(');
            row.d = std::stoi(d.substr(0, open));
            row.lift_order = open == std::string::npos ? row.d : std::stoi(d.substr(open + 1));
            row.kac = require(s, "kac", path);
            row.stacked = parse_int_list(optional(s, "stacked"));
            row.labels = table.to_labels(row.kac, row.stacked);
            row.good = require(s, "good", path);
            row.centralizer = optional(s, "centralizer");
            row.charpoly = optional(s, "charpoly");
            std::string ml = optional(s, "min_length");
            if (!ml.empty()) row.min_length = std::stoi(ml);
            row.first_levi = optional(s, "first_levi");
        } catch (const std::invalid_argument& e) {
            fail(path, s.line, e.what());
        }
        if (table.find(row.name)) fail(path, s.line, "duplicate row " + row.name);
        table.rows.push_back(std::move(row));
    }
    return table;
}

const ClassRecord* Catalog::find(const std::string& name) const
{
    for (const auto& r : records)
        if (r.name == name) return &r;
    return nullptr;
}

std::filesystem::path data_directory()
{
    if (const char* env = std::getenv("WEYLPSI_DATA"); env && *env) return env;
    return WEYLPSI_DATA_DIR;
}

const std::vector<std::string>& table_types()
{
    static const std::vector<std::string> types{"G2", "3D4", "F4", "2E6", "E6", "E7", "E8"};
    return types;
}

std::filesystem::path catalog_path(const std::string& type)
{
    return data_directory() / "catalog" / (type + ".cat");
}

Catalog load_catalog(const std::filesystem::path& path)
{
    KeyValueFile file = read_key_value(path, "class", kCatalogFormat);
    Catalog catalog;
    catalog.type = file.header.values.at("type");
    catalog.rs = RootSystem::build(catalog.type);
    catalog.reference = load_reference(path.parent_path().parent_path() / "reference" / (catalog.type + ".ref"));
    if (catalog.reference.type != catalog.type) fail(path, 1, "reference table is for " + catalog.reference.type);
    if (static_cast<int>(catalog.reference.node_order.size() + catalog.reference.stacked_nodes.size()) !=
        affine_diagram(catalog.rs)->size())
        fail(path, 1, "node map size does not match the affine diagram");

    for (const auto& s : file.sections) {
        ClassRecord rec;
        rec.type = catalog.type;
        rec.name = require(s, "name", path);
        const ReferenceRow* ref = catalog.reference.find(rec.name);
        if (!ref) fail(path, s.line, "record " + rec.name + " has no reference row");
        if (catalog.find(rec.name)) fail(path, s.line, "duplicate record " + rec.name);
        rec.reference = *ref;
        rec.source = optional(s, "source");
        try {
            rec.word = parse_word(require(s, "word", path), catalog.rs->rank());
        } catch (const std::invalid_argument& e) {
            fail(path, s.line, "record " + rec.name + ": " + e.what());
        }
        rec.element = TwistedWeylElement::from_word(catalog.rs, rec.word);
        if (!is_elliptic(rec.element)) fail(path, s.line, "record " + rec.name + " is not elliptic");
        int d = rec.element.order();
        if (d != ref->d)
            fail(path, s.line, "record " + rec.name + " has order " + std::to_string(d) + ", expected " + std::to_string(ref->d));
        rec.charpoly = cyclotomic_signature(cyclotomic_factorization(char_poly(rec.element)));
        if (!ref->charpoly.empty() && rec.charpoly != ref->charpoly)
            fail(path, s.line, "record " + rec.name + " has characteristic polynomial " + rec.charpoly + ", expected " + ref->charpoly);
        catalog.records.push_back(std::move(rec));
    }

    std::map<std::string, std::vector<ClassRecord*>> by_poly;
    for (auto& rec : catalog.records) by_poly[rec.charpoly].push_back(&rec);
    for (auto& [poly, group] : by_poly) {
        if (group.size() < 2) continue;
        bool use_length = std::all_of(group.begin(), group.end(), [](auto* r) { return r->reference.min_length >= 0; });
        bool use_levi = std::all_of(group.begin(), group.end(), [](auto* r) { return !r->reference.first_levi.empty(); });
        if (!use_length && !use_levi)
            fail(path, group.front()->reference.line, "records sharing polynomial " + poly + " carry no min_length or first_levi");
        std::set<std::string> keys;
        for (ClassRecord* rec : group) {
            std::string want = reference_key(rec->reference, use_length, use_levi);
            std::string got = class_key(rec->element, use_length, use_levi);
            if (want != got) fail(path, rec->reference.line, "record " + rec->name + " has " + got + ", expected " + want);
            if (!keys.insert(want).second) fail(path, rec->reference.line, "disambiguator does not separate polynomial " + poly);
        }
    }
    return catalog;
}

Catalog load_type(const std::string& type)
{
    return load_catalog(catalog_path(type));
}

Identification identify_class(const Catalog& catalog, const TwistedWeylElement& g)
{
    if (g.root_system()->label() != catalog.rs->label()) throw std::invalid_argument("element is not of type " + catalog.type);
    if (!is_elliptic(g)) throw std::invalid_argument("element is not elliptic");
    Identification out;
    out.charpoly = cyclotomic_signature(cyclotomic_factorization(char_poly(g)));
    for (const auto& rec : catalog.records)
        if (rec.charpoly == out.charpoly) out.matches.push_back(&rec);
    if (out.matches.empty()) throw std::invalid_argument("no catalog class with polynomial " + out.charpoly);
    if (out.matches.size() > 1) {
        bool use_length = std::all_of(out.matches.begin(), out.matches.end(), [](auto* r) { return r->reference.min_length >= 0; });
        bool use_levi = std::all_of(out.matches.begin(), out.matches.end(), [](auto* r) { return !r->reference.first_levi.empty(); });
        if (use_length || use_levi) {
            out.disambiguator = class_key(g, use_length, use_levi);
            std::vector<const ClassRecord*> kept;
            for (const ClassRecord* rec : out.matches)
                if (reference_key(rec->reference, use_length, use_levi) == out.disambiguator) kept.push_back(rec);
            if (!kept.empty()) out.matches = kept;
        }
    }
    return out;
}

namespace {

TableRow compute_row(const Catalog& catalog, const ClassRecord& rec, const TableOptions& options)
{
    TableRow row;
    row.record = &rec;
    try {
        const TwistedWeylElement& g = rec.element;
        row.d = g.order();
        PsiOptions po;
        po.seed = options.seed;
        TorusElement t = psi_element(g, po);
        t.lattice = Lattice::adjoint;
        row.lift_adjoint = torus_order(t);
        row.kac = omega_normalize(kac_diagram_of(t));
        std::tie(row.kac_printed, row.stacked) = catalog.reference.to_printed(row.kac.labels);
        t.lattice = Lattice::simply_connected;
        row.lift_sc = torus_order(t);
        row.tits_sc = tits_lift_order(g, Lattice::simply_connected);
        if (options.good && (catalog.rs->rank() <= 6 || options.extended)) {
            GoodIdentity id = good_power_identity(g, options.seed);
            row.good_computed = true;
            row.good_holds = id.holds;
            row.good = format_good(*catalog.rs, id.factors);
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::string good_cell(const TableRow& r)
{
    if (!r.good_computed) return "-";
    return r.good + (r.good_holds ? "" : " (fails)");
}

std::string lift_cell(const TableRow& r)
{
    return r.lift_adjoint == r.d ? std::to_string(r.d) : std::to_string(r.d) + "(" + std::to_string(r.lift_adjoint) + ")";
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

std::vector<TableRow> emit_tables(const Catalog& catalog, const TableOptions& options)
{
    std::vector<TableRow> rows(catalog.records.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < rows.size();) rows[i] = compute_row(catalog, catalog.records[i], options);
    };
    int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(rows.size())));
    if (jobs == 1) {
        work();
        return rows;
    }
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return rows;
}

TableFormat parse_table_format(const std::string& text)
{
    if (text == "human") return TableFormat::human;
    if (text == "csv") return TableFormat::csv;
    if (text == "markdown" || text == "md") return TableFormat::markdown;
    if (text == "json") return TableFormat::json;
    throw std::invalid_argument("unknown format '" + text + "'");
}

std::string format_rows(const std::vector<TableRow>& rows, TableFormat format)
{
    std::ostringstream out;
    switch (format) {
    case TableFormat::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["type"] = r.record->type;
            j["name"] = r.record->name;
            j["word"] = format_word(r.record->word, r.record->element.root_system()->rank());
            j["d"] = r.d;
            j["lift_adj"] = r.lift_adjoint;
            j["lift_sc"] = r.lift_sc;
            j["tits_sc"] = r.tits_sc;
            j["kac"] = r.kac_printed;
            j["stacked"] = r.stacked;
            j["labels"] = r.kac.labels;
            j["good"] = r.good_computed ? nlohmann::ordered_json(r.good) : nlohmann::ordered_json(nullptr);
            j["good_holds"] = r.good_computed ? nlohmann::ordered_json(r.good_holds) : nlohmann::ordered_json(nullptr);
            j["error"] = r.error;
            arr.push_back(j);
        }
        out << arr.dump(2) << "\n";
        break;
    }
    case TableFormat::csv:
        out << "type,name,word,d,lift_adj,lift_sc,tits_sc,kac,stacked,labels,good,good_holds,error\n";
        for (const auto& r : rows) {
            out << csv_escape(r.record->type) << ',' << csv_escape(r.record->name) << ','
                << format_word(r.record->word, r.record->element.root_system()->rank()) << ',' << r.d << ','
                << r.lift_adjoint << ',' << r.lift_sc << ',' << r.tits_sc << ',' << r.kac_printed << ','
                << csv_escape(join(r.stacked)) << ',' << csv_escape(join(r.kac.labels)) << ','
                << (r.good_computed ? r.good : "") << ',' << (r.good_computed ? (r.good_holds ? "true" : "false") : "")
                << ',' << csv_escape(r.error) << '\n';
        }
        break;
    case TableFormat::markdown:
        out << "| type | name | d | Kac diagram | stacked | good | lift sc | error |\n";
        out << "|---|---|---|---|---|---|---|---|\n";
        for (const auto& r : rows)
            out << "| " << r.record->type << " | " << r.record->name << " | " << lift_cell(r) << " | " << r.kac_printed
                << " | " << join(r.stacked) << " | " << good_cell(r) << " | " << r.lift_sc << " | " << r.error << " |\n";
        break;
    case TableFormat::human: {
        size_t name_width = 4;
        for (const auto& r : rows) name_width = std::max(name_width, r.record->name.size());
        out << std::left << std::setw(4) << "type" << "  " << std::setw(static_cast<int>(name_width)) << "name" << "  "
            << std::setw(6) << "d" << "  " << std::setw(10) << "kac" << "  " << std::setw(7) << "stacked" << "  "
            << std::setw(7) << "lift sc" << "  good\n";
        for (const auto& r : rows) {
            out << std::setw(4) << r.record->type << "  " << std::setw(static_cast<int>(name_width)) << r.record->name
                << "  " << std::setw(6) << lift_cell(r) << "  " << std::setw(10) << r.kac_printed << "  " << std::setw(7)
                << join(r.stacked) << "  " << std::setw(7) << r.lift_sc << "  " << good_cell(r);
            if (!r.error.empty()) out << "  error: " << r.error;
            out << '\n';
        }
        break;
    }
    }
    return out.str();
}

std::string DiffEntry::to_string() const
{
    return type + " " + name + " " + field + ": expected " + expected + ", got " + actual;
}

std::vector<DiffEntry> verify_against_reference(const Catalog& catalog, const std::vector<TableRow>& rows)
{
    std::vector<DiffEntry> diffs;
    auto affine = affine_diagram(catalog.rs);
    for (const auto& row : rows) {
        const ClassRecord& rec = *row.record;
        const ReferenceRow& ref = rec.reference;
        auto add = [&](const std::string& field, const std::string& expected, const std::string& actual) {
            diffs.push_back({catalog.type, rec.name, field, expected, actual});
        };
        if (!row.error.empty()) {
            add("computation", "success", row.error);
            continue;
        }
        if (row.d != ref.d) add("d", std::to_string(ref.d), std::to_string(row.d));
        if (row.lift_adjoint != ref.lift_order) add("lift order", std::to_string(ref.lift_order), std::to_string(row.lift_adjoint));
        KacDiagram expected{affine, ref.labels};
        expected = omega_normalize(expected);
        if (!(expected == row.kac)) {
            auto printed = catalog.reference.to_printed(expected.labels);
            std::string want = printed.first + (printed.second.empty() ? "" : "/" + join(printed.second));
            std::string got = row.kac_printed + (row.stacked.empty() ? "" : "/" + join(row.stacked));
            add("kac", want, got);
        }
        if (row.good_computed) {
            std::vector<LeviPower> printed = parse_good(*catalog.rs, ref.good);
            std::vector<LeviPower> computed = parse_good(*catalog.rs, row.good);
            if (!row.good_holds) add("good identity", "holds", "fails");
            if (!same_good_shape(*catalog.rs, printed, computed)) add("good", ref.good, row.good);
        }
    }
    return diffs;
}

}  // namespace weylpsi
