// Offline search for elliptic class representatives. Reads the reference
// tables and writes data/catalog/<type>.cat; the build never runs it.

#include "weylpsi/catalog.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

using namespace weylpsi;

namespace {

struct Found {
    std::vector<int> word;
    std::string source;
};

std::vector<int> product_of_reflections(const RootSystemPtr& rs, const std::vector<IntVector>& roots)
{
    WeylElement x(rs);
    for (const auto& r : roots) x = x * WeylElement::from_matrix(rs, rs->reflection(r));
    return x.reduced_word();
}

// Classes sharing a characteristic polynomial, built from their root subsystems.
std::map<std::string, std::vector<int>> constructions(const RootSystemPtr& rs)
{
    std::map<std::string, std::vector<int>> out;
    if (rs->label() == "F4") {
        IntVector theta = rs->highest_root();
        // long roots theta, a1, a2, a2 + 2 a3 form a D4 with a1 in the middle
        out["D4"] = product_of_reflections(rs, {theta, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 2, 0}});
        out["C3+A1"] = product_of_reflections(rs, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, theta});
    }
    return out;
}

std::string signature(const TwistedWeylElement& g)
{
    return cyclotomic_signature(cyclotomic_factorization(char_poly(g)));
}

TwistedWeylElement shortest(const TwistedWeylElement& g)
{
    return minimal_length_shift(g);
}

std::map<std::string, Found> search(const RootSystemPtr& rs, const ReferenceTable& table, std::uint64_t seed,
                                    long samples)
{
    std::map<std::string, Found> found;
    std::map<std::pair<std::string, int>, std::string> wanted;
    for (const auto& row : table.rows)
        if (!row.charpoly.empty() && row.min_length < 0 && row.first_levi.empty()) wanted[{row.charpoly, row.d}] = row.name;

    int r = rs->rank();
    IntMatrix minus(r, r);
    for (int i = 0; i < r; ++i) minus(i, i) = -1;
    WeylElement w0 = longest_element(rs, all_indices(r));
    bool central = w0.matrix() == minus;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(0, r - 1);
    int length = 2 * rs->num_positive_roots();
    auto consider = [&](const TwistedWeylElement& h, long sample) {
        if (!is_elliptic(h)) return;
        auto it = wanted.find({signature(h), h.order()});
        if (it == wanted.end() || found.count(it->second)) return;
        found[it->second] = {shortest(h).word(), "search seed " + std::to_string(seed) + " sample " + std::to_string(sample)};
    };
    for (long s = 0; s < samples && found.size() < wanted.size(); ++s) {
        std::vector<int> word(static_cast<size_t>(length));
        for (auto& l : word) l = letter(rng);
        TwistedWeylElement g = TwistedWeylElement::from_word(rs, word);
        int d = g.order();
        for (int k = 0; k < d; ++k) {
            TwistedWeylElement h = g.power(k);
            if (k > 0) consider(h, s);
            if (central) consider(TwistedWeylElement(w0 * h.weyl(), 0), s);
        }
    }
    return found;
}

// Printed words that are not elliptic of the printed order, with the single
// edit that lands in the class of the printed Kac diagram.
const std::map<std::string, std::string> corrected_words{
    {"425423456542345", "4254234565423456"},
    {"142314354231365431", "142314354231465431"},
};

// Named classes whose word is printed in the text.
const std::map<std::pair<std::string, std::string>, std::string> printed_words{
    {{"E8", "E8(a7)"}, "2343654231435426543178"},
};

bool is_word_name(const std::string& name)
{
    return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Search elliptic class representatives and write catalog files"};
    std::vector<std::string> types = table_types();
    std::uint64_t seed = 20240601;
    long samples = 200000;
    std::string out_dir = (data_directory() / "catalog").string();
    app.add_option("--type", types, "types to process");
    app.add_option("--seed", seed, "search seed");
    app.add_option("--samples", samples, "random words per type");
    app.add_option("--out", out_dir, "output directory");
    CLI11_PARSE(app, argc, argv);

    int status = 0;
    for (const auto& type : types) {
        ReferenceTable table = load_reference(data_directory() / "reference" / (type + ".ref"));
        RootSystemPtr rs = RootSystem::build(type);
        auto built = constructions(rs);
        auto found = search(rs, table, seed, samples);

        std::ofstream out(std::filesystem::path(out_dir) / (type + ".cat"));
        out << "format = weylpsi-catalog/1\ntype = " << type << "\n";
        for (const auto& row : table.rows) {
            Found rep;
            if (auto it = printed_words.find({type, row.name}); it != printed_words.end()) {
                rep = {parse_word(it->second, rs->rank()), "printed word"};
            } else if (auto it = corrected_words.find(row.name); it != corrected_words.end()) {
                rep = {parse_word(it->second, rs->rank()), "table, one letter corrected"};
            } else if (is_word_name(row.name)) {
                rep = {parse_word(row.name, rs->rank()), "table"};
            } else if (row.name == "w0") {
                rep = {longest_element(rs, all_indices(rs->rank())).reduced_word(), "longest element"};
            } else if (built.count(row.name)) {
                TwistedWeylElement g = TwistedWeylElement::from_word(rs, built[row.name]);
                rep = {shortest(g).word(), "root subsystem"};
            } else if (found.count(row.name)) {
                rep = found[row.name];
            } else {
                std::cerr << type << " " << row.name << ": not found\n";
                status = 1;
                continue;
            }
            TwistedWeylElement g = TwistedWeylElement::from_word(rs, rep.word);
            std::cerr << type << " " << row.name << ": " << signature(g) << " d=" << g.order()
                      << " length=" << g.length() << " min_length=" << shortest(g).length() << "\n";
            out << "\n[class]\nname = " << row.name << "\nword = " << format_word(rep.word, rs->rank())
                << "\nsource = " << rep.source << "\n";
        }
    }
    return status;
}
