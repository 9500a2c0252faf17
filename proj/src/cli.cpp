#include "weylpsi/cli.hpp"

#include "weylpsi/catalog.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <numeric>
#include <optional>

namespace weylpsi {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::vector<std::string> types;
    std::string word;
    std::string name;
    std::string lattice = "adj";
    std::uint64_t seed = 1;
    bool extended = false;
    std::string format = "human";
    std::vector<int> admissible;
    bool all = false;
    int jobs = 1;
    std::string catalog;
    std::string gamma;
    std::string basis = "fundamental";
};

struct Input {
    RootSystemPtr rs;
    TwistedWeylElement g;
    std::string name;
};

std::string single_type(const Options& o)
{
    if (o.types.size() != 1) throw std::invalid_argument("exactly one --type is required");
    return o.types.front();
}

Catalog open_catalog(const Options& o, const std::string& type)
{
    if (!o.catalog.empty()) {
        Catalog c = load_catalog(o.catalog);
        if (c.type != type) throw std::invalid_argument("catalog " + o.catalog + " is for type " + c.type);
        return c;
    }
    return load_type(type);
}

Input resolve_input(const Options& o)
{
    Input in;
    std::string type = single_type(o);
    in.rs = RootSystem::build(type);
    if (o.word.empty() == o.name.empty()) throw std::invalid_argument("give exactly one of --word and --name");
    if (!o.word.empty()) {
        in.g = TwistedWeylElement::from_word(in.rs, parse_word(o.word, in.rs->rank()));
        return in;
    }
    Catalog c = open_catalog(o, type);
    const ClassRecord* rec = c.find(o.name);
    if (!rec) throw std::invalid_argument("no class named " + o.name + " in the " + type + " catalog");
    in.name = rec->name;
    in.g = TwistedWeylElement::from_word(in.rs, rec->word);
    return in;
}

// "(a_1,...,a_n)/D" with D the least common denominator.
std::string scaled(const RationalVector& v)
{
    Integer den = lcm_of_denominators(v);
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        Rational x = v[i] * Rational(den);
        out += x.get_num().get_str();
    }
    out += ")";
    if (den != 1) out += "/" + den.get_str();
    return out;
}

std::string coweight(const RationalCoweight& v)
{
    return "(" + to_string(v.coords) + ")";
}

Json header(const Input& in)
{
    Json j;
    j["type"] = in.rs->label();
    if (!in.name.empty()) j["name"] = in.name;
    j["word"] = format_word(in.g.word(), in.rs->rank());
    return j;
}

std::string gamma_w(const AngleSpectrum& s)
{
    std::string out = "2pi/" + std::to_string(s.order) + "*{";
    for (size_t i = 0; i < s.angles.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.angles[i].k);
    }
    return out + "}";
}

std::string levi_name(const RootSystem& rs, const IndexSet& levi)
{
    return levi.empty() ? "empty" : rs.levi_type(levi);
}

Json levi_chain(const RootSystem& rs, const std::vector<IndexSet>& chain)
{
    Json arr = Json::array();
    for (const auto& levi : chain) {
        Json e;
        e["simple_roots"] = format_index_set(levi);
        e["type"] = levi_name(rs, levi);
        arr.push_back(e);
    }
    return arr;
}

Lattice lattice_of(const Options& o)
{
    return parse_lattice(o.lattice);
}

void add_kac(Json& j, TorusElement t)
{
    AlcoveReduction red = reduce_to_alcove(t);
    j["affine_coords"] = scaled(red.start);
    j["reduced_coords"] = scaled(red.reduced);
    KacDiagram kac = kac_diagram_of(t);
    if (t.lattice == Lattice::adjoint) kac = omega_normalize(kac);
    j["kac"] = to_string(kac);
    j["kac_sum"] = kac.weighted_sum();
    j["aut_fixed"] = is_aut_fixed(kac);
}

Json cmd_psi(const Options& o)
{
    Input in = resolve_input(o);
    Json j = header(in);
    const TwistedWeylElement& g = in.g;
    j["d"] = g.order();
    j["elliptic"] = is_elliptic(g);
    PsiOptions po;
    po.seed = o.seed;
    po.numerators = o.admissible;
    TorusElement t;
    if (is_elliptic(g)) {
        PsiTrace tr = psi_trace(g, po);
        const Filtration& f = tr.position.filtration;
        j["gamma_w"] = gamma_w(f.spectrum);
        j["conjugator"] = format_word(tr.position.x.reduced_word(), in.rs->rank());
        j["conjugate"] = format_word(tr.position.conjugate.word(), in.rs->rank());
        j["f_dims"] = f.dims;
        j["levi_chain"] = levi_chain(*in.rs, tr.position.chain);
        Json rho = Json::array();
        for (const auto& r : tr.rho) rho.push_back(coweight(r));
        j["rho"] = rho;
        Json lambda = Json::array();
        for (const auto& l : tr.lambda) lambda.push_back(coweight(l));
        j["lambda"] = lambda;
        t = tr.element;
    } else {
        if (!o.admissible.empty()) throw std::invalid_argument("--admissible needs an elliptic element");
        j["support"] = format_index_set(support_orbit(minimal_length_shift(g)));
        t = psi_nonelliptic(g, po);
    }
    t.lattice = lattice_of(o);
    j["lattice"] = to_string(t.lattice);
    j["gamma"] = scaled(t.gamma.coords);
    add_kac(j, t);
    Json orders;
    t.lattice = Lattice::adjoint;
    orders["adj"] = torus_order(t);
    t.lattice = Lattice::simply_connected;
    orders["sc"] = torus_order(t);
    j["lift_order"] = orders;
    j["tits_order_sc"] = tits_lift_order(g, Lattice::simply_connected);
    return j;
}

Json cmd_spectrum(const Options& o)
{
    Input in = resolve_input(o);
    Json j = header(in);
    const TwistedWeylElement& g = in.g;
    IntPolynomial p = char_poly(g);
    j["d"] = g.order();
    j["elliptic"] = is_elliptic(g);
    j["char_poly"] = to_string(p);
    j["cyclotomic"] = cyclotomic_signature(cyclotomic_factorization(p));
    AngleSpectrum s = angle_spectrum(g);
    j["gamma_w"] = gamma_w(s);
    Json angles = Json::array();
    for (const auto& a : s.angles) {
        Json e;
        e["angle"] = a.to_string();
        e["multiplicity"] = a.multiplicity;
        e["real_dim"] = a.real_dimension();
        angles.push_back(e);
    }
    j["angles"] = angles;
    GoodPosition pos = good_position_conjugate(g, o.seed);
    j["f_dims"] = pos.filtration.dims;
    j["conjugator"] = format_word(pos.x.reduced_word(), in.rs->rank());
    j["levi_chain"] = levi_chain(*in.rs, pos.chain);
    j["good_position"] = pos.standard;
    Regularity reg = regularity(g);
    j["regular"] = reg.is_regular;
    j["d_regular"] = reg.d_regular;
    Json ra = Json::array();
    for (const auto& a : reg.regular_angles) ra.push_back(a.to_string());
    j["regular_angles"] = ra;
    return j;
}

Json cmd_kac_reduce(const Options& o)
{
    RootSystemPtr rs = RootSystem::build(single_type(o));
    if (o.gamma.empty()) throw std::invalid_argument("--gamma is required");
    TorusElement t;
    t.rs = rs;
    t.gamma.coords = parse_rational_vector(o.gamma);
    if (static_cast<int>(t.gamma.coords.size()) != rs->rank())
        throw std::invalid_argument("--gamma needs " + std::to_string(rs->rank()) + " coordinates");
    if (o.basis == "coroot") t.gamma.coords = rs->coroot_to_fundamental(t.gamma.coords);
    t.delta_power = rs->twisted() ? 1 : 0;
    t.lattice = lattice_of(o);
    Json j;
    j["type"] = rs->label();
    j["gamma"] = scaled(t.gamma.coords);
    j["lattice"] = to_string(t.lattice);
    AlcoveReduction red = reduce_to_alcove(t);
    Json walk = Json::array();
    for (int node : red.walk) walk.push_back(node);
    j["walk"] = walk;
    add_kac(j, t);
    j["order"] = torus_order(t);
    return j;
}

Json cmd_good_check(const Options& o)
{
    Input in = resolve_input(o);
    if (in.rs->rank() > 6 && !o.extended) throw std::invalid_argument("rank above 6 needs --extended");
    Json j = header(in);
    GoodPosition pos = good_position_conjugate(in.g, o.seed);
    GoodIdentity id = good_power_identity(pos);
    j["d"] = in.g.order();
    j["conjugator"] = format_word(pos.x.reduced_word(), in.rs->rank());
    j["conjugate"] = format_word(pos.conjugate.word(), in.rs->rank());
    j["levi_chain"] = levi_chain(*in.rs, pos.chain);
    j["identity"] = format_good(*in.rs, id.factors);
    j["holds"] = id.holds;
    j["even"] = id.even;
    j["decreasing"] = id.decreasing;
    j["lhs_length"] = id.lhs_length;
    j["rhs_length"] = id.rhs_length;
    j["good"] = id.holds && id.even && id.decreasing;
    return j;
}

Json cmd_identify(const Options& o)
{
    Input in = resolve_input(o);
    Catalog c = open_catalog(o, in.rs->label());
    Identification id = identify_class(c, in.g);
    Json j = header(in);
    j["cyclotomic"] = id.charpoly;
    Json names = Json::array();
    for (const ClassRecord* r : id.matches) names.push_back(r->name);
    j["matches"] = names;
    j["disambiguator"] = id.disambiguator;
    return j;
}

Json cmd_order(const Options& o)
{
    Input in = resolve_input(o);
    PsiOptions po;
    po.seed = o.seed;
    TorusElement t = is_elliptic(in.g) ? psi_element(in.g, po) : psi_nonelliptic(in.g, po);
    t.lattice = lattice_of(o);
    Json j;
    j["order"] = torus_order(t);
    return j;
}

std::vector<Catalog> selected_catalogs(const Options& o)
{
    std::vector<Catalog> out;
    if (!o.catalog.empty()) {
        if (o.all || o.types.size() > 1) throw std::invalid_argument("--catalog selects a single type");
        Catalog c = load_catalog(o.catalog);
        if (!o.types.empty() && o.types.front() != c.type)
            throw std::invalid_argument("catalog " + o.catalog + " is for type " + c.type);
        out.push_back(std::move(c));
        return out;
    }
    if (o.all == !o.types.empty()) throw std::invalid_argument("give --all or --type");
    for (const auto& t : o.all ? table_types() : o.types) out.push_back(load_type(t));
    return out;
}

TableOptions table_options(const Options& o)
{
    TableOptions t;
    t.jobs = o.jobs;
    t.extended = o.extended;
    t.seed = o.seed;
    return t;
}

int cmd_table(const Options& o, std::ostream& out)
{
    TableFormat format = parse_table_format(o.format);
    std::vector<Catalog> catalogs = selected_catalogs(o);
    std::vector<TableRow> rows;
    for (const auto& c : catalogs) {
        auto r = emit_tables(c, table_options(o));
        rows.insert(rows.end(), r.begin(), r.end());
    }
    out << format_rows(rows, format);
    bool failed = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return !r.error.empty(); });
    return failed ? exit_diff : exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (o.format != "human" && o.format != "json") throw std::invalid_argument("verify supports human and json output");
    std::vector<Catalog> catalogs = selected_catalogs(o);
    Json summary = Json::array();
    Json all_diffs = Json::array();
    size_t total = 0;
    std::ostringstream human;
    for (const auto& c : catalogs) {
        auto rows = emit_tables(c, table_options(o));
        auto diffs = verify_against_reference(c, rows);
        total += diffs.size();
        bool good = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.good_computed; });
        human << c.type << ": " << rows.size() << " rows, " << diffs.size() << " diffs"
              << (good ? "" : " (good column not checked)") << "\n";
        for (const auto& d : diffs) {
            human << "  " << d.to_string() << "\n";
            Json e;
            e["type"] = d.type;
            e["name"] = d.name;
            e["field"] = d.field;
            e["expected"] = d.expected;
            e["actual"] = d.actual;
            all_diffs.push_back(e);
        }
        Json s;
        s["type"] = c.type;
        s["rows"] = rows.size();
        s["diffs"] = diffs.size();
        s["good_checked"] = good;
        summary.push_back(s);
    }
    if (o.format == "json") {
        Json j;
        j["types"] = summary;
        j["diffs"] = all_diffs;
        out << j.dump(2) << "\n";
    } else {
        out << human.str() << "total: " << total << " diffs\n";
    }
    return total == 0 ? exit_ok : exit_diff;
}

std::string scalar_text(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

bool all_scalar(const Json& arr)
{
    return std::all_of(arr.begin(), arr.end(), [](const Json& v) { return v.is_primitive(); });
}

void render_human(const Json& j, std::ostream& out, const std::string& pad = "")
{
    for (const auto& [key, v] : j.items()) {
        if (v.is_object()) {
            out << pad << key << ":\n";
            render_human(v, out, pad + "  ");
        } else if (v.is_array() && all_scalar(v)) {
            out << pad << key << ":";
            for (const auto& x : v) out << " " << scalar_text(x);
            out << "\n";
        } else if (v.is_array()) {
            out << pad << key << ":\n";
            for (const auto& x : v) {
                out << pad << "  -";
                for (const auto& [k2, v2] : x.items()) out << " " << k2 << "=" << scalar_text(v2);
                out << "\n";
            }
        } else {
            out << pad << key << ": " << scalar_text(v) << "\n";
        }
    }
}

void emit(const Json& j, const Options& o, std::ostream& out)
{
    if (o.format == "json") out << j.dump(2) << "\n";
    else if (o.format == "human") render_human(j, out);
    else throw std::invalid_argument("this command supports human and json output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Semisimple classes attached to elliptic Weyl group classes"};
    app.name(args.empty() ? "weylpsi" : args.front());
    app.require_subcommand(1);
    Options o;

    auto add_type = [&](CLI::App* c, bool many) {
        if (many) c->add_option("--type", o.types, "Cartan type label, repeatable");
        else c->add_option("--type", o.types, "Cartan type label, e.g. E8, 2E6, 3D4")->required()->expected(1);
    };
    auto add_element = [&](CLI::App* c) {
        c->add_option("--word", o.word, "word in the simple reflections, digits or comma separated");
        c->add_option("--name", o.name, "class name from the catalog");
        c->add_option("--catalog", o.catalog, "catalog file used by --name");
    };
    auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
    };
    auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "seed of the generic point draw"); };
    auto add_lattice = [&](CLI::App* c) {
        c->add_option("--lattice", o.lattice, "adj (coweight lattice) or sc (coroot lattice)")
            ->check(CLI::IsMember({"adj", "sc"}));
    };
    auto add_batch = [&](CLI::App* c) {
        add_type(c, true);
        c->add_flag("--all", o.all, "all seven tables");
        c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        c->add_flag("--extended", o.extended, "good column for rank above 6 as well");
        c->add_option("--catalog", o.catalog, "catalog file instead of the shipped one");
        add_seed(c);
    };

    CLI::App* psi = app.add_subcommand("psi", "run the algorithm and print its trace");
    add_type(psi, false);
    add_element(psi);
    add_lattice(psi);
    add_seed(psi);
    psi->add_option("--admissible", o.admissible, "admissible angle numerators k (angles 2 pi k / d)")->delimiter(',');
    add_format(psi, {"human", "json"});

    CLI::App* spectrum = app.add_subcommand("spectrum", "characteristic polynomial, angles, filtration");
    add_type(spectrum, false);
    add_element(spectrum);
    add_seed(spectrum);
    add_format(spectrum, {"human", "json"});

    CLI::App* reduce = app.add_subcommand("kac-reduce", "alcove reduction and Kac diagram of e(gamma) delta");
    add_type(reduce, false);
    reduce->add_option("--gamma", o.gamma, "coweight, p/q comma separated")->required();
    reduce->add_option("--basis", o.basis, "basis of --gamma")->check(CLI::IsMember({"fundamental", "coroot"}));
    add_lattice(reduce);
    add_format(reduce, {"human", "json"});

    CLI::App* table = app.add_subcommand("table", "regenerate tables");
    add_batch(table);
    add_format(table, {"human", "csv", "markdown", "md", "json"});

    CLI::App* verify = app.add_subcommand("verify", "diff regenerated tables against the reference");
    add_batch(verify);
    add_format(verify, {"human", "json"});

    CLI::App* good = app.add_subcommand("good-check", "braid power identity in good position");
    add_type(good, false);
    add_element(good);
    add_seed(good);
    good->add_flag("--extended", o.extended, "allow rank above 6");
    add_format(good, {"human", "json"});

    CLI::App* identify = app.add_subcommand("identify", "catalog class of an elliptic element");
    add_type(identify, false);
    add_element(identify);
    add_format(identify, {"human", "json"});

    CLI::App* order = app.add_subcommand("order", "order of the lift in the chosen lattice");
    add_type(order, false);
    add_element(order);
    add_lattice(order);
    add_seed(order);
    add_format(order, {"human", "json"});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (table->parsed()) return cmd_table(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        Json j;
        if (psi->parsed()) j = cmd_psi(o);
        else if (spectrum->parsed()) j = cmd_spectrum(o);
        else if (reduce->parsed()) j = cmd_kac_reduce(o);
        else if (good->parsed()) j = cmd_good_check(o);
        else if (identify->parsed()) j = cmd_identify(o);
        else j = cmd_order(o);
        if (order->parsed() && o.format == "human") out << j["order"].get<int>() << "\n";
        else emit(j, o, out);
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

int run(int argc, char** argv)
{
    return run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace weylpsi
