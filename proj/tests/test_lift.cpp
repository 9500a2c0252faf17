#include "support.hpp"

#include <doctest.h>

#include <map>
#include <queue>

using namespace weylpsi;

namespace {

KacDiagram kac_of(const TorusElement& t)
{
    return omega_normalize(kac_diagram_of(t));
}

}  // namespace

TEST_CASE("lambda_chain examples")
{
    PsiTrace a1 = psi_trace(test::element("A1", "1"));
    REQUIRE(a1.lambda.size() == 2);
    CHECK(a1.lambda[1] == test::coweight({0}));
    CHECK(a1.lambda[0] == test::coweight({1}));
    CHECK(lambda_chain(a1.position) == a1.lambda);

    PsiTrace a7 = psi_trace(test::element("E8", "2343654231435426543178"));
    REQUIRE(a7.lambda.size() == 4);
    CHECK(a7.rho[1] == test::coweight({-3, 1, 1, 1, 1, -3, 0, 0}));
    CHECK(a7.lambda[1] == test::coweight({-3, 1, 1, 1, 1, -3, 0, 0}));
    CHECK(a7.lambda[0] == test::coweight({1, 1, 1, 1, 1, 1, 2, 2}));
    CHECK(is_zero(a7.lambda[2].coords));
    CHECK(is_zero(a7.lambda[3].coords));
}

TEST_CASE("lambda_chain rejects a non-standard chain")
{
    TwistedWeylElement g = test::element("E8", "2343654231435426543178");
    GoodPosition raw;
    raw.conjugate = g;
    raw.filtration = filtration_levis(g);
    raw.x = WeylElement(g.root_system());
    raw.standard = false;
    CHECK_THROWS_AS(lambda_chain(raw), std::invalid_argument);
}

TEST_CASE("psi_element examples")
{
    TorusElement a1 = psi_element(test::element("A1", "1"));
    CHECK(a1.gamma == test::coweight({1}, 2));
    auto rs = RootSystem::build("A1");
    CHECK(a1.gamma.to_coroot(*rs).coords == test::rationals({1}, 4));

    TorusElement a7 = psi_element(test::element("E8", "2343654231435426543178"));
    CHECK(a7.gamma == test::coweight({1, 1, 1, 1, 1, 1, 2, 2}, 12));

    TwistedWeylElement cox = test::element("G2", "12");
    TorusElement g2 = psi_element(cox);
    CHECK(g2.gamma == test::coweight({1, 1}, 6));
    CHECK(regular_shortcut(cox, regularity(cox).regular_angles.front()).gamma == g2.gamma);
}

TEST_CASE("regular_shortcut examples")
{
    auto f4 = RootSystem::build("F4");
    TwistedWeylElement w0(longest_element(f4, all_indices(4)), 0);
    Angle pi{1, 2, 4};
    CHECK(regular_shortcut(w0, pi).gamma == test::coweight({1, 1, 1, 1}, 2));

    Catalog e8 = load_type("E8");
    const ClassRecord* cox = e8.find("E8");
    REQUIRE(cox);
    Angle first{1, 30, 1};
    TorusElement t = regular_shortcut(cox->element, first);
    CHECK(t.gamma == test::coweight({1, 1, 1, 1, 1, 1, 1, 1}, 30));
    CHECK(kac_of(t).labels == std::vector<int>(9, 1));

    const ClassRecord* a7 = e8.find("E8(a7)");
    CHECK_THROWS_AS(regular_shortcut(a7->element, Angle{1, 12, 1}), std::invalid_argument);
    CHECK_THROWS_AS(regular_shortcut(test::element("E6", "1"), Angle{1, 2, 1}), std::invalid_argument);
}

TEST_CASE("regular shortcut agrees with psi on d-regular catalog classes")
{
    int regular = 0;
    for (const auto& type : table_types()) {
        Catalog c = load_type(type);
        for (const auto& rec : c.records) {
            Regularity reg = regularity(rec.element);
            if (!reg.d_regular) continue;
            ++regular;
            KacDiagram a = kac_of(regular_shortcut(rec.element, reg.regular_angles.front()));
            CHECK_MESSAGE(a == kac_of(psi_element(rec.element)), type << " " << rec.name);
            // the admissible singleton (2 pi / d) gives the same diagram
            PsiOptions single;
            single.numerators = {1};
            CHECK(kac_of(psi_element(rec.element, single)) == a);
        }
    }
    CHECK(regular > 20);
}

TEST_CASE("minimal_length_shift examples")
{
    TwistedWeylElement s = minimal_length_shift(test::element("A2", "121"));
    CHECK(s.length() == 1);

    Catalog c = load_type("F4");
    const ClassRecord* four = c.find("4A1");
    REQUIRE(four);
    std::mt19937_64 rng(4);
    TwistedWeylElement shifted = minimal_length_shift(test::random_conjugate(four->element, rng));
    CHECK(shifted.length() == 24);
    CHECK(shifted == TwistedWeylElement(longest_element(c.rs, all_indices(4)), 0));

    for (const auto& rec : c.records) CHECK(minimal_length_shift(rec.element).length() == rec.element.length());
}

TEST_CASE("minimal_length_shift reaches the minimal length of every class")
{
    for (const std::string label : {"A2", "G2", "B3", "3D4", "2A3", "F4"}) {
        auto rs = RootSystem::build(label);
        int a = rs->twisted() ? 1 : 0;
        test::Classes classes = test::enumerate_classes(rs, a);
        for (const auto& [g, id] : classes.elements) {
            TwistedWeylElement h = minimal_length_shift(g);
            CHECK_MESSAGE(h.length() == classes.min_length[static_cast<size_t>(id)], label);
            CHECK(classes.class_of.at(h.matrix().data()) == id);
        }
    }
}

TEST_CASE("psi_nonelliptic examples")
{
    TwistedWeylElement g = test::element("F4", "2321343234");
    CHECK(kac_of(psi_nonelliptic(g)) == kac_of(psi_element(g)));

    auto e6 = RootSystem::build("E6");
    TorusElement id = psi_nonelliptic(TwistedWeylElement(WeylElement(e6), 0));
    CHECK(is_zero(id.gamma.coords));
    CHECK(id.delta_power == 0);
    TorusElement twisted = psi_nonelliptic(test::element("2E6", "e"));
    CHECK(is_zero(twisted.gamma.coords));
    CHECK(twisted.delta_power == 1);

    // A1 answer alpha^vee / 4 carried into E6
    TorusElement s1 = psi_nonelliptic(test::element("E6", "1"));
    RationalVector coroot = s1.gamma.to_coroot(*e6).coords;
    CHECK(coroot == test::rationals({1, 0, 0, 0, 0, 0}, 4));
}

TEST_CASE("psi_nonelliptic is a class invariant")
{
    std::mt19937_64 rng(8);
    for (const std::string label : {"B3", "F4", "2E6"}) {
        auto rs = RootSystem::build(label);
        for (int trial = 0; trial < 12; ++trial) {
            TwistedWeylElement g(test::random_weyl(rs, rng, 2 + trial), rs->twisted() ? 1 : 0);
            KacDiagram base = kac_of(psi_nonelliptic(g));
            for (int k = 0; k < 3; ++k) CHECK(kac_of(psi_nonelliptic(test::random_conjugate(g, rng))) == base);
        }
    }
}

TEST_CASE("torus_order examples")
{
    TorusElement zero{RootSystem::build("E8"), test::coweight({0, 0, 0, 0, 0, 0, 0, 0}), 0, Lattice::adjoint};
    CHECK(torus_order(zero) == 1);

    Catalog f4 = load_type("F4");
    TorusElement t = psi_element(f4.find("A3+~A1")->element);
    CHECK(f4.find("A3+~A1")->element.order() == 4);
    t.lattice = Lattice::simply_connected;
    CHECK(torus_order(t) == 8);

    TorusElement a7{RootSystem::build("E8"), test::coweight({1, 1, 1, 1, 1, 1, 2, 2}, 12), 0, Lattice::adjoint};
    CHECK(torus_order(a7) == 12);
    a7.lattice = Lattice::simply_connected;
    CHECK(torus_order(a7) == 12);
}

TEST_CASE("tits_lift_order examples")
{
    auto e6 = RootSystem::build("E6");
    CHECK(tits_lift_order(TwistedWeylElement(WeylElement(e6), 0)) == 1);
    CHECK(tits_lift_order(test::element("A1", "1"), Lattice::simply_connected) == 4);
    CHECK(tits_lift_order(test::element("A1", "1"), Lattice::adjoint) == 2);
    Catalog f4 = load_type("F4");
    CHECK(tits_lift_order(f4.find("A3+~A1")->element) == 8);
}

TEST_CASE("lift invariants over the catalog")
{
    std::mt19937_64 rng(12);
    for (const auto& type : table_types()) {
        Catalog c = load_type(type);
        for (const auto& rec : c.records) {
            PsiTrace tr = psi_trace(rec.element);
            const RationalCoweight& l0 = tr.lambda.front();
            // delta fixes lambda_0
            IntMatrix delta = c.rs->delta_matrix(rec.element.delta_power());
            CHECK(RationalCoweight{delta * l0.coords, CoweightBasis::fundamental} == l0);
            // integral coefficients d (theta_{j+1} - theta_j) / 2 pi
            for (const auto& a : tr.position.filtration.spectrum.angles) CHECK(a.d == rec.element.order());
            TorusElement t = tr.element;
            t.lattice = Lattice::simply_connected;
            CHECK_MESSAGE(torus_order(t) == tits_lift_order(rec.element, Lattice::simply_connected), type << " " << rec.name);
            if (c.rs->rank() <= 6) {
                KacDiagram base = kac_of(tr.element);
                for (int k = 0; k < 4; ++k) CHECK(kac_of(psi_element(test::random_conjugate(rec.element, rng))) == base);
            }
        }
    }
}

TEST_CASE("lattice labels")
{
    CHECK(parse_lattice("adj") == Lattice::adjoint);
    CHECK(parse_lattice("sc") == Lattice::simply_connected);
    CHECK_THROWS_AS(parse_lattice("ad"), std::invalid_argument);
}
