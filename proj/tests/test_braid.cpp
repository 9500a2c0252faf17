#include "support.hpp"

#include <doctest.h>

using namespace weylpsi;

namespace {

WeylElement product(const RootSystemPtr& rs, const BraidNormalForm& nf)
{
    WeylElement x(rs);
    for (const auto& f : nf.factors) x = x * f;
    return x;
}

std::vector<int> random_word(int rank, int length, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> letter(0, rank - 1);
    std::vector<int> w(static_cast<size_t>(length));
    for (auto& l : w) l = letter(rng);
    return w;
}

}  // namespace

TEST_CASE("braid_normal_form examples")
{
    auto e6 = RootSystem::build("E6");
    WeylElement w = WeylElement::from_word(e6, {0, 2, 3, 1, 4});
    BraidNormalForm single = braid_normal_form(e6, {w.reduced_word(), 0});
    REQUIRE(single.factors.size() == 1);
    CHECK(single.factors[0] == w);

    auto a1 = RootSystem::build("A1");
    BraidNormalForm twice = braid_normal_form(a1, {{0, 0}, 0});
    CHECK(twice.factors.size() == 2);

    auto a2 = RootSystem::build("A2");
    CHECK(braid_normal_form(a2, {{0, 1, 0}, 0}) == braid_normal_form(a2, {{1, 0, 1}, 0}));
    CHECK_FALSE(braid_normal_form(a2, {{0, 1}, 0}) == braid_normal_form(a2, {{1, 0}, 0}));
    CHECK_THROWS_AS(braid_normal_form(a2, {{2}, 0}), std::invalid_argument);
}

TEST_CASE("normal forms re-multiply to the word")
{
    std::mt19937_64 rng(13);
    const std::vector<std::string> labels{"A3", "B3", "C4", "D4", "F4", "G2", "B4", "A4"};
    for (int trial = 0; trial < 10000; ++trial) {
        auto rs = RootSystem::build(labels[static_cast<size_t>(trial) % labels.size()]);
        std::vector<int> b1 = random_word(rs->rank(), 1 + trial % 9, rng);
        std::vector<int> b2 = random_word(rs->rank(), 1 + trial % 7, rng);
        std::vector<int> b = b1;
        b.insert(b.end(), b2.begin(), b2.end());
        BraidNormalForm nf = braid_normal_form(rs, {b, 0});
        CHECK(nf.length() == static_cast<int>(b.size()));
        CHECK(product(rs, nf) == WeylElement::from_word(rs, b));
        // left-greedy: nothing of the next factor's left descents moves left
        for (size_t i = 0; i + 1 < nf.factors.size(); ++i)
            CHECK((nf.factors[i + 1].left_descents() & ~nf.factors[i].right_descents()) == 0u);
    }
}

TEST_CASE("braid relations do not change the normal form")
{
    std::mt19937_64 rng(14);
    for (const std::string label : {"A3", "B3", "G2", "D4"}) {
        auto rs = RootSystem::build(label);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> b = random_word(rs->rank(), 12, rng);
            // rewrite one occurrence of a reduced word of a random w by another reduced word
            WeylElement w = test::random_weyl(rs, rng, 6);
            std::vector<int> left = w.reduced_word();
            std::vector<int> right = w.inverse().reduced_word();
            std::reverse(right.begin(), right.end());  // another reduced word of w
            std::vector<int> x = b, y = b;
            x.insert(x.begin() + 5, left.begin(), left.end());
            y.insert(y.begin() + 5, right.begin(), right.end());
            CHECK(braid_normal_form(rs, {x, 0}) == braid_normal_form(rs, {y, 0}));
        }
    }
}

TEST_CASE("j is multiplicative on length additive pairs")
{
    std::mt19937_64 rng(15);
    for (const std::string label : {"B3", "F4", "E6"}) {
        auto rs = RootSystem::build(label);
        for (int trial = 0; trial < 300; ++trial) {
            WeylElement a = test::random_weyl(rs, rng, 1 + trial % 10);
            WeylElement b = test::random_weyl(rs, rng, 1 + trial % 8);
            WeylElement ab = a * b;
            if (ab.is_identity() || ab.length() != a.length() + b.length()) continue;
            std::vector<int> w = a.reduced_word(), v = b.reduced_word();
            w.insert(w.end(), v.begin(), v.end());
            BraidNormalForm nf = braid_normal_form(rs, {w, 0});
            REQUIRE(nf.factors.size() == 1);
            CHECK(nf.factors[0] == ab);
        }
    }
}

TEST_CASE("delta moves across generators by the diagram permutation")
{
    std::mt19937_64 rng(16);
    for (const std::string label : {"2E6", "3D4", "2A5"}) {
        auto rs = RootSystem::build(label);
        for (int trial = 0; trial < 50; ++trial) {
            TwistedWeylElement g(test::random_weyl(rs, rng, 8), 1);
            // (w delta)^2 = delta^2 sigma^-2(w) sigma^-1(w), letter by letter
            std::vector<int> word;
            for (int power : {rs->delta_order() - 2, rs->delta_order() - 1})
                for (int i : g.weyl().reduced_word()) word.push_back(rs->delta_image(i, ((power % rs->delta_order()) + rs->delta_order()) % rs->delta_order()));
            CHECK(braid_power(g, 2) == braid_normal_form(rs, {word, 2 % rs->delta_order()}));
        }
    }
}

TEST_CASE("good_power_identity examples")
{
    TwistedWeylElement cox = test::element("G2", "12");
    GoodIdentity g2 = good_power_identity(cox);
    CHECK(g2.holds);
    CHECK(format_good(*cox.root_system(), g2.factors) == "D^2");

    Catalog f4 = load_type("F4");
    GoodIdentity d4 = good_power_identity(f4.find("D4")->element);
    CHECK(d4.holds);
    CHECK(format_good(*f4.rs, d4.factors) == "D^2D_{34}^4");

    TwistedWeylElement t = test::element("3D4", "132132");
    GoodIdentity d3 = good_power_identity(t);
    CHECK(d3.holds);
    CHECK(same_good_shape(*t.root_system(), d3.factors, parse_good(*t.root_system(), "D^2D_{23}^4")));
}

TEST_CASE("is_good_element examples")
{
    auto f4 = RootSystem::build("F4");
    CHECK(is_good_element(TwistedWeylElement(WeylElement(f4), 0)));
    CHECK(good_power_identity(TwistedWeylElement(WeylElement(f4), 0)).factors.empty());
    for (const std::string type : {"G2", "3D4", "F4", "2E6", "E6"}) {
        Catalog c = load_type(type);
        for (const auto& rec : c.records) CHECK_MESSAGE(is_good_element(rec.element), type << " " << rec.name);
    }
}

TEST_CASE("good expressions parse and print")
{
    auto e8 = RootSystem::build("E8");
    auto f = parse_good(*e8, "D^2D_{123456}^{2}");
    REQUIRE(f.size() == 2);
    CHECK(f[0].levi == all_indices(8));
    CHECK(f[1].levi == IndexSet{0, 1, 2, 3, 4, 5});
    CHECK(f[1].exponent == 2);
    CHECK(format_good(*e8, f) == "D^2D_{123456}^2");
    CHECK(parse_good(*e8, "D_4^8")[0].levi == IndexSet{3});
    CHECK(parse_good(*e8, "1").empty());
    CHECK_THROWS_AS(parse_good(*e8, "X^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_good(*e8, "D^"), std::invalid_argument);
}
