#include "support.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace weylpsi;

namespace {

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Reflections on the simple-root basis straight from the Cartan matrix.
Eigen::MatrixXd root_action(const RootSystem& rs, const std::vector<int>& word)
{
    int r = rs.rank();
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(r, r);
    for (int i : word) {
        Eigen::MatrixXd s = Eigen::MatrixXd::Identity(r, r);
        for (int j = 0; j < r; ++j) s(i, j) -= rs.cartan()(i, j);
        m = m * s;
    }
    Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) delta(rs.delta()[static_cast<size_t>(i)], i) = 1;
    if (rs.twisted()) m = m * delta;
    return m;
}

// Angles in [0, 1/2] turns with multiplicities, from floating eigenvalues.
std::vector<std::pair<int, int>> numeric_angles(const Eigen::MatrixXd& m, int d)
{
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    std::map<int, int> counts;
    for (const auto& ev : es.eigenvalues()) {
        double turn = std::arg(ev) / (2 * M_PI);
        int k = static_cast<int>(std::lround(std::abs(turn) * d));
        CHECK(std::abs(std::abs(turn) * d - k) < 1e-6);
        if (turn >= -1e-9) counts[k] += 1;
        else if (2 * k == d) counts[k] += 1;
    }
    return {counts.begin(), counts.end()};
}

}  // namespace

TEST_CASE("char_poly examples")
{
    auto e6 = RootSystem::build("E6");
    IntPolynomial id = char_poly(TwistedWeylElement(WeylElement(e6), 0));
    IntPolynomial expected{1};
    for (int i = 0; i < 6; ++i) expected = multiply(expected, {-1, 1});
    CHECK(id == expected);

    // G2 Coxeter: x^2 - tr x + det of the explicit 2 x 2 product
    auto g2 = RootSystem::build("G2");
    Eigen::MatrixXd m = root_action(*g2, {0, 1});
    IntPolynomial quad{Integer(std::lround(m.determinant())), Integer(-std::lround(m.trace())), 1};
    CHECK(char_poly(test::element("G2", "12")) == quad);
    CHECK(quad == IntPolynomial{1, -1, 1});

    // zeta_12^k for k = 1,5,7,11 once and k = 2,10 twice
    IntPolynomial a7 = multiply(cyclotomic_polynomial(12), multiply(cyclotomic_polynomial(6), cyclotomic_polynomial(6)));
    CHECK(char_poly(test::element("E8", "2343654231435426543178")) == a7);
}

TEST_CASE("char_poly factors into cyclotomics with unit ends")
{
    for (const auto& type : table_types()) {
        Catalog c = load_type(type);
        for (const auto& rec : c.records) {
            IntPolynomial p = char_poly(rec.element);
            CHECK(static_cast<int>(p.size()) == c.rs->rank() + 1);
            CHECK(abs(p.front()) == 1);
            CHECK(p.back() == 1);
            auto factors = cyclotomic_factorization(p);
            int degree = 0;
            for (auto [m, e] : factors) degree += euler_phi(m) * e;
            CHECK(degree == c.rs->rank());
        }
    }
    CHECK_THROWS_AS(cyclotomic_factorization({2, 1}), std::invalid_argument);
}

TEST_CASE("angle_spectrum examples")
{
    AngleSpectrum s = angle_spectrum(TwistedWeylElement(longest_element(RootSystem::build("F4"), all_indices(4)), 0));
    REQUIRE(s.angles.size() == 1);
    CHECK(s.angles[0].k * 2 == s.angles[0].d);
    CHECK(s.angles[0].multiplicity == 4);

    AngleSpectrum a7 = angle_spectrum(test::element("E8", "2343654231435426543178"));
    CHECK(a7.order == 12);
    std::vector<int> ks;
    for (const auto& a : a7.angles) ks.push_back(a.k);
    CHECK(ks == std::vector<int>{1, 2, 5});

    TwistedWeylElement t = test::element("3D4", "12");
    AngleSpectrum d4 = angle_spectrum(t);
    CHECK(d4.order == 12);
    REQUIRE_FALSE(d4.angles.empty());
    CHECK(d4.angles.front().k == 1);
    auto numeric = numeric_angles(root_action(*t.root_system(), {0, 1}), 12);
    std::vector<std::pair<int, int>> exact;
    for (const auto& a : d4.angles) exact.push_back({a.k, a.multiplicity});
    CHECK(exact == numeric);
}

TEST_CASE("angle spectra agree with floating eigenvalues across the catalog")
{
    for (const auto& type : table_types()) {
        Catalog c = load_type(type);
        for (const auto& rec : c.records) {
            AngleSpectrum s = angle_spectrum(rec.element);
            std::vector<std::pair<int, int>> exact;
            int total = 0;
            for (const auto& a : s.angles) {
                exact.push_back({a.k, a.multiplicity});
                total += a.real_dimension();
            }
            CHECK(total == c.rs->rank());
            CHECK_MESSAGE(exact == numeric_angles(root_action(*c.rs, rec.word), s.order), type << " " << rec.name);
            CHECK(s.angles.front().k > 0);
        }
    }
}

TEST_CASE("filtration_levis examples")
{
    Filtration a1 = filtration_levis(test::element("A1", "1"));
    CHECK(a1.dims == std::vector<int>{0, 1});
    CHECK(a1.levis.back().empty());

    TwistedWeylElement w = test::element("E8", "2343654231435426543178");
    Filtration f = filtration_levis(w);
    CHECK(f.dims == std::vector<int>{0, 2, 6, 8});
    REQUIRE(f.levis.size() == 4);
    CHECK(f.levis[0].size() == 120);
    CHECK(f.levis[1].size() == 12);
    CHECK(f.levis[2].empty());
    CHECK(f.levis[3].empty());
    GoodPosition p = good_position_conjugate(w);
    CHECK(w.root_system()->levi_type(p.chain[1]) == "D4");
}

TEST_CASE("filtration invariants over the catalog")
{
    for (const auto& type : table_types()) {
        Catalog c = load_type(type);
        for (const auto& rec : c.records) {
            Filtration f = filtration_levis(rec.element);
            CHECK(f.dims.front() == 0);
            CHECK(f.dims.back() == c.rs->rank());
            for (size_t i = 1; i < f.dims.size(); ++i) CHECK(f.dims[i] > f.dims[i - 1]);
            for (size_t i = 1; i < f.levis.size(); ++i) {
                CHECK(std::includes(f.levis[i - 1].begin(), f.levis[i - 1].end(), f.levis[i].begin(), f.levis[i].end()));
            }
            CHECK(f.levis.front().size() == static_cast<size_t>(c.rs->num_positive_roots()));
            CHECK(f.levis.back().empty());
            // each Delta_i is closed under root addition
            for (const auto& levi : f.levis)
                for (int a : levi)
                    for (int b : levi) {
                        IntVector s = c.rs->positive_roots()[static_cast<size_t>(a)];
                        const IntVector& t = c.rs->positive_roots()[static_cast<size_t>(b)];
                        for (size_t q = 0; q < s.size(); ++q) s[q] += t[q];
                        int idx = c.rs->find_root(s);
                        if (idx >= 0) CHECK(std::binary_search(levi.begin(), levi.end(), idx));
                    }
        }
    }
}

TEST_CASE("good_position_conjugate examples")
{
    TwistedWeylElement cox = test::element("G2", "12");
    GoodPosition same = good_position_conjugate(cox);
    CHECK(same.x.is_identity());
    CHECK(same.conjugate == cox);

    GoodPosition a7 = good_position_conjugate(test::element("E8", "2343654231435426543178"));
    CHECK(a7.standard);
    CHECK(a7.chain[1] == IndexSet{1, 2, 3, 4});

    TwistedWeylElement g = test::element("2E6", "1254");
    GoodPosition p = good_position_conjugate(g);
    CHECK(p.standard);
    CHECK(p.conjugate == g.conjugate_by(p.x));
    for (size_t i = 0; i < p.filtration.levis.size(); ++i)
        CHECK(p.filtration.levis[i] == g.root_system()->levi_positive_roots(p.chain[i]));
}

TEST_CASE("good position postconditions over the catalog and several seeds")
{
    for (const auto& type : table_types()) {
        Catalog c = load_type(type);
        for (const auto& rec : c.records)
            for (std::uint64_t seed : {1, 2, 99}) {
                GoodPosition p = good_position_conjugate(rec.element, seed);
                CHECK_MESSAGE(p.standard, type << " " << rec.name);
                CHECK_MESSAGE(p.factorization, type << " " << rec.name);
                CHECK(p.conjugate == rec.element.conjugate_by(p.x));
                for (size_t i = 0; i < p.chain.size(); ++i)
                    CHECK(p.filtration.levis[i] == c.rs->levi_positive_roots(p.chain[i]));
            }
    }
}

TEST_CASE("regularity examples")
{
    Regularity cox = regularity(test::element("G2", "12"));
    CHECK(cox.is_regular);
    CHECK(cox.d_regular);
    CHECK(cox.regular_angles.front().k == 1);
    CHECK(cox.regular_angles.front().d == 6);

    // explicit check: the 2 x 2 eigenspace of a Coxeter element meets no root hyperplane
    Filtration f = filtration_levis(test::element("G2", "12"));
    CHECK(f.levis[1].empty());

    auto e8 = RootSystem::build("E8");
    Regularity minus = regularity(TwistedWeylElement(longest_element(e8, all_indices(8)), 0));
    CHECK(minus.is_regular);
    REQUIRE(minus.regular_angles.size() == 1);
    CHECK(minus.regular_angles[0].k * 2 == minus.regular_angles[0].d);

    Regularity a7 = regularity(test::element("E8", "2343654231435426543178"));
    CHECK_FALSE(a7.d_regular);
}

TEST_CASE("coprime powers share the characteristic polynomial")
{
    for (const auto& type : table_types()) {
        Catalog c = load_type(type);
        int n = c.rs->delta_order();
        for (const auto& rec : c.records) {
            int d = rec.element.order();
            for (int k = 1; k < d; ++k) {
                if (std::gcd(k, d) != 1 || k % n != 1 % n) continue;
                CHECK(char_poly(rec.element.power(k)) == char_poly(rec.element));
            }
        }
    }
}

TEST_CASE("elliptic iff zero is not an angle")
{
    std::mt19937_64 rng(23);
    for (const std::string label : {"B3", "D4", "2A3", "3D4", "F4", "2E6"}) {
        auto rs = RootSystem::build(label);
        for (int trial = 0; trial < 40; ++trial) {
            TwistedWeylElement g(test::random_weyl(rs, rng, 1 + trial), rs->twisted() ? 1 : 0);
            AngleSpectrum s = angle_spectrum(g);
            CHECK(is_elliptic(g) == (s.angles.front().k != 0));
        }
    }
}
