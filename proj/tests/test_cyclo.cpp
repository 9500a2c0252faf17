#include "support.hpp"

#include <doctest.h>
#include <mpfr.h>

#include <cmath>

using namespace weylpsi;

namespace {

CycloNumber z(int n, int k)
{
    return CycloNumber::zeta_power(n, k);
}

CycloNumber random_number(int n, std::mt19937_64& rng, int spread = 4)
{
    std::uniform_int_distribution<int> coef(-spread, spread);
    CycloNumber x(n);
    for (int k = 0; k < n; ++k) x += z(n, k) * Rational(coef(rng));
    return x;
}

CycloMatrix random_matrix(int rows, int cols, int n, std::mt19937_64& rng)
{
    CycloMatrix m(rows, cols, n);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = random_number(n, rng, 2);
    return m;
}

// Value at zeta = exp(2 pi i / n) with 1000 bits, real part only.
int mpfr_sign(const CycloNumber& x)
{
    mpfr_t sum, term, coef;
    mpfr_inits2(1000, sum, term, coef, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    int n = x.conductor();
    for (size_t j = 0; j < x.coeffs().size(); ++j) {
        mpfr_const_pi(term, MPFR_RNDN);
        mpfr_mul_ui(term, term, 2 * j, MPFR_RNDN);
        mpfr_div_ui(term, term, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_cos(term, term, MPFR_RNDN);
        mpfr_set_q(coef, x.coeffs()[j].get_mpq_t(), MPFR_RNDN);
        mpfr_mul(term, term, coef, MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);
    }
    int s = mpfr_sgn(sum);
    mpfr_clears(sum, term, coef, static_cast<mpfr_ptr>(nullptr));
    return s;
}

CycloMatrix shifted(const TwistedWeylElement& g, int n, int k)
{
    CycloMatrix m = CycloMatrix::from_int(g.matrix(), n);
    for (int i = 0; i < m.rows(); ++i) m(i, i) -= z(n, k);
    return m;
}

}  // namespace

TEST_CASE("field_ops examples")
{
    CHECK(z(4, 1) * z(4, 1) == CycloNumber(4, Rational(-1)));
    CHECK(z(6, 1) + z(6, 1).inverse() == CycloNumber(6, Rational(1)));
    CHECK(z(5, 1) + z(5, 2) + z(5, 3) + z(5, 4) == CycloNumber(5, Rational(-1)));
    CHECK(z(7, 3).conjugate() == z(7, 4));
    CHECK(z(12, 5).galois(5) == z(12, 1));
    CHECK(z(3, 1).embed(12) == z(12, 4));
    CHECK_THROWS_AS(CycloNumber(9).inverse(), std::domain_error);
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937_64 rng(3);
    for (int n : {3, 5, 8, 12, 15, 18, 24, 30}) {
        for (int trial = 0; trial < 20; ++trial) {
            CycloNumber a = random_number(n, rng), b = random_number(n, rng), c = random_number(n, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == CycloNumber(n, Rational(1)));
            CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
            std::complex<double> p = (a * b).approx(), q = a.approx() * b.approx();
            CHECK(std::abs(p - q) < 1e-9 * (1 + std::abs(q)));
        }
    }
}

TEST_CASE("kernel_basis examples")
{
    CycloMatrix id = CycloMatrix::from_int(IntMatrix::identity(3), 5);
    CHECK(id.kernel_basis().empty());
    CHECK(CycloMatrix(2, 2, 7).kernel_basis().size() == 2);

    TwistedWeylElement w = test::element("E8", "2343654231435426543178");
    CHECK(shifted(w, 12, 1).kernel_basis().size() == 1);
    std::vector<size_t> dims;
    for (int k : {1, 2, 5, 7, 10, 11}) dims.push_back(shifted(w, 12, k).kernel_basis().size());
    CHECK(dims == std::vector<size_t>{1, 2, 1, 1, 2, 1});
}

TEST_CASE("rank plus nullity and kernel soundness")
{
    std::mt19937_64 rng(5);
    for (int n : {4, 5, 12}) {
        for (int trial = 0; trial < 25; ++trial) {
            int rows = 2 + trial % 4, cols = 3 + trial % 3;
            CycloMatrix m = random_matrix(rows, cols, n, rng);
            if (trial % 2) m = random_matrix(rows, 2, n, rng) * random_matrix(2, cols, n, rng);
            auto kernel = m.kernel_basis();
            CHECK(m.rank() + static_cast<int>(kernel.size()) == cols);
            for (const auto& v : kernel)
                for (const auto& x : m * v) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("galois action permutes eigenspace dimensions")
{
    for (const auto& [type, word] : std::vector<std::pair<std::string, std::string>>{
             {"E8", "2343654231435426543178"}, {"F4", "2321343234"}, {"E6", "123142345"}}) {
        TwistedWeylElement g = test::element(type, word);
        int d = g.order();
        for (int j = 1; j < d; ++j) {
            if (std::gcd(j, d) != 1) continue;
            for (int k = 0; k < d; ++k) {
                CycloMatrix m = shifted(g, d, k);
                CycloMatrix conj(m.rows(), m.cols(), d);
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) conj(r, c) = m(r, c).galois(j);
                CHECK(conj.kernel_basis().size() == m.kernel_basis().size());
                CHECK(shifted(g, d, (k * j) % d).kernel_basis().size() == m.kernel_basis().size());
            }
        }
    }
}

TEST_CASE("real_sign examples")
{
    CHECK(real_sign(CycloNumber(5)) == Sign::zero);
    CHECK(real_sign(z(5, 1) + z(5, 4)) == Sign::positive);
    CHECK(real_sign(z(5, 2) + z(5, 3)) == Sign::negative);
    CHECK_THROWS_AS(real_sign(z(5, 1)), std::invalid_argument);
    // 2cos(2pi/7) + 2cos(4pi/7) + 2cos(6pi/7) = -1 exactly
    CycloNumber s = CycloNumber(7, Rational(1));
    for (int k = 1; k <= 6; ++k) s += z(7, k);
    CHECK(real_sign(s) == Sign::zero);
}

TEST_CASE("real_sign agrees with 1000 bit evaluation")
{
    std::mt19937_64 rng(17);
    const std::vector<int> conductors{5, 7, 8, 9, 12, 15, 18, 20, 24, 30};
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        int n = conductors[static_cast<size_t>(trial) % conductors.size()];
        CycloNumber y = random_number(n, rng, 3 + trial % 50);
        CycloNumber x = y + y.conjugate();
        if (trial % 3 == 0) x = x * x - CycloNumber(n, Rational(trial % 11));
        int expected = x.is_zero() ? 0 : mpfr_sign(x);
        CHECK(static_cast<int>(real_sign(x)) == expected);
        ++checked;
    }
    CHECK(checked == 10000);
}
