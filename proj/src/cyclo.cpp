#include "weylpsi/cyclo.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylpsi {

std::shared_ptr<const CycloField> CycloField::get(int n)
{
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto f = std::make_shared<CycloField>();
    f->n = n;
    f->modulus = cyclotomic_polynomial(n);
    f->degree = static_cast<int>(f->modulus.size()) - 1;
    size_t deg = static_cast<size_t>(f->degree);
    std::vector<Integer> cur(deg, 0);
    cur[0] = 1;
    for (int k = 0; k < n; ++k) {
        f->powers.push_back(cur);
        // multiply by zeta and reduce with the monic modulus
        Integer top = cur[deg - 1];
        for (size_t j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (size_t j = 0; j < deg; ++j) cur[j] -= top * f->modulus[j];
    }
    cache.emplace(n, f);
    return f;
}

CycloNumber::CycloNumber() : CycloNumber(1) {}

CycloNumber::CycloNumber(int conductor)
    : field_(CycloField::get(conductor)), c_(static_cast<size_t>(field_->degree), Rational(0))
{
}

CycloNumber::CycloNumber(int conductor, const Rational& value) : CycloNumber(conductor)
{
    c_[0] = value;
}

CycloNumber::CycloNumber(std::shared_ptr<const CycloField> field, std::vector<Rational> c)
    : field_(std::move(field)), c_(std::move(c))
{
}

CycloNumber CycloNumber::zeta_power(int conductor, int k)
{
    auto f = CycloField::get(conductor);
    k %= conductor;
    if (k < 0) k += conductor;
    std::vector<Rational> c(static_cast<size_t>(f->degree));
    for (size_t j = 0; j < c.size(); ++j) c[j] = f->powers[static_cast<size_t>(k)][j];
    return CycloNumber(f, std::move(c));
}

bool CycloNumber::is_zero() const
{
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const
{
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

void unify_conductors(CycloNumber& a, CycloNumber& b)
{
    if (a.conductor() == b.conductor()) return;
    int m = static_cast<int>(lcm_int(a.conductor(), b.conductor()));
    a = a.embed(m);
    b = b.embed(m);
}

bool CycloNumber::operator==(const CycloNumber& other) const
{
    if (conductor() != other.conductor()) {
        CycloNumber a = *this, b = other;
        unify_conductors(a, b);
        return a == b;
    }
    return c_ == other.c_;
}

CycloNumber CycloNumber::operator+(const CycloNumber& other) const
{
    CycloNumber out = *this;
    out += other;
    return out;
}

CycloNumber CycloNumber::operator-(const CycloNumber& other) const
{
    CycloNumber out = *this;
    out -= other;
    return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other)
{
    if (conductor() != other.conductor()) {
        CycloNumber b = other;
        unify_conductors(*this, b);
        return *this += b;
    }
    for (size_t j = 0; j < c_.size(); ++j) c_[j] += other.c_[j];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other)
{
    if (conductor() != other.conductor()) {
        CycloNumber b = other;
        unify_conductors(*this, b);
        return *this -= b;
    }
    for (size_t j = 0; j < c_.size(); ++j) c_[j] -= other.c_[j];
    return *this;
}

CycloNumber CycloNumber::operator-() const
{
    CycloNumber out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
}

CycloNumber CycloNumber::operator*(const CycloNumber& other) const
{
    if (conductor() != other.conductor()) {
        CycloNumber a = *this, b = other;
        unify_conductors(a, b);
        return a * b;
    }
    size_t deg = c_.size();
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    bool any = false;
    for (size_t i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j)
            if (other.c_[j] != 0) {
                prod[i + j] += c_[i] * other.c_[j];
                any = true;
            }
    }
    std::vector<Rational> out(deg, Rational(0));
    if (!any) return CycloNumber(field_, std::move(out));
    for (size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        if (k < deg) {
            out[k] += prod[k];
            continue;
        }
        const auto& p = field_->powers[k % static_cast<size_t>(field_->n)];
        for (size_t j = 0; j < deg; ++j)
            if (p[j] != 0) out[j] += prod[k] * p[j];
    }
    return CycloNumber(field_, std::move(out));
}

CycloNumber CycloNumber::operator*(const Rational& q) const
{
    CycloNumber out = *this;
    for (auto& x : out.c_) x *= q;
    return out;
}

CycloNumber CycloNumber::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    if (is_rational()) return CycloNumber(conductor(), 1 / c_[0]);
    int deg = field_->degree;
    RationalMatrix m(deg, deg);
    for (int j = 0; j < deg; ++j) {
        CycloNumber col = *this * zeta_power(conductor(), j);
        for (int i = 0; i < deg; ++i) m(i, j) = col.c_[static_cast<size_t>(i)];
    }
    RationalMatrix inv = m.inverse();
    std::vector<Rational> out(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) out[static_cast<size_t>(i)] = inv(i, 0);
    return CycloNumber(field_, std::move(out));
}

CycloNumber CycloNumber::galois(int k) const
{
    int n = conductor();
    k %= n;
    if (k < 0) k += n;
    if (std::gcd(k, n) != 1) throw std::invalid_argument("Galois exponent must be coprime to the conductor");
    std::vector<Rational> out(c_.size(), Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& p = field_->powers[(j * static_cast<size_t>(k)) % static_cast<size_t>(n)];
        for (size_t i = 0; i < out.size(); ++i)
            if (p[i] != 0) out[i] += c_[j] * p[i];
    }
    return CycloNumber(field_, std::move(out));
}

CycloNumber CycloNumber::conjugate() const
{
    return galois(conductor() - 1 == 0 ? 1 : conductor() - 1);
}

CycloNumber CycloNumber::embed(int m) const
{
    int n = conductor();
    if (m == n) return *this;
    if (m % n != 0) throw std::invalid_argument("conductor does not divide target");
    auto target = CycloField::get(m);
    int step = m / n;
    std::vector<Rational> out(static_cast<size_t>(target->degree), Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& p = target->powers[(j * static_cast<size_t>(step)) % static_cast<size_t>(m)];
        for (size_t i = 0; i < out.size(); ++i)
            if (p[i] != 0) out[i] += c_[j] * p[i];
    }
    return CycloNumber(target, std::move(out));
}

std::complex<double> CycloNumber::approx() const
{
    std::complex<double> total = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / conductor();
        total += c_[j].get_d() * std::polar(1.0, angle);
    }
    return total;
}

std::string CycloNumber::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        Rational q = c_[j];
        if (!first) out << (q < 0 ? " - " : " + ");
        else if (q < 0) out << "-";
        if (q < 0) q = -q;
        first = false;
        if (j == 0) {
            out << weylpsi::to_string(q);
            continue;
        }
        if (q != 1) out << weylpsi::to_string(q) << "*";
        out << "z" << conductor();
        if (j > 1) out << "^" << j;
    }
    if (first) return "0";
    return out.str();
}

Sign real_sign(const CycloNumber& x)
{
    if (x.conjugate() != x) throw std::invalid_argument("real_sign: argument is not real");
    if (x.is_zero()) return Sign::zero;
    if (x.is_rational()) return x.coeffs()[0] > 0 ? Sign::positive : Sign::negative;

    const auto& c = x.coeffs();
    int n = x.conductor();
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        mpfr_t sum, term, angle, coef, bound, magnitude;
        mpfr_inits2(prec, sum, term, angle, coef, bound, magnitude, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_zero(sum, 1);
        mpfr_set_zero(magnitude, 1);
        for (size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            mpfr_const_pi(angle, MPFR_RNDN);
            mpfr_mul_ui(angle, angle, 2 * static_cast<unsigned long>(j), MPFR_RNDN);
            mpfr_div_ui(angle, angle, static_cast<unsigned long>(n), MPFR_RNDN);
            mpfr_cos(term, angle, MPFR_RNDN);
            mpfr_set_q(coef, c[j].get_mpq_t(), MPFR_RNDN);
            mpfr_mul(term, term, coef, MPFR_RNDN);
            mpfr_add(sum, sum, term, MPFR_RNDN);
            mpfr_abs(coef, coef, MPFR_RNDN);
            mpfr_mul_ui(coef, coef, 16 + 16 * static_cast<unsigned long>(j), MPFR_RNDU);
            mpfr_add(magnitude, magnitude, coef, MPFR_RNDU);
        }
        // every rounded operation contributes at most a few ulps of its operands
        mpfr_mul_ui(bound, magnitude, static_cast<unsigned long>(c.size() + 2), MPFR_RNDU);
        mpfr_mul_2si(bound, bound, -static_cast<long>(prec), MPFR_RNDU);
        mpfr_abs(term, sum, MPFR_RNDN);
        int decided = mpfr_cmp(term, bound) > 0;
        int sign = mpfr_sgn(sum);
        mpfr_clears(sum, term, angle, coef, bound, magnitude, static_cast<mpfr_ptr>(nullptr));
        if (decided) return sign > 0 ? Sign::positive : Sign::negative;
        if (prec > (1 << 20)) throw std::logic_error("real_sign failed to separate a nonzero value from 0");
    }
}

CycloMatrix::CycloMatrix(int rows, int cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), data_(static_cast<size_t>(rows * cols), CycloNumber(conductor))
{
}

CycloMatrix CycloMatrix::from_int(const IntMatrix& m, int conductor)
{
    CycloMatrix out(m.rows(), m.cols(), conductor);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out(i, j) = CycloNumber(conductor, Rational(m(i, j)));
    return out;
}

CycloVector CycloMatrix::operator*(const CycloVector& v) const
{
    CycloVector out(static_cast<size_t>(rows_), CycloNumber(conductor_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const CycloNumber& a = (*this)(i, j);
            if (!a.is_zero() && !v[static_cast<size_t>(j)].is_zero()) out[static_cast<size_t>(i)] += a * v[static_cast<size_t>(j)];
        }
    return out;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& other) const
{
    CycloMatrix out(rows_, other.cols_, conductor_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycloNumber& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < other.cols_; ++j)
                if (!other(k, j).is_zero()) out(i, j) += a * other(k, j);
        }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(CycloMatrix& a)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < a.rows(); ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(pivot, j));
        CycloNumber inv = a(row, col).inverse();
        for (int j = col; j < a.cols(); ++j)
            if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            CycloNumber f = a(r, col);
            for (int j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int CycloMatrix::rank() const
{
    CycloMatrix a = *this;
    return static_cast<int>(row_reduce(a).size());
}

std::vector<CycloVector> CycloMatrix::kernel_basis() const
{
    CycloMatrix a = *this;
    std::vector<int> pivots = row_reduce(a);
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<CycloVector> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        CycloVector v(static_cast<size_t>(cols_), CycloNumber(conductor_));
        v[static_cast<size_t>(f)] = CycloNumber(conductor_, Rational(1));
        for (size_t i = 0; i < pivots.size(); ++i) v[static_cast<size_t>(pivots[i])] = -a(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

CycloVector conjugate(const CycloVector& v)
{
    CycloVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.conjugate());
    return out;
}

}  // namespace weylpsi
