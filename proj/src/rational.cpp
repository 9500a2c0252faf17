#include "weylpsi/rational.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylpsi {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool is_integer_text(std::string_view s)
{
    if (s.empty()) return false;
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational fraction(long num, long den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = slash == std::string_view::npos ? text : text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r{Integer(n), d};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const RationalVector& values)
{
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += to_string(values[i]);
    }
    return out;
}

RationalVector parse_rational_vector(std::string_view text)
{
    RationalVector out;
    text = trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

Integer lcm_of_denominators(const RationalVector& values)
{
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

Integer gcd_of(const std::vector<Integer>& values)
{
    Integer g = 0;
    for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

bool is_integral(const RationalVector& values)
{
    for (const auto& v : values)
        if (v.get_den() != 1) return false;
    return true;
}

bool is_zero(const RationalVector& values)
{
    for (const auto& v : values)
        if (v != 0) return false;
    return true;
}

RationalVector to_rational(const IntVector& values)
{
    RationalVector out;
    out.reserve(values.size());
    for (int v : values) out.emplace_back(v);
    return out;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b)
{
    RationalVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b)
{
    RationalVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RationalVector operator*(const Rational& s, const RationalVector& a)
{
    RationalVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const
{
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const
{
    IntVector out(static_cast<size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
    return out;
}

RationalVector IntMatrix::operator*(const RationalVector& v) const
{
    RationalVector out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            int a = (*this)(i, j);
            if (a != 0) out[static_cast<size_t>(i)] += a * v[static_cast<size_t>(j)];
        }
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool IntMatrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols())
{
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const
{
    RationalVector out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const
{
    RationalMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            for (int j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
    return out;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

int RationalMatrix::rank() const
{
    RationalMatrix a = *this;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (a(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(a(rank, j), a(pivot, j));
        for (int r = rank + 1; r < rows_; ++r) {
            if (a(r, c) == 0) continue;
            Rational f = a(r, c) / a(rank, c);
            for (int j = c; j < cols_; ++j) a(r, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

RationalMatrix RationalMatrix::inverse() const
{
    if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
    int n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i) inv(i, i) = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(a(c, j), a(pivot, j));
            std::swap(inv(c, j), inv(pivot, j));
        }
        Rational p = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::string to_string(const IntPolynomial& p)
{
    std::ostringstream out;
    bool first = true;
    for (size_t k = p.size(); k-- > 0;) {
        const Integer& c = p[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || k == 0) out << mag.get_str();
        if (k >= 1) out << "x";
        if (k >= 2) out << "^" << k;
    }
    if (first) out << "0";
    return out.str();
}

namespace {

// Exact division of monic-divisor polynomials over Z; throws if not exact.
IntPolynomial divide_exact(IntPolynomial num, const IntPolynomial& den)
{
    size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("polynomial division: degree too small");
    IntPolynomial q(num.size() - dn, 0);
    for (size_t k = num.size(); k-- > dn;) {
        Integer c = num[k];
        if (c == 0) continue;
        if (c % den[dn] != 0) throw std::logic_error("polynomial division not exact");
        Integer f = c / den[dn];
        q[k - dn] = f;
        for (size_t j = 0; j <= dn; ++j) num[k - dn + j] -= f * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("polynomial division left a remainder");
    return q;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(int n)
{
    if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
    IntPolynomial p(static_cast<size_t>(n + 1), 0);
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
    return p;
}

int euler_phi(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

std::int64_t lcm_int(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

}  // namespace weylpsi
