#pragma once

// Exact arithmetic in Q(zeta_n) and small dense linear algebra over it.

#include "weylpsi/rational.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace weylpsi {

/// Precomputed data for one conductor: Phi_n and zeta^k reduced to the power basis.
struct CycloField {
    int n = 1;
    int degree = 1;
    IntPolynomial modulus;
    std::vector<std::vector<Integer>> powers;  // powers[k] = zeta^k, k < n

    static std::shared_ptr<const CycloField> get(int n);
};

/// Element of Q(zeta_n) as a polynomial in zeta of degree < phi(n).
class CycloNumber {
public:
    CycloNumber();
    explicit CycloNumber(int conductor);
    CycloNumber(int conductor, const Rational& value);

    static CycloNumber zeta_power(int conductor, int k);

    int conductor() const { return field_->n; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const std::shared_ptr<const CycloField>& field() const { return field_; }

    bool is_zero() const;
    bool is_rational() const;
    bool operator==(const CycloNumber& other) const;
    bool operator!=(const CycloNumber& other) const { return !(*this == other); }

    CycloNumber operator+(const CycloNumber& other) const;
    CycloNumber operator-(const CycloNumber& other) const;
    CycloNumber operator-() const;
    CycloNumber operator*(const CycloNumber& other) const;
    CycloNumber operator*(const Rational& q) const;
    CycloNumber& operator+=(const CycloNumber& other);
    CycloNumber& operator-=(const CycloNumber& other);
    /// Throws std::domain_error on zero.
    CycloNumber inverse() const;
    CycloNumber operator/(const CycloNumber& other) const { return *this * other.inverse(); }

    /// Image under zeta -> zeta^-1 (complex conjugation at the standard embedding).
    CycloNumber conjugate() const;
    /// Image under zeta -> zeta^k, gcd(k, n) = 1.
    CycloNumber galois(int k) const;
    /// Same number viewed in Q(zeta_m); n must divide m.
    CycloNumber embed(int m) const;

    std::complex<double> approx() const;
    std::string to_string() const;

private:
    CycloNumber(std::shared_ptr<const CycloField> field, std::vector<Rational> c);

    std::shared_ptr<const CycloField> field_;
    std::vector<Rational> c_;
};

/// Brings two numbers to a common conductor.
void unify_conductors(CycloNumber& a, CycloNumber& b);

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Sign of a real cyclotomic number under zeta_n -> exp(2 pi i / n).
/// Zero is decided exactly; nonzero values by MPFR evaluation with an error
/// bound, doubling precision until the interval excludes 0.
/// Throws std::invalid_argument if x is not real.
Sign real_sign(const CycloNumber& x);

using CycloVector = std::vector<CycloNumber>;

/// Dense matrix over a single cyclotomic field.
class CycloMatrix {
public:
    CycloMatrix() = default;
    CycloMatrix(int rows, int cols, int conductor);
    static CycloMatrix from_int(const IntMatrix& m, int conductor);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int conductor() const { return conductor_; }
    CycloNumber& operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
    const CycloNumber& operator()(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

    CycloVector operator*(const CycloVector& v) const;
    CycloMatrix operator*(const CycloMatrix& other) const;

    int rank() const;
    /// Basis of the right kernel, by Gauss-Jordan elimination pivoting on the
    /// first nonzero entry of each column.
    std::vector<CycloVector> kernel_basis() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int conductor_ = 1;
    std::vector<CycloNumber> data_;
};

CycloVector conjugate(const CycloVector& v);

}  // namespace weylpsi
