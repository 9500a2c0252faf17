#pragma once

// Exact rational and small integer linear algebra shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weylpsi {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<int>;

/// num/den in canonical form (mpq_class(num, den) alone is not canonicalized).
Rational fraction(long num, long den);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// Comma separated list of rationals, e.g. "1/12,0,-3/2".
std::string to_string(const RationalVector& values);
RationalVector parse_rational_vector(std::string_view text);

Integer lcm_of_denominators(const RationalVector& values);
Integer gcd_of(const std::vector<Integer>& values);

bool is_integral(const RationalVector& values);
bool is_zero(const RationalVector& values);

RationalVector to_rational(const IntVector& values);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& a);

/// Dense row-major integer matrix. Sizes here never exceed the rank of an
/// exceptional root system, so no effort is spent on blocking.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), 0) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int& operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
    int operator()(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

    IntMatrix operator*(const IntMatrix& other) const;
    IntVector operator*(const IntVector& v) const;
    RationalVector operator*(const RationalVector& v) const;
    IntMatrix transpose() const;

    bool operator==(const IntMatrix& other) const = default;
    bool is_identity() const;

    const std::vector<int>& data() const { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> data_;
};

/// Dense rational matrix with the handful of exact operations the root and
/// lattice code needs (rank, inverse, solving).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}
    explicit RationalMatrix(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
    const Rational& operator()(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

    RationalVector operator*(const RationalVector& v) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix transpose() const;

    int rank() const;
    /// Throws std::domain_error when singular.
    RationalMatrix inverse() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Integer polynomial, coefficient i multiplies x^i.
using IntPolynomial = std::vector<Integer>;

std::string to_string(const IntPolynomial& p);

/// n-th cyclotomic polynomial over Z.
IntPolynomial cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

std::int64_t lcm_int(std::int64_t a, std::int64_t b);

}  // namespace weylpsi
