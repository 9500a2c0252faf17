#pragma once

// Eigenvalue data of w delta on the coweight space: angles, eigenspace
// filtration, Levi chain, good position and regularity.

#include "weylpsi/cyclo.hpp"
#include "weylpsi/roots.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace weylpsi {

/// Characteristic polynomial det(x - M) of w delta^a.
IntPolynomial char_poly(const TwistedWeylElement& g);

/// Exponents of Phi_m in a product of cyclotomic polynomials. Throws
/// std::invalid_argument if p is not such a product.
std::map<int, int> cyclotomic_factorization(IntPolynomial p);

/// Compact signature "2^2,6" listing m^e for each Phi_m^e factor.
std::string cyclotomic_signature(const std::map<int, int>& factors);

/// Angle theta = 2 pi k / d with 0 <= k <= d/2.
struct Angle {
    int k = 0;
    int d = 1;
    int multiplicity = 0;  // complex dimension of the e^{i theta} eigenspace

    Rational turn() const { return fraction(k, d); }
    int real_dimension() const { return (2 * k == d || k == 0) ? multiplicity : 2 * multiplicity; }
    std::string to_string() const;  // "2pi*1/12"
};

struct AngleSpectrum {
    int order = 1;
    std::vector<Angle> angles;
};

AngleSpectrum angle_spectrum(const TwistedWeylElement& g);

struct Filtration {
    AngleSpectrum spectrum;                        // the angles actually used
    std::vector<std::vector<CycloVector>> bases;   // eigenbasis for e^{i theta_j}, conductor d
    std::vector<int> dims;                         // dim F_0, ..., dim F_k
    std::vector<std::vector<int>> levis;           // positive root indices of Delta_0, ..., Delta_k
};

/// Full filtration over all angles of g.
Filtration filtration_levis(const TwistedWeylElement& g);
/// Filtration over a chosen subsequence of angle numerators k (ascending).
Filtration filtration_levis(const TwistedWeylElement& g, const std::vector<int>& numerators);

/// Simple roots contained in a root subset.
IndexSet simple_part(const RootSystem& rs, const std::vector<int>& positive_indices);
/// True iff the positive roots of the subset are those of its simple part.
bool is_standard(const RootSystem& rs, const std::vector<int>& positive_indices);

struct GoodPosition {
    WeylElement x;                 // conjugator, conjugate = x g x^-1
    TwistedWeylElement conjugate;
    Filtration filtration;         // of the conjugate
    std::vector<IndexSet> chain;   // Pi_0, ..., Pi_k
    bool standard = false;
    bool factorization = false;    // (delta^a x_1...x_i)(Pi_i) = Pi_i
    int draws = 0;
};

/// Conjugates g so that every Delta_i is standard. The generic points are
/// drawn from a seeded generator; the postconditions are recorded in the result.
GoodPosition good_position_conjugate(const TwistedWeylElement& g, std::uint64_t seed = 1);
GoodPosition good_position_conjugate(const TwistedWeylElement& g, const std::vector<int>& numerators,
                                     std::uint64_t seed = 1);

struct Regularity {
    bool is_regular = false;
    bool d_regular = false;
    std::vector<Angle> regular_angles;
};

Regularity regularity(const TwistedWeylElement& g);

}  // namespace weylpsi
