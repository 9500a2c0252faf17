#pragma once

// Positive braid monoid of (W, S): left-greedy normal forms and the
// good-element power identity.

#include "weylpsi/spectral.hpp"

#include <string>
#include <utility>
#include <vector>

namespace weylpsi {

/// delta^a followed by a positive word in the generators.
struct BraidWord {
    std::vector<int> letters;
    int delta_power = 0;
};

/// delta^a x_1 x_2 ... x_m with every pair (x_i, x_{i+1}) left-weighted.
struct BraidNormalForm {
    int delta_power = 0;
    std::vector<WeylElement> factors;

    int length() const;
    bool operator==(const BraidNormalForm& other) const;
};

/// Right multiplication by j(s) for a simple element s, keeping the form left-greedy.
void right_multiply(BraidNormalForm& nf, const WeylElement& simple);
BraidNormalForm braid_normal_form(const RootSystemPtr& rs, const BraidWord& word);
/// Normal form of j(w delta^a)^m.
BraidNormalForm braid_power(const TwistedWeylElement& g, int m);

WeylElement longest_element(const RootSystemPtr& rs, const IndexSet& levi);

/// Factor Delta_S^e of the right hand side.
struct LeviPower {
    IndexSet levi;
    int exponent = 0;
    bool operator==(const LeviPower&) const = default;
};

/// "D^2D_{34}^4": D alone is the full longest element.
std::string format_good(const RootSystem& rs, const std::vector<LeviPower>& factors);
/// Parses format_good output; 1-based digits inside braces.
std::vector<LeviPower> parse_good(const RootSystem& rs, const std::string& text);

struct GoodIdentity {
    bool holds = false;
    bool even = false;
    bool decreasing = false;
    std::vector<LeviPower> factors;  // equal consecutive Levis merged, empty ones dropped
    int lhs_length = 0;
    int rhs_length = 0;
};

/// Compares j(g')^d with prod Delta_{Pi_i}^{d (theta_{i+1} - theta_i) / pi} for g' in good position.
GoodIdentity good_power_identity(const GoodPosition& position);
GoodIdentity good_power_identity(const TwistedWeylElement& g, std::uint64_t seed = 1);
bool is_good_element(const TwistedWeylElement& g, std::uint64_t seed = 1);

/// Same exponents and same Levi types factor by factor.
bool same_good_shape(const RootSystem& rs, const std::vector<LeviPower>& a, const std::vector<LeviPower>& b);

}  // namespace weylpsi
