#pragma once

#include "weylpsi/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace weylpsi {

/// Set of simple-root indices (0-based), kept sorted.
using IndexSet = std::vector<int>;

struct IntVectorHash {
    size_t operator()(const IntVector& v) const noexcept;
};

/// Finite root system with an optional pinned diagram automorphism delta.
///
/// Simple roots follow Bourbaki numbering externally; internally every index
/// is 0-based. Roots are integer vectors in the simple-root basis, coroots in
/// the simple-coroot basis. Coweights are stored in fundamental-coweight
/// coordinates unless noted, so pairing with simple root i reads coordinate i.
class RootSystem {
public:
    /// "E8", "F4", "2E6", "3D4", "2A5", ... Throws std::invalid_argument.
    static std::shared_ptr<const RootSystem> build(const std::string& label);

    /// Root system of an arbitrary Cartan matrix (C(i,j) = <a_i^vee, a_j>).
    static std::shared_ptr<const RootSystem> from_cartan(const IntMatrix& cartan, std::vector<int> delta,
                                                         std::string label);

    const std::string& label() const { return label_; }
    /// Untwisted type, e.g. "E6" for "2E6".
    const std::string& base_label() const { return base_label_; }
    int rank() const { return rank_; }
    const IntMatrix& cartan() const { return cartan_; }

    /// delta as a permutation of simple indices.
    const std::vector<int>& delta() const { return delta_; }
    int delta_order() const { return delta_order_; }
    bool twisted() const { return delta_order_ > 1; }
    /// sigma^power applied to a simple index.
    int delta_image(int i, int power) const;

    int num_positive_roots() const { return static_cast<int>(positive_.size()); }
    int num_roots() const { return 2 * num_positive_roots(); }
    const std::vector<IntVector>& positive_roots() const { return positive_; }
    const std::vector<IntVector>& positive_coroots() const { return positive_coroots_; }
    /// Index into positive_roots() of the root with these coefficients, or -1.
    /// Negative roots return -(index + 2).
    int find_root(const IntVector& coeffs) const;
    bool is_root(const IntVector& coeffs) const { return find_root(coeffs) != -1; }

    /// Squared length of simple root i (symmetrized per component).
    int simple_norm(int i) const { return norms_[static_cast<size_t>(i)]; }
    int root_norm(const IntVector& coeffs) const;
    IntVector coroot_of(const IntVector& root) const;
    bool is_short(const IntVector& root) const;
    bool has_two_lengths() const;

    /// Reflection s_i acting on coweights (fundamental-coweight coordinates).
    const IntMatrix& simple_reflection(int i) const { return reflections_[static_cast<size_t>(i)]; }
    /// Matrix of delta^power on coweights.
    IntMatrix delta_matrix(int power) const;
    /// Reflection in an arbitrary root, acting on coweights.
    IntMatrix reflection(const IntVector& root) const;

    /// Pairing of a root (simple-root coefficients) with a coweight.
    static Rational pair(const IntVector& root, const RationalVector& coweight);
    static int pair(const IntVector& root, const IntVector& coweight);

    RationalVector coroot_to_fundamental(const RationalVector& coroot_coords) const;
    RationalVector fundamental_to_coroot(const RationalVector& coweight) const;
    IntVector coroot_to_fundamental(const IntVector& coroot_coords) const;

    /// Positive roots of the standard Levi defined by a subset of simple roots.
    std::vector<int> levi_positive_roots(const IndexSet& levi) const;
    IntVector highest_root() const;
    IntVector highest_short_root() const;

    /// Connected components of the Dynkin diagram restricted to a subset.
    std::vector<IndexSet> components(const IndexSet& subset) const;
    /// Cartan type of a standard Levi, e.g. "D4", "2A1+~A2". Short simply
    /// laced components in a doubly laced system carry a "~" prefix.
    std::string levi_type(const IndexSet& subset) const;

private:
    RootSystem() = default;
    void generate_roots();

    std::string label_;
    std::string base_label_;
    int rank_ = 0;
    IntMatrix cartan_;
    std::vector<int> delta_;
    int delta_order_ = 1;
    std::vector<int> norms_;
    std::vector<IntVector> positive_;
    std::vector<IntVector> positive_coroots_;
    std::unordered_map<IntVector, int, IntVectorHash> index_;
    std::vector<IntMatrix> reflections_;
    RationalMatrix cartan_transpose_inverse_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Element of W, stored through its matrix on coweights and the inverse.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(RootSystemPtr rs);

    static WeylElement from_word(RootSystemPtr rs, const std::vector<int>& word);
    static WeylElement from_matrix(RootSystemPtr rs, const IntMatrix& m);

    const RootSystemPtr& root_system() const { return rs_; }
    const IntMatrix& matrix() const { return m_; }
    const IntMatrix& inverse_matrix() const { return minv_; }

    void left_multiply(int i);
    void right_multiply(int i);
    WeylElement operator*(const WeylElement& other) const;
    WeylElement inverse() const;
    /// delta^power w delta^-power.
    WeylElement twisted(int power) const;

    bool is_identity() const { return m_.is_identity(); }
    int length() const;
    bool has_left_descent(int i) const;
    bool has_right_descent(int i) const;
    std::uint32_t left_descents() const;
    std::uint32_t right_descents() const;
    /// Lexicographically first reduced word (lowest left descent first).
    std::vector<int> reduced_word() const;

    IntVector apply_root(const IntVector& root) const;
    bool operator==(const WeylElement& other) const { return m_ == other.m_; }

private:
    RootSystemPtr rs_;
    IntMatrix m_;
    IntMatrix minv_;
};

/// Basis tag for rational coweights.
enum class CoweightBasis { fundamental, coroot };

struct RationalCoweight {
    RationalVector coords;
    CoweightBasis basis = CoweightBasis::fundamental;

    RationalCoweight to_fundamental(const RootSystem& rs) const;
    RationalCoweight to_coroot(const RootSystem& rs) const;
    bool operator==(const RationalCoweight&) const = default;
};

/// An element w delta^a of the extended Weyl group, the algorithm's input.
class TwistedWeylElement {
public:
    TwistedWeylElement() = default;
    TwistedWeylElement(WeylElement w, int delta_power);

    /// Word in simple reflections; delta_power defaults to 1 on twisted types.
    static TwistedWeylElement from_word(RootSystemPtr rs, const std::vector<int>& word);
    static TwistedWeylElement from_word(RootSystemPtr rs, const std::vector<int>& word, int delta_power);

    const RootSystemPtr& root_system() const { return w_.root_system(); }
    const WeylElement& weyl() const { return w_; }
    int delta_power() const { return a_; }
    /// Matrix of w delta^a on coweights.
    IntMatrix matrix() const;
    std::vector<int> word() const { return w_.reduced_word(); }
    int length() const { return w_.length(); }

    TwistedWeylElement operator*(const TwistedWeylElement& other) const;
    TwistedWeylElement power(int k) const;
    /// x g x^-1.
    TwistedWeylElement conjugate_by(const WeylElement& x) const;
    /// s_i g s_i.
    TwistedWeylElement conjugate_by_simple(int i) const;
    int order() const;

    bool operator==(const TwistedWeylElement& other) const { return a_ == other.a_ && w_ == other.w_; }

private:
    WeylElement w_;
    int a_ = 0;
};

std::vector<int> parse_word(const std::string& text, int rank);
std::string format_word(const std::vector<int>& word, int rank);
std::string format_index_set(const IndexSet& set);

RationalCoweight apply(const TwistedWeylElement& g, const RationalCoweight& v);

/// Conjugate v into the dominant chamber of a standard Levi by lowest-index
/// reflections. Returns the result and a word x (left to right) with x v = result.
std::pair<RationalCoweight, std::vector<int>> dominant_representative(const RootSystem& rs, const RationalCoweight& v,
                                                                      const IndexSet& levi);

/// Half sum of positive coroots of a standard Levi, in fundamental coordinates.
RationalCoweight rho_half_sum(const RootSystem& rs, const IndexSet& levi);
/// Same for a closed subsystem given by positive root indices; throws if not closed.
RationalCoweight rho_half_sum_of_roots(const RootSystem& rs, const std::vector<int>& positive_indices);

IndexSet support_orbit(const TwistedWeylElement& g);
bool is_elliptic(const TwistedWeylElement& g);
IndexSet all_indices(int rank);

}  // namespace weylpsi
