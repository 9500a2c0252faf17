#pragma once

// Affine diagrams, affine coordinates, alcove reduction and Kac diagrams.

#include "weylpsi/lift.hpp"

#include <memory>
#include <string>
#include <vector>

namespace weylpsi {

/// Affine diagram of (G, delta^a). Node 0 is the affine node; node p >= 1 is
/// the p-th delta-orbit of simple roots, orbits ordered by smallest member.
struct AffineDiagram {
    RootSystemPtr rs;
    int delta_power = 0;
    int n = 1;                       // order of delta^a
    std::vector<IndexSet> orbits;    // orbits[p - 1] for node p
    RootSystemPtr folded;            // Delta_delta on the orbit nodes
    IntVector alpha0;                // -alpha_0 in folded simple roots
    std::vector<int> labels;         // c_0 = 1, c_1, ..., c_r
    IntMatrix cartan;                // affine Cartan matrix, A(i,j) = <alpha_j, h_i>
    std::vector<std::vector<int>> automorphisms;  // node permutations, identity first
    std::vector<std::vector<int>> omega;          // subgroup from coweight translations (adjoint)

    int size() const { return static_cast<int>(labels.size()); }
    /// Node of a simple root index.
    int node_of(int simple) const;
};

using AffineDiagramPtr = std::shared_ptr<const AffineDiagram>;

/// Cached per (type, delta power); a negative power means the type's default.
AffineDiagramPtr affine_diagram(const RootSystemPtr& rs, int delta_power = -1);

struct KacDiagram {
    AffineDiagramPtr diagram;
    std::vector<int> labels;  // a_0, a_1, ..., a_r

    /// d(D) = sum c_i a_i.
    int weighted_sum() const;
    /// Order of e(D) delta^a in the adjoint group: n d(D).
    int order() const;
    bool operator==(const KacDiagram& other) const { return labels == other.labels; }
};

/// "[a0;a1,...,ar]".
std::string to_string(const KacDiagram& d);
std::vector<int> parse_kac_labels(const std::string& text);

/// (alpha~_0(gamma), alpha_1(gamma), ...) with alpha~_0 = alpha_0 + 1/n.
/// Throws std::invalid_argument if gamma is not fixed by delta^a.
RationalVector to_affine_coords(const TorusElement& t);
/// Inverse of to_affine_coords on delta-fixed coweights.
TorusElement from_affine_coords(const AffineDiagramPtr& diagram, const RationalVector& coords, Lattice lattice);

struct AlcoveReduction {
    RationalVector start;
    RationalVector reduced;
    std::vector<int> walk;  // affine reflections applied, in order
    TorusElement element;
};

/// Reflects in the node with the most negative coordinate (ties to the lowest
/// node) until all coordinates are non-negative.
AlcoveReduction reduce_to_alcove(const TorusElement& t);
RationalVector reduce_coords(const AffineDiagram& diagram, RationalVector coords, std::vector<int>* walk = nullptr);
/// Replays a reflection walk on affine coordinates.
RationalVector replay_walk(const AffineDiagram& diagram, RationalVector coords, const std::vector<int>& walk);

KacDiagram kac_diagram_of(const TorusElement& t);
/// Diagram with given labels; the element e(D) delta^a.
TorusElement torus_of(const KacDiagram& d, Lattice lattice = Lattice::adjoint);

/// Lexicographically smallest labels over the Omega-orbit.
KacDiagram omega_normalize(const KacDiagram& d);
bool is_aut_fixed(const KacDiagram& d);

}  // namespace weylpsi
