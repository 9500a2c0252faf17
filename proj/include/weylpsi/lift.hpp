#pragma once

// The map Psi: lambda recursion, the lift e(lambda_0 / d) delta, the regular
// shortcut, the non-elliptic extension and two order computations.

#include "weylpsi/spectral.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace weylpsi {

enum class Lattice { adjoint, simply_connected };

const char* to_string(Lattice lattice);
/// "adj" or "sc". Throws std::invalid_argument.
Lattice parse_lattice(const std::string& text);

/// e(gamma) delta^a with gamma delta-fixed, in fundamental-coweight coordinates.
struct TorusElement {
    RootSystemPtr rs;
    RationalCoweight gamma;
    int delta_power = 0;
    Lattice lattice = Lattice::adjoint;
};

struct PsiOptions {
    std::uint64_t seed = 1;
    /// Admissible subsequence of angle numerators; all angles when empty.
    std::vector<int> numerators;
};

struct PsiTrace {
    GoodPosition position;
    std::vector<RationalCoweight> rho;     // rho_0, ..., rho_{k-1}
    std::vector<RationalCoweight> lambda;  // lambda_0, ..., lambda_k
    std::vector<std::vector<int>> dominating;  // word moving lambda_{j+1} into the chamber of Pi_j
    TorusElement element;
};

/// Runs the recursion on an element already in good position; returns
/// lambda_0, ..., lambda_k. Throws std::invalid_argument on a non-standard chain.
std::vector<RationalCoweight> lambda_chain(const GoodPosition& position);

PsiTrace psi_trace(const TwistedWeylElement& g, const PsiOptions& options = {});
TorusElement psi_element(const TwistedWeylElement& g, const PsiOptions& options = {});

/// gamma = (k/d) rho for a regular angle 2 pi k / d. Throws std::invalid_argument
/// if g is not elliptic or the angle is not regular.
TorusElement regular_shortcut(const TwistedWeylElement& g, const Angle& angle);

/// Cyclic-shift descent to a minimal length twisted conjugate.
TwistedWeylElement minimal_length_shift(const TwistedWeylElement& g);

/// Psi for arbitrary g through the Levi of the support of a minimal length conjugate.
TorusElement psi_nonelliptic(const TwistedWeylElement& g, const PsiOptions& options = {});

/// Order of e(gamma) delta^a in the group with the element's lattice.
int torus_order(const TorusElement& t);

/// Order of the Tits lift n(w) delta^a, tracked exactly through the cocycle.
int tits_lift_order(const TwistedWeylElement& g, Lattice lattice = Lattice::simply_connected);

}  // namespace weylpsi
