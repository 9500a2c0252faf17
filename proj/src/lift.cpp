#include "weylpsi/lift.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weylpsi {

const char* to_string(Lattice lattice)
{
    return lattice == Lattice::adjoint ? "adj" : "sc";
}

Lattice parse_lattice(const std::string& text)
{
    if (text == "adj" || text == "adjoint") return Lattice::adjoint;
    if (text == "sc" || text == "simply-connected") return Lattice::simply_connected;
    throw std::invalid_argument("unknown lattice '" + text + "'");
}

namespace {

RationalCoweight scaled(const RationalCoweight& v, const Rational& s)
{
    return RationalCoweight{s * v.coords, v.basis};
}

RationalVector apply_delta(const RootSystem& rs, const RationalVector& x, int power)
{
    if (power == 0) return x;
    return rs.delta_matrix(power) * x;
}

}  // namespace

std::vector<RationalCoweight> lambda_chain(const GoodPosition& position)
{
    const RootSystem& rs = *position.conjugate.root_system();
    if (!position.standard) throw std::invalid_argument("Levi chain is not standard");
    const auto& angles = position.filtration.spectrum.angles;
    size_t k = angles.size();
    std::vector<RationalCoweight> lambda(k + 1);
    lambda[k] = RationalCoweight{RationalVector(static_cast<size_t>(rs.rank()), Rational(0)), CoweightBasis::fundamental};
    for (size_t j = k; j-- > 0;) {
        int step = angles[j].k - (j == 0 ? 0 : angles[j - 1].k);
        if (step < 0) throw std::logic_error("angles are not increasing");
        RationalCoweight rho = rho_half_sum(rs, position.chain[j]);
        auto dom = dominant_representative(rs, lambda[j + 1], position.chain[j]).first;
        lambda[j] = RationalCoweight{Rational(step) * rho.coords + dom.coords, CoweightBasis::fundamental};
    }
    return lambda;
}

PsiTrace psi_trace(const TwistedWeylElement& g, const PsiOptions& options)
{
    PsiTrace trace;
    trace.position = options.numerators.empty() ? good_position_conjugate(g, options.seed)
                                                : good_position_conjugate(g, options.numerators, options.seed);
    const GoodPosition& gp = trace.position;
    const RootSystem& rs = *g.root_system();
    trace.lambda = lambda_chain(gp);
    for (size_t j = 0; j + 1 < trace.lambda.size(); ++j) {
        trace.rho.push_back(rho_half_sum(rs, gp.chain[j]));
        trace.dominating.push_back(dominant_representative(rs, trace.lambda[j + 1], gp.chain[j]).second);
    }
    int d = gp.filtration.spectrum.order;
    const RationalVector& l0 = trace.lambda[0].coords;
    if (apply_delta(rs, l0, g.delta_power()) != l0) throw std::logic_error("lambda_0 is not fixed by delta");
    trace.element.rs = g.root_system();
    trace.element.gamma = scaled(trace.lambda[0], fraction(1, d));
    trace.element.delta_power = g.delta_power();
    return trace;
}

TorusElement psi_element(const TwistedWeylElement& g, const PsiOptions& options)
{
    return psi_trace(g, options).element;
}

TorusElement regular_shortcut(const TwistedWeylElement& g, const Angle& angle)
{
    if (!is_elliptic(g)) throw std::invalid_argument("regular shortcut needs an elliptic element");
    Regularity reg = regularity(g);
    bool found = false;
    for (const auto& a : reg.regular_angles)
        if (a.turn() == angle.turn()) found = true;
    if (!found) throw std::invalid_argument("angle " + angle.to_string() + " is not a regular angle");
    const RootSystem& rs = *g.root_system();
    TorusElement t;
    t.rs = g.root_system();
    t.gamma = scaled(rho_half_sum(rs, all_indices(rs.rank())), angle.turn());
    t.delta_power = g.delta_power();
    return t;
}

TwistedWeylElement minimal_length_shift(const TwistedWeylElement& g)
{
    const RootSystem& rs = *g.root_system();
    const int depth_cap = 10 * rs.rank();
    const size_t visit_cap = 200000;
    TwistedWeylElement current = g;
    for (;;) {
        int length = current.length();
        bool decreased = false;
        std::set<std::vector<int>> seen{current.weyl().matrix().data()};
        std::deque<std::pair<TwistedWeylElement, int>> queue{{current, 0}};
        while (!queue.empty() && !decreased) {
            auto [h, depth] = queue.front();
            queue.pop_front();
            for (int i = 0; i < rs.rank(); ++i) {
                TwistedWeylElement next = h.conjugate_by_simple(i);
                int l = next.length();
                if (l < length) {
                    current = next;
                    decreased = true;
                    break;
                }
                if (l == length && depth < depth_cap && seen.size() < visit_cap &&
                    seen.insert(next.weyl().matrix().data()).second)
                    queue.emplace_back(next, depth + 1);
            }
        }
        if (!decreased) return current;
    }
}

TorusElement psi_nonelliptic(const TwistedWeylElement& g, const PsiOptions& options)
{
    const RootSystemPtr& rsp = g.root_system();
    const RootSystem& rs = *rsp;
    TwistedWeylElement h = minimal_length_shift(g);
    if (is_elliptic(h)) return psi_element(h, options);

    TorusElement t;
    t.rs = rsp;
    t.delta_power = g.delta_power();
    t.gamma = RationalCoweight{RationalVector(static_cast<size_t>(rs.rank()), Rational(0)), CoweightBasis::fundamental};
    IndexSet support = support_orbit(h);
    if (support.empty()) return t;

    // the Levi L_J as a root system of its own, with delta^a restricted to J
    int m = static_cast<int>(support.size());
    std::vector<int> local(static_cast<size_t>(rs.rank()), -1);
    for (int p = 0; p < m; ++p) local[static_cast<size_t>(support[static_cast<size_t>(p)])] = p;
    IntMatrix cj(m, m);
    std::vector<int> dj(static_cast<size_t>(m));
    bool nontrivial = false;
    for (int p = 0; p < m; ++p) {
        int i = support[static_cast<size_t>(p)];
        for (int q = 0; q < m; ++q) cj(p, q) = rs.cartan()(i, support[static_cast<size_t>(q)]);
        dj[static_cast<size_t>(p)] = local[static_cast<size_t>(rs.delta_image(i, g.delta_power()))];
        if (dj[static_cast<size_t>(p)] != p) nontrivial = true;
    }
    auto sub = RootSystem::from_cartan(cj, dj, rs.label() + "|" + format_index_set(support));
    std::vector<int> word;
    for (int i : h.word()) word.push_back(local[static_cast<size_t>(i)]);
    TwistedWeylElement hj = TwistedWeylElement::from_word(sub, word, nontrivial ? 1 : 0);
    TorusElement tj = psi_element(hj, options);

    RationalVector yj = sub->fundamental_to_coroot(tj.gamma.coords);
    RationalVector y(static_cast<size_t>(rs.rank()), Rational(0));
    for (int p = 0; p < m; ++p) y[static_cast<size_t>(support[static_cast<size_t>(p)])] = yj[static_cast<size_t>(p)];
    t.gamma.coords = rs.coroot_to_fundamental(y);
    return t;
}

int torus_order(const TorusElement& t)
{
    const RootSystem& rs = *t.rs;
    int n = rs.delta_order();
    int delta_part = n / std::gcd(((t.delta_power % n) + n) % n, n);
    RationalVector coords = t.lattice == Lattice::adjoint ? t.gamma.to_fundamental(rs).coords
                                                          : t.gamma.to_coroot(rs).coords;
    Integer den = lcm_of_denominators(coords);
    if (!den.fits_sint_p()) throw std::overflow_error("torus element order too large");
    return static_cast<int>(lcm_int(den.get_si(), delta_part));
}

int tits_lift_order(const TwistedWeylElement& g, Lattice lattice)
{
    const RootSystemPtr& rsp = g.root_system();
    const RootSystem& rs = *rsp;
    int d = g.order();
    int r = rs.rank();
    // left torus form exp(pi i t) n(x) delta^(ma); t in coroot coordinates mod 2
    IntVector bits(static_cast<size_t>(r), 0);
    WeylElement x(rsp);
    for (int m = 0; m < d; ++m) {
        WeylElement y = g.weyl().twisted(m * g.delta_power());
        WeylElement xy = x * y;
        for (const auto& beta : rs.positive_roots()) {
            IntVector yb = y.apply_root(beta);
            if (rs.find_root(yb) >= 0) continue;
            IntVector xyb = x.apply_root(yb);
            if (rs.find_root(xyb) < 0) continue;
            IntVector cor = rs.coroot_of(xy.apply_root(beta));
            for (int j = 0; j < r; ++j) bits[static_cast<size_t>(j)] += cor[static_cast<size_t>(j)];
        }
        x = xy;
    }
    if (!x.is_identity()) throw std::logic_error("w delta^a raised to its order is not trivial");
    for (auto& b : bits) b = ((b % 2) + 2) % 2;
    bool trivial;
    if (lattice == Lattice::simply_connected) {
        trivial = std::all_of(bits.begin(), bits.end(), [](int b) { return b == 0; });
    } else {
        IntVector f = rs.coroot_to_fundamental(bits);
        trivial = std::all_of(f.begin(), f.end(), [](int v) { return v % 2 == 0; });
    }
    return trivial ? d : 2 * d;
}

}  // namespace weylpsi
