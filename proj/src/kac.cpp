#include "weylpsi/kac.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylpsi {

int AffineDiagram::node_of(int simple) const
{
    for (size_t p = 0; p < orbits.size(); ++p)
        if (std::find(orbits[p].begin(), orbits[p].end(), simple) != orbits[p].end()) return static_cast<int>(p) + 1;
    throw std::out_of_range("simple index not in any orbit");
}

namespace {

void find_automorphisms(const IntMatrix& a, std::vector<int>& perm, std::vector<bool>& used,
                        std::vector<std::vector<int>>& out)
{
    int size = a.rows();
    int i = static_cast<int>(perm.size());
    if (i == size) {
        out.push_back(perm);
        return;
    }
    for (int j = 0; j < size; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        bool ok = a(j, j) == a(i, i);
        for (int t = 0; ok && t < i; ++t) {
            int pt = perm[static_cast<size_t>(t)];
            ok = a(j, pt) == a(i, t) && a(pt, j) == a(t, i);
        }
        if (!ok) continue;
        used[static_cast<size_t>(j)] = true;
        perm.push_back(j);
        find_automorphisms(a, perm, used, out);
        perm.pop_back();
        used[static_cast<size_t>(j)] = false;
    }
}

RationalVector vertex(const AffineDiagram& dg, int i)
{
    RationalVector v(static_cast<size_t>(dg.size()), Rational(0));
    v[static_cast<size_t>(i)] = fraction(1, dg.n * dg.labels[static_cast<size_t>(i)]);
    return v;
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q)
{
    std::vector<int> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = p[static_cast<size_t>(q[i])];
    return out;
}

// Node permutations induced by translations by the delta-averaged fundamental
// coweights, followed by the walk back into the alcove.
std::vector<std::vector<int>> omega_group(const AffineDiagram& dg)
{
    int size = dg.size();
    std::vector<int> identity(static_cast<size_t>(size));
    std::iota(identity.begin(), identity.end(), 0);
    std::set<std::vector<int>> group{identity};
    std::vector<std::vector<int>> generators;

    int weight_total = size * (size + 1) / 2;
    RationalVector interior(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i)
        interior[static_cast<size_t>(i)] = fraction(i + 1, dg.n * dg.labels[static_cast<size_t>(i)] * weight_total);

    for (int p = 1; p < size; ++p) {
        RationalVector shift(static_cast<size_t>(size), Rational(0));
        int orbit = static_cast<int>(dg.orbits[static_cast<size_t>(p - 1)].size());
        shift[static_cast<size_t>(p)] = fraction(1, orbit);
        shift[0] = fraction(-dg.labels[static_cast<size_t>(p)], orbit);
        std::vector<int> walk;
        reduce_coords(dg, interior + shift, &walk);
        std::vector<int> perm(static_cast<size_t>(size), -1);
        for (int i = 0; i < size; ++i) {
            RationalVector img = replay_walk(dg, vertex(dg, i) + shift, walk);
            for (int j = 0; j < size; ++j)
                if (img == vertex(dg, j)) perm[static_cast<size_t>(i)] = j;
            if (perm[static_cast<size_t>(i)] < 0) throw std::logic_error("translation does not preserve the alcove");
        }
        if (perm != identity) generators.push_back(perm);
    }
    std::vector<std::vector<int>> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& s : generators) {
                auto h = compose(s, g);
                if (group.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> out{identity};
    for (const auto& g : group)
        if (g != identity) out.push_back(g);
    return out;
}

std::shared_ptr<AffineDiagram> build_diagram(const RootSystemPtr& rsp, int a)
{
    const RootSystem& rs = *rsp;
    auto dg = std::make_shared<AffineDiagram>();
    dg->rs = rsp;
    dg->delta_power = a;
    int r = rs.rank();
    std::vector<bool> seen(static_cast<size_t>(r), false);
    for (int i = 0; i < r; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        IndexSet orbit;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = rs.delta_image(j, a)) {
            seen[static_cast<size_t>(j)] = true;
            orbit.push_back(j);
        }
        std::sort(orbit.begin(), orbit.end());
        dg->orbits.push_back(orbit);
    }
    dg->n = 1;
    for (const auto& o : dg->orbits) dg->n = static_cast<int>(lcm_int(dg->n, static_cast<int>(o.size())));
    int m = static_cast<int>(dg->orbits.size());

    const IntMatrix& c = rs.cartan();
    std::vector<int> factor(static_cast<size_t>(m), 1);
    for (int p = 0; p < m; ++p)
        for (int i : dg->orbits[static_cast<size_t>(p)])
            for (int j : dg->orbits[static_cast<size_t>(p)])
                if (i != j && c(i, j) != 0) factor[static_cast<size_t>(p)] = 2;
    IntMatrix folded(m, m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            int s = 0;
            for (int j : dg->orbits[static_cast<size_t>(p)]) s += c(j, dg->orbits[static_cast<size_t>(q)][0]);
            folded(p, q) = factor[static_cast<size_t>(p)] * s;
        }
    dg->folded = RootSystem::from_cartan(folded, {}, rs.label() + "/delta");

    bool has_fixed = std::any_of(dg->orbits.begin(), dg->orbits.end(), [](const IndexSet& o) { return o.size() == 1; });
    IntVector beta;
    int halve = 1;
    if (dg->n == 1) {
        beta = dg->folded->highest_root();
    } else if (has_fixed) {
        beta = dg->folded->highest_short_root();
    } else {
        beta = dg->folded->highest_short_root();
        for (auto& b : beta) b *= 2;
        halve = 2;
    }
    dg->alpha0 = beta;
    dg->labels.push_back(1);
    for (int b : beta) dg->labels.push_back(b);

    IntVector coroot = dg->folded->coroot_of(halve == 2 ? [&] {
        IntVector half = beta;
        for (auto& b : half) b /= 2;
        return half;
    }() : beta);
    IntMatrix& A = dg->cartan;
    A = IntMatrix(m + 1, m + 1);
    A(0, 0) = 2;
    for (int p = 0; p < m; ++p) {
        int s = 0;
        for (int q = 0; q < m; ++q) {
            A(p + 1, q + 1) = folded(p, q);
            s += dg->labels[static_cast<size_t>(q + 1)] * folded(p, q);
        }
        A(p + 1, 0) = -s;
        int h = 0;
        for (int q = 0; q < m; ++q) h += coroot[static_cast<size_t>(q)] * folded(q, p);
        if (h % halve != 0) throw std::logic_error("affine node coroot is not integral");
        A(0, p + 1) = -h / halve;
    }
    for (int i = 0; i <= m; ++i) {
        int s = 0;
        for (int j = 0; j <= m; ++j) s += dg->labels[static_cast<size_t>(j)] * A(i, j);
        if (s != 0) throw std::logic_error("affine labels do not annihilate the affine Cartan matrix");
    }

    std::vector<int> perm;
    std::vector<bool> used(static_cast<size_t>(m + 1), false);
    find_automorphisms(A, perm, used, dg->automorphisms);
    dg->omega = omega_group(*dg);
    for (const auto& w : dg->omega)
        if (std::find(dg->automorphisms.begin(), dg->automorphisms.end(), w) == dg->automorphisms.end())
            throw std::logic_error("Omega element is not a diagram automorphism");
    return dg;
}

}  // namespace

AffineDiagramPtr affine_diagram(const RootSystemPtr& rs, int delta_power)
{
    int n = rs->delta_order();
    int a = delta_power < 0 ? (rs->twisted() ? 1 : 0) : delta_power % n;
    static std::mutex mutex;
    static std::map<std::pair<const RootSystem*, int>, std::pair<RootSystemPtr, AffineDiagramPtr>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(rs.get(), a);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.second;
    AffineDiagramPtr dg = build_diagram(rs, a);
    cache.emplace(key, std::make_pair(rs, dg));
    return dg;
}

int KacDiagram::weighted_sum() const
{
    int s = 0;
    for (size_t i = 0; i < labels.size(); ++i) s += labels[i] * diagram->labels[i];
    return s;
}

int KacDiagram::order() const
{
    return diagram->n * weighted_sum();
}

std::string to_string(const KacDiagram& d)
{
    std::string out = "[";
    for (size_t i = 0; i < d.labels.size(); ++i) {
        if (i == 1) out += ';';
        else if (i > 1) out += ',';
        out += std::to_string(d.labels[i]);
    }
    return out + "]";
}

std::vector<int> parse_kac_labels(const std::string& text)
{
    std::vector<int> out;
    std::string t;
    for (char ch : text)
        if (ch != '[' && ch != ']' && ch != ' ') t += (ch == ';' ? ',' : ch);
    std::stringstream in(t);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        if (piece.empty()) throw std::invalid_argument("malformed Kac diagram '" + text + "'");
        out.push_back(std::stoi(piece));
    }
    return out;
}

RationalVector to_affine_coords(const TorusElement& t)
{
    AffineDiagramPtr dg = affine_diagram(t.rs, t.delta_power);
    RationalVector x = t.gamma.to_fundamental(*t.rs).coords;
    RationalVector out(static_cast<size_t>(dg->size()));
    Rational s = 0;
    for (size_t p = 0; p < dg->orbits.size(); ++p) {
        const IndexSet& o = dg->orbits[p];
        for (int i : o)
            if (x[static_cast<size_t>(i)] != x[static_cast<size_t>(o[0])])
                throw std::invalid_argument("coweight is not fixed by delta");
        out[p + 1] = x[static_cast<size_t>(o[0])];
        s += dg->labels[p + 1] * out[p + 1];
    }
    out[0] = fraction(1, dg->n) - s;
    return out;
}

TorusElement from_affine_coords(const AffineDiagramPtr& dg, const RationalVector& coords, Lattice lattice)
{
    TorusElement t;
    t.rs = dg->rs;
    t.delta_power = dg->delta_power;
    t.lattice = lattice;
    RationalVector x(static_cast<size_t>(dg->rs->rank()));
    for (size_t p = 0; p < dg->orbits.size(); ++p)
        for (int i : dg->orbits[p]) x[static_cast<size_t>(i)] = coords[p + 1];
    t.gamma = RationalCoweight{x, CoweightBasis::fundamental};
    return t;
}

namespace {

void reflect(const AffineDiagram& dg, RationalVector& a, int i)
{
    Rational ai = a[static_cast<size_t>(i)];
    for (int j = 0; j < dg.size(); ++j)
        if (dg.cartan(i, j) != 0) a[static_cast<size_t>(j)] -= ai * dg.cartan(i, j);
}

}  // namespace

RationalVector reduce_coords(const AffineDiagram& dg, RationalVector a, std::vector<int>* walk)
{
    for (int step = 0;; ++step) {
        if (step > 1000000) throw std::logic_error("alcove walk did not terminate");
        int worst = -1;
        for (int i = 0; i < dg.size(); ++i)
            if (a[static_cast<size_t>(i)] < 0 && (worst < 0 || a[static_cast<size_t>(i)] < a[static_cast<size_t>(worst)]))
                worst = i;
        if (worst < 0) return a;
        reflect(dg, a, worst);
        if (walk) walk->push_back(worst);
    }
}

RationalVector replay_walk(const AffineDiagram& dg, RationalVector a, const std::vector<int>& walk)
{
    for (int i : walk) reflect(dg, a, i);
    return a;
}

AlcoveReduction reduce_to_alcove(const TorusElement& t)
{
    AffineDiagramPtr dg = affine_diagram(t.rs, t.delta_power);
    AlcoveReduction out;
    out.start = to_affine_coords(t);
    out.reduced = reduce_coords(*dg, out.start, &out.walk);
    out.element = from_affine_coords(dg, out.reduced, t.lattice);
    return out;
}

KacDiagram kac_diagram_of(const TorusElement& t)
{
    AlcoveReduction red = reduce_to_alcove(t);
    KacDiagram d;
    d.diagram = affine_diagram(t.rs, t.delta_power);
    Integer den = lcm_of_denominators(red.reduced);
    std::vector<Integer> labels;
    for (const auto& q : red.reduced) labels.push_back(Integer(q * den));
    Integer g = gcd_of(labels);
    for (auto& l : labels) {
        l /= g;
        if (!l.fits_sint_p()) throw std::overflow_error("Kac label too large");
        d.labels.push_back(static_cast<int>(l.get_si()));
    }
    return d;
}

TorusElement torus_of(const KacDiagram& d, Lattice lattice)
{
    int total = d.diagram->n * d.weighted_sum();
    if (total <= 0) throw std::invalid_argument("Kac diagram has no positive label");
    RationalVector a(d.labels.size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = fraction(d.labels[i], total);
    return from_affine_coords(d.diagram, a, lattice);
}

KacDiagram omega_normalize(const KacDiagram& d)
{
    KacDiagram best = d;
    for (const auto& w : d.diagram->omega) {
        std::vector<int> moved(d.labels.size());
        for (size_t i = 0; i < d.labels.size(); ++i) moved[static_cast<size_t>(w[i])] = d.labels[i];
        if (moved < best.labels) best.labels = moved;
    }
    return best;
}

bool is_aut_fixed(const KacDiagram& d)
{
    for (const auto& w : d.diagram->automorphisms)
        for (size_t i = 0; i < d.labels.size(); ++i)
            if (d.labels[static_cast<size_t>(w[i])] != d.labels[i]) return false;
    return true;
}

}  // namespace weylpsi
