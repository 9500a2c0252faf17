#include "weylpsi/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace weylpsi {

IntPolynomial char_poly(const TwistedWeylElement& g)
{
    // Faddeev-LeVerrier; all divisions are exact over Z.
    IntMatrix a = g.matrix();
    int n = a.rows();
    std::vector<Integer> coeff(static_cast<size_t>(n + 1), 0);
    coeff[static_cast<size_t>(n)] = 1;
    std::vector<Integer> m(static_cast<size_t>(n * n), 0);
    auto at = [n](std::vector<Integer>& x, int i, int j) -> Integer& { return x[static_cast<size_t>(i * n + j)]; };
    for (int k = 1; k <= n; ++k) {
        // m <- a m + c_{n-k+1} I, then c_{n-k} = -tr(a m) / k
        std::vector<Integer> next(static_cast<size_t>(n * n), 0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                int ail = a(i, l);
                if (ail == 0) continue;
                for (int j = 0; j < n; ++j) at(next, i, j) += ail * at(m, l, j);
            }
        for (int i = 0; i < n; ++i) at(next, i, i) += coeff[static_cast<size_t>(n - k + 1)];
        m = std::move(next);
        Integer tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (a(i, l) != 0) tr += a(i, l) * at(m, l, i);
        coeff[static_cast<size_t>(n - k)] = -tr / k;
    }
    return coeff;
}

namespace {

bool divide_if_exact(IntPolynomial& p, const IntPolynomial& q)
{
    size_t dq = q.size() - 1;
    if (p.size() < q.size()) return false;
    IntPolynomial rem = p;
    IntPolynomial quo(p.size() - dq, 0);
    for (size_t k = rem.size(); k-- > dq;) {
        Integer c = rem[k];
        if (c == 0) continue;
        quo[k - dq] = c;
        for (size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= c * q[j];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    p = std::move(quo);
    return true;
}

}  // namespace

std::map<int, int> cyclotomic_factorization(IntPolynomial p)
{
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (p.empty() || p.back() != 1) throw std::invalid_argument("polynomial is not monic");
    std::map<int, int> out;
    for (int m = 1; p.size() > 1; ++m) {
        if (euler_phi(m) > static_cast<int>(p.size()) * 8 + 64) throw std::invalid_argument("not a product of cyclotomic polynomials");
        IntPolynomial phi = cyclotomic_polynomial(m);
        while (divide_if_exact(p, phi)) ++out[m];
    }
    return out;
}

std::string cyclotomic_signature(const std::map<int, int>& factors)
{
    std::string out;
    for (const auto& [m, e] : factors) {
        if (!out.empty()) out += ',';
        out += std::to_string(m);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::string Angle::to_string() const
{
    Rational t = turn();
    return "2pi*" + weylpsi::to_string(t);
}

namespace {

std::vector<CycloVector> eigenbasis(const IntMatrix& m, int d, int k)
{
    CycloMatrix a = CycloMatrix::from_int(m, d);
    CycloNumber z = CycloNumber::zeta_power(d, k);
    for (int i = 0; i < m.rows(); ++i) a(i, i) -= z;
    return a.kernel_basis();
}

CycloNumber pair(const IntVector& root, const CycloVector& v, int d)
{
    CycloNumber s(d);
    for (size_t j = 0; j < root.size(); ++j)
        if (root[j] != 0) s += v[j] * Rational(root[j]);
    return s;
}

bool vanishes_on(const IntVector& root, const std::vector<CycloVector>& basis, int d)
{
    for (const auto& v : basis)
        if (!pair(root, v, d).is_zero()) return false;
    return true;
}

CycloVector transform(const IntMatrix& m, const CycloVector& v, int d)
{
    CycloVector out(v.size(), CycloNumber(d));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && !v[static_cast<size_t>(j)].is_zero())
                out[static_cast<size_t>(i)] += v[static_cast<size_t>(j)] * Rational(m(i, j));
    return out;
}

struct SpectralData {
    AngleSpectrum spectrum;
    std::vector<std::vector<CycloVector>> bases;
};

SpectralData compute_spectrum(const TwistedWeylElement& g)
{
    SpectralData out;
    int d = g.order();
    out.spectrum.order = d;
    auto factors = cyclotomic_factorization(char_poly(g));
    IntMatrix m = g.matrix();
    int total = 0;
    for (int k = 0; 2 * k <= d; ++k) {
        int prim = d / std::gcd(k, d);
        auto it = factors.find(prim);
        if (it == factors.end()) continue;
        auto basis = eigenbasis(m, d, k);
        if (static_cast<int>(basis.size()) != it->second)
            throw std::logic_error("eigenspace dimension disagrees with the characteristic polynomial");
        Angle a{k, d, it->second};
        total += a.real_dimension();
        out.spectrum.angles.push_back(a);
        out.bases.push_back(std::move(basis));
    }
    if (total != m.rows()) throw std::logic_error("eigenspace dimensions do not sum to the rank");
    return out;
}

Filtration build_filtration(const RootSystem& rs, const SpectralData& data, const std::vector<int>* numerators)
{
    Filtration f;
    f.spectrum.order = data.spectrum.order;
    int d = data.spectrum.order;
    for (size_t j = 0; j < data.spectrum.angles.size(); ++j) {
        const Angle& a = data.spectrum.angles[j];
        if (numerators && std::find(numerators->begin(), numerators->end(), a.k) == numerators->end()) continue;
        f.spectrum.angles.push_back(a);
        f.bases.push_back(data.bases[j]);
    }
    if (numerators && f.spectrum.angles.size() != numerators->size())
        throw std::invalid_argument("selected angle is not in the spectrum");
    std::vector<int> all(static_cast<size_t>(rs.num_positive_roots()));
    std::iota(all.begin(), all.end(), 0);
    f.levis.push_back(all);
    f.dims.push_back(0);
    for (size_t j = 0; j < f.spectrum.angles.size(); ++j) {
        std::vector<int> next;
        for (int r : f.levis.back())
            if (vanishes_on(rs.positive_roots()[static_cast<size_t>(r)], f.bases[j], d)) next.push_back(r);
        f.levis.push_back(std::move(next));
        f.dims.push_back(f.dims.back() + f.spectrum.angles[j].real_dimension());
    }
    return f;
}

}  // namespace

AngleSpectrum angle_spectrum(const TwistedWeylElement& g)
{
    return compute_spectrum(g).spectrum;
}

Filtration filtration_levis(const TwistedWeylElement& g)
{
    return build_filtration(*g.root_system(), compute_spectrum(g), nullptr);
}

Filtration filtration_levis(const TwistedWeylElement& g, const std::vector<int>& numerators)
{
    return build_filtration(*g.root_system(), compute_spectrum(g), &numerators);
}

IndexSet simple_part(const RootSystem& rs, const std::vector<int>& positive_indices)
{
    IndexSet out;
    for (int r : positive_indices) {
        const IntVector& v = rs.positive_roots()[static_cast<size_t>(r)];
        if (std::accumulate(v.begin(), v.end(), 0) == 1)
            for (int i = 0; i < rs.rank(); ++i)
                if (v[static_cast<size_t>(i)] == 1) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_standard(const RootSystem& rs, const std::vector<int>& positive_indices)
{
    return rs.levi_positive_roots(simple_part(rs, positive_indices)).size() == positive_indices.size();
}

namespace {

// Sign of a simple root under the lexicographic order given by the points.
int lex_sign(const std::vector<CycloVector>& points, int i)
{
    for (const auto& q : points) {
        Sign s = real_sign(q[static_cast<size_t>(i)]);
        if (s != Sign::zero) return static_cast<int>(s);
    }
    return 0;
}

IndexSet apply_delta(const RootSystem& rs, const IndexSet& s, int power)
{
    IndexSet out;
    for (int i : s) out.push_back(rs.delta_image(i, power));
    std::sort(out.begin(), out.end());
    return out;
}

// Decomposes delta^-a w delta^a = x_1 ... x_k along the chain and checks
// that delta^a x_1 ... x_i stabilizes Pi_i.
bool check_factorization(const TwistedWeylElement& g, const std::vector<IndexSet>& chain)
{
    const RootSystemPtr& rs = g.root_system();
    int n = rs->delta_order();
    WeylElement u = g.weyl().twisted((n - g.delta_power()) % n);
    WeylElement prefix(rs);
    for (size_t i = 1; i < chain.size(); ++i) {
        const IndexSet& pi = chain[i];
        WeylElement x = u;
        for (bool changed = true; changed;) {
            changed = false;
            for (int j : pi)
                if (x.has_right_descent(j)) {
                    x.right_multiply(j);
                    changed = true;
                    break;
                }
        }
        u = x.inverse() * u;
        prefix = prefix * x;
        for (int j : pi) {
            IntVector e(static_cast<size_t>(rs->rank()), 0);
            e[static_cast<size_t>(j)] = 1;
            IntVector img = prefix.apply_root(e);
            int idx = rs->find_root(img);
            if (idx < 0) return false;
            IndexSet single = simple_part(*rs, {idx});
            if (single.size() != 1) return false;
            IndexSet moved = apply_delta(*rs, single, g.delta_power());
            if (!std::binary_search(pi.begin(), pi.end(), moved[0])) return false;
        }
    }
    return u.is_identity();
}

GoodPosition good_position_impl(const TwistedWeylElement& g, const std::vector<int>* numerators, std::uint64_t seed)
{
    const RootSystemPtr& rsp = g.root_system();
    const RootSystem& rs = *rsp;
    SpectralData data = compute_spectrum(g);
    Filtration f = build_filtration(rs, data, numerators);
    int d = f.spectrum.order;
    size_t k = f.spectrum.angles.size();
    if (!f.levis.back().empty()) throw std::invalid_argument("selected angles do not exhaust the root system");

    GoodPosition out;
    if (std::all_of(f.levis.begin(), f.levis.end(), [&](const std::vector<int>& levi) { return is_standard(rs, levi); })) {
        out.x = WeylElement(rsp);
        out.conjugate = g;
        out.filtration = std::move(f);
        out.standard = true;
        for (const auto& levi : out.filtration.levis) out.chain.push_back(simple_part(rs, levi));
        out.factorization = check_factorization(out.conjugate, out.chain);
        return out;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-1000, 1000);
    std::vector<CycloVector> points;
    for (size_t j = 0; j < k; ++j) {
        std::vector<int> leaving;
        for (int r : f.levis[j])
            if (!std::binary_search(f.levis[j + 1].begin(), f.levis[j + 1].end(), r)) leaving.push_back(r);
        for (int attempt = 0;; ++attempt) {
            if (attempt > 1000) throw std::logic_error("failed to draw a generic eigenvector");
            ++out.draws;
            CycloVector v(static_cast<size_t>(rs.rank()), CycloNumber(d));
            for (const auto& b : f.bases[j]) {
                CycloNumber c(d);
                for (int e = 0; e < euler_phi(d); ++e) c += CycloNumber::zeta_power(d, e) * Rational(coef(rng));
                for (size_t t = 0; t < v.size(); ++t)
                    if (!b[t].is_zero()) v[t] += c * b[t];
            }
            CycloVector q = v;
            CycloVector vbar = conjugate(v);
            for (size_t t = 0; t < q.size(); ++t) q[t] += vbar[t];
            bool generic = true;
            for (int r : leaving)
                if (pair(rs.positive_roots()[static_cast<size_t>(r)], q, d).is_zero()) {
                    generic = false;
                    break;
                }
            if (generic) {
                points.push_back(std::move(q));
                break;
            }
        }
    }

    WeylElement x(rsp);
    const IntMatrix& c = rs.cartan();
    for (;;) {
        int found = -1;
        for (int i = 0; i < rs.rank(); ++i) {
            int s = lex_sign(points, i);
            if (s == 0) throw std::logic_error("simple root vanishes on every generic point");
            if (s < 0) {
                found = i;
                break;
            }
        }
        if (found < 0) break;
        for (auto& q : points) {
            CycloNumber qi = q[static_cast<size_t>(found)];
            for (int t = 0; t < rs.rank(); ++t)
                if (c(found, t) != 0) q[static_cast<size_t>(t)] -= qi * Rational(c(found, t));
        }
        x.left_multiply(found);
    }

    out.x = x;
    out.conjugate = g.conjugate_by(x);
    for (auto& basis : f.bases)
        for (auto& v : basis) v = transform(x.matrix(), v, d);
    for (auto& levi : f.levis) {
        std::vector<int> moved;
        for (int r : levi) {
            int idx = rs.find_root(x.apply_root(rs.positive_roots()[static_cast<size_t>(r)]));
            moved.push_back(idx >= 0 ? idx : -(idx + 2));
        }
        std::sort(moved.begin(), moved.end());
        levi = std::move(moved);
    }
    out.filtration = std::move(f);
    out.standard = true;
    for (const auto& levi : out.filtration.levis) {
        out.chain.push_back(simple_part(rs, levi));
        if (!is_standard(rs, levi)) out.standard = false;
    }
    out.factorization = out.standard && check_factorization(out.conjugate, out.chain);
    return out;
}

}  // namespace

GoodPosition good_position_conjugate(const TwistedWeylElement& g, std::uint64_t seed)
{
    return good_position_impl(g, nullptr, seed);
}

GoodPosition good_position_conjugate(const TwistedWeylElement& g, const std::vector<int>& numerators,
                                     std::uint64_t seed)
{
    return good_position_impl(g, &numerators, seed);
}

Regularity regularity(const TwistedWeylElement& g)
{
    const RootSystem& rs = *g.root_system();
    SpectralData data = compute_spectrum(g);
    Regularity out;
    int d = data.spectrum.order;
    for (size_t j = 0; j < data.spectrum.angles.size(); ++j) {
        bool regular = true;
        for (const auto& root : rs.positive_roots())
            if (vanishes_on(root, data.bases[j], d)) {
                regular = false;
                break;
            }
        if (!regular) continue;
        out.regular_angles.push_back(data.spectrum.angles[j]);
        if (data.spectrum.angles[j].k == (d == 1 ? 0 : 1)) out.d_regular = true;
    }
    out.is_regular = !out.regular_angles.empty();
    return out;
}

}  // namespace weylpsi
