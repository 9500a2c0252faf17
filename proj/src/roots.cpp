#include "weylpsi/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <regex>
#include <set>
#include <stdexcept>

namespace weylpsi {

size_t IntVectorHash::operator()(const IntVector& v) const noexcept
{
    size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<size_t>(x + 0x9e37);
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

IntMatrix chain_cartan(int n)
{
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
        c(i, i) = 2;
        if (i + 1 < n) c(i, i + 1) = c(i + 1, i) = -1;
    }
    return c;
}

void link(IntMatrix& c, int i, int j)
{
    c(i, j) = c(j, i) = -1;
}

IntMatrix cartan_of(char letter, int n)
{
    switch (letter) {
    case 'A':
        if (n < 1) break;
        return chain_cartan(n);
    case 'B': {
        if (n < 2) break;
        IntMatrix c = chain_cartan(n);
        c(n - 1, n - 2) = -2;
        return c;
    }
    case 'C': {
        if (n < 2) break;
        IntMatrix c = chain_cartan(n);
        c(n - 2, n - 1) = -2;
        return c;
    }
    case 'D': {
        if (n < 4) break;
        IntMatrix c = chain_cartan(n);
        c(n - 2, n - 1) = c(n - 1, n - 2) = 0;
        link(c, n - 3, n - 1);
        return c;
    }
    case 'E': {
        if (n < 6 || n > 8) break;
        IntMatrix c(n, n);
        for (int i = 0; i < n; ++i) c(i, i) = 2;
        link(c, 0, 2);
        link(c, 1, 3);
        for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
        return c;
    }
    case 'F': {
        if (n != 4) break;
        IntMatrix c = chain_cartan(4);
        c(2, 1) = -2;
        return c;
    }
    case 'G': {
        if (n != 2) break;
        IntMatrix c = chain_cartan(2);
        c(0, 1) = -3;
        return c;
    }
    default:
        break;
    }
    throw std::invalid_argument(std::string("unknown Cartan type ") + letter + std::to_string(n));
}

std::vector<int> twist_of(int order, char letter, int n)
{
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    if (order == 1) return sigma;
    auto incompatible = [&] {
        return std::invalid_argument("no pinned automorphism of order " + std::to_string(order) + " on " +
                                     std::string(1, letter) + std::to_string(n));
    };
    if (order == 2) {
        if (letter == 'A' && n >= 2) {
            for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = n - 1 - i;
        } else if (letter == 'D' && n >= 4) {
            std::swap(sigma[static_cast<size_t>(n - 2)], sigma[static_cast<size_t>(n - 1)]);
        } else if (letter == 'E' && n == 6) {
            sigma = {5, 1, 4, 3, 2, 0};
        } else {
            throw incompatible();
        }
        return sigma;
    }
    if (order == 3 && letter == 'D' && n == 4) {
        sigma = {3, 1, 0, 2};
        return sigma;
    }
    throw incompatible();
}

int permutation_order(const std::vector<int>& sigma)
{
    int order = 1;
    std::vector<bool> seen(sigma.size(), false);
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(sigma[j])) {
            seen[j] = true;
            ++len;
        }
        order = static_cast<int>(lcm_int(order, len));
    }
    return order;
}

int height(const IntVector& v)
{
    return std::accumulate(v.begin(), v.end(), 0);
}

IntVector negated(IntVector v)
{
    for (int& x : v) x = -x;
    return v;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& label)
{
    static const std::regex pattern("^([23]?)([A-G])([0-9]+)$");
    std::smatch m;
    if (!std::regex_match(label, m, pattern)) throw std::invalid_argument("unknown type label '" + label + "'");
    int order = m[1].length() ? std::stoi(m[1].str()) : 1;
    char letter = m[2].str()[0];
    int n = std::stoi(m[3].str());
    if (n > 64) throw std::invalid_argument("rank too large in '" + label + "'");
    IntMatrix c = cartan_of(letter, n);
    auto sigma = twist_of(order, letter, n);
    auto rs = from_cartan(c, sigma, label);
    auto mutable_rs = std::const_pointer_cast<RootSystem>(rs);
    mutable_rs->base_label_ = std::string(1, letter) + std::to_string(n);
    return rs;
}

std::shared_ptr<const RootSystem> RootSystem::from_cartan(const IntMatrix& cartan, std::vector<int> delta,
                                                         std::string label)
{
    std::shared_ptr<RootSystem> rs(new RootSystem());
    rs->label_ = label;
    rs->base_label_ = label;
    rs->rank_ = cartan.rows();
    rs->cartan_ = cartan;
    if (delta.empty()) {
        delta.resize(static_cast<size_t>(rs->rank_));
        std::iota(delta.begin(), delta.end(), 0);
    }
    rs->delta_ = std::move(delta);
    int r = rs->rank_;
    for (int i = 0; i < r; ++i) {
        if (cartan(i, i) != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        for (int j = 0; j < r; ++j) {
            if (i != j && (cartan(i, j) > 0 || (cartan(i, j) == 0) != (cartan(j, i) == 0)))
                throw std::invalid_argument("malformed Cartan matrix");
            int si = rs->delta_[static_cast<size_t>(i)], sj = rs->delta_[static_cast<size_t>(j)];
            if (cartan(si, sj) != cartan(i, j)) throw std::invalid_argument("delta does not preserve the Cartan matrix");
        }
    }
    rs->delta_order_ = permutation_order(rs->delta_);

    // Symmetrizing norms per connected component, smallest norm 2.
    std::vector<Rational> norm(static_cast<size_t>(r), Rational(0));
    for (int start = 0; start < r; ++start) {
        if (norm[static_cast<size_t>(start)] != 0) continue;
        std::vector<int> comp{start};
        norm[static_cast<size_t>(start)] = 1;
        for (size_t k = 0; k < comp.size(); ++k) {
            int i = comp[k];
            for (int j = 0; j < r; ++j)
                if (j != i && cartan(i, j) != 0 && norm[static_cast<size_t>(j)] == 0) {
                    norm[static_cast<size_t>(j)] =
                        norm[static_cast<size_t>(i)] * Rational(cartan(i, j)) / Rational(cartan(j, i));
                    comp.push_back(j);
                }
        }
        Rational smallest = norm[static_cast<size_t>(comp[0])];
        for (int i : comp) smallest = std::min(smallest, norm[static_cast<size_t>(i)]);
        for (int i : comp) norm[static_cast<size_t>(i)] = norm[static_cast<size_t>(i)] * 2 / smallest;
    }
    rs->norms_.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        const Rational& q = norm[static_cast<size_t>(i)];
        if (q.get_den() != 1) throw std::invalid_argument("Cartan matrix is not symmetrizable over Z");
        rs->norms_[static_cast<size_t>(i)] = static_cast<int>(q.get_num().get_si());
    }

    rs->generate_roots();

    rs->reflections_.reserve(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        IntMatrix s = IntMatrix::identity(r);
        for (int k = 0; k < r; ++k) s(k, i) -= cartan(i, k);
        rs->reflections_.push_back(s);
    }
    rs->cartan_transpose_inverse_ = RationalMatrix(cartan.transpose()).inverse();
    return rs;
}

void RootSystem::generate_roots()
{
    int r = rank_;
    positive_.clear();
    index_.clear();
    for (int i = 0; i < r; ++i) {
        IntVector e(static_cast<size_t>(r), 0);
        e[static_cast<size_t>(i)] = 1;
        index_.emplace(e, static_cast<int>(positive_.size()));
        positive_.push_back(e);
    }
    for (size_t k = 0; k < positive_.size(); ++k) {
        IntVector beta = positive_[k];
        for (int i = 0; i < r; ++i) {
            if (height(beta) == 1 && beta[static_cast<size_t>(i)] == 1) continue;
            int p = 0;
            IntVector down = beta;
            while (true) {
                down[static_cast<size_t>(i)] -= 1;
                if (down[static_cast<size_t>(i)] < 0 || !index_.count(down)) break;
                ++p;
            }
            int pairing = 0;
            for (int j = 0; j < r; ++j) pairing += beta[static_cast<size_t>(j)] * cartan_(i, j);
            int q = p - pairing;
            if (q <= 0) continue;
            IntVector up = beta;
            up[static_cast<size_t>(i)] += 1;
            if (!index_.count(up)) {
                index_.emplace(up, static_cast<int>(positive_.size()));
                positive_.push_back(up);
            }
        }
    }
    positive_coroots_.clear();
    for (const auto& beta : positive_) positive_coroots_.push_back(coroot_of(beta));
}

int RootSystem::delta_image(int i, int power) const
{
    power %= delta_order_;
    if (power < 0) power += delta_order_;
    for (int k = 0; k < power; ++k) i = delta_[static_cast<size_t>(i)];
    return i;
}

int RootSystem::find_root(const IntVector& coeffs) const
{
    auto it = index_.find(coeffs);
    if (it != index_.end()) return it->second;
    it = index_.find(negated(coeffs));
    if (it != index_.end()) return -(it->second + 2);
    return -1;
}

int RootSystem::root_norm(const IntVector& m) const
{
    int total = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            total += m[static_cast<size_t>(i)] * m[static_cast<size_t>(j)] * norms_[static_cast<size_t>(i)] * cartan_(i, j);
    return total / 2;
}

IntVector RootSystem::coroot_of(const IntVector& root) const
{
    int n = root_norm(root);
    IntVector c(static_cast<size_t>(rank_));
    for (int j = 0; j < rank_; ++j) {
        int num = root[static_cast<size_t>(j)] * norms_[static_cast<size_t>(j)];
        if (num % n != 0) throw std::logic_error("non-integral coroot");
        c[static_cast<size_t>(j)] = num / n;
    }
    return c;
}

bool RootSystem::is_short(const IntVector& root) const
{
    int n = root_norm(root);
    int largest = 0;
    int first = -1;
    for (int i = 0; i < rank_; ++i)
        if (root[static_cast<size_t>(i)] != 0) {
            first = i;
            break;
        }
    if (first < 0) return false;
    for (const auto& comp : components(all_indices(rank_)))
        if (std::find(comp.begin(), comp.end(), first) != comp.end())
            for (int i : comp) largest = std::max(largest, norms_[static_cast<size_t>(i)]);
    return n < largest;
}

bool RootSystem::has_two_lengths() const
{
    for (int i = 0; i < rank_; ++i)
        if (norms_[static_cast<size_t>(i)] != norms_[0]) return true;
    return false;
}

IntMatrix RootSystem::delta_matrix(int power) const
{
    IntMatrix p(rank_, rank_);
    for (int i = 0; i < rank_; ++i) p(delta_image(i, power), i) = 1;
    return p;
}

IntMatrix RootSystem::reflection(const IntVector& root) const
{
    IntVector c = coroot_to_fundamental(coroot_of(root));
    IntMatrix s = IntMatrix::identity(rank_);
    for (int k = 0; k < rank_; ++k)
        for (int l = 0; l < rank_; ++l) s(k, l) -= c[static_cast<size_t>(k)] * root[static_cast<size_t>(l)];
    return s;
}

Rational RootSystem::pair(const IntVector& root, const RationalVector& coweight)
{
    Rational total = 0;
    for (size_t i = 0; i < root.size(); ++i)
        if (root[i] != 0) total += root[i] * coweight[i];
    return total;
}

int RootSystem::pair(const IntVector& root, const IntVector& coweight)
{
    int total = 0;
    for (size_t i = 0; i < root.size(); ++i) total += root[i] * coweight[i];
    return total;
}

RationalVector RootSystem::coroot_to_fundamental(const RationalVector& y) const
{
    return cartan_.transpose() * y;
}

IntVector RootSystem::coroot_to_fundamental(const IntVector& y) const
{
    return cartan_.transpose() * y;
}

RationalVector RootSystem::fundamental_to_coroot(const RationalVector& x) const
{
    return cartan_transpose_inverse_ * x;
}

std::vector<int> RootSystem::levi_positive_roots(const IndexSet& levi) const
{
    std::vector<bool> in(static_cast<size_t>(rank_), false);
    for (int i : levi) in[static_cast<size_t>(i)] = true;
    std::vector<int> out;
    for (size_t k = 0; k < positive_.size(); ++k) {
        bool inside = true;
        for (int i = 0; i < rank_; ++i)
            if (positive_[k][static_cast<size_t>(i)] != 0 && !in[static_cast<size_t>(i)]) {
                inside = false;
                break;
            }
        if (inside) out.push_back(static_cast<int>(k));
    }
    return out;
}

IntVector RootSystem::highest_root() const
{
    return positive_.back();
}

IntVector RootSystem::highest_short_root() const
{
    IntVector best;
    int best_height = -1;
    for (const auto& beta : positive_)
        if (is_short(beta) && height(beta) > best_height) {
            best = beta;
            best_height = height(beta);
        }
    if (best_height < 0) return highest_root();
    return best;
}

std::vector<IndexSet> RootSystem::components(const IndexSet& subset) const
{
    std::vector<IndexSet> out;
    std::set<int> remaining(subset.begin(), subset.end());
    while (!remaining.empty()) {
        IndexSet comp{*remaining.begin()};
        remaining.erase(remaining.begin());
        for (size_t k = 0; k < comp.size(); ++k)
            for (auto it = remaining.begin(); it != remaining.end();) {
                if (cartan_(comp[k], *it) != 0) {
                    comp.push_back(*it);
                    it = remaining.erase(it);
                } else {
                    ++it;
                }
            }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

namespace {

std::string component_type(const IntMatrix& c, const IndexSet& comp)
{
    int k = static_cast<int>(comp.size());
    std::string n = std::to_string(k);
    std::map<int, int> degree;
    int short_node = -1, long_node = -1;
    bool triple = false;
    for (int i : comp)
        for (int j : comp) {
            if (i == j || c(i, j) == 0) continue;
            ++degree[i];
            if (c(i, j) == -3) triple = true;
            if (c(i, j) == -2) {
                short_node = i;
                long_node = j;
            }
        }
    if (k == 1) return "A1";
    if (triple) return "G2";
    if (short_node >= 0) {
        if (k == 2) return "B2";
        if (k == 4 && degree[short_node] == 2 && degree[long_node] == 2) return "F4";
        return degree[short_node] == 1 ? "B" + n : "C" + n;
    }
    int branch = -1;
    for (int i : comp)
        if (degree[i] == 3) branch = i;
    if (branch < 0) return "A" + n;
    std::vector<int> arms;
    for (int start : comp) {
        if (start == branch || c(branch, start) == 0) continue;
        int len = 1, prev = branch, cur = start;
        while (true) {
            int next = -1;
            for (int j : comp)
                if (j != cur && j != prev && c(cur, j) != 0) next = j;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + n;
    return "E" + n;
}

}  // namespace

std::string RootSystem::levi_type(const IndexSet& subset) const
{
    std::map<std::string, int> counts;
    std::vector<std::string> order;
    for (const auto& comp : components(subset)) {
        std::string name = component_type(cartan_, comp);
        bool laced = name[0] == 'A' || name[0] == 'D' || name[0] == 'E';
        if (laced) {
            IntVector e(static_cast<size_t>(rank_), 0);
            e[static_cast<size_t>(comp[0])] = 1;
            if (is_short(e)) name = "~" + name;
        }
        if (!counts.count(name)) order.push_back(name);
        ++counts[name];
    }
    std::sort(order.begin(), order.end(), [](const std::string& a, const std::string& b) {
        auto key = [](const std::string& s) {
            size_t p = s[0] == '~' ? 1 : 0;
            return std::make_tuple(std::stoi(s.substr(p + 1)), s[p], p);
        };
        return key(a) < key(b);
    });
    std::string out;
    for (const auto& name : order) {
        if (!out.empty()) out += "+";
        int c = counts[name];
        if (c > 1) out += std::to_string(c);
        out += name;
    }
    return out.empty() ? "empty" : out;
}

WeylElement::WeylElement(RootSystemPtr rs) : rs_(std::move(rs))
{
    m_ = IntMatrix::identity(rs_->rank());
    minv_ = m_;
}

WeylElement WeylElement::from_word(RootSystemPtr rs, const std::vector<int>& word)
{
    WeylElement w(std::move(rs));
    for (int i : word) w.right_multiply(i);
    return w;
}

WeylElement WeylElement::from_matrix(RootSystemPtr rs, const IntMatrix& m)
{
    WeylElement w(rs);
    w.m_ = m;
    RationalMatrix inv = RationalMatrix(m).inverse();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = inv(i, j);
            if (q.get_den() != 1) throw std::invalid_argument("matrix is not in the Weyl group");
            w.minv_(i, j) = static_cast<int>(q.get_num().get_si());
        }
    for (const auto& beta : rs->positive_roots())
        if (!rs->is_root(w.apply_root(beta))) throw std::invalid_argument("matrix does not permute the roots");
    return w;
}

void WeylElement::left_multiply(int i)
{
    const IntMatrix& c = rs_->cartan();
    int r = m_.rows();
    for (int k = 0; k < r; ++k) {
        if (k == i || c(i, k) == 0) continue;
        for (int j = 0; j < r; ++j) m_(k, j) -= c(i, k) * m_(i, j);
    }
    for (int j = 0; j < r; ++j) m_(i, j) = -m_(i, j);
    for (int k = 0; k < r; ++k) {
        int s = 0;
        for (int l = 0; l < r; ++l) s += minv_(k, l) * c(i, l);
        minv_(k, i) -= s;
    }
}

void WeylElement::right_multiply(int i)
{
    const IntMatrix& c = rs_->cartan();
    int r = m_.rows();
    for (int k = 0; k < r; ++k) {
        int s = 0;
        for (int l = 0; l < r; ++l) s += m_(k, l) * c(i, l);
        m_(k, i) -= s;
    }
    for (int k = 0; k < r; ++k) {
        if (k == i || c(i, k) == 0) continue;
        for (int j = 0; j < r; ++j) minv_(k, j) -= c(i, k) * minv_(i, j);
    }
    for (int j = 0; j < r; ++j) minv_(i, j) = -minv_(i, j);
}

WeylElement WeylElement::operator*(const WeylElement& other) const
{
    WeylElement out(rs_);
    out.m_ = m_ * other.m_;
    out.minv_ = other.minv_ * minv_;
    return out;
}

WeylElement WeylElement::inverse() const
{
    WeylElement out(rs_);
    out.m_ = minv_;
    out.minv_ = m_;
    return out;
}

WeylElement WeylElement::twisted(int power) const
{
    if (!rs_->twisted() || power % rs_->delta_order() == 0) return *this;
    WeylElement out(rs_);
    int r = m_.rows();
    for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
            int sk = rs_->delta_image(k, power), sl = rs_->delta_image(l, power);
            out.m_(sk, sl) = m_(k, l);
            out.minv_(sk, sl) = minv_(k, l);
        }
    return out;
}

int WeylElement::length() const
{
    int r = m_.rows();
    IntVector v(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
        int s = 0;
        for (int l = 0; l < r; ++l) s += minv_(k, l);
        v[static_cast<size_t>(k)] = s;
    }
    int count = 0;
    for (const auto& beta : rs_->positive_roots())
        if (RootSystem::pair(beta, v) < 0) ++count;
    return count;
}

bool WeylElement::has_left_descent(int i) const
{
    int s = 0;
    for (int l = 0; l < m_.cols(); ++l) s += m_(i, l);
    return s < 0;
}

bool WeylElement::has_right_descent(int i) const
{
    int s = 0;
    for (int l = 0; l < minv_.cols(); ++l) s += minv_(i, l);
    return s < 0;
}

std::uint32_t WeylElement::left_descents() const
{
    std::uint32_t mask = 0;
    for (int i = 0; i < m_.rows(); ++i)
        if (has_left_descent(i)) mask |= 1u << i;
    return mask;
}

std::uint32_t WeylElement::right_descents() const
{
    std::uint32_t mask = 0;
    for (int i = 0; i < m_.rows(); ++i)
        if (has_right_descent(i)) mask |= 1u << i;
    return mask;
}

std::vector<int> WeylElement::reduced_word() const
{
    std::vector<int> word;
    WeylElement w = *this;
    while (true) {
        int found = -1;
        for (int i = 0; i < m_.rows(); ++i)
            if (w.has_left_descent(i)) {
                found = i;
                break;
            }
        if (found < 0) break;
        word.push_back(found);
        w.left_multiply(found);
    }
    return word;
}

IntVector WeylElement::apply_root(const IntVector& root) const
{
    int r = m_.rows();
    IntVector out(static_cast<size_t>(r), 0);
    for (int j = 0; j < r; ++j) {
        int s = 0;
        for (int k = 0; k < r; ++k) s += minv_(k, j) * root[static_cast<size_t>(k)];
        out[static_cast<size_t>(j)] = s;
    }
    return out;
}

RationalCoweight RationalCoweight::to_fundamental(const RootSystem& rs) const
{
    if (basis == CoweightBasis::fundamental) return *this;
    return {rs.coroot_to_fundamental(coords), CoweightBasis::fundamental};
}

RationalCoweight RationalCoweight::to_coroot(const RootSystem& rs) const
{
    if (basis == CoweightBasis::coroot) return *this;
    return {rs.fundamental_to_coroot(coords), CoweightBasis::coroot};
}

TwistedWeylElement::TwistedWeylElement(WeylElement w, int delta_power) : w_(std::move(w))
{
    int n = w_.root_system()->delta_order();
    a_ = ((delta_power % n) + n) % n;
}

TwistedWeylElement TwistedWeylElement::from_word(RootSystemPtr rs, const std::vector<int>& word)
{
    int a = rs->twisted() ? 1 : 0;
    return from_word(std::move(rs), word, a);
}

TwistedWeylElement TwistedWeylElement::from_word(RootSystemPtr rs, const std::vector<int>& word, int delta_power)
{
    for (int i : word)
        if (i < 0 || i >= rs->rank()) throw std::invalid_argument("simple reflection index out of range");
    return TwistedWeylElement(WeylElement::from_word(std::move(rs), word), delta_power);
}

IntMatrix TwistedWeylElement::matrix() const
{
    if (a_ == 0) return w_.matrix();
    return w_.matrix() * root_system()->delta_matrix(a_);
}

TwistedWeylElement TwistedWeylElement::operator*(const TwistedWeylElement& other) const
{
    return TwistedWeylElement(w_ * other.w_.twisted(a_), a_ + other.a_);
}

TwistedWeylElement TwistedWeylElement::power(int k) const
{
    if (k < 0) throw std::invalid_argument("negative power");
    TwistedWeylElement out(WeylElement(root_system()), 0);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

TwistedWeylElement TwistedWeylElement::conjugate_by(const WeylElement& x) const
{
    return TwistedWeylElement(x * w_ * x.inverse().twisted(a_), a_);
}

TwistedWeylElement TwistedWeylElement::conjugate_by_simple(int i) const
{
    WeylElement w = w_;
    w.left_multiply(i);
    w.right_multiply(root_system()->delta_image(i, a_));
    return TwistedWeylElement(w, a_);
}

int TwistedWeylElement::order() const
{
    TwistedWeylElement x = *this;
    for (int m = 1; m <= 100000; ++m) {
        if (x.a_ == 0 && x.w_.is_identity()) return m;
        x = x * *this;
    }
    throw std::logic_error("element order exceeds search bound");
}

std::vector<int> parse_word(const std::string& text, int rank)
{
    std::vector<int> word;
    std::string t;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') t += ch;
    if (t.empty() || t == "e") return word;
    bool commas = t.find(',') != std::string::npos || rank > 9;
    size_t pos = 0;
    while (pos < t.size()) {
        std::string piece;
        if (commas) {
            size_t next = t.find(',', pos);
            piece = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            pos = next == std::string::npos ? t.size() : next + 1;
        } else {
            piece = t.substr(pos, 1);
            ++pos;
        }
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed word '" + text + "'");
        int i = std::stoi(piece);
        if (i < 1 || i > rank) throw std::invalid_argument("generator " + piece + " out of range in '" + text + "'");
        word.push_back(i - 1);
    }
    return word;
}

std::string format_word(const std::vector<int>& word, int rank)
{
    if (word.empty()) return "e";
    std::string out;
    for (size_t k = 0; k < word.size(); ++k) {
        if (rank > 9 && k) out += ',';
        out += std::to_string(word[k] + 1);
    }
    return out;
}

std::string format_index_set(const IndexSet& set)
{
    std::string out = "{";
    for (size_t k = 0; k < set.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(set[k] + 1);
    }
    return out + "}";
}

RationalCoweight apply(const TwistedWeylElement& g, const RationalCoweight& v)
{
    const RootSystem& rs = *g.root_system();
    if (static_cast<int>(v.coords.size()) != rs.rank()) throw std::invalid_argument("coweight dimension mismatch");
    RationalCoweight f = v.to_fundamental(rs);
    RationalCoweight out{g.matrix() * f.coords, CoweightBasis::fundamental};
    return v.basis == CoweightBasis::coroot ? out.to_coroot(rs) : out;
}

std::pair<RationalCoweight, std::vector<int>> dominant_representative(const RootSystem& rs, const RationalCoweight& v,
                                                                      const IndexSet& levi)
{
    RationalVector x = v.to_fundamental(rs).coords;
    std::vector<int> applied;
    const IntMatrix& c = rs.cartan();
    while (true) {
        int found = -1;
        for (int i : levi)
            if (x[static_cast<size_t>(i)] < 0) {
                found = i;
                break;
            }
        if (found < 0) break;
        Rational xi = x[static_cast<size_t>(found)];
        for (int k = 0; k < rs.rank(); ++k)
            if (c(found, k) != 0) x[static_cast<size_t>(k)] -= xi * c(found, k);
        applied.push_back(found);
    }
    std::reverse(applied.begin(), applied.end());
    return {RationalCoweight{x, CoweightBasis::fundamental}, applied};
}

RationalCoweight rho_half_sum(const RootSystem& rs, const IndexSet& levi)
{
    return rho_half_sum_of_roots(rs, rs.levi_positive_roots(levi));
}

RationalCoweight rho_half_sum_of_roots(const RootSystem& rs, const std::vector<int>& positive_indices)
{
    const auto& pos = rs.positive_roots();
    std::set<int> members(positive_indices.begin(), positive_indices.end());
    for (int a : positive_indices)
        for (int b : positive_indices)
            for (int sign : {1, -1}) {
                IntVector sum = pos[static_cast<size_t>(a)];
                for (size_t k = 0; k < sum.size(); ++k) sum[k] += sign * pos[static_cast<size_t>(b)][k];
                int idx = rs.find_root(sum);
                if (idx == -1) continue;
                int p = idx >= 0 ? idx : -(idx + 2);
                if (!members.count(p)) throw std::invalid_argument("root subset is not closed");
            }
    RationalVector y(static_cast<size_t>(rs.rank()), Rational(0));
    for (int a : positive_indices)
        for (int k = 0; k < rs.rank(); ++k) y[static_cast<size_t>(k)] += rs.positive_coroots()[static_cast<size_t>(a)][static_cast<size_t>(k)];
    for (auto& q : y) q /= 2;
    return RationalCoweight{y, CoweightBasis::coroot}.to_fundamental(rs);
}

IndexSet support_orbit(const TwistedWeylElement& g)
{
    const RootSystem& rs = *g.root_system();
    std::set<int> support;
    for (int i : g.word())
        for (int p = 0; p < rs.delta_order(); ++p) support.insert(rs.delta_image(i, p * g.delta_power()));
    return IndexSet(support.begin(), support.end());
}

bool is_elliptic(const TwistedWeylElement& g)
{
    IntMatrix m = g.matrix();
    RationalMatrix a(m);
    for (int i = 0; i < m.rows(); ++i) a(i, i) -= 1;
    return a.rank() == m.rows();
}

IndexSet all_indices(int rank)
{
    IndexSet out(static_cast<size_t>(rank));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

}  // namespace weylpsi
