#include "weylpsi/braid.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace weylpsi {

int BraidNormalForm::length() const
{
    int total = 0;
    for (const auto& x : factors) total += x.length();
    return total;
}

bool BraidNormalForm::operator==(const BraidNormalForm& other) const
{
    if (delta_power != other.delta_power || factors.size() != other.factors.size()) return false;
    for (size_t i = 0; i < factors.size(); ++i)
        if (!(factors[i] == other.factors[i])) return false;
    return true;
}

void right_multiply(BraidNormalForm& nf, const WeylElement& simple)
{
    if (simple.is_identity()) return;
    nf.factors.push_back(simple);
    int r = simple.root_system()->rank();
    for (size_t i = nf.factors.size() - 1; i-- > 0;) {
        WeylElement& a = nf.factors[i];
        WeylElement& b = nf.factors[i + 1];
        bool changed = false;
        for (bool moved = true; moved;) {
            moved = false;
            std::uint32_t candidates = b.left_descents() & ~a.right_descents();
            for (int s = 0; s < r; ++s)
                if (candidates & (1u << s)) {
                    a.right_multiply(s);
                    b.left_multiply(s);
                    moved = changed = true;
                    break;
                }
        }
        if (!changed) break;
    }
    std::erase_if(nf.factors, [](const WeylElement& x) { return x.is_identity(); });
}

BraidNormalForm braid_normal_form(const RootSystemPtr& rs, const BraidWord& word)
{
    BraidNormalForm nf;
    nf.delta_power = word.delta_power % rs->delta_order();
    for (int i : word.letters) {
        if (i < 0 || i >= rs->rank()) throw std::invalid_argument("generator index out of range");
        right_multiply(nf, WeylElement::from_word(rs, {i}));
    }
    return nf;
}

BraidNormalForm braid_power(const TwistedWeylElement& g, int m)
{
    const RootSystemPtr& rs = g.root_system();
    int n = rs->delta_order();
    int a = g.delta_power();
    BraidNormalForm nf;
    nf.delta_power = (m * a) % n;
    // (w delta^a)^m = delta^{ma} prod_i sigma^{(i - m) a}(w)
    for (int i = 0; i < m; ++i) {
        int power = (((i - m) * a) % n + n) % n;
        right_multiply(nf, g.weyl().twisted(power));
    }
    return nf;
}

WeylElement longest_element(const RootSystemPtr& rs, const IndexSet& levi)
{
    WeylElement x(rs);
    for (bool grew = true; grew;) {
        grew = false;
        for (int i : levi)
            if (!x.has_right_descent(i)) {
                x.right_multiply(i);
                grew = true;
            }
    }
    return x;
}

std::string format_good(const RootSystem& rs, const std::vector<LeviPower>& factors)
{
    std::string out;
    for (const auto& f : factors) {
        out += "D";
        if (static_cast<int>(f.levi.size()) != rs.rank()) {
            std::string inner;
            for (int i : f.levi) {
                if (rs.rank() > 9 && !inner.empty()) inner += ',';
                inner += std::to_string(i + 1);
            }
            out += "_{" + inner + "}";
        }
        if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
    return out.empty() ? "1" : out;
}

std::vector<LeviPower> parse_good(const RootSystem& rs, const std::string& text)
{
    std::vector<LeviPower> out;
    if (text == "1") return out;
    size_t pos = 0;
    auto fail = [&] { return std::invalid_argument("malformed good expression '" + text + "'"); };
    while (pos < text.size()) {
        if (text[pos] != 'D') throw fail();
        ++pos;
        LeviPower f;
        if (pos < text.size() && text[pos] == '_') {
            ++pos;
            std::string inner;
            if (pos < text.size() && text[pos] == '{') {
                size_t close = text.find('}', pos);
                if (close == std::string::npos) throw fail();
                inner = text.substr(pos + 1, close - pos - 1);
                pos = close + 1;
            } else if (pos < text.size()) {
                inner = text.substr(pos, 1);
                ++pos;
            }
            f.levi = parse_word(inner, rs.rank());
            std::sort(f.levi.begin(), f.levi.end());
        } else {
            f.levi = all_indices(rs.rank());
        }
        f.exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            bool braced = pos + 1 < text.size() && text[pos + 1] == '{';
            size_t begin = pos + (braced ? 2 : 1);
            size_t end = begin;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            if (end == begin) throw fail();
            f.exponent = std::stoi(text.substr(begin, end - begin));
            if (braced) {
                if (end >= text.size() || text[end] != '}') throw fail();
                ++end;
            }
            pos = end;
        }
        out.push_back(f);
    }
    return out;
}

GoodIdentity good_power_identity(const GoodPosition& position)
{
    if (!position.standard) throw std::invalid_argument("element is not in good position");
    const TwistedWeylElement& g = position.conjugate;
    const RootSystemPtr& rs = g.root_system();
    const auto& angles = position.filtration.spectrum.angles;
    int d = position.filtration.spectrum.order;

    GoodIdentity out;
    for (size_t i = 0; i < angles.size(); ++i) {
        int exponent = 2 * (angles[i].k - (i == 0 ? 0 : angles[i - 1].k));
        const IndexSet& levi = position.chain[i];
        if (exponent == 0 || levi.empty()) continue;
        if (!out.factors.empty() && out.factors.back().levi == levi) out.factors.back().exponent += exponent;
        else out.factors.push_back({levi, exponent});
    }
    out.even = std::all_of(out.factors.begin(), out.factors.end(), [](const LeviPower& f) { return f.exponent % 2 == 0; });
    out.decreasing = true;
    for (size_t i = 1; i < out.factors.size(); ++i) {
        const IndexSet& big = out.factors[i - 1].levi;
        const IndexSet& small = out.factors[i].levi;
        if (small.size() >= big.size() || !std::includes(big.begin(), big.end(), small.begin(), small.end()))
            out.decreasing = false;
    }

    BraidNormalForm lhs = braid_power(g, d);
    BraidNormalForm rhs;
    for (const auto& f : out.factors) {
        WeylElement top = longest_element(rs, f.levi);
        for (int e = 0; e < f.exponent; ++e) right_multiply(rhs, top);
    }
    out.lhs_length = lhs.length();
    out.rhs_length = rhs.length();
    out.holds = lhs == rhs;
    return out;
}

GoodIdentity good_power_identity(const TwistedWeylElement& g, std::uint64_t seed)
{
    return good_power_identity(good_position_conjugate(g, seed));
}

bool is_good_element(const TwistedWeylElement& g, std::uint64_t seed)
{
    GoodIdentity id = good_power_identity(g, seed);
    return id.holds && id.even && id.decreasing;
}

bool same_good_shape(const RootSystem& rs, const std::vector<LeviPower>& a, const std::vector<LeviPower>& b)
{
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].exponent != b[i].exponent) return false;
        if (rs.levi_type(a[i].levi) != rs.levi_type(b[i].levi)) return false;
    }
    return true;
}

}  // namespace weylpsi
