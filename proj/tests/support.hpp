#pragma once

#include "weylpsi/catalog.hpp"

#include <map>
#include <queue>
#include <random>
#include <string>
#include <vector>

namespace test {

inline weylpsi::TwistedWeylElement element(const std::string& type, const std::string& word)
{
    auto rs = weylpsi::RootSystem::build(type);
    return weylpsi::TwistedWeylElement::from_word(rs, weylpsi::parse_word(word, rs->rank()));
}

inline weylpsi::RationalVector rationals(std::initializer_list<long> values, long den = 1)
{
    weylpsi::RationalVector out;
    for (long v : values) out.push_back(weylpsi::fraction(v, den));
    return out;
}

inline weylpsi::RationalCoweight coweight(std::initializer_list<long> values, long den = 1)
{
    return {rationals(values, den), weylpsi::CoweightBasis::fundamental};
}

inline weylpsi::WeylElement random_weyl(const weylpsi::RootSystemPtr& rs, std::mt19937_64& rng, int length)
{
    std::uniform_int_distribution<int> letter(0, rs->rank() - 1);
    std::vector<int> word(static_cast<size_t>(length));
    for (auto& l : word) l = letter(rng);
    return weylpsi::WeylElement::from_word(rs, word);
}

/// Twisted conjugate x g x^-1 by a random x.
inline weylpsi::TwistedWeylElement random_conjugate(const weylpsi::TwistedWeylElement& g, std::mt19937_64& rng)
{
    return g.conjugate_by(random_weyl(g.root_system(), rng, 3 * g.root_system()->rank() + 7));
}

// Exhaustive twisted classes: every element of W delta^a with its class id.
struct Classes {
    std::map<std::vector<int>, int> class_of;  // matrix data -> class
    std::vector<std::pair<weylpsi::TwistedWeylElement, int>> elements;
    std::vector<int> min_length;
};

inline Classes enumerate_classes(const weylpsi::RootSystemPtr& rs, int delta_power)
{
    std::vector<weylpsi::WeylElement> all{weylpsi::WeylElement(rs)};
    std::map<std::vector<int>, int> seen{{all[0].matrix().data(), 0}};
    for (size_t i = 0; i < all.size(); ++i)
        for (int s = 0; s < rs->rank(); ++s) {
            weylpsi::WeylElement x = all[i];
            x.right_multiply(s);
            if (seen.emplace(x.matrix().data(), static_cast<int>(all.size())).second) all.push_back(x);
        }
    Classes out;
    for (const auto& w : all) {
        weylpsi::TwistedWeylElement g(w, delta_power);
        if (out.class_of.count(g.matrix().data())) continue;
        int id = static_cast<int>(out.min_length.size());
        out.min_length.push_back(g.length());
        std::queue<weylpsi::TwistedWeylElement> todo;
        todo.push(g);
        out.class_of[g.matrix().data()] = id;
        while (!todo.empty()) {
            weylpsi::TwistedWeylElement h = todo.front();
            todo.pop();
            out.elements.push_back({h, id});
            out.min_length[static_cast<size_t>(id)] = std::min(out.min_length[static_cast<size_t>(id)], h.length());
            for (int s = 0; s < rs->rank(); ++s) {
                weylpsi::TwistedWeylElement c = h.conjugate_by_simple(s);
                if (out.class_of.emplace(c.matrix().data(), id).second) todo.push(c);
            }
        }
    }
    return out;
}

}  // namespace test
