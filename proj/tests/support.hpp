#pragma once

// Fixtures and brute-force oracles shared by the unit tests. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <random>
#include <vector>

#include "mc/digraph.hpp"
#include "mc/exponent.hpp"
#include "mc/monomial_ideal.hpp"

namespace support {

using mc::Degree;
using mc::Exponent;
using mc::MonomialIdeal;
using mc::VarSet;

inline Exponent e(std::initializer_list<Degree> c) { return Exponent(c); }

/// x1 x2^3, x2 x3^5, x3 x1^6.
inline MonomialIdeal triangle_ideal()
{
    return MonomialIdeal(3, {e({1, 3, 0}), e({0, 1, 5}), e({6, 0, 1})});
}

/// 1 -> 2 -> 3 -> 1 with weights (6, 3, 5).
inline mc::WeightedOrientedGraph triangle_graph()
{
    return mc::WeightedOrientedGraph(3, {{1, 2}, {2, 3}, {3, 1}}, {6, 3, 5});
}

/// Ten vertices, thirteen edges, sinks 7..10 weighted (4, 7, 4, 6).
inline mc::WeightedOrientedGraph ten_vertex_graph()
{
    return mc::WeightedOrientedGraph(10,
                                     {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 10}, {3, 7}, {4, 7},
                                      {4, 8}, {5, 8}, {5, 9}, {6, 10}},
                                     {1, 1, 1, 1, 1, 1, 4, 7, 4, 6});
}

inline Exponent ten_vertex_a() { return e({0, 0, 0, 0, 0, 0, 2, 3, 1, 3}); }

/// Pairwise divisibility scan, independent of MonomialIdeal's constructor.
inline std::vector<Exponent> naive_antichain(std::vector<Exponent> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> out;
    for (const auto &g : gens) {
        bool redundant = false;
        for (const auto &h : gens) {
            if (h != g && h.divides(g)) {
                redundant = true;
            }
        }
        if (!redundant) {
            out.push_back(g);
        }
    }
    return out;
}

inline bool naive_contains(const std::vector<Exponent> &gens, const Exponent &a)
{
    return std::any_of(gens.begin(), gens.end(), [&](const Exponent &g) { return g.divides(a); });
}

/// Every point of prod [0, bound], last coordinate fastest.
inline std::vector<Exponent> box_points(const std::vector<Degree> &bound)
{
    std::vector<Exponent> out;
    Exponent a(bound.size());
    while (true) {
        out.push_back(a);
        std::size_t k = bound.size();
        while (k > 0 && a[k - 1] == bound[k - 1]) {
            a[--k] = 0;
        }
        if (k == 0) {
            return out;
        }
        ++a[k - 1];
    }
}

inline std::vector<Degree> max_exponents(const std::vector<Exponent> &gens, std::size_t n)
{
    std::vector<Degree> bound(n, 0);
    for (const auto &g : gens) {
        for (std::size_t j = 0; j < n; ++j) {
            bound[j] = std::max(bound[j], g[j]);
        }
    }
    return bound;
}

/// Random nonzero ideal with exponents in [0, rho].
inline MonomialIdeal random_ideal(std::mt19937_64 &rng, std::size_t n, Degree rho, std::size_t max_gens,
                                  bool squarefree = false)
{
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::uniform_int_distribution<Degree> coord(0, squarefree ? 1 : rho);
    std::vector<Exponent> gens(count(rng), Exponent(n));
    for (auto &g : gens) {
        do {
            for (std::size_t j = 0; j < n; ++j) {
                g[j] = coord(rng);
            }
        } while (g.is_zero());
    }
    return MonomialIdeal(n, gens);
}

inline Exponent random_exponent(std::mt19937_64 &rng, std::size_t n, Degree hi)
{
    Exponent a(n);
    for (std::size_t j = 0; j < n; ++j) {
        a[j] = std::uniform_int_distribution<Degree>(0, hi)(rng);
    }
    return a;
}

} // namespace support
