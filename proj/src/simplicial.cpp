#include "mc/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include <gmpxx.h>

#include "mc/errors.hpp"

namespace mc {

namespace {

bool is_prime(unsigned p)
{
    if (p < 2) {
        return false;
    }
    for (unsigned d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<VarSet> maximal_sets(std::vector<VarSet> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> out;
    for (auto s : sets) {
        bool dominated = std::any_of(sets.begin(), sets.end(),
                                     [&](VarSet t) { return t != s && (s & ~t) == 0; });
        if (!dominated) {
            out.push_back(s);
        }
    }
    return out;
}

bool by_size_then_mask(VarSet a, VarSet b)
{
    int ca = std::popcount(a);
    int cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
}

// Sparse rows of a boundary matrix, entries +-1.
struct SignedEntry {
    std::size_t column;
    int sign;
};
using SparseMatrix = std::vector<std::vector<SignedEntry>>;

std::size_t rank_mod_p(const SparseMatrix &rows, std::size_t ncols, unsigned p)
{
    const auto prime = static_cast<std::int64_t>(p);
    std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(ncols, 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto &e : rows[r]) {
            m[r][e.column] = ((e.sign % prime) + prime) % prime;
        }
    }
    auto inverse = [&](std::int64_t x) {
        std::int64_t result = 1;
        std::int64_t base = x;
        std::int64_t exp = prime - 2;
        while (exp > 0) {
            if (exp & 1) {
                result = result * base % prime;
            }
            base = base * base % prime;
            exp >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        const std::int64_t inv = inverse(m[rank][c]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) {
                continue;
            }
            const std::int64_t f = m[r][c] * inv % prime;
            for (std::size_t k = c; k < ncols; ++k) {
                m[r][k] = ((m[r][k] - f * m[rank][k]) % prime + prime) % prime;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(const SparseMatrix &rows, std::size_t ncols)
{
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(ncols, 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto &e : rows[r]) {
            m[r][e.column] = e.sign;
        }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) {
                continue;
            }
            const mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < ncols; ++k) {
                if (m[rank][k] != 0) {
                    m[r][k] -= f * m[rank][k];
                }
            }
        }
        ++rank;
    }
    return rank;
}

// Faces grouped by cardinality: layer k holds the (k-1)-dimensional faces.
std::vector<std::vector<VarSet>> face_layers(const SimplicialComplex &complex)
{
    std::vector<std::vector<VarSet>> layers;
    for (auto f : complex.faces()) {
        auto k = static_cast<std::size_t>(std::popcount(f));
        if (layers.size() <= k) {
            layers.resize(k + 1);
        }
        layers[k].push_back(f);
    }
    return layers;
}

// Rank of d : C(layer k) -> C(layer k-1), k >= 1.
std::size_t boundary_rank(const std::vector<VarSet> &upper, const std::vector<VarSet> &lower,
                          Field field)
{
    if (upper.empty() || lower.empty()) {
        return 0;
    }
    SparseMatrix rows;
    rows.reserve(upper.size());
    for (auto face : upper) {
        std::vector<SignedEntry> row;
        int position = 0;
        for (auto v : members(face)) {
            VarSet sub = face & ~var_bit(v);
            auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            row.push_back({static_cast<std::size_t>(it - lower.begin()),
                           position % 2 == 0 ? 1 : -1});
            ++position;
        }
        rows.push_back(std::move(row));
    }
    return field.is_rational() ? rank_rational(rows, lower.size())
                               : rank_mod_p(rows, lower.size(), field.characteristic());
}

} // namespace

Field::Field(unsigned characteristic) : characteristic_(characteristic)
{
    if (characteristic != 0 && !is_prime(characteristic)) {
        throw DomainError("field characteristic " + std::to_string(characteristic)
                          + " is not 0 or a prime");
    }
}

std::string Field::name() const
{
    return is_rational() ? "QQ" : "GF(" + std::to_string(characteristic_) + ")";
}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<VarSet> facets) : n_(n)
{
    if (n > kMaxVars) {
        throw DomainError("at most " + std::to_string(kMaxVars) + " vertices are supported");
    }
    for (auto f : facets) {
        if ((f & ~full_set(n)) != 0) {
            throw DomainError("facet uses a vertex outside [" + std::to_string(n) + "]");
        }
    }
    facets_ = maximal_sets(std::move(facets));
}

bool SimplicialComplex::contains(VarSet face) const noexcept
{
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](VarSet f) { return (face & ~f) == 0; });
}

std::vector<VarSet> SimplicialComplex::faces() const
{
    std::vector<VarSet> out;
    for (auto f : facets_) {
        VarSet s = f;
        while (true) {
            out.push_back(s);
            if (s == 0) {
                break;
            }
            s = (s - 1) & f;
        }
    }
    std::sort(out.begin(), out.end(), by_size_then_mask);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int SimplicialComplex::dimension() const noexcept
{
    int d = -2;
    for (auto f : facets_) {
        d = std::max(d, std::popcount(f) - 1);
    }
    return d;
}

SimplicialComplex SimplicialComplex::induced(VarSet vertices) const
{
    if (is_void()) {
        return *this;
    }
    std::vector<VarSet> restricted;
    restricted.reserve(facets_.size());
    for (auto f : facets_) {
        restricted.push_back(f & vertices);
    }
    return SimplicialComplex(n_, std::move(restricted));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal &ideal)
{
    if (!ideal.is_squarefree()) {
        throw DomainError("Stanley-Reisner complex needs a squarefree ideal, got " + ideal.to_string());
    }
    const std::size_t n = ideal.nvars();
    const auto gens = ideal.squarefree_masks();
    if (ideal.is_unit()) {
        return SimplicialComplex::void_complex(n);
    }
    // Faces are the sets containing no generator support; search downward
    // from [n] so only maximal ones are kept.
    std::vector<VarSet> facets;
    std::vector<VarSet> stack{full_set(n)};
    std::unordered_set<VarSet> seen;
    while (!stack.empty()) {
        VarSet s = stack.back();
        stack.pop_back();
        auto violated = std::find_if(gens.begin(), gens.end(), [&](VarSet g) { return (g & ~s) == 0; });
        if (violated == gens.end()) {
            facets.push_back(s);
            continue;
        }
        // Some vertex of the violated generator must leave.
        for (auto v : members(*violated)) {
            VarSet t = s & ~var_bit(v);
            if (seen.insert(t).second) {
                stack.push_back(t);
            }
        }
    }
    return SimplicialComplex(n, std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex &complex)
{
    const std::size_t n = complex.nvars();
    if (complex.is_void()) {
        return MonomialIdeal::unit(n);
    }
    // Minimal non-faces: a non-face all of whose codimension-one subsets are faces.
    std::vector<VarSet> non_faces;
    const auto faces = complex.faces();
    for (auto f : faces) {
        for (std::size_t v = 1; v <= n; ++v) {
            VarSet g = f | var_bit(v);
            if (g == f || complex.contains(g)) {
                continue;
            }
            bool minimal = true;
            for (auto u : members(g)) {
                if (!complex.contains(g & ~var_bit(u))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                non_faces.push_back(g);
            }
        }
    }
    return MonomialIdeal::from_squarefree(n, non_faces);
}

SimplicialComplex link(const SimplicialComplex &complex, VarSet face)
{
    if (!complex.contains(face)) {
        throw DomainError("link: the given set is not a face of the complex");
    }
    std::vector<VarSet> facets;
    for (auto f : complex.facets()) {
        if ((face & ~f) == 0) {
            facets.push_back(f & ~face);
        }
    }
    return SimplicialComplex(complex.nvars(), std::move(facets));
}

bool is_cone(const SimplicialComplex &complex, std::size_t vertex)
{
    if (complex.is_void() || vertex < 1 || vertex > complex.nvars()) {
        return false;
    }
    const VarSet bit = var_bit(vertex);
    return std::all_of(complex.facets().begin(), complex.facets().end(),
                       [&](VarSet f) { return (f & bit) != 0; });
}

VarSet cone_apexes(const SimplicialComplex &complex)
{
    if (complex.is_void()) {
        return 0;
    }
    VarSet common = full_set(complex.nvars());
    for (auto f : complex.facets()) {
        common &= f;
    }
    return common;
}

bool HomologyProfile::is_acyclic() const
{
    return std::all_of(dims.begin(), dims.end(), [](const auto &kv) { return kv.second == 0; });
}

std::size_t HomologyProfile::dim(int q) const
{
    auto it = dims.find(q);
    return it == dims.end() ? 0 : it->second;
}

std::map<int, std::size_t> boundary_ranks(const SimplicialComplex &complex, Field field)
{
    std::map<int, std::size_t> ranks;
    const auto layers = face_layers(complex);
    for (std::size_t k = 1; k < layers.size(); ++k) {
        ranks[static_cast<int>(k) - 1] = boundary_rank(layers[k], layers[k - 1], field);
    }
    return ranks;
}

HomologyProfile reduced_homology(const SimplicialComplex &complex, Field field)
{
    HomologyProfile profile;
    profile.field = field;
    if (complex.is_void()) {
        return profile;
    }
    const auto layers = face_layers(complex);
    // ranks[k] = rank of the map out of layer k; the map out of layer 0 is zero.
    std::vector<std::size_t> ranks(layers.size() + 1, 0);
    for (std::size_t k = 1; k < layers.size(); ++k) {
        ranks[k] = boundary_rank(layers[k], layers[k - 1], field);
    }
    for (std::size_t k = 0; k < layers.size(); ++k) {
        profile.dims[static_cast<int>(k) - 1] = layers[k].size() - ranks[k] - ranks[k + 1];
    }
    return profile;
}

bool is_acyclic(const SimplicialComplex &complex, Field field)
{
    return reduced_homology(complex, field).is_acyclic();
}

} // namespace mc
