#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mc/exponent.hpp"
#include "mc/monomial_ideal.hpp"

namespace mc {

/// Coefficient field: characteristic 0 means the rationals, otherwise GF(p).
class Field {
public:
    Field() = default;

    /// Throws DomainError unless p is 0 or prime.
    explicit Field(unsigned characteristic);

    static Field rationals() { return Field(); }

    unsigned characteristic() const noexcept { return characteristic_; }
    bool is_rational() const noexcept { return characteristic_ == 0; }

    /// "QQ" or "GF(p)".
    std::string name() const;

    friend auto operator<=>(const Field &, const Field &) = default;

private:
    unsigned characteristic_ = 0;
};

/// A simplicial complex on [n], kept as its sorted facet antichain.
///
/// The void complex (no faces) and the empty complex {emptyset} are distinct:
/// the former has no facets, the latter has the single facet 0.
class SimplicialComplex {
public:
    explicit SimplicialComplex(std::size_t n = 0) : n_(n) {}

    /// Drops non-maximal faces. Throws DomainError if a facet uses a vertex
    /// outside [n].
    SimplicialComplex(std::size_t n, std::vector<VarSet> facets);

    static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n); }
    static SimplicialComplex empty_complex(std::size_t n) { return SimplicialComplex(n, {0}); }
    static SimplicialComplex simplex(std::size_t n, VarSet vertices)
    {
        return SimplicialComplex(n, {vertices});
    }

    std::size_t nvars() const noexcept { return n_; }
    const std::vector<VarSet> &facets() const noexcept { return facets_; }

    bool is_void() const noexcept { return facets_.empty(); }
    bool is_empty_complex() const noexcept { return facets_.size() == 1 && facets_.front() == 0; }

    bool contains(VarSet face) const noexcept;

    /// All faces, ordered by cardinality then mask.
    std::vector<VarSet> faces() const;

    /// -1 for {emptyset}; -2 for the void complex.
    int dimension() const noexcept;

    /// Subcomplex of faces inside `vertices`.
    SimplicialComplex induced(VarSet vertices) const;

    friend bool operator==(const SimplicialComplex &, const SimplicialComplex &) = default;
    friend auto operator<=>(const SimplicialComplex &, const SimplicialComplex &) = default;

private:
    std::size_t n_;
    std::vector<VarSet> facets_;
};

/// Delta(I) = { F : x_F not in I } for squarefree I.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal &ideal);

/// I_Delta, generated by the minimal non-faces.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex &complex);

/// lk F = { G in Delta : F u G in Delta, F n G = 0 }. Throws DomainError if F
/// is not a face.
SimplicialComplex link(const SimplicialComplex &complex, VarSet face);

bool is_cone(const SimplicialComplex &complex, std::size_t vertex);

VarSet cone_apexes(const SimplicialComplex &complex);

struct HomologyProfile {
    /// dim of reduced homology in each degree -1..dim; empty for the void complex.
    std::map<int, std::size_t> dims;
    Field field;

    bool is_acyclic() const;
    std::size_t dim(int q) const;

    friend bool operator==(const HomologyProfile &, const HomologyProfile &) = default;
};

HomologyProfile reduced_homology(const SimplicialComplex &complex, Field field = {});

bool is_acyclic(const SimplicialComplex &complex, Field field = {});

/// Rank of every augmented boundary map d_q : C_q -> C_{q-1}, q = 0..dim.
std::map<int, std::size_t> boundary_ranks(const SimplicialComplex &complex, Field field = {});

} // namespace mc
