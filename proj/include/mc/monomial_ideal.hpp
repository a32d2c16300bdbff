#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mc/exponent.hpp"

namespace mc {

/// A monomial ideal of k[x_1..x_n], stored as its minimal generating set.
///
/// The generators always form a divisibility antichain sorted
/// lexicographically, so two ideals are equal exactly when their generator
/// lists are equal. The zero ideal has no generators; the unit ideal has the
/// single zero exponent.
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

    /// Minimalizes `gens`. Throws DimensionMismatch if some generator does
    /// not have length n.
    MonomialIdeal(std::size_t n, std::vector<Exponent> gens);

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(std::size_t n);

    /// (x_i | i in vars).
    static MonomialIdeal variables(std::size_t n, VarSet vars);

    /// Ideal generated by squarefree monomials x_F, F in `faces`.
    static MonomialIdeal from_squarefree(std::size_t n, const std::vector<VarSet> &faces);

    std::size_t nvars() const noexcept { return n_; }
    const std::vector<Exponent> &gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept;
    bool is_squarefree() const noexcept;

    /// x^a in I.
    bool contains(const Exponent &a) const;

    /// Supports of the generators; only meaningful for squarefree ideals.
    std::vector<VarSet> squarefree_masks() const;

    friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

    /// Comma separated monomials, "0" for the zero ideal.
    std::string to_string() const;

private:
    std::size_t n_;
    std::vector<Exponent> gens_;
};

/// Divisibility antichain of `gens`, lexicographically sorted.
MonomialIdeal minimalize(std::size_t n, std::vector<Exponent> gens);

/// Infers n from the generators; an empty list gives the zero ideal in 0 variables.
MonomialIdeal minimalize(std::vector<Exponent> gens);

/// I : x^a.
MonomialIdeal colon(const MonomialIdeal &ideal, const Exponent &a);

MonomialIdeal radical(const MonomialIdeal &ideal);

MonomialIdeal sum(const MonomialIdeal &lhs, const MonomialIdeal &rhs);

MonomialIdeal intersect(const MonomialIdeal &lhs, const MonomialIdeal &rhs);

/// Generators whose support lies in `vars`.
MonomialIdeal restrict(const MonomialIdeal &ideal, VarSet vars);

/// Largest degree of x_j (1-based) among the minimal generators, 0 if absent.
Degree rho(const MonomialIdeal &ideal, std::size_t j);

/// The box { a in N^n : a_j < bound_j } (or <= bound_j when inclusive).
class GammaBox {
public:
    GammaBox(std::vector<Degree> bounds, bool inclusive = false)
        : bounds_(std::move(bounds)), inclusive_(inclusive)
    {
    }

    const std::vector<Degree> &bounds() const noexcept { return bounds_; }
    bool inclusive() const noexcept { return inclusive_; }

    /// Number of lattice points. An exclusive box with a zero bound still
    /// allows coordinate 0 there.
    std::uint64_t cardinality() const;

    bool contains(const Exponent &a) const;

    /// Visits points in lexicographic order, last coordinate fastest.
    void for_each(const std::function<void(const Exponent &)> &visit) const;

    std::vector<Exponent> points() const;

private:
    std::uint32_t extent(std::size_t j) const;

    std::vector<Degree> bounds_;
    bool inclusive_;
};

/// Gamma(I) with exclusive bounds rho_j(I).
GammaBox gamma_box(const MonomialIdeal &ideal);

/// Prod_j [0, rho_j(I)].
GammaBox generator_box(const MonomialIdeal &ideal);

} // namespace mc
