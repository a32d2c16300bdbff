#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mc/monomial_ideal.hpp"
#include "mc/simplicial.hpp"

namespace mc {

/// (a, i) with a witnessing face F: F in Delta_a(I), F n supp(a) = 0 and
/// the link of F has nonzero reduced homology in degree i - 1.
struct CriticalPair {
    Exponent a;
    int i = 0;
    VarSet face = 0;

    std::int64_t weight() const { return static_cast<std::int64_t>(a.total_degree()) + i; }

    friend bool operator==(const CriticalPair &, const CriticalPair &) = default;
};

/// Multidegree b and homological degree i with beta_{i,b}(I) != 0.
struct BettiWitness {
    Exponent multidegree;
    int homological_degree = 0;
};

struct RegularityReport {
    std::int64_t reg_module = 0; ///< reg(S/I)
    std::int64_t reg_ideal = 0;  ///< reg(I) = reg(S/I) + 1
    std::optional<CriticalPair> witness;
    std::optional<BettiWitness> betti_witness;
    Field field;
    std::uint64_t pairs_examined = 0;
};

/// Which exponents the critical-pair search visits.
enum class SearchBox {
    Gamma,     ///< a_j < rho_j(I)
    Inclusive, ///< a_j <= rho_j(I)
};

/// Delta(sqrt(I : x^a)). Throws DomainError for the unit ideal.
SimplicialComplex degree_complex(const MonomialIdeal &ideal, const Exponent &a);

/// Calls `visit` for every critical pair (a, i, F) with a in the search box,
/// a in lexicographic order and faces by size then mask. Returns the number
/// of (a, F) candidates examined.
std::uint64_t for_each_critical_pair(const MonomialIdeal &ideal, Field field,
                                     const std::function<void(const CriticalPair &)> &visit,
                                     SearchBox box = SearchBox::Gamma);

std::vector<CriticalPair> critical_pairs(const MonomialIdeal &ideal, Field field = {},
                                         SearchBox box = SearchBox::Gamma);

/// reg(S/I) as the largest |a| + i over critical pairs. The witness is the
/// extremal pair with lexicographically smallest a, then the smallest face (by
/// size, then mask). Throws DomainError for zero/unit ideals.
RegularityReport regularity(const MonomialIdeal &ideal, Field field = {},
                            SearchBox box = SearchBox::Gamma);

/// {F subset supp(b) : x^(b - F) in I}.
SimplicialComplex upper_koszul_complex(const MonomialIdeal &ideal, const Exponent &b);

/// reg(I) = max |b| - i over beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) != 0, b
/// ranging over divisors of the lcm of the generators.
RegularityReport regularity_oracle_koszul(const MonomialIdeal &ideal, Field field = {});

struct VariableAdditionCheck {
    std::int64_t reg_ideal = 0;     ///< reg(I)
    std::int64_t reg_extended = 0;  ///< reg(I + (x_j))
    bool equality_expected = false; ///< some extremal pair of I has j in its face

    bool passed() const
    {
        return reg_extended <= reg_ideal && (!equality_expected || reg_extended == reg_ideal);
    }
};

/// reg(I + (x_j)) <= reg(I), with equality whenever j lies in the face of an
/// extremal pair of I.
VariableAdditionCheck check_variable_addition(const MonomialIdeal &ideal, std::size_t j,
                                              Field field = {});

} // namespace mc
