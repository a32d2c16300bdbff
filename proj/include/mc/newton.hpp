#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mc/monomial_ideal.hpp"

namespace mc {

using Rational = mpq_class;

/// Non-negative weights c_i on generators b_i of I with sum c_i >= 1 and
/// sum c_i b_i <= a componentwise. Indices refer to I.gens().
struct RationalCertificate {
    std::vector<std::pair<std::size_t, Rational>> coefficients;

    Rational total() const;

    /// Checks both defining inequalities in exact arithmetic.
    bool certifies(const MonomialIdeal &ideal, const Exponent &a) const;

    /// "i:p/q" pairs, comma separated.
    std::string to_string() const;
};

struct NewtonMembership {
    bool member = false;
    std::optional<RationalCertificate> certificate;
    /// max sum c_i over the feasible region, or the first value >= 1 reached
    /// when the search stops early. Meaningless when unbounded.
    Rational optimum;
};

/// Decides a in NP(I) by maximizing sum c_i subject to c >= 0 and
/// sum c_i b_i <= a, with an exact primal simplex (Bland's rule).
NewtonMembership np_membership(const MonomialIdeal &ideal, const Exponent &a);

/// Minimal generators of the integral closure of I.
MonomialIdeal integral_closure(const MonomialIdeal &ideal);

bool is_integrally_closed(const MonomialIdeal &ideal);

/// closure(I_V) == closure(I)_V, both sides computed independently.
bool closure_restriction_check(const MonomialIdeal &ideal, VarSet vars);

} // namespace mc
