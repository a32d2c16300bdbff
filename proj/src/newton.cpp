#include "mc/newton.hpp"

#include <algorithm>

#include "mc/errors.hpp"

namespace mc {

Rational RationalCertificate::total() const
{
    Rational t = 0;
    for (const auto &[index, c] : coefficients) {
        t += c;
    }
    return t;
}

bool RationalCertificate::certifies(const MonomialIdeal &ideal, const Exponent &a) const
{
    if (ideal.nvars() != a.size() || total() < 1) {
        return false;
    }
    std::vector<Rational> combo(a.size(), Rational(0));
    for (const auto &[index, c] : coefficients) {
        if (index >= ideal.size() || c < 0) {
            return false;
        }
        const auto &b = ideal.gens()[index];
        for (std::size_t j = 0; j < a.size(); ++j) {
            combo[j] += c * b[j];
        }
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (combo[j] > a[j]) {
            return false;
        }
    }
    return true;
}

std::string RationalCertificate::to_string() const
{
    std::string out;
    for (const auto &[index, c] : coefficients) {
        if (!out.empty()) {
            out += ", ";
        }
        out += std::to_string(index) + ':' + c.get_str();
    }
    return out;
}

namespace {

// Dense simplex tableau for
//   max 1^T c  s.t.  B c + s = a,  c, s >= 0,
// with the slack basis as the (feasible, since a >= 0) starting point.
class Tableau {
public:
    Tableau(const std::vector<const Exponent *> &columns, const Exponent &a)
        : rows_(a.size()), structural_(columns.size()), width_(columns.size() + a.size() + 1),
          cells_(rows_ * width_, Rational(0)), objective_(width_, Rational(0)), basis_(rows_)
    {
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < structural_; ++c) {
                cell(r, c) = (*columns[c])[r];
            }
            cell(r, structural_ + r) = 1;
            cell(r, width_ - 1) = a[r];
            basis_[r] = structural_ + r;
        }
        // Reduced costs stored as c_j - z_j; positive means improving.
        for (std::size_t c = 0; c < structural_; ++c) {
            objective_[c] = 1;
        }
    }

    /// Pivots until optimal or until the objective reaches `target`.
    /// Returns false if the problem is unbounded.
    bool solve(const Rational &target)
    {
        while (value() < target) {
            std::size_t entering = width_;
            for (std::size_t c = 0; c + 1 < width_; ++c) {
                if (objective_[c] > 0) {
                    entering = c;
                    break;
                }
            }
            if (entering == width_) {
                return true;
            }
            std::size_t leaving = rows_;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (cell(r, entering) <= 0) {
                    continue;
                }
                Rational ratio = cell(r, width_ - 1) / cell(r, entering);
                if (leaving == rows_ || ratio < best_ratio
                    || (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows_) {
                return false;
            }
            pivot(leaving, entering);
        }
        return true;
    }

    /// Current objective value sum c_i.
    Rational value() const { return -objective_[width_ - 1]; }

    std::vector<Rational> structural_values() const
    {
        std::vector<Rational> out(structural_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < structural_) {
                out[basis_[r]] = cell(r, width_ - 1);
            }
        }
        return out;
    }

private:
    Rational &cell(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
    const Rational &cell(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational p = cell(row, col);
        for (std::size_t c = 0; c < width_; ++c) {
            cell(row, c) /= p;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || cell(r, col) == 0) {
                continue;
            }
            const Rational f = cell(r, col);
            for (std::size_t c = 0; c < width_; ++c) {
                if (cell(row, c) != 0) {
                    cell(r, c) -= f * cell(row, c);
                }
            }
        }
        if (objective_[col] != 0) {
            const Rational f = objective_[col];
            for (std::size_t c = 0; c < width_; ++c) {
                if (cell(row, c) != 0) {
                    objective_[c] -= f * cell(row, c);
                }
            }
        }
        basis_[row] = col;
    }

    std::size_t rows_;
    std::size_t structural_;
    std::size_t width_;
    std::vector<Rational> cells_;
    std::vector<Rational> objective_;
    std::vector<std::size_t> basis_;
};

} // namespace

NewtonMembership np_membership(const MonomialIdeal &ideal, const Exponent &a)
{
    require_same_size(ideal.nvars(), a.size(), "np_membership");
    NewtonMembership result;
    if (ideal.is_zero()) {
        return result;
    }
    const auto &gens = ideal.gens();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].divides(a)) {
            result.member = true;
            result.optimum = 1;
            result.certificate = RationalCertificate{{{i, Rational(1)}}};
            return result;
        }
    }
    // A generator using a variable outside supp(a) must get weight 0.
    const VarSet support = a.support();
    std::vector<const Exponent *> columns;
    std::vector<std::size_t> column_index;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if ((gens[i].support() & ~support) == 0) {
            columns.push_back(&gens[i]);
            column_index.push_back(i);
        }
    }
    if (columns.empty()) {
        result.optimum = 0;
        return result;
    }
    Tableau tableau(columns, a);
    // Columns are nonzero (the unit ideal was caught above), so the LP is bounded.
    tableau.solve(Rational(1));
    result.optimum = tableau.value();
    if (result.optimum >= 1) {
        result.member = true;
        RationalCertificate cert;
        auto values = tableau.structural_values();
        for (std::size_t c = 0; c < values.size(); ++c) {
            if (values[c] != 0) {
                cert.coefficients.emplace_back(column_index[c], values[c]);
            }
        }
        result.certificate = std::move(cert);
    }
    return result;
}

MonomialIdeal integral_closure(const MonomialIdeal &ideal)
{
    if (ideal.is_zero() || ideal.is_unit()) {
        return ideal;
    }
    auto points = generator_box(ideal).points();
    std::stable_sort(points.begin(), points.end(), [](const Exponent &x, const Exponent &y) {
        return x.total_degree() < y.total_degree();
    });
    // In degree order, a member not divisible by an accepted generator is minimal.
    std::vector<Exponent> accepted;
    for (const auto &p : points) {
        bool covered = std::any_of(accepted.begin(), accepted.end(),
                                   [&](const Exponent &g) { return g.divides(p); });
        if (covered) {
            continue;
        }
        if (ideal.contains(p) || np_membership(ideal, p).member) {
            accepted.push_back(p);
        }
    }
    return MonomialIdeal(ideal.nvars(), std::move(accepted));
}

bool is_integrally_closed(const MonomialIdeal &ideal) { return integral_closure(ideal) == ideal; }

bool closure_restriction_check(const MonomialIdeal &ideal, VarSet vars)
{
    auto lhs = integral_closure(restrict(ideal, vars));
    auto rhs = restrict(integral_closure(ideal), vars);
    return lhs == rhs;
}

} // namespace mc
