#include "mc/monomial_ideal.hpp"

#include <algorithm>

#include "mc/errors.hpp"

namespace mc {

namespace {

std::vector<Exponent> antichain(std::vector<Exponent> gens)
{
    // Degree order guarantees every divisor of a generator is seen before it.
    std::sort(gens.begin(), gens.end(), [](const Exponent &a, const Exponent &b) {
        auto da = a.total_degree();
        auto db = b.total_degree();
        return da != db ? da < db : a < b;
    });
    std::vector<Exponent> kept;
    for (auto &g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const Exponent &k) { return k.divides(g); });
        if (!redundant) {
            kept.push_back(std::move(g));
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Exponent> gens) : n_(n)
{
    if (n > kMaxVars) {
        throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
    }
    for (const auto &g : gens) {
        require_same_size(n, g.size(), "monomial ideal");
    }
    gens_ = antichain(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return MonomialIdeal(n, {Exponent(n)}); }

MonomialIdeal MonomialIdeal::variables(std::size_t n, VarSet vars)
{
    std::vector<Exponent> gens;
    for (auto v : members(vars)) {
        gens.push_back(Exponent::unit(n, v));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_squarefree(std::size_t n, const std::vector<VarSet> &faces)
{
    std::vector<Exponent> gens;
    gens.reserve(faces.size());
    for (auto f : faces) {
        gens.push_back(Exponent::squarefree(n, f));
    }
    return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }

bool MonomialIdeal::is_squarefree() const noexcept
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Exponent &g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Exponent &a) const
{
    require_same_size(n_, a.size(), "membership");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent &g) { return g.divides(a); });
}

std::vector<VarSet> MonomialIdeal::squarefree_masks() const
{
    std::vector<VarSet> out;
    out.reserve(gens_.size());
    for (const auto &g : gens_) {
        out.push_back(g.support());
    }
    return out;
}

std::string MonomialIdeal::to_string() const
{
    if (gens_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &g : gens_) {
        if (!out.empty()) {
            out += ", ";
        }
        out += g.to_string();
    }
    return out;
}

MonomialIdeal minimalize(std::size_t n, std::vector<Exponent> gens)
{
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal minimalize(std::vector<Exponent> gens)
{
    std::size_t n = gens.empty() ? 0 : gens.front().size();
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal &ideal, const Exponent &a)
{
    require_same_size(ideal.nvars(), a.size(), "colon");
    std::vector<Exponent> gens;
    gens.reserve(ideal.size());
    for (const auto &g : ideal.gens()) {
        gens.push_back(g.colon(a));
    }
    return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal &ideal)
{
    std::vector<Exponent> gens;
    gens.reserve(ideal.size());
    for (const auto &g : ideal.gens()) {
        gens.push_back(Exponent::squarefree(ideal.nvars(), g.support()));
    }
    return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal &lhs, const MonomialIdeal &rhs)
{
    require_same_size(lhs.nvars(), rhs.nvars(), "sum");
    std::vector<Exponent> gens = lhs.gens();
    gens.insert(gens.end(), rhs.gens().begin(), rhs.gens().end());
    return MonomialIdeal(lhs.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal &lhs, const MonomialIdeal &rhs)
{
    require_same_size(lhs.nvars(), rhs.nvars(), "intersect");
    std::vector<Exponent> gens;
    gens.reserve(lhs.size() * rhs.size());
    for (const auto &u : lhs.gens()) {
        for (const auto &v : rhs.gens()) {
            gens.push_back(lcm(u, v));
        }
    }
    return MonomialIdeal(lhs.nvars(), std::move(gens));
}

MonomialIdeal restrict(const MonomialIdeal &ideal, VarSet vars)
{
    if ((vars & ~full_set(ideal.nvars())) != 0) {
        throw DomainError("restriction set is not contained in [n]");
    }
    std::vector<Exponent> gens;
    for (const auto &g : ideal.gens()) {
        if ((g.support() & ~vars) == 0) {
            gens.push_back(g);
        }
    }
    return MonomialIdeal(ideal.nvars(), std::move(gens));
}

Degree rho(const MonomialIdeal &ideal, std::size_t j)
{
    if (j < 1 || j > ideal.nvars()) {
        throw DomainError("variable index " + std::to_string(j) + " out of range");
    }
    Degree best = 0;
    for (const auto &g : ideal.gens()) {
        best = std::max(best, g[j - 1]);
    }
    return best;
}

std::uint32_t GammaBox::extent(std::size_t j) const
{
    return inclusive_ ? bounds_[j] + 1 : std::max<Degree>(bounds_[j], 1);
}

std::uint64_t GammaBox::cardinality() const
{
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < bounds_.size(); ++j) {
        count *= extent(j);
    }
    return count;
}

bool GammaBox::contains(const Exponent &a) const
{
    if (a.size() != bounds_.size()) {
        return false;
    }
    for (std::size_t j = 0; j < bounds_.size(); ++j) {
        if (a[j] >= extent(j)) {
            return false;
        }
    }
    return true;
}

void GammaBox::for_each(const std::function<void(const Exponent &)> &visit) const
{
    const std::size_t n = bounds_.size();
    Exponent a(n);
    while (true) {
        visit(a);
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (a[j] + 1 < extent(j)) {
                ++a[j];
                break;
            }
            a[j] = 0;
            if (j == 0) {
                return;
            }
        }
        if (n == 0) {
            return;
        }
    }
}

std::vector<Exponent> GammaBox::points() const
{
    std::vector<Exponent> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for_each([&](const Exponent &a) { out.push_back(a); });
    return out;
}

GammaBox gamma_box(const MonomialIdeal &ideal)
{
    std::vector<Degree> bounds(ideal.nvars());
    for (std::size_t j = 1; j <= ideal.nvars(); ++j) {
        bounds[j - 1] = rho(ideal, j);
    }
    return GammaBox(std::move(bounds), false);
}

GammaBox generator_box(const MonomialIdeal &ideal)
{
    std::vector<Degree> bounds(ideal.nvars());
    for (std::size_t j = 1; j <= ideal.nvars(); ++j) {
        bounds[j - 1] = rho(ideal, j);
    }
    return GammaBox(std::move(bounds), true);
}

} // namespace mc
