#include "mc/exponent.hpp"

#include <algorithm>
#include <bit>

#include "mc/errors.hpp"

namespace mc {

std::vector<std::size_t> members(VarSet s)
{
    std::vector<std::size_t> out;
    while (s != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)) + 1);
        s &= s - 1;
    }
    return out;
}

VarSet set_of(std::initializer_list<std::size_t> vars)
{
    VarSet s = 0;
    for (auto v : vars) {
        s |= var_bit(v);
    }
    return s;
}

int cardinality(VarSet s) { return std::popcount(s); }

void require_same_size(std::size_t lhs, std::size_t rhs, const char *where)
{
    if (lhs != rhs) {
        throw DimensionMismatch(std::string(where) + ": ambient sizes " + std::to_string(lhs)
                                + " and " + std::to_string(rhs) + " differ");
    }
}

Exponent Exponent::unit(std::size_t n, std::size_t j)
{
    Exponent e(n);
    e.coords_.at(j - 1) = 1;
    return e;
}

Exponent Exponent::squarefree(std::size_t n, VarSet f)
{
    Exponent e(n);
    for (auto v : members(f)) {
        e.coords_.at(v - 1) = 1;
    }
    return e;
}

std::uint64_t Exponent::total_degree() const noexcept
{
    std::uint64_t d = 0;
    for (auto c : coords_) {
        d += c;
    }
    return d;
}

VarSet Exponent::support() const noexcept
{
    VarSet s = 0;
    for (std::size_t i = 0; i < coords_.size() && i < kMaxVars; ++i) {
        if (coords_[i] != 0) {
            s |= VarSet{1} << i;
        }
    }
    return s;
}

bool Exponent::is_zero() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](Degree c) { return c == 0; });
}

bool Exponent::is_squarefree() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](Degree c) { return c <= 1; });
}

bool Exponent::divides(const Exponent &other) const noexcept
{
    if (coords_.size() != other.coords_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] > other.coords_[i]) {
            return false;
        }
    }
    return true;
}

Exponent lcm(const Exponent &a, const Exponent &b)
{
    require_same_size(a.size(), b.size(), "lcm");
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.coords_[i] = std::max(a.coords_[i], b.coords_[i]);
    }
    return r;
}

Exponent gcd(const Exponent &a, const Exponent &b)
{
    require_same_size(a.size(), b.size(), "gcd");
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.coords_[i] = std::min(a.coords_[i], b.coords_[i]);
    }
    return r;
}

Exponent Exponent::colon(const Exponent &other) const
{
    require_same_size(size(), other.size(), "colon");
    Exponent r(size());
    for (std::size_t i = 0; i < size(); ++i) {
        r.coords_[i] = coords_[i] - std::min(coords_[i], other.coords_[i]);
    }
    return r;
}

Exponent Exponent::operator+(const Exponent &other) const
{
    require_same_size(size(), other.size(), "exponent sum");
    Exponent r(size());
    for (std::size_t i = 0; i < size(); ++i) {
        r.coords_[i] = coords_[i] + other.coords_[i];
    }
    return r;
}

std::string Exponent::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'x' + std::to_string(i + 1);
        if (coords_[i] > 1) {
            out += '^' + std::to_string(coords_[i]);
        }
    }
    return out.empty() ? "1" : out;
}

} // namespace mc
