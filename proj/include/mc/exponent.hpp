#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mc {

using Degree = std::uint32_t;

/// Subsets of [n] are bitmasks; bit k-1 stands for vertex/variable k.
using VarSet = std::uint32_t;

inline constexpr std::size_t kMaxVars = 32;

inline constexpr VarSet var_bit(std::size_t var) { return VarSet{1} << (var - 1); }

inline constexpr VarSet full_set(std::size_t n)
{
    return n >= 32 ? ~VarSet{0} : (VarSet{1} << n) - 1;
}

/// 1-based indices of the members of a set, ascending.
std::vector<std::size_t> members(VarSet s);

VarSet set_of(std::initializer_list<std::size_t> vars);

int cardinality(VarSet s);

/// A point of N^n, the exponent vector of the monomial x^a.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::size_t n) : coords_(n, 0) {}
    Exponent(std::initializer_list<Degree> coords) : coords_(coords) {}
    explicit Exponent(std::vector<Degree> coords) : coords_(std::move(coords)) {}

    /// Unit exponent e_j, 1-based.
    static Exponent unit(std::size_t n, std::size_t j);

    /// Squarefree exponent x_F.
    static Exponent squarefree(std::size_t n, VarSet f);

    std::size_t size() const noexcept { return coords_.size(); }

    /// 0-based coordinate access.
    Degree operator[](std::size_t i) const { return coords_[i]; }
    Degree &operator[](std::size_t i) { return coords_[i]; }

    std::span<const Degree> coords() const noexcept { return coords_; }

    std::uint64_t total_degree() const noexcept;
    VarSet support() const noexcept;
    bool is_zero() const noexcept;
    bool is_squarefree() const noexcept;

    /// Componentwise <=, i.e. x^this divides x^other.
    bool divides(const Exponent &other) const noexcept;

    friend Exponent lcm(const Exponent &a, const Exponent &b);
    friend Exponent gcd(const Exponent &a, const Exponent &b);

    /// this - min(this, other), the exponent of x^this / gcd(x^this, x^other).
    Exponent colon(const Exponent &other) const;

    Exponent operator+(const Exponent &other) const;

    friend auto operator<=>(const Exponent &, const Exponent &) = default;
    friend bool operator==(const Exponent &, const Exponent &) = default;

    /// "x1*x2^3" style; "1" for the zero exponent.
    std::string to_string() const;

private:
    std::vector<Degree> coords_;
};

/// Throws DimensionMismatch unless the sizes agree.
void require_same_size(std::size_t lhs, std::size_t rhs, const char *where);

} // namespace mc
