#pragma once

#include "spindec/half_int.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace spindec {

/// Parity class of a weight: all coordinates integers, all half-integers
/// (odd doubled values), or neither. Genuine spin representations are the
/// half-integral class.
enum class Parity { integral, half_integral, mixed };

/// Exact coordinate tuple in the ε-basis. Carries no root-system information;
/// dominance and parity constraints are enforced where labels are formed.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<HalfInt> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<HalfInt> coords) : coords_(coords) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<HalfInt>(rank, HalfInt(0))); }
    /// Builds a weight from doubled coordinates, e.g. {3, 1} -> (3/2, 1/2).
    static Weight from_doubled(std::vector<std::int64_t> doubled);

    std::size_t rank() const { return coords_.size(); }
    HalfInt operator[](std::size_t i) const { return coords_[i]; }
    HalfInt& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<HalfInt>& coords() const { return coords_; }

    Parity parity() const;
    bool uniform_parity() const { return parity() != Parity::mixed; }
    /// True when every coordinate is an integer (doubled values all even).
    bool all_integral() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;

    auto operator<=>(const Weight&) const = default;

    std::string to_string() const;

private:
    std::vector<HalfInt> coords_;
};

/// Parity class of a sum without forming it; mixed if either side is mixed.
Parity sum_parity(Parity a, Parity b);

/// 4<x,y> under the standard inner product: exact integer.
std::int64_t ip4(const Weight& x, const Weight& y);

} // namespace spindec

template <> struct std::hash<spindec::Weight> {
    std::size_t operator()(const spindec::Weight& w) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ w.rank();
        for (std::size_t i = 0; i < w.rank(); ++i)
            h = h * 1099511628211ull + static_cast<std::size_t>(w[i].doubled());
        return h;
    }
};
