#pragma once

#include "spindec/weight.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spindec {

enum class Family : char { B = 'B', D = 'D' };

/// Root system of type B_k or D_k in the orthonormal ε-basis.
/// D_1 (so(2)) is the degenerate abelian case: no positive roots, trivial
/// Weyl group, every weight dominant.
struct RootSystem {
    Family family = Family::B;
    int rank = 1;

    auto operator<=>(const RootSystem&) const = default;

    bool is_abelian() const { return family == Family::D && rank == 1; }
    std::string to_string() const;
};

inline RootSystem B(int rank) { return {Family::B, rank}; }
inline RootSystem D(int rank) { return {Family::D, rank}; }

/// Positive roots: B_k -> {e_i ± e_j (i<j), e_i}; D_k -> {e_i ± e_j (i<j)}.
std::vector<Weight> positive_roots(const RootSystem& rs);

/// Half the sum of positive roots: B_k -> (k-1/2,...,1/2); D_k -> (k-1,...,0).
Weight rho(const RootSystem& rs);

/// |W|: 2^k k! for B_k, 2^{k-1} k! for D_k.
std::uint64_t weyl_order(const RootSystem& rs);

/// B: w1 >= ... >= wk >= 0.  D: w1 >= ... >= w_{k-1} >= |wk| (no condition
/// for D_1).
bool is_dominant(const RootSystem& rs, const Weight& w);

/// Nonnegative-integer simple-root coordinates of xi, or nullopt when xi is
/// outside the positive root cone (includes non-integral coordinates and,
/// for D, odd coordinate sum). The coefficient sum is the height.
std::optional<std::vector<std::int64_t>> cone_coordinates(const RootSystem& rs, const Weight& xi);

/// Height of xi over the simple roots; negative result means "not in cone".
/// Cheap necessary-condition filter used before partition counting.
bool in_root_cone_prefilter(const RootSystem& rs, const Weight& xi);

/// All dominant weights of the given parity class with first coordinate at
/// most max_first (for abelian D_1: |coordinate| <= max_first). Descending
/// coordinate order; empty when the class has no element below the bound.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, HalfInt max_first, Parity cls);

} // namespace spindec
