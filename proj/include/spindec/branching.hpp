#pragma once

#include "spindec/context.hpp"
#include "spindec/irrep.hpp"

#include <vector>

namespace spindec {

/// Interlacing branching Spin(k) -> Spin(k-1), multiplicity free.
///
/// From B_r (Spin(2r+1)) down to D_r (Spin(2r)): all beta of length r with
///   s1 >= b1 >= s2 >= ... >= s_{r-1} >= b_{r-1} >= s_r >= |b_r|,
/// beta in sigma's parity class.
///
/// From D_r (Spin(2r)) down to B_{r-1} (Spin(2r-1)): all beta of length r-1
/// with
///   s1 >= b1 >= s2 >= ... >= s_{r-1} >= b_{r-1} >= |s_r|,
/// beta in sigma's parity class.
std::vector<Irrep> spin_restriction(const Irrep& sigma);

/// The set B of M'-labels appearing in sigma|_{M'}, sigma an M-label.
std::vector<Irrep> branch_M_to_Mprime(const GroupContext& ctx, const Irrep& sigma);

} // namespace spindec
