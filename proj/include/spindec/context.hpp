#pragma once

#include "spindec/half_int.hpp"
#include "spindec/root_system.hpp"

namespace spindec {

/// Derived structure constants of G = Spin(m+1,1): M = Spin(m) and
/// M' = Spin(m-1) with their root systems, and rho' = (m/2) lambda_0.
/// even_spin means G = Spin(2n,1), i.e. m odd.
struct GroupContext {
    int m = 3;
    bool even_spin = true;
    int n = 2;
    RootSystem rs_M{Family::B, 1};
    RootSystem rs_Mprime{Family::D, 1};
    HalfInt rho_prime;
};

/// Requires m >= 3. m odd: n = (m+1)/2, M on B_{n-1}, M' on D_{n-1}.
/// m even: n = (m+2)/2, M on D_{n-1}, M' on B_{n-2}.
GroupContext make_context(int m);

} // namespace spindec
