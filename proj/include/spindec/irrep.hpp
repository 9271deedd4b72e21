#pragma once

#include "spindec/root_system.hpp"
#include "spindec/weight.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace spindec {

inline constexpr std::int64_t kDefaultDimCap = 1'000'000;

/// Label of a finite-dimensional irreducible representation of Spin(k):
/// a root system together with a dominant highest weight of uniform parity.
struct Irrep {
    RootSystem rs;
    Weight highest_weight;

    Irrep(RootSystem rs_, Weight hw); // validates dominance and parity

    Parity parity() const { return highest_weight.parity(); }
    bool is_trivial() const;
    std::string to_string() const;

    auto operator<=>(const Irrep&) const = default;
};

/// Weyl dimension formula, evaluated exactly.
std::int64_t weyl_dimension(const Irrep& L);

/// Weight -> multiplicity for the full (Weyl-invariant) weight system.
/// std::map keys give the deterministic iteration order downstream code
/// relies on.
using WeightMultiset = std::map<Weight, std::int64_t>;

/// Freudenthal recursion over the dominant weights, expanded to the full
/// orbit. Total mass equals weyl_dimension(L); throws ResourceError when the
/// dimension exceeds dim_cap.
WeightMultiset weight_multiplicities(const Irrep& L, std::int64_t dim_cap = kDefaultDimCap);

/// Brauer-Klimyk tensor product decomposition: for every weight mu of
/// F_beta, fold gamma.hw + mu + rho and accumulate signed multiplicities.
/// This is the oracle of record against the partition-function route.
std::map<Irrep, std::int64_t> klimyk_tensor(const Irrep& beta, const Irrep& gamma,
                                            std::int64_t dim_cap = kDefaultDimCap);

} // namespace spindec
