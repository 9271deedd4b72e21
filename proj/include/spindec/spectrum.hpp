#pragma once

#include "spindec/context.hpp"
#include "spindec/irrep.hpp"
#include "spindec/pi2.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spindec {

/// Does the discrete series with parameter tuple a and the given sign
/// contain T_delta in its P-restriction? Chain (with the inner sign
/// opposite to `sign`):
///   a_1+1 >= b_1 >= a_2+1 >= ... >= b_{n-2} >= a_{n-1}+1 >= -/+b_{n-1} >= a_n+1
/// plus b_i - a_1 in Z. Spin(2n,1) only.
bool in_D0(const GroupContext& ctx, const Weight& delta, const Weight& a, DiscreteSign sign);

/// Does the unitary principal series with M-label phi contain T_delta?
/// Spin(2n,1): phi_1 >= b_1 >= phi_2 >= ... >= phi_{n-1} >= |b_{n-1}|;
/// Spin(2n-1,1): phi_1 >= b_1 >= ... >= phi_{n-2} >= b_{n-2} >= |phi_{n-1}|;
/// plus b_i - phi_1 in Z.
bool in_C(const GroupContext& ctx, const Weight& delta, const Weight& phi);

/// Discrete spectrum of Ind_P^G(T_delta) truncated at a_1 <= cutoff:
/// ascending lexicographic (a, sign) with '+' before '-'. Complete below
/// the cutoff. Spin(2n,1) only.
std::vector<std::pair<Weight, DiscreteSign>> enumerate_discrete(const GroupContext& ctx,
                                                                const Weight& delta,
                                                                HalfInt cutoff);

/// Principal-series M-labels phi with in_C and phi_1 <= cutoff, ascending
/// lexicographic. Complete below the cutoff.
std::vector<Weight> enumerate_continuous(const GroupContext& ctx, const Weight& delta,
                                         HalfInt cutoff);

enum class DensityKind { tanh, coth, flat };

/// Convention for the even-spin polynomial root constants, which exist in
/// two forms offset by a unit shift. `proposition` is the production form;
/// `theorem` is kept selectable for side-by-side inspection.
enum class DensityVariant { proposition, theorem };

/// Symbolic Plancherel density attached to the fiber family {phi, t > 0}:
///   density(t) = factor(t*pi) * prefactor * dim(phi) * t^t_power
///                * prod_i (t^2 + r_i^2)
/// with factor = tanh, coth or 1. The prefactor is the exact rational
/// rational_num/rational_den times pi^{-n} (the half-integral gamma factor
/// of the odd-spin case folds into the rational).
struct PlancherelDensity {
    DensityKind kind = DensityKind::flat;
    int n = 2;
    std::int64_t phi_dim = 1;
    std::vector<HalfInt> roots;
    int t_power = 0;
    std::int64_t rational_num = 1;
    std::int64_t rational_den = 1;

    std::string kind_name() const;
};

/// Closed form of d nu_phi for the principal series fiber at M-label phi.
PlancherelDensity plancherel_density(const GroupContext& ctx, const Weight& phi,
                                     DensityVariant variant = DensityVariant::proposition);

/// Numeric evaluation; t <= 0 is a domain error for the coth kind (pole).
double density_eval(const PlancherelDensity& d, double t);

/// Symbolic view of the spectrum of one induced block Ind_P^G(T_delta): the
/// infinite constituent sets are exposed as membership predicates plus
/// cutoff-bounded materialization. The discrete part is empty whenever the
/// group is Spin(2n-1,1).
struct SpectrumDescription {
    GroupContext ctx;
    TDelta block;

    bool contains_discrete(const Weight& a, DiscreteSign sign) const {
        return in_D0(ctx, block.delta.highest_weight, a, sign);
    }
    bool contains_principal(const Weight& phi) const {
        return in_C(ctx, block.delta.highest_weight, phi);
    }
    std::vector<std::pair<Weight, DiscreteSign>> discrete_below(HalfInt cutoff) const {
        return enumerate_discrete(ctx, block.delta.highest_weight, cutoff);
    }
    std::vector<Weight> continuous_below(HalfInt cutoff) const {
        return enumerate_continuous(ctx, block.delta.highest_weight, cutoff);
    }
};

} // namespace spindec
