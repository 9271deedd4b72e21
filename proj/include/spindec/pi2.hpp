#pragma once

#include "spindec/branching.hpp"
#include "spindec/context.hpp"
#include "spindec/irrep.hpp"

#include <string>
#include <variant>
#include <vector>

namespace spindec {

enum class DiscreteSign : char { plus = '+', minus = '-' };

inline DiscreteSign flip(DiscreteSign s) {
    return s == DiscreteSign::plus ? DiscreteSign::minus : DiscreteSign::plus;
}

/// Descriptor of the second tensor factor. Exactly the three families whose
/// restriction to the minimal parabolic is implemented:
///   principal:     M-label mu, continuous parameter t (nu = i t lambda_0);
///   discrete:      sign and an n-tuple a (Spin(2n,1) only);
///   complementary: integer M-label mu and real a inside the unitary window.
struct Pi2 {
    enum class Kind { principal, discrete, complementary } kind = Kind::principal;
    Weight mu;             // principal, complementary
    double t = 0.0;        // principal
    Weight a_tuple;        // discrete
    DiscreteSign sign = DiscreteSign::plus; // discrete
    double a = 0.0;        // complementary

    static Pi2 principal(Weight mu, double t);
    static Pi2 discrete(DiscreteSign sign, Weight a_tuple);
    static Pi2 complementary(Weight mu, double a);

    std::string kind_name() const;
};

/// Discrete series label of P: T_delta = Ind_{M'N}^P(F_delta (x) e^{i xi_0}),
/// delta a dominant M'-weight. The character xi_0 = (0,...,0,1) is fixed.
struct TDelta {
    Irrep delta;
};

/// Exhaustive exact check of every descriptor invariant; the returned
/// messages name the failing clause. Empty result means valid.
std::vector<std::string> validate_pi2(const GroupContext& ctx, const Pi2& d);

/// The finite multiplicity-free list of M'-labels tau_j with
/// pi_2|_P = (+)_j Ind_{M'N}^P(tau_j (x) e^{i xi_0}).
/// Throws DomainError carrying the validation messages on invalid input.
std::vector<Irrep> restrict_pi2_to_P(const GroupContext& ctx, const Pi2& d);

} // namespace spindec
