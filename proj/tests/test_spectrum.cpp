#include "spindec/error.hpp"
#include "spindec/spectrum.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace spindec;

TEST_CASE("membership predicates: worked cases") {
    const GroupContext c5 = make_context(5);
    const Weight d1m1 = Weight::from_doubled({2, -2}); // (1,-1)
    const Weight zeros3 = Weight::from_doubled({0, 0, 0});
    CHECK(in_D0(c5, d1m1, zeros3, DiscreteSign::plus));
    CHECK_FALSE(in_D0(c5, d1m1, zeros3, DiscreteSign::minus));
    CHECK_FALSE(in_D0(c5, Weight::from_doubled({1, 1}), zeros3, DiscreteSign::plus)); // parity

    CHECK(in_C(c5, Weight::from_doubled({2, 0}), Weight::from_doubled({2, 0})));
    CHECK_FALSE(in_C(c5, Weight::from_doubled({2, 0}), Weight::from_doubled({0, 0})));

    const GroupContext c4 = make_context(4);
    CHECK(in_C(c4, Weight::from_doubled({1}), Weight::from_doubled({1, -1})));
    CHECK_THROWS_AS(in_D0(c4, Weight::from_doubled({1}), zeros3, DiscreteSign::plus), DomainError);
    CHECK_THROWS_AS(in_C(c5, Weight::from_doubled({2, 0}), Weight::from_doubled({2})),
                    DomainError);
}

TEST_CASE("discrete enumeration: worked cases and lower bound") {
    const GroupContext c5 = make_context(5);
    const Weight d1m1 = Weight::from_doubled({2, -2});

    const auto at0 = enumerate_discrete(c5, d1m1, HalfInt(0));
    REQUIRE(at0.size() == 1);
    CHECK(at0[0].first == Weight::from_doubled({0, 0, 0}));
    CHECK(at0[0].second == DiscreteSign::plus);

    CHECK(enumerate_discrete(c5, d1m1, HalfInt(-1)).empty()); // cnd1 forces a_1 >= b_1 - 1

    const auto lo = enumerate_discrete(c5, d1m1, HalfInt(1));
    const auto hi = enumerate_discrete(c5, d1m1, HalfInt(3));
    CHECK(lo.size() < hi.size());
    // Truncations nest.
    for (std::size_t i = 0; i < lo.size(); ++i) CHECK(lo[i] == hi[i]);

    CHECK_THROWS_AS(enumerate_discrete(make_context(4), Weight::from_doubled({1}), HalfInt(2)),
                    DomainError);
}

TEST_CASE("continuous enumeration: worked cases") {
    const GroupContext c5 = make_context(5);
    const auto z = enumerate_continuous(c5, Weight::from_doubled({0, 0}), HalfInt(0));
    REQUIRE(z.size() == 1);
    CHECK(z[0] == Weight::from_doubled({0, 0}));

    const auto v = enumerate_continuous(c5, Weight::from_doubled({2, 0}), HalfInt(1));
    REQUIRE(v.size() == 2);
    CHECK(v[0] == Weight::from_doubled({2, 0}));
    CHECK(v[1] == Weight::from_doubled({2, 2}));

    const GroupContext c4 = make_context(4);
    const auto w = enumerate_continuous(c4, Weight::from_doubled({1}), HalfInt::from_doubled(1));
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Weight::from_doubled({1, -1}));
    CHECK(w[1] == Weight::from_doubled({1, 1}));
}

TEST_CASE("enumerators are complete below the cutoff") {
    const HalfInt cutoff(3);
    for (int m : {3, 4, 5, 6, 7}) {
        const GroupContext ctx = make_context(m);
        for (const Weight& delta : testing::dominant_labels(ctx.rs_Mprime, HalfInt(1))) {
            // Brute scan: all tuples (both parity classes) below the cutoff,
            // dominance for phi, discrete chains for a, filtered by the
            // predicates.
            std::vector<Weight> brute_phi;
            for (Parity cls : {Parity::integral, Parity::half_integral})
                for (const Weight& phi : testing::all_tuples(ctx.rs_M.rank, cutoff, cls))
                    if (is_dominant(ctx.rs_M, phi) && !(cutoff < phi[0]) && in_C(ctx, delta, phi))
                        brute_phi.push_back(phi);
            std::sort(brute_phi.begin(), brute_phi.end());
            auto got_phi = enumerate_continuous(ctx, delta, cutoff);
            std::sort(got_phi.begin(), got_phi.end());
            CHECK(got_phi == brute_phi);

            if (!ctx.even_spin) continue;
            std::vector<std::pair<Weight, DiscreteSign>> brute_a;
            for (Parity cls : {Parity::integral, Parity::half_integral})
                for (const Weight& a : testing::all_tuples(ctx.n, cutoff, cls)) {
                    bool chain = true;
                    for (std::size_t i = 0; i + 1 < a.rank(); ++i)
                        chain = chain && !(a[i] < a[i + 1]);
                    if (!chain || a[a.rank() - 1] < HalfInt(0) || cutoff < a[0]) continue;
                    for (DiscreteSign s : {DiscreteSign::plus, DiscreteSign::minus})
                        if (in_D0(ctx, delta, a, s)) brute_a.emplace_back(a, s);
                }
            auto key = [](const std::pair<Weight, DiscreteSign>& x) {
                return std::make_pair(x.first, x.second == DiscreteSign::minus);
            };
            std::sort(brute_a.begin(), brute_a.end(),
                      [&](const auto& x, const auto& y) { return key(x) < key(y); });
            const auto got_a = enumerate_discrete(ctx, delta, cutoff);
            CHECK(got_a == brute_a);
        }
    }
}

TEST_CASE("spectrum description binds predicates and enumerators to a block") {
    const GroupContext c5 = make_context(5);
    const SpectrumDescription spec{c5, TDelta{Irrep(c5.rs_Mprime, Weight::from_doubled({2, -2}))}};
    CHECK(spec.contains_discrete(Weight::from_doubled({0, 0, 0}), DiscreteSign::plus));
    CHECK_FALSE(spec.contains_discrete(Weight::from_doubled({0, 0, 0}), DiscreteSign::minus));
    CHECK(spec.contains_principal(Weight::from_doubled({2, 2})));
    CHECK(spec.discrete_below(HalfInt(0)).size() == 1);
    CHECK(spec.continuous_below(HalfInt(1)) ==
          enumerate_continuous(c5, Weight::from_doubled({2, -2}), HalfInt(1)));

    // The odd-spin description has no discrete part at all.
    const GroupContext c4 = make_context(4);
    const SpectrumDescription odd{c4, TDelta{Irrep(c4.rs_Mprime, Weight::from_doubled({2}))}};
    CHECK_THROWS_AS(odd.discrete_below(HalfInt(2)), DomainError);
    CHECK_FALSE(odd.continuous_below(HalfInt(2)).empty());

    // Lower bound: the continuous set is empty below b_1 (here via parity,
    // since phi_1 >= b_1 = 1 has no integer solution <= 1/2).
    CHECK(enumerate_continuous(c5, Weight::from_doubled({2, 0}), HalfInt::from_doubled(1)).empty());
}

TEST_CASE("density shapes follow the parity class and the family") {
    const GroupContext c5 = make_context(5);
    const PlancherelDensity even_int = plancherel_density(c5, Weight::from_doubled({0, 0}));
    CHECK(even_int.kind == DensityKind::tanh);
    CHECK(even_int.phi_dim == 1);
    CHECK(even_int.t_power == 1);
    REQUIRE(even_int.roots.size() == 2);
    CHECK(even_int.roots[0] == HalfInt::from_doubled(3)); // 3/2
    CHECK(even_int.roots[1] == HalfInt::from_doubled(1)); // 1/2
    CHECK(even_int.rational_num == 1);
    CHECK(even_int.rational_den == 2); // Gamma(3)

    const PlancherelDensity even_half = plancherel_density(c5, Weight::from_doubled({1, 1}));
    CHECK(even_half.kind == DensityKind::coth);

    const GroupContext c4 = make_context(4);
    const PlancherelDensity flat = plancherel_density(c4, Weight::from_doubled({0, 0}));
    CHECK(flat.kind == DensityKind::flat);
    CHECK(flat.t_power == 0);
    REQUIRE(flat.roots.size() == 2);
    CHECK(flat.roots[0] == HalfInt(1));
    CHECK(flat.roots[1] == HalfInt(0));
    // 4^2 2! / 4! = 4/3
    CHECK(flat.rational_num == 4);
    CHECK(flat.rational_den == 3);

    // The theorem variant shifts only the even-spin roots, by one.
    const PlancherelDensity thm = plancherel_density(c5, Weight::from_doubled({0, 0}),
                                                     DensityVariant::theorem);
    CHECK(thm.roots[0] == HalfInt::from_doubled(5));
    CHECK(thm.roots[1] == HalfInt::from_doubled(3));
    const PlancherelDensity thm_flat =
        plancherel_density(c4, Weight::from_doubled({0, 0}), DensityVariant::theorem);
    CHECK(thm_flat.roots == flat.roots);
}

TEST_CASE("density evaluation") {
    const GroupContext c5 = make_context(5);
    const GroupContext c4 = make_context(4);
    const double pi = std::numbers::pi;

    const PlancherelDensity tanh_d = plancherel_density(c5, Weight::from_doubled({0, 0}));
    CHECK(density_eval(tanh_d, 0.0) == 0.0);
    const double expected1 = std::tanh(pi) * (1.0 + 9.0 / 4) * (1.0 + 1.0 / 4) / (pi * pi * pi * 2);
    CHECK(density_eval(tanh_d, 1.0) == doctest::Approx(expected1).epsilon(1e-13));

    const PlancherelDensity flat = plancherel_density(c4, Weight::from_doubled({0, 0}));
    // 2/(pi^{5/2} Gamma(5/2)) = 8/(3 pi^3), frozen from a 50-digit evaluation.
    CHECK(density_eval(flat, 1.0) ==
          doctest::Approx(0.086004091821865304491792140502836502914835563059942).epsilon(1e-13));

    const PlancherelDensity coth_d = plancherel_density(c5, Weight::from_doubled({1, 1}));
    CHECK_THROWS_AS(density_eval(coth_d, 0.0), DomainError);
    CHECK_THROWS_AS(density_eval(coth_d, -1.0), DomainError);
    CHECK(density_eval(coth_d, 0.001) > 0.0);
    // coth(pi/2) * (1/2) * 4 / (2 pi^3) * (1/4+4)(1/4+1), frozen at 50 digits.
    CHECK(density_eval(coth_d, 0.5) ==
          doctest::Approx(0.18681332425732367290396947683626440597721411841614).epsilon(1e-13));

    // Large-t asymptotics: density / leading monomial -> rational/pi^n.
    for (const PlancherelDensity& d : {tanh_d, coth_d, flat}) {
        const double t = 2000.0;
        double monomial = d.phi_dim * (d.t_power == 1 ? t : 1.0);
        for (std::size_t i = 0; i < d.roots.size(); ++i) monomial *= t * t;
        const double limit = static_cast<double>(d.rational_num) / d.rational_den *
                             std::pow(pi, -d.n);
        CHECK(density_eval(d, t) / monomial == doctest::Approx(limit).epsilon(1e-5));
    }

    // Positivity on a grid.
    for (double t : {0.001, 0.1, 0.7, 1.0, 3.5, 10.0, 1000.0}) {
        CHECK(density_eval(tanh_d, t) > 0.0);
        CHECK(density_eval(coth_d, t) > 0.0);
        CHECK(density_eval(flat, t) > 0.0);
    }
}
