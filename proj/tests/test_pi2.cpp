#include "spindec/error.hpp"
#include "spindec/pi2.hpp"
#include "spindec/spectrum.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace spindec;

namespace {

bool mentions(const std::vector<std::string>& violations, const std::string& needle) {
    return std::any_of(violations.begin(), violations.end(), [&](const std::string& s) {
        return s.find(needle) != std::string::npos;
    });
}

} // namespace

TEST_CASE("validate principal descriptors") {
    const GroupContext c5 = make_context(5);
    CHECK(validate_pi2(c5, Pi2::principal(Weight::from_doubled({2, 0}), 1.5)).empty());
    CHECK(mentions(validate_pi2(c5, Pi2::principal(Weight::from_doubled({0, 2}), 0.0)),
                   "not dominant"));
    CHECK(mentions(validate_pi2(c5, Pi2::principal(Weight::from_doubled({2}), 0.0)), "rank"));
    // mu = 0, t = 0 is the spherical tempered principal series, accepted.
    CHECK(validate_pi2(c5, Pi2::principal(Weight::from_doubled({0, 0}), 0.0)).empty());
}

TEST_CASE("validate discrete descriptors") {
    const GroupContext c4 = make_context(4);
    CHECK(mentions(validate_pi2(c4, Pi2::discrete(DiscreteSign::plus,
                                                  Weight::from_doubled({0, 0, 0}))),
                   "discrete series exist only for Spin(2n,1)"));

    const GroupContext c5 = make_context(5);
    CHECK(validate_pi2(c5, Pi2::discrete(DiscreteSign::plus, Weight::from_doubled({0, 0, 0})))
              .empty());
    CHECK(validate_pi2(c5, Pi2::discrete(DiscreteSign::minus, Weight::from_doubled({3, 1, 1})))
              .empty());
    CHECK(mentions(validate_pi2(c5, Pi2::discrete(DiscreteSign::plus,
                                                  Weight::from_doubled({0, 0}))),
                   "rank"));
    CHECK(mentions(validate_pi2(c5, Pi2::discrete(DiscreteSign::plus,
                                                  Weight::from_doubled({2, 0, 4}))),
                   "decreasing"));
    CHECK(mentions(validate_pi2(c5, Pi2::discrete(DiscreteSign::plus,
                                                  Weight::from_doubled({3, 1, -1}))),
                   "limit-of-discrete-series"));
    CHECK(mentions(validate_pi2(c5, Pi2::discrete(DiscreteSign::plus,
                                                  Weight::from_doubled({2, 0, -2}))),
                   "a_n must be >= 0"));
}

TEST_CASE("validate complementary descriptors: the zero-tail clause") {
    const GroupContext c5 = make_context(5); // even spin, n = 3, |a| < 5/2
    // mu = (1,0): the tail clause applies to every j > n-|a|-1/2.
    CHECK(validate_pi2(c5, Pi2::complementary(Weight::from_doubled({2, 0}), 1.2)).empty());
    CHECK(mentions(validate_pi2(c5, Pi2::complementary(Weight::from_doubled({2, 0}), 2.4)),
                   "zero-tail"));
    CHECK(validate_pi2(c5, Pi2::complementary(Weight::from_doubled({0, 0}), 2.4)).empty());
    CHECK(mentions(validate_pi2(c5, Pi2::complementary(Weight::from_doubled({0, 0}), 2.5)),
                   "|a| <"));
    CHECK(mentions(validate_pi2(c5, Pi2::complementary(Weight::from_doubled({2, 2}), 2.4)),
                   "zero-tail"));
    CHECK(mentions(validate_pi2(c5, Pi2::complementary(Weight::from_doubled({1, 1}), 1.0)),
                   "integer-class"));

    const GroupContext c4 = make_context(4); // odd spin, n = 3, |a| < 2
    CHECK(validate_pi2(c4, Pi2::complementary(Weight::from_doubled({2, 0}), 0.5)).empty());
    CHECK(mentions(validate_pi2(c4, Pi2::complementary(Weight::from_doubled({2, 0}), 1.5)),
                   "zero-tail"));
    CHECK(validate_pi2(c4, Pi2::complementary(Weight::from_doubled({0, 0}), 1.5)).empty());
    CHECK(mentions(validate_pi2(c4, Pi2::complementary(Weight::from_doubled({0, 0}), 2.0)),
                   "|a| <"));
    CHECK(mentions(validate_pi2(c4, Pi2::complementary(Weight::from_doubled({2, -2}), 0.5)),
                   "mu_j >= 0"));
}

TEST_CASE("restriction to P: principal series") {
    const GroupContext c5 = make_context(5);
    const auto taus = restrict_pi2_to_P(c5, Pi2::principal(Weight::from_doubled({2, 0}), 0.7));
    REQUIRE(taus.size() == 2);
    CHECK(taus[0].highest_weight == Weight::from_doubled({2, 0}));
    CHECK(taus[1].highest_weight == Weight::from_doubled({0, 0}));

    const GroupContext c4 = make_context(4);
    const auto taus2 = restrict_pi2_to_P(c4, Pi2::principal(Weight::from_doubled({1, 1}), 0.0));
    REQUIRE(taus2.size() == 1);
    CHECK(taus2[0].highest_weight == Weight::from_doubled({1}));

    const GroupContext c3 = make_context(3);
    const auto taus3 = restrict_pi2_to_P(c3, Pi2::principal(Weight::from_doubled({0}), 0.0));
    REQUIRE(taus3.size() == 1);
    CHECK(taus3[0].highest_weight == Weight::from_doubled({0}));

    CHECK_THROWS_AS(restrict_pi2_to_P(c5, Pi2::principal(Weight::from_doubled({0, 2}), 0.0)),
                    DomainError);
}

TEST_CASE("restriction to P: discrete series") {
    const GroupContext c5 = make_context(5);
    const auto plus = restrict_pi2_to_P(
        c5, Pi2::discrete(DiscreteSign::plus, Weight::from_doubled({0, 0, 0})));
    REQUIRE(plus.size() == 1);
    CHECK(plus[0].highest_weight == Weight::from_doubled({2, -2})); // (1,-1)

    const auto minus = restrict_pi2_to_P(
        c5, Pi2::discrete(DiscreteSign::minus, Weight::from_doubled({0, 0, 0})));
    REQUIRE(minus.size() == 1);
    CHECK(minus[0].highest_weight == Weight::from_doubled({2, 2})); // (1,1)

    // Lowest rank: Spin(4,1), abelian M', rank-2 parameter tuples.
    const GroupContext c3 = make_context(3);
    const auto low = restrict_pi2_to_P(c3, Pi2::discrete(DiscreteSign::plus,
                                                         Weight::from_doubled({2, 0})));
    REQUIRE(low.size() == 2);
    CHECK(low[0].highest_weight == Weight::from_doubled({-2})); // -c in [a2+1, a1+1] = [1, 2]
    CHECK(low[1].highest_weight == Weight::from_doubled({-4}));

    // Flipping the sign reflects the last coordinate of every tau.
    for (const Weight& a : {Weight::from_doubled({2, 2, 0}), Weight::from_doubled({3, 1, 1}),
                           Weight::from_doubled({4, 2, 2})}) {
        auto p = restrict_pi2_to_P(c5, Pi2::discrete(DiscreteSign::plus, a));
        auto m = restrict_pi2_to_P(c5, Pi2::discrete(DiscreteSign::minus, a));
        REQUIRE(p.size() == m.size());
        auto flip_last = [](Weight w) {
            w[w.rank() - 1] = -w[w.rank() - 1];
            return w;
        };
        std::vector<Weight> pw, mw;
        for (const Irrep& i : p) pw.push_back(flip_last(i.highest_weight));
        for (const Irrep& i : m) mw.push_back(i.highest_weight);
        std::sort(pw.begin(), pw.end());
        std::sort(mw.begin(), mw.end());
        CHECK(pw == mw);
    }
}

TEST_CASE("complementary series restrict exactly like principal") {
    const GroupContext c5 = make_context(5);
    const auto comp = restrict_pi2_to_P(c5, Pi2::complementary(Weight::from_doubled({2, 0}), 1.2));
    const auto prin = restrict_pi2_to_P(c5, Pi2::principal(Weight::from_doubled({2, 0}), 0.3));
    CHECK(comp == prin);
}

TEST_CASE("restriction output is dominant, uniform parity, multiplicity free") {
    for (int m : {3, 4, 5, 6, 7}) {
        const GroupContext ctx = make_context(m);
        for (const Weight& mu : testing::dominant_labels(ctx.rs_M, HalfInt(2))) {
            const auto taus = restrict_pi2_to_P(ctx, Pi2::principal(mu, 0.0));
            CHECK(!taus.empty());
            std::set<Weight> seen;
            for (const Irrep& tau : taus) {
                CHECK(tau.rs == ctx.rs_Mprime);
                CHECK(seen.insert(tau.highest_weight).second);
                CHECK((tau.highest_weight[0] - mu[0]).is_integer());
            }
        }
    }
}

TEST_CASE("branching/membership duality") {
    // tau appears in the restriction of a principal series iff in_C holds,
    // and of a discrete series iff in_D0 holds: the same inequalities read
    // in two directions.
    const GroupContext c5 = make_context(5);
    for (const Weight& mu : testing::dominant_labels(c5.rs_M, HalfInt(2))) {
        const auto taus = restrict_pi2_to_P(c5, Pi2::principal(mu, 0.0));
        std::set<Weight> in_restriction;
        for (const Irrep& tau : taus) in_restriction.insert(tau.highest_weight);
        for (const Weight& delta : testing::dominant_labels(c5.rs_Mprime, HalfInt(3)))
            CHECK(in_C(c5, delta, mu) == (in_restriction.count(delta) == 1));
    }
    for (const Weight& a : {Weight::from_doubled({0, 0, 0}), Weight::from_doubled({2, 2, 0}),
                           Weight::from_doubled({3, 1, 1})}) {
        for (DiscreteSign s : {DiscreteSign::plus, DiscreteSign::minus}) {
            const auto taus = restrict_pi2_to_P(c5, Pi2::discrete(s, a));
            std::set<Weight> in_restriction;
            for (const Irrep& tau : taus) in_restriction.insert(tau.highest_weight);
            for (const Weight& delta : testing::dominant_labels(c5.rs_Mprime, HalfInt(3)))
                CHECK(in_D0(c5, delta, a, s) == (in_restriction.count(delta) == 1));
        }
    }
}
