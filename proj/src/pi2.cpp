#include "spindec/pi2.hpp"

#include "spindec/error.hpp"

#include <cmath>

namespace spindec {

Pi2 Pi2::principal(Weight mu, double t) {
    Pi2 d;
    d.kind = Kind::principal;
    d.mu = std::move(mu);
    d.t = t;
    return d;
}

Pi2 Pi2::discrete(DiscreteSign sign, Weight a_tuple) {
    Pi2 d;
    d.kind = Kind::discrete;
    d.sign = sign;
    d.a_tuple = std::move(a_tuple);
    return d;
}

Pi2 Pi2::complementary(Weight mu, double a) {
    Pi2 d;
    d.kind = Kind::complementary;
    d.mu = std::move(mu);
    d.a = a;
    return d;
}

std::string Pi2::kind_name() const {
    switch (kind) {
    case Kind::principal: return "principal";
    case Kind::discrete: return "discrete";
    case Kind::complementary: return "complementary";
    }
    return "?";
}

namespace {

void check_m_label(const GroupContext& ctx, const Weight& mu, std::vector<std::string>& v) {
    if (static_cast<int>(mu.rank()) != ctx.rs_M.rank) {
        v.push_back("mu has rank " + std::to_string(mu.rank()) + ", expected " +
                    std::to_string(ctx.rs_M.rank) + " for " + ctx.rs_M.to_string());
        return;
    }
    if (!mu.uniform_parity()) v.push_back("mu mixes integer and half-integer coordinates");
    else if (!is_dominant(ctx.rs_M, mu)) v.push_back("mu not dominant on " + ctx.rs_M.to_string());
}

} // namespace

std::vector<std::string> validate_pi2(const GroupContext& ctx, const Pi2& d) {
    std::vector<std::string> v;
    switch (d.kind) {
    case Pi2::Kind::principal:
        check_m_label(ctx, d.mu, v);
        if (!std::isfinite(d.t)) v.push_back("principal parameter t must be finite");
        break;

    case Pi2::Kind::discrete: {
        if (!ctx.even_spin) {
            v.push_back("discrete series exist only for Spin(2n,1)");
            break;
        }
        const Weight& a = d.a_tuple;
        if (static_cast<int>(a.rank()) != ctx.n) {
            v.push_back("discrete parameter a has rank " + std::to_string(a.rank()) +
                        ", expected n = " + std::to_string(ctx.n));
            break;
        }
        if (!a.uniform_parity()) v.push_back("a mixes integer and half-integer coordinates");
        for (std::size_t i = 0; i + 1 < a.rank(); ++i)
            if (a[i] < a[i + 1]) {
                v.push_back("a not weakly decreasing");
                break;
            }
        if (a[a.rank() - 1] == HalfInt::from_doubled(-1))
            v.push_back("a_n = -1/2 is a limit-of-discrete-series boundary, not supported");
        else if (a[a.rank() - 1] < HalfInt(0))
            v.push_back("a_n must be >= 0");
        break;
    }

    case Pi2::Kind::complementary: {
        check_m_label(ctx, d.mu, v);
        if (!v.empty()) break;
        if (d.mu.parity() != Parity::integral)
            v.push_back("complementary series require an integer-class mu");
        for (std::size_t i = 0; i < d.mu.rank(); ++i)
            if (d.mu[i] < HalfInt(0)) {
                v.push_back("complementary series require mu_j >= 0");
                break;
            }
        if (!std::isfinite(d.a)) {
            v.push_back("complementary parameter a must be finite");
            break;
        }
        const double bound = ctx.even_spin ? ctx.n - 0.5 : ctx.n - 1.0;
        if (!(std::abs(d.a) < bound))
            v.push_back("complementary parameter needs |a| < " +
                        (ctx.even_spin ? std::to_string(2 * ctx.n - 1) + "/2"
                                       : std::to_string(ctx.n - 1)));
        // Zero tail: mu_j = 0 for every j with n - |a| - K < j <= n-1,
        // K = 1/2 for Spin(2n,1) and 1 for Spin(2n-1,1).
        const double threshold = ctx.n - std::abs(d.a) - (ctx.even_spin ? 0.5 : 1.0);
        for (int j = 1; j <= ctx.n - 1; ++j) {
            if (j > threshold && !d.mu[j - 1].is_zero()) {
                v.push_back("zero-tail clause: mu_" + std::to_string(j) + " = " +
                            d.mu[j - 1].to_string() + " != 0 while " + std::to_string(j) +
                            " > n-|a|-" + (ctx.even_spin ? "1/2" : "1"));
            }
        }
        break;
    }
    }
    return v;
}

namespace {

void boxes_descend(const RootSystem& target, const std::vector<HalfInt>& lo,
                   const std::vector<HalfInt>& hi, std::size_t pos, std::vector<HalfInt>& cur,
                   std::vector<Irrep>& out) {
    if (pos == lo.size()) {
        out.emplace_back(target, Weight(cur));
        return;
    }
    for (HalfInt v = hi[pos]; !(v < lo[pos]); v -= HalfInt(1)) {
        cur[pos] = v;
        boxes_descend(target, lo, hi, pos + 1, cur, out);
    }
}

std::vector<Irrep> restrict_discrete(const GroupContext& ctx, const Weight& a, DiscreteSign s) {
    // Chain: a_1+1 >= c_1 >= a_2+1 >= ... >= c_{n-2} >= a_{n-1}+1
    //        >= (-/+ c_{n-1}) >= a_n+1, the inner sign opposite to s.
    const int n = ctx.n;
    const HalfInt one(1);
    std::vector<HalfInt> lo, hi;
    for (int i = 1; i <= n - 2; ++i) {
        hi.push_back(a[i - 1] + one);
        lo.push_back(a[i] + one);
    }
    if (s == DiscreteSign::plus) {
        // -c_{n-1} in [a_n+1, a_{n-1}+1]
        hi.push_back(-(a[n - 1] + one));
        lo.push_back(-(a[n - 2] + one));
    } else {
        hi.push_back(a[n - 2] + one);
        lo.push_back(a[n - 1] + one);
    }
    std::vector<Irrep> out;
    std::vector<HalfInt> cur(lo.size());
    boxes_descend(ctx.rs_Mprime, lo, hi, 0, cur, out);
    return out;
}

} // namespace

std::vector<Irrep> restrict_pi2_to_P(const GroupContext& ctx, const Pi2& d) {
    const std::vector<std::string> violations = validate_pi2(ctx, d);
    if (!violations.empty()) {
        std::string msg = "invalid pi2 descriptor (" + d.kind_name() + "):";
        for (const std::string& s : violations) msg += " " + s + ";";
        throw DomainError(msg);
    }
    if (d.kind == Pi2::Kind::discrete) return restrict_discrete(ctx, d.a_tuple, d.sign);
    return spin_restriction(Irrep(ctx.rs_M, d.mu));
}

} // namespace spindec
