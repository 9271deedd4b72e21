#include "spindec/spectrum.hpp"

#include "spindec/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace spindec {

namespace {

void require_delta(const GroupContext& ctx, const Weight& delta) {
    if (static_cast<int>(delta.rank()) != ctx.rs_Mprime.rank)
        throw DomainError("delta has rank " + std::to_string(delta.rank()) + ", expected " +
                          std::to_string(ctx.rs_Mprime.rank));
}

bool parity_linked(const Weight& delta, HalfInt anchor) {
    for (std::size_t i = 0; i < delta.rank(); ++i)
        if (!(delta[i] - anchor).is_integer()) return false;
    return true;
}

bool leq(HalfInt a, HalfInt b) { return !(b < a); }

} // namespace

bool in_D0(const GroupContext& ctx, const Weight& delta, const Weight& a, DiscreteSign sign) {
    if (!ctx.even_spin) throw DomainError("in_D0: no discrete series for Spin(2n-1,1)");
    require_delta(ctx, delta);
    const int n = ctx.n;
    if (static_cast<int>(a.rank()) != n)
        throw DomainError("in_D0: a has rank " + std::to_string(a.rank()) + ", expected n = " +
                          std::to_string(n));
    if (!parity_linked(delta, a[0])) return false;

    const HalfInt one(1);
    for (int i = 1; i <= n - 2; ++i) {
        // a_i + 1 >= b_i >= a_{i+1} + 1
        if (!leq(delta[i - 1], a[i - 1] + one)) return false;
        if (!leq(a[i] + one, delta[i - 1])) return false;
    }
    const HalfInt inner = sign == DiscreteSign::plus ? -delta[n - 2] : delta[n - 2];
    return leq(inner, a[n - 2] + one) && leq(a[n - 1] + one, inner);
}

bool in_C(const GroupContext& ctx, const Weight& delta, const Weight& phi) {
    require_delta(ctx, delta);
    const int n = ctx.n;
    if (static_cast<int>(phi.rank()) != ctx.rs_M.rank)
        throw DomainError("in_C: phi has rank " + std::to_string(phi.rank()) + ", expected " +
                          std::to_string(ctx.rs_M.rank));
    if (!parity_linked(delta, phi[0])) return false;

    if (ctx.even_spin) {
        // phi_1 >= b_1 >= phi_2 >= ... >= phi_{n-1} >= |b_{n-1}|
        for (int i = 1; i <= n - 2; ++i) {
            if (!leq(delta[i - 1], phi[i - 1])) return false;
            if (!leq(phi[i], delta[i - 1])) return false;
        }
        return leq(delta[n - 2].abs(), phi[n - 2]);
    }
    // phi_1 >= b_1 >= ... >= phi_{n-2} >= b_{n-2} >= |phi_{n-1}|
    for (int i = 1; i <= n - 2; ++i) {
        if (!leq(delta[i - 1], phi[i - 1])) return false;
        if (i <= n - 3 && !leq(phi[i], delta[i - 1])) return false;
    }
    return leq(phi[n - 2].abs(), delta[n - 3]);
}

namespace {

// Ascending odometer over inclusive boxes; steps of 1 keep the parity class
// of the box ends.
void ascend(const std::vector<HalfInt>& lo, const std::vector<HalfInt>& hi, std::size_t pos,
            std::vector<HalfInt>& cur, std::vector<Weight>& out) {
    if (pos == lo.size()) {
        out.emplace_back(cur);
        return;
    }
    for (HalfInt v = lo[pos]; leq(v, hi[pos]); v += HalfInt(1)) {
        cur[pos] = v;
        ascend(lo, hi, pos + 1, cur, out);
    }
}

HalfInt class_floor(Parity cls) {
    return cls == Parity::integral ? HalfInt(0) : HalfInt::from_doubled(1);
}

} // namespace

std::vector<std::pair<Weight, DiscreteSign>> enumerate_discrete(const GroupContext& ctx,
                                                                const Weight& delta,
                                                                HalfInt cutoff) {
    if (!ctx.even_spin) throw DomainError("enumerate_discrete: no discrete series for Spin(2n-1,1)");
    require_delta(ctx, delta);
    if (!delta.uniform_parity())
        throw DomainError("enumerate_discrete: delta mixes parity classes");
    const int n = ctx.n;
    const HalfInt one(1);
    const HalfInt floor0 = class_floor(delta.parity());

    std::vector<std::pair<Weight, DiscreteSign>> out;
    for (DiscreteSign s : {DiscreteSign::plus, DiscreteSign::minus}) {
        const HalfInt inner = s == DiscreteSign::plus ? -delta[n - 2] : delta[n - 2];
        std::vector<HalfInt> lo(n), hi(n);
        // a_1 sits above the first chain entry (b_1, or -/+b_1 when n = 2).
        lo[0] = (n == 2 ? inner : delta[0]) - one;
        hi[0] = cutoff;
        for (int i = 2; i <= n - 2; ++i) {
            lo[i - 1] = delta[i - 1] - one;
            hi[i - 1] = delta[i - 2] - one;
        }
        if (n >= 3) {
            lo[n - 2] = inner - one;
            hi[n - 2] = delta[n - 3] - one;
        }
        lo[n - 1] = floor0;
        hi[n - 1] = inner - one;

        std::vector<Weight> tuples;
        std::vector<HalfInt> cur(n);
        ascend(lo, hi, 0, cur, tuples);
        for (Weight& a : tuples)
            if (in_D0(ctx, delta, a, s)) out.emplace_back(std::move(a), s);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second == DiscreteSign::plus && y.second == DiscreteSign::minus;
    });
    return out;
}

std::vector<Weight> enumerate_continuous(const GroupContext& ctx, const Weight& delta,
                                         HalfInt cutoff) {
    require_delta(ctx, delta);
    if (!delta.uniform_parity())
        throw DomainError("enumerate_continuous: delta mixes parity classes");
    const int n = ctx.n;
    const int phi_rank = ctx.rs_M.rank; // n-1 in both families

    std::vector<HalfInt> lo(phi_rank), hi(phi_rank);
    if (ctx.even_spin) {
        lo[0] = n == 2 ? delta[0].abs() : delta[0];
        hi[0] = cutoff;
        for (int i = 2; i <= n - 2; ++i) {
            lo[i - 1] = delta[i - 1];
            hi[i - 1] = delta[i - 2];
        }
        if (n >= 3) {
            lo[n - 2] = delta[n - 2].abs();
            hi[n - 2] = delta[n - 3];
        }
    } else {
        lo[0] = delta[0];
        hi[0] = cutoff;
        for (int i = 2; i <= n - 2; ++i) {
            lo[i - 1] = delta[i - 1];
            hi[i - 1] = delta[i - 2];
        }
        lo[n - 2] = -delta[n - 3];
        hi[n - 2] = delta[n - 3];
    }

    std::vector<Weight> tuples;
    std::vector<HalfInt> cur(phi_rank);
    ascend(lo, hi, 0, cur, tuples);
    std::vector<Weight> out;
    for (Weight& phi : tuples)
        if (in_C(ctx, delta, phi)) out.push_back(std::move(phi));
    return out;
}

std::string PlancherelDensity::kind_name() const {
    switch (kind) {
    case DensityKind::tanh: return "tanh";
    case DensityKind::coth: return "coth";
    case DensityKind::flat: return "flat";
    }
    return "?";
}

PlancherelDensity plancherel_density(const GroupContext& ctx, const Weight& phi,
                                     DensityVariant variant) {
    const Irrep label(ctx.rs_M, phi); // validates dominance and parity
    const int n = ctx.n;
    PlancherelDensity d;
    d.n = n;
    d.phi_dim = weyl_dimension(label);
    if (ctx.even_spin) {
        d.kind = phi.parity() == Parity::integral ? DensityKind::tanh : DensityKind::coth;
        d.t_power = 1;
        // 1/Gamma(n)
        d.rational_num = 1;
        d.rational_den = 1;
        for (int i = 2; i <= n - 1; ++i) d.rational_den *= i;
        const int shift = variant == DensityVariant::proposition ? -1 : +1;
        for (int i = 1; i <= n - 1; ++i)
            d.roots.push_back(HalfInt::from_doubled(phi[i - 1].doubled() + 2 * (n - i) + shift));
    } else {
        d.kind = DensityKind::flat;
        d.t_power = 0;
        // 1/(pi^{n-1/2} Gamma(n-1/2)) = [4^{n-1} (n-1)! / (2n-2)!] * pi^{-n}
        std::int64_t num = 1, den = 1;
        for (int i = 1; i <= n - 1; ++i) num *= 4 * i;
        for (int i = 2; i <= 2 * n - 2; ++i) den *= i;
        const std::int64_t g = std::gcd(num, den);
        d.rational_num = num / g;
        d.rational_den = den / g;
        for (int i = 1; i <= n - 1; ++i)
            d.roots.push_back(phi[i - 1] + HalfInt(n - i - 1));
    }
    return d;
}

double density_eval(const PlancherelDensity& d, double t) {
    if (d.kind == DensityKind::coth && !(t > 0.0))
        throw DomainError("density_eval: coth density is defined on t > 0 only");
    const double pi = std::numbers::pi;
    double factor = 1.0;
    if (d.kind == DensityKind::tanh) factor = std::tanh(t * pi);
    else if (d.kind == DensityKind::coth) factor = 1.0 / std::tanh(t * pi);
    double value = factor * static_cast<double>(d.phi_dim) *
                   (static_cast<double>(d.rational_num) / static_cast<double>(d.rational_den)) *
                   std::pow(pi, -d.n);
    if (d.t_power == 1) value *= t;
    for (const HalfInt& r : d.roots) {
        const double rv = r.to_double();
        value *= t * t + rv * rv;
    }
    return value;
}

} // namespace spindec
