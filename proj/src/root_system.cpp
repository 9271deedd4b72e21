#include "spindec/root_system.hpp"

#include "spindec/error.hpp"

namespace spindec {

std::string RootSystem::to_string() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::vector<Weight> positive_roots(const RootSystem& rs) {
    const int k = rs.rank;
    std::vector<Weight> roots;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            Weight minus = Weight::zero(k);
            minus[i] = HalfInt(1);
            minus[j] = HalfInt(-1);
            roots.push_back(minus);
            Weight plus = Weight::zero(k);
            plus[i] = HalfInt(1);
            plus[j] = HalfInt(1);
            roots.push_back(plus);
        }
    }
    if (rs.family == Family::B) {
        for (int i = 0; i < k; ++i) {
            Weight e = Weight::zero(k);
            e[i] = HalfInt(1);
            roots.push_back(e);
        }
    }
    return roots;
}

Weight rho(const RootSystem& rs) {
    const int k = rs.rank;
    std::vector<HalfInt> c(k);
    for (int i = 0; i < k; ++i) {
        if (rs.family == Family::B)
            c[i] = HalfInt::from_doubled(2 * (k - i) - 1); // k-i-1/2
        else
            c[i] = HalfInt(k - 1 - i);
    }
    return Weight(std::move(c));
}

std::uint64_t weyl_order(const RootSystem& rs) {
    std::uint64_t f = 1;
    for (int i = 2; i <= rs.rank; ++i) f *= static_cast<std::uint64_t>(i);
    const int flips = rs.family == Family::B ? rs.rank : rs.rank - 1;
    return f << flips;
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.rank()) != rs.rank)
        throw DomainError("weight rank does not match root system rank");
    const int k = rs.rank;
    for (int i = 0; i + 2 < k + 1; ++i)
        if (w[i] < w[i + 1]) return false;
    if (rs.family == Family::B) return !(w[k - 1] < HalfInt(0));
    if (k == 1) return true; // D_1: no condition
    return !(w[k - 2] < w[k - 1].abs());
}

std::optional<std::vector<std::int64_t>> cone_coordinates(const RootSystem& rs, const Weight& xi) {
    if (static_cast<int>(xi.rank()) != rs.rank)
        throw DomainError("weight rank does not match root system rank");
    const int k = rs.rank;
    for (int i = 0; i < k; ++i)
        if (!xi[i].is_integer()) return std::nullopt;

    if (rs.family == Family::B) {
        std::vector<std::int64_t> c(k);
        std::int64_t s = 0;
        for (int i = 0; i < k; ++i) {
            s += xi[i].as_integer();
            if (s < 0) return std::nullopt;
            c[i] = s;
        }
        return c;
    }

    // D_k: c_i = partial sums for i <= k-2; c_k = (total sum)/2; c_{k-1} = c_k - xi_k.
    if (k == 1) {
        if (!xi[0].is_zero()) return std::nullopt;
        return std::vector<std::int64_t>{};
    }
    std::vector<std::int64_t> c(k);
    std::int64_t s = 0;
    for (int i = 0; i < k - 2; ++i) {
        s += xi[i].as_integer();
        if (s < 0) return std::nullopt;
        c[i] = s;
    }
    const std::int64_t total = s + xi[k - 2].as_integer() + xi[k - 1].as_integer();
    if (total < 0 || total % 2 != 0) return std::nullopt;
    c[k - 1] = total / 2;
    c[k - 2] = c[k - 1] - xi[k - 1].as_integer();
    if (c[k - 2] < 0) return std::nullopt;
    return c;
}

namespace {

void dominant_descend(const RootSystem& rs, std::size_t pos, std::vector<HalfInt>& cur,
                      std::vector<Weight>& out) {
    const std::size_t k = static_cast<std::size_t>(rs.rank);
    if (pos == k) {
        out.emplace_back(cur);
        return;
    }
    const HalfInt upper = cur[pos]; // prefilled with the box top
    HalfInt lower(0);
    if (rs.family == Family::D && pos + 1 == k) lower = -upper;
    if (upper.is_integer() != lower.is_integer()) lower += HalfInt::from_doubled(1);
    for (HalfInt v = upper; !(v < lower); v -= HalfInt(1)) {
        cur[pos] = v;
        if (pos + 1 < k) cur[pos + 1] = v;
        dominant_descend(rs, pos + 1, cur, out);
    }
}

} // namespace

std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, HalfInt max_first, Parity cls) {
    if (cls == Parity::mixed) throw DomainError("dominant_weights_up_to: mixed parity class");
    HalfInt top = max_first;
    if (cls == Parity::half_integral && top.is_integer()) top -= HalfInt::from_doubled(1);
    if (cls == Parity::integral && !top.is_integer()) top -= HalfInt::from_doubled(1);
    const HalfInt least = cls == Parity::integral ? HalfInt(0) : HalfInt::from_doubled(1);
    if (rs.is_abelian()) {
        std::vector<Weight> out;
        for (HalfInt v = top; !(v < -max_first); v -= HalfInt(1)) out.push_back(Weight{v});
        return out;
    }
    if (top < least) return {};
    std::vector<Weight> out;
    std::vector<HalfInt> cur(rs.rank);
    cur[0] = top;
    dominant_descend(rs, 0, cur, out);
    return out;
}

bool in_root_cone_prefilter(const RootSystem& rs, const Weight& xi) {
    const int k = rs.rank;
    std::int64_t s = 0;
    const int head = rs.family == Family::B ? k : k - 2;
    for (int i = 0; i < k; ++i) {
        const std::int64_t d = xi[i].doubled();
        if (d % 2 != 0) return false;
        if (i < head) {
            s += d / 2;
            if (s < 0) return false;
        }
    }
    if (rs.family == Family::B) return true;
    if (k == 1) return xi[0].is_zero();
    const std::int64_t total = s + xi[k - 2].as_integer() + xi[k - 1].as_integer();
    if (total < 0 || total % 2 != 0) return false;
    return total / 2 - xi[k - 1].as_integer() >= 0;
}

} // namespace spindec
