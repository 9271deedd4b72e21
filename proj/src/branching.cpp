#include "spindec/branching.hpp"

#include "spindec/error.hpp"

namespace spindec {

namespace {

// Nested descent over the interlacing boxes; bounds are inclusive and stay
// inside sigma's parity class because every bound is a sigma entry (or its
// negative) and steps are whole integers.
void descend(const RootSystem& target, const std::vector<HalfInt>& lo,
             const std::vector<HalfInt>& hi, std::size_t pos, std::vector<HalfInt>& cur,
             std::vector<Irrep>& out) {
    if (pos == lo.size()) {
        out.emplace_back(target, Weight(cur));
        return;
    }
    for (HalfInt v = hi[pos]; !(v < lo[pos]); v -= HalfInt(1)) {
        cur[pos] = v;
        descend(target, lo, hi, pos + 1, cur, out);
    }
}

} // namespace

std::vector<Irrep> spin_restriction(const Irrep& sigma) {
    const Weight& s = sigma.highest_weight;
    const int r = sigma.rs.rank;
    std::vector<HalfInt> lo, hi;
    RootSystem target;
    if (sigma.rs.family == Family::B) {
        // beta has length r; last coordinate ranges over [-s_r, s_r].
        target = D(r);
        for (int i = 0; i + 1 < r; ++i) {
            hi.push_back(s[i]);
            lo.push_back(s[i + 1]);
        }
        hi.push_back(s[r - 1]);
        lo.push_back(-s[r - 1]);
    } else {
        if (r == 1) throw DomainError("spin_restriction: no target below D1");
        // beta has length r-1; last box is [|s_r|, s_{r-1}].
        target = B(r - 1);
        for (int i = 0; i + 2 < r; ++i) {
            hi.push_back(s[i]);
            lo.push_back(s[i + 1]);
        }
        hi.push_back(s[r - 2]);
        lo.push_back(s[r - 1].abs());
    }
    std::vector<Irrep> out;
    std::vector<HalfInt> cur(lo.size());
    descend(target, lo, hi, 0, cur, out);
    return out;
}

std::vector<Irrep> branch_M_to_Mprime(const GroupContext& ctx, const Irrep& sigma) {
    if (sigma.rs != ctx.rs_M)
        throw DomainError("branch_M_to_Mprime: sigma lives on " + sigma.rs.to_string() +
                          ", expected " + ctx.rs_M.to_string());
    return spin_restriction(sigma);
}

} // namespace spindec
