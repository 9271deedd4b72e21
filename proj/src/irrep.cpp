#include "spindec/irrep.hpp"

#include "spindec/error.hpp"
#include "spindec/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace spindec {

Irrep::Irrep(RootSystem rs_, Weight hw) : rs(rs_), highest_weight(std::move(hw)) {
    if (static_cast<int>(highest_weight.rank()) != rs.rank)
        throw DomainError("irrep label: weight rank does not match root system " + rs.to_string());
    if (!highest_weight.uniform_parity())
        throw DomainError("irrep label: mixed parity class " + highest_weight.to_string());
    if (!is_dominant(rs, highest_weight))
        throw DomainError("irrep label: " + highest_weight.to_string() + " not dominant for " +
                          rs.to_string());
}

bool Irrep::is_trivial() const {
    for (std::size_t i = 0; i < highest_weight.rank(); ++i)
        if (!highest_weight[i].is_zero()) return false;
    return true;
}

std::string Irrep::to_string() const { return rs.to_string() + highest_weight.to_string(); }

std::int64_t weyl_dimension(const Irrep& L) {
    const Weight r = rho(L.rs);
    const Weight top = L.highest_weight + r;
    std::vector<std::int64_t> nums, dens;
    for (const Weight& alpha : positive_roots(L.rs)) {
        nums.push_back(ip4(top, alpha) / 2);  // 2<top,alpha>, alpha has integer coords
        dens.push_back(ip4(r, alpha) / 2);
    }
    for (std::int64_t d : dens) {
        for (std::int64_t& n : nums) {
            const std::int64_t g = std::gcd(n, d);
            n /= g;
            d /= g;
            if (d == 1) break;
        }
        if (d != 1) throw InternalError("weyl_dimension: denominator failed to cancel");
    }
    __int128 prod = 1;
    for (std::int64_t n : nums) {
        prod *= n;
        if (prod > static_cast<__int128>(4e18))
            throw ResourceError("weyl_dimension overflow for " + L.to_string());
    }
    return static_cast<std::int64_t>(prod);
}

namespace {

/// Distinct W-orbit of a weight via generator closure (adjacent swaps plus
/// the family's sign-flip generator); cost proportional to orbit size.
std::vector<Weight> orbit_of(const RootSystem& rs, const Weight& w) {
    std::set<Weight> seen{w};
    std::vector<Weight> frontier{w};
    const int k = rs.rank;
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& x : frontier) {
            auto push = [&](Weight y) {
                if (seen.insert(y).second) next.push_back(std::move(y));
            };
            for (int i = 0; i + 1 < k; ++i) {
                Weight y = x;
                std::swap(y[i], y[i + 1]);
                push(std::move(y));
            }
            if (rs.family == Family::B) {
                Weight y = x;
                y[k - 1] = -y[k - 1];
                push(std::move(y));
            } else if (k >= 2) {
                Weight y = x;
                y[k - 2] = -y[k - 2];
                y[k - 1] = -y[k - 1];
                push(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

void enumerate_dominant_box(const RootSystem& rs, const Weight& lambda, std::size_t pos,
                            std::vector<HalfInt>& cur, std::vector<Weight>& out) {
    const int k = rs.rank;
    if (pos == static_cast<std::size_t>(k)) {
        out.emplace_back(cur);
        return;
    }
    const HalfInt upper = pos == 0 ? lambda[0] : cur[pos - 1];
    HalfInt lower(0);
    if (rs.family == Family::D && pos + 1 == static_cast<std::size_t>(k)) lower = -upper;
    for (HalfInt v = upper; !(v < lower); v -= HalfInt(1)) {
        cur[pos] = v;
        enumerate_dominant_box(rs, lambda, pos + 1, cur, out);
    }
}

} // namespace

WeightMultiset weight_multiplicities(const Irrep& L, std::int64_t dim_cap) {
    const std::int64_t dim = weyl_dimension(L);
    if (dim > dim_cap)
        throw ResourceError("weight_multiplicities: dim " + std::to_string(dim) + " of " +
                            L.to_string() + " exceeds cap " + std::to_string(dim_cap));

    const RootSystem rs = L.rs;
    const Weight lambda = L.highest_weight;
    const Weight r = rho(rs);
    const std::vector<Weight> roots = positive_roots(rs);

    // Dominant candidates in lambda's parity class with lambda - mu in the
    // positive root cone; paired with the cone height for processing order.
    std::vector<std::pair<std::int64_t, Weight>> dominants;
    {
        std::vector<Weight> box;
        if (rs.is_abelian()) {
            box.push_back(lambda); // one-dimensional, the label is the weight
        } else {
            std::vector<HalfInt> cur(rs.rank);
            enumerate_dominant_box(rs, lambda, 0, cur, box);
        }
        for (Weight& mu : box) {
            auto cc = cone_coordinates(rs, lambda - mu);
            if (!cc) continue;
            const std::int64_t h = std::accumulate(cc->begin(), cc->end(), std::int64_t{0});
            dominants.emplace_back(h, std::move(mu));
        }
    }
    std::sort(dominants.begin(), dominants.end());

    WeightMultiset dom_mult;
    const std::int64_t top_norm = ip4(lambda + r, lambda + r);
    for (const auto& [h, mu] : dominants) {
        if (h == 0) {
            dom_mult[mu] = 1;
            continue;
        }
        // Freudenthal: m(mu) * (|lambda+rho|^2 - |mu+rho|^2)
        //            = 2 sum_{alpha>0, s>=1} <mu+s*alpha, alpha> m(mu+s*alpha).
        std::int64_t num = 0;
        for (const Weight& alpha : roots) {
            Weight xi = mu;
            for (;;) {
                xi = xi + alpha;
                if (!cone_coordinates(rs, lambda - xi)) break;
                const auto it = dom_mult.find(dominant_representative(rs, xi));
                if (it != dom_mult.end()) num += 2 * ip4(xi, alpha) * it->second;
            }
        }
        const std::int64_t den = top_norm - ip4(mu + r, mu + r);
        if (den <= 0 || num % den != 0)
            throw InternalError("Freudenthal recursion: non-integral multiplicity at " +
                                mu.to_string());
        dom_mult[mu] = num / den;
    }

    WeightMultiset full;
    std::int64_t mass = 0;
    for (const auto& [mu, mult] : dom_mult) {
        for (Weight& w : orbit_of(rs, mu)) {
            full.emplace(std::move(w), mult);
            mass += mult;
        }
    }
    if (mass != dim)
        throw InternalError("weight system mass " + std::to_string(mass) + " != dim " +
                            std::to_string(dim) + " for " + L.to_string());
    return full;
}

std::map<Irrep, std::int64_t> klimyk_tensor(const Irrep& beta, const Irrep& gamma,
                                            std::int64_t dim_cap) {
    if (beta.rs != gamma.rs)
        throw DomainError("klimyk_tensor: root systems differ (" + beta.rs.to_string() + " vs " +
                          gamma.rs.to_string() + ")");
    const RootSystem rs = beta.rs;
    const Weight r = rho(rs);
    const Weight base = gamma.highest_weight + r;

    std::map<Weight, std::int64_t> acc;
    for (const auto& [mu, mult] : weight_multiplicities(beta, dim_cap)) {
        const FoldResult f = weyl_fold(rs, base + mu);
        if (f.singular) continue;
        acc[f.dominant - r] += f.sign * mult;
    }

    std::map<Irrep, std::int64_t> out;
    for (const auto& [hw, coeff] : acc) {
        if (coeff == 0) continue;
        if (coeff < 0)
            throw InternalError("klimyk_tensor: negative coefficient at " + hw.to_string());
        out.emplace(Irrep(rs, hw), coeff);
    }
    return out;
}

} // namespace spindec
