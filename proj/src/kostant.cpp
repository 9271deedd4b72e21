#include "spindec/kostant.hpp"

#include "spindec/error.hpp"

#include <algorithm>

namespace spindec {

PartitionCache::PartitionCache(RootSystem rs) : rs_(rs) {
    for (const Weight& alpha : positive_roots(rs_)) {
        std::vector<std::int64_t> r(alpha.rank());
        for (std::size_t i = 0; i < alpha.rank(); ++i) r[i] = alpha[i].as_integer();
        roots_.push_back(std::move(r));
    }
}

bool PartitionCache::feasible(const std::vector<std::int64_t>& v) const {
    // Exact necessary conditions for cone membership: nonnegative integral
    // simple-root coordinates.
    const int k = rs_.rank;
    if (rs_.family == Family::B) {
        std::int64_t s = 0;
        for (int i = 0; i < k; ++i) {
            s += v[i];
            if (s < 0) return false;
        }
        return true;
    }
    if (k == 1) return v[0] == 0;
    std::int64_t s = 0;
    for (int i = 0; i < k - 2; ++i) {
        s += v[i];
        if (s < 0) return false;
    }
    const std::int64_t total = s + v[k - 2] + v[k - 1];
    if (total < 0 || total % 2 != 0) return false;
    return total / 2 - v[k - 1] >= 0;
}

std::uint64_t PartitionCache::count_from(std::uint32_t index, std::vector<std::int64_t>& xi) {
    if (std::all_of(xi.begin(), xi.end(), [](std::int64_t x) { return x == 0; })) return 1;
    if (index == roots_.size()) return 0;
    if (!feasible(xi)) return 0;

    const Key key{index, xi};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::vector<std::int64_t>& alpha = roots_[index];
    std::uint64_t total = count_from(index + 1, xi);
    // Subtract alpha repeatedly; the cone height drops by >= 1 per step, so
    // the feasibility prefilter guarantees termination.
    int steps = 0;
    for (;;) {
        for (std::size_t i = 0; i < xi.size(); ++i) xi[i] -= alpha[i];
        ++steps;
        if (!feasible(xi)) break;
        total += count_from(index + 1, xi);
    }
    for (std::size_t i = 0; i < xi.size(); ++i) xi[i] += steps * alpha[i];

    memo_.emplace(key, total);
    return total;
}

std::uint64_t PartitionCache::count(const Weight& xi) {
    if (static_cast<int>(xi.rank()) != rs_.rank)
        throw DomainError("kostant_partition: rank mismatch");
    std::vector<std::int64_t> v(xi.rank());
    for (std::size_t i = 0; i < xi.rank(); ++i) {
        if (!xi[i].is_integer()) return 0;
        v[i] = xi[i].as_integer();
    }
    return count_from(0, v);
}

std::uint64_t kostant_partition(PartitionCache& cache, const Weight& xi) {
    return cache.count(xi);
}

namespace {

struct SignedImage {
    int sign;
    std::vector<std::int64_t> doubled; // doubled coordinates of g(x)
};

std::vector<SignedImage> weyl_images(const RootSystem& rs, const Weight& x, int max_rank) {
    std::vector<SignedImage> out;
    out.reserve(weyl_order(rs));
    for (const SignedPerm& g : weyl_elements(rs, max_rank)) {
        const Weight img = g.apply(x);
        SignedImage si;
        si.sign = g.sign();
        si.doubled.resize(img.rank());
        for (std::size_t i = 0; i < img.rank(); ++i) si.doubled[i] = img[i].doubled();
        out.push_back(std::move(si));
    }
    return out;
}

std::int64_t signed_double_sum(const RootSystem& rs, const Weight& beta_hw,
                               const std::vector<SignedImage>& v_images,
                               const std::vector<SignedImage>& w_images, PartitionCache& cache) {
    const std::size_t k = beta_hw.rank();
    std::vector<HalfInt> arg(k);
    std::int64_t sum = 0;
    for (const SignedImage& v : v_images) {
        for (const SignedImage& w : w_images) {
            bool integral = true;
            for (std::size_t i = 0; i < k; ++i) {
                const std::int64_t d = v.doubled[i] - w.doubled[i] + beta_hw[i].doubled();
                if (d % 2 != 0) {
                    integral = false;
                    break;
                }
                arg[i] = HalfInt::from_doubled(d);
            }
            if (!integral) continue;
            Weight xi{arg};
            if (!in_root_cone_prefilter(rs, xi)) continue;
            const std::uint64_t p = cache.count(xi);
            if (p != 0) sum += static_cast<std::int64_t>(v.sign * w.sign) * static_cast<std::int64_t>(p);
        }
    }
    return sum;
}

} // namespace

std::int64_t tensor_mult_kostant(const RootSystem& rs, const Irrep& beta, const Irrep& gamma,
                                 const Irrep& delta, PartitionCache& cache,
                                 const ComputeOptions& opts) {
    if (beta.rs != rs || gamma.rs != rs || delta.rs != rs || cache.root_system() != rs)
        throw DomainError("tensor_mult_kostant: labels must share one root system");

    if (rs.is_abelian())
        return delta.highest_weight == beta.highest_weight + gamma.highest_weight ? 1 : 0;

    if (delta.parity() != sum_parity(beta.parity(), gamma.parity())) return 0;

    const Weight r = rho(rs);
    const auto v_images = weyl_images(rs, gamma.highest_weight + r, opts.max_rank);
    const auto w_images = weyl_images(rs, delta.highest_weight + r, opts.max_rank);
    const std::int64_t mult =
        signed_double_sum(rs, beta.highest_weight, v_images, w_images, cache);
    if (mult < 0)
        throw InternalError("tensor_mult_kostant: negative multiplicity " + std::to_string(mult) +
                            " at delta=" + delta.to_string());
    return mult;
}

std::map<Irrep, std::int64_t> tensor_support_kostant(const RootSystem& rs, const Irrep& beta,
                                                     const Irrep& gamma, PartitionCache& cache,
                                                     const ComputeOptions& opts) {
    if (beta.rs != rs || gamma.rs != rs || cache.root_system() != rs)
        throw DomainError("tensor_support_kostant: labels must share one root system");

    std::map<Irrep, std::int64_t> out;
    if (rs.is_abelian()) {
        out.emplace(Irrep(rs, beta.highest_weight + gamma.highest_weight), 1);
        return out;
    }

    const Parity cls = sum_parity(beta.parity(), gamma.parity());
    const HalfInt bound = beta.highest_weight[0] + gamma.highest_weight[0];

    const Weight r = rho(rs);
    const auto v_images = weyl_images(rs, gamma.highest_weight + r, opts.max_rank);
    for (const Weight& hw : dominant_weights_up_to(rs, bound, cls)) {
        const auto w_images = weyl_images(rs, hw + r, opts.max_rank);
        const std::int64_t mult =
            signed_double_sum(rs, beta.highest_weight, v_images, w_images, cache);
        if (mult < 0)
            throw InternalError("tensor_support_kostant: negative multiplicity at delta=" +
                                hw.to_string());
        if (mult > 0) out.emplace(Irrep(rs, hw), mult);
    }
    return out;
}

} // namespace spindec
