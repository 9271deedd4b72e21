#pragma once

#include "spindec/irrep.hpp"
#include "spindec/root_system.hpp"
#include "spindec/weight.hpp"
#include "spindec/weyl.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace spindec {

/// Caps shared by the multiplicity routines.
struct ComputeOptions {
    int max_rank = kDefaultRankCap;
    int threads = 1;
};

/// Memoized Kostant partition function over the positive roots of one root
/// system: the number of ways to express a vector as a nonnegative-integer
/// combination of positive roots. P(0) = 1; zero off the integer lattice or
/// outside the cone.
class PartitionCache {
public:
    explicit PartitionCache(RootSystem rs);

    const RootSystem& root_system() const { return rs_; }
    std::uint64_t count(const Weight& xi);
    std::size_t memo_size() const { return memo_.size(); }

private:
    struct Key {
        std::uint32_t index;
        std::vector<std::int64_t> rest; // integer coordinates
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            std::size_t h = k.index * 0x9e3779b97f4a7c15ull;
            for (std::int64_t v : k.rest) h = h * 1099511628211ull + static_cast<std::size_t>(v);
            return h;
        }
    };

    std::uint64_t count_from(std::uint32_t index, std::vector<std::int64_t>& xi);
    bool feasible(const std::vector<std::int64_t>& xi) const;

    RootSystem rs_;
    std::vector<std::vector<std::int64_t>> roots_; // integer coordinates
    std::unordered_map<Key, std::uint64_t, KeyHash> memo_;
};

/// P(xi) for the positive roots of cache's root system.
std::uint64_t kostant_partition(PartitionCache& cache, const Weight& xi);

/// Multiplicity of F_delta in F_beta (x) F_gamma via the signed double Weyl
/// sum over the partition function. Never negative on correct input; a
/// negative value aborts with InternalError.
std::int64_t tensor_mult_kostant(const RootSystem& rs, const Irrep& beta, const Irrep& gamma,
                                 const Irrep& delta, PartitionCache& cache,
                                 const ComputeOptions& opts = {});

/// Full decomposition of F_beta (x) F_gamma: dominant candidates in the
/// parity class of beta+gamma with |delta_i| <= beta_1 + gamma_1, filtered
/// by nonzero multiplicity.
std::map<Irrep, std::int64_t> tensor_support_kostant(const RootSystem& rs, const Irrep& beta,
                                                     const Irrep& gamma, PartitionCache& cache,
                                                     const ComputeOptions& opts = {});

} // namespace spindec
