#include "spindec/decompose.hpp"

#include "spindec/branching.hpp"
#include "spindec/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace spindec {

namespace {

std::map<Irrep, std::int64_t> pair_support(const RootSystem& rs, const Irrep& beta,
                                           const Irrep& tau, const DecomposeOptions& opts,
                                           PartitionCache& cache) {
    if (opts.engine == Engine::klimyk) return klimyk_tensor(beta, tau);
    ComputeOptions copts;
    copts.max_rank = opts.max_rank;
    return tensor_support_kostant(rs, beta, tau, cache, copts);
}

} // namespace

Decomposition decompose(const GroupContext& ctx, const Pi1& pi1, const Pi2& pi2,
                        const DecomposeOptions& opts) {
    if (pi1.sigma.rs != ctx.rs_M)
        throw DomainError("pi1.sigma lives on " + pi1.sigma.rs.to_string() + ", expected " +
                          ctx.rs_M.to_string());
    if (const auto violations = validate_pi2(ctx, pi2); !violations.empty()) {
        std::string msg = "invalid pi2 descriptor:";
        for (const std::string& s : violations) msg += " " + s + ";";
        throw DomainError(msg);
    }

    Decomposition dec{ctx, pi1, pi2, restrict_pi2_to_P(ctx, pi2),
                      branch_M_to_Mprime(ctx, pi1.sigma), {}, {}};

    // Work list over the theorem's (j, beta) double sum.
    struct Task {
        int j;
        const Irrep* beta;
    };
    std::vector<Task> tasks;
    for (std::size_t j = 0; j < dec.taus.size(); ++j)
        for (const Irrep& beta : dec.betas) tasks.push_back({static_cast<int>(j) + 1, &beta});

    std::vector<std::map<Irrep, std::int64_t>> supports(tasks.size());
    const int threads = std::max(1, opts.threads);
    if (threads == 1 || tasks.size() < 2) {
        PartitionCache cache(ctx.rs_Mprime);
        for (std::size_t i = 0; i < tasks.size(); ++i)
            supports[i] =
                pair_support(ctx.rs_Mprime, *tasks[i].beta, dec.taus[tasks[i].j - 1], opts, cache);
    } else {
        // Strided partition; each worker replicates the partition cache.
        std::vector<std::thread> pool;
        const int workers = std::min<int>(threads, static_cast<int>(tasks.size()));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                PartitionCache cache(ctx.rs_Mprime);
                for (std::size_t i = w; i < tasks.size(); i += workers)
                    supports[i] = pair_support(ctx.rs_Mprime, *tasks[i].beta,
                                               dec.taus[tasks[i].j - 1], opts, cache);
            });
        }
        for (std::thread& th : pool) th.join();
    }

    // Deterministic merge in task order; map keys fix serialization order.
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        for (const auto& [delta, mult] : supports[i]) {
            dec.blocks[delta] += mult;
            dec.provenance[delta].push_back({tasks[i].j, *tasks[i].beta, mult});
        }
    }

    // Dimension identity: sum N(delta) dim F_delta = dim sigma * sum_j dim tau_j.
    __int128 lhs = 0, rhs = 0;
    for (const auto& [delta, mult] : dec.blocks)
        lhs += static_cast<__int128>(mult) * weyl_dimension(delta);
    for (const Irrep& tau : dec.taus) rhs += weyl_dimension(tau);
    rhs *= weyl_dimension(pi1.sigma);
    if (lhs != rhs)
        throw InternalError("decompose: block dimension identity failed for sigma=" +
                            pi1.sigma.to_string());
    return dec;
}

std::int64_t multiplicity_discrete(const Decomposition& dec, const Weight& a, DiscreteSign sign) {
    if (!dec.ctx.even_spin)
        throw DomainError("multiplicity_discrete: no discrete series for Spin(2n-1,1)");
    if (static_cast<int>(a.rank()) != dec.ctx.n || !a.uniform_parity())
        throw DomainError("multiplicity_discrete: a must be a uniform-parity n-tuple");
    for (std::size_t i = 0; i + 1 < a.rank(); ++i)
        if (a[i] < a[i + 1])
            throw DomainError("multiplicity_discrete: a must be weakly decreasing");
    if (a[a.rank() - 1] < HalfInt(0))
        throw DomainError("multiplicity_discrete: a_n must be >= 0");
    std::int64_t total = 0;
    for (const auto& [delta, mult] : dec.blocks)
        if (in_D0(dec.ctx, delta.highest_weight, a, sign)) total += mult;
    return total;
}

std::int64_t multiplicity_principal(const Decomposition& dec, const Weight& phi) {
    if (!is_dominant(dec.ctx.rs_M, phi))
        throw DomainError("multiplicity_principal: phi not dominant on " +
                          dec.ctx.rs_M.to_string());
    std::int64_t total = 0;
    for (const auto& [delta, mult] : dec.blocks)
        if (in_C(dec.ctx, delta.highest_weight, phi)) total += mult;
    return total;
}

Report spectrum_report(const Decomposition& dec, HalfInt cutoff,
                       const std::vector<double>& t_grid, DensityVariant variant) {
    if (cutoff < HalfInt(0)) throw DomainError("spectrum_report: cutoff must be >= 0");
    Report rep;
    rep.cutoff = cutoff;
    rep.t_grid = t_grid;
    rep.variant = variant;
    rep.has_discrete_section = dec.ctx.even_spin;
    rep.pi1_t = dec.pi1.t;
    rep.nu_note = "the blocks and their spectra do not depend on pi1.t; "
                  "the value is echoed for reference only";
    rep.caveat = "decomposition stated up to Plancherel-null sets; truncated at leading entry <= " +
                 cutoff.to_string();

    if (dec.ctx.even_spin) {
        std::set<std::pair<Weight, DiscreteSign>> seen;
        for (const auto& [delta, mult] : dec.blocks)
            for (auto& entry : enumerate_discrete(dec.ctx, delta.highest_weight, cutoff))
                seen.insert(entry);
        for (const auto& [a, sign] : seen) {
            DiscreteLine line{a, sign, multiplicity_discrete(dec, a, sign)};
            rep.max_constituent_multiplicity =
                std::max(rep.max_constituent_multiplicity, line.multiplicity);
            rep.discrete.push_back(std::move(line));
        }
        std::sort(rep.discrete.begin(), rep.discrete.end(), [](const auto& x, const auto& y) {
            if (x.a != y.a) return x.a < y.a;
            return x.sign == DiscreteSign::plus && y.sign == DiscreteSign::minus;
        });
    }

    std::set<Weight> phis;
    for (const auto& [delta, mult] : dec.blocks)
        for (Weight& phi : enumerate_continuous(dec.ctx, delta.highest_weight, cutoff))
            phis.insert(std::move(phi));
    for (const Weight& phi : phis) {
        ContinuousLine line;
        line.phi = phi;
        line.multiplicity = multiplicity_principal(dec, phi);
        line.density = plancherel_density(dec.ctx, phi, variant);
        for (double t : t_grid) line.samples.emplace_back(t, density_eval(line.density, t));
        rep.max_constituent_multiplicity =
            std::max(rep.max_constituent_multiplicity, line.multiplicity);
        rep.continuous.push_back(std::move(line));
    }
    return rep;
}

} // namespace spindec
