#pragma once

#include "spindec/context.hpp"
#include "spindec/irrep.hpp"
#include "spindec/kostant.hpp"
#include "spindec/pi2.hpp"
#include "spindec/spectrum.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spindec {

/// Unitary principal series pi_1 = Ind_P^G(sigma (x) e^{i t lambda_0} (x) 1).
/// t is carried through to reports; the decomposition itself never depends
/// on it.
struct Pi1 {
    Irrep sigma;
    double t = 0.0;
};

/// One (j, beta) contribution to a block's multiplicity.
struct Contribution {
    int j = 1; // 1-based index into the tau list
    Irrep beta;
    std::int64_t mult = 0;

    bool operator==(const Contribution&) const = default;
};

/// pi_1 (x) pi_2 as a finite sum of induced blocks: delta -> N(delta) with
/// full provenance, plus membership queries against the block spectra.
struct Decomposition {
    GroupContext ctx;
    Pi1 pi1;
    Pi2 pi2;
    std::vector<Irrep> taus;  // restriction of pi_2 to P, j = 1..k
    std::vector<Irrep> betas; // the branching set B of sigma
    std::map<Irrep, std::int64_t> blocks;
    std::map<Irrep, std::vector<Contribution>> provenance;
};

/// Which tensor-multiplicity route fills the blocks. The partition-function
/// route is the production path; the Klimyk route is the independent oracle
/// and must produce identical blocks.
enum class Engine { kostant, klimyk };

struct DecomposeOptions {
    Engine engine = Engine::kostant;
    int max_rank = kDefaultRankCap;
    int threads = 1;
};

Decomposition decompose(const GroupContext& ctx, const Pi1& pi1, const Pi2& pi2,
                        const DecomposeOptions& opts = {});

/// Sum over blocks of N(delta) * [in_D0(delta, a, sign)]. Spin(2n,1) only.
std::int64_t multiplicity_discrete(const Decomposition& dec, const Weight& a, DiscreteSign sign);

/// Sum over blocks of N(delta) * [in_C(delta, phi)]; the common multiplicity
/// of the whole fiber family {phi, t > 0}.
std::int64_t multiplicity_principal(const Decomposition& dec, const Weight& phi);

struct DiscreteLine {
    Weight a;
    DiscreteSign sign = DiscreteSign::plus;
    std::int64_t multiplicity = 0;
};

struct ContinuousLine {
    Weight phi;
    std::int64_t multiplicity = 0;
    PlancherelDensity density;
    std::vector<std::pair<double, double>> samples; // (t, density value)
};

/// Truncated expansion of every block: constituents below the cutoff with
/// total multiplicities aggregated across blocks, densities and samples.
struct Report {
    HalfInt cutoff;
    std::vector<double> t_grid;
    DensityVariant variant = DensityVariant::proposition;
    bool has_discrete_section = false;
    std::vector<DiscreteLine> discrete;
    std::vector<ContinuousLine> continuous;
    std::int64_t max_constituent_multiplicity = 0;
    double pi1_t = 0.0;
    std::string nu_note;
    std::string caveat;
};

Report spectrum_report(const Decomposition& dec, HalfInt cutoff,
                       const std::vector<double>& t_grid,
                       DensityVariant variant = DensityVariant::proposition);

} // namespace spindec
