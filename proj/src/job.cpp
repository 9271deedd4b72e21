#include "spindec/job.hpp"

#include "spindec/error.hpp"

#include <json.hpp>

#include <exception>

namespace spindec {

namespace {

using ojson = nlohmann::ordered_json;
using njson = nlohmann::json;

HalfInt parse_half(const njson& node, const std::string& field) {
    if (!node.is_string())
        throw ParseError("field '" + field + "': expected a half-integer string like \"3/2\"");
    HalfInt h;
    if (!HalfInt::parse(node.get<std::string>(), h))
        throw ParseError("field '" + field + "': '" + node.get<std::string>() +
                         "' is not of the form \"k\" or \"k/2\"");
    return h;
}

Weight parse_weight(const njson& node, const std::string& field) {
    if (!node.is_array() || node.empty())
        throw ParseError("field '" + field + "': expected a nonempty array of half-integer strings");
    std::vector<HalfInt> coords;
    for (std::size_t i = 0; i < node.size(); ++i)
        coords.push_back(parse_half(node[i], field + "[" + std::to_string(i) + "]"));
    return Weight(std::move(coords));
}

double parse_real(const njson& node, const std::string& field) {
    if (!node.is_number())
        throw ParseError("field '" + field + "': expected a number");
    return node.get<double>();
}

const njson& require(const njson& obj, const std::string& key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("field '" + where + "': missing");
    return *it;
}

DiscreteSign parse_sign(const njson& node, const std::string& field) {
    if (node.is_string()) {
        const std::string s = node.get<std::string>();
        if (s == "+") return DiscreteSign::plus;
        if (s == "-") return DiscreteSign::minus;
    }
    throw ParseError("field '" + field + "': expected \"+\" or \"-\"");
}

ojson weight_json(const Weight& w) {
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < w.rank(); ++i) arr.push_back(w[i].to_string());
    return arr;
}

ojson context_json(const GroupContext& ctx) {
    ojson c;
    c["m"] = ctx.m;
    c["group"] = "Spin(" + std::to_string(ctx.m + 1) + ",1)";
    c["even_spin"] = ctx.even_spin;
    c["n"] = ctx.n;
    c["rs_M"] = ctx.rs_M.to_string();
    c["rs_Mprime"] = ctx.rs_Mprime.to_string();
    c["rho_prime"] = ctx.rho_prime.to_string();
    return c;
}

ojson pi2_json(const Pi2& d) {
    ojson p;
    p["kind"] = d.kind_name();
    switch (d.kind) {
    case Pi2::Kind::principal:
        p["mu"] = weight_json(d.mu);
        p["t"] = d.t;
        break;
    case Pi2::Kind::discrete:
        p["sign"] = std::string(1, static_cast<char>(d.sign));
        p["a"] = weight_json(d.a_tuple);
        break;
    case Pi2::Kind::complementary:
        p["mu"] = weight_json(d.mu);
        p["a"] = d.a;
        break;
    }
    return p;
}

ojson density_json(const PlancherelDensity& d) {
    ojson j;
    j["kind"] = d.kind_name();
    j["n"] = d.n;
    j["dim"] = d.phi_dim;
    j["t_power"] = d.t_power;
    ojson roots = ojson::array();
    for (const HalfInt& r : d.roots) roots.push_back(r.to_string());
    j["roots"] = std::move(roots);
    j["prefactor"] = {{"rational", std::to_string(d.rational_num) + "/" +
                                       std::to_string(d.rational_den)},
                      {"pi_power", d.n}};
    return j;
}

ojson report_json(const Report& rep) {
    ojson j;
    j["cutoff"] = rep.cutoff.to_string();
    j["t_grid"] = rep.t_grid;
    j["density_variant"] =
        rep.variant == DensityVariant::proposition ? "proposition" : "theorem";
    j["pi1_t"] = rep.pi1_t;
    j["nu_note"] = rep.nu_note;
    j["caveat"] = rep.caveat;
    j["max_constituent_multiplicity"] = rep.max_constituent_multiplicity;
    if (rep.has_discrete_section) {
        ojson arr = ojson::array();
        for (const DiscreteLine& line : rep.discrete) {
            ojson e;
            e["a"] = weight_json(line.a);
            e["sign"] = std::string(1, static_cast<char>(line.sign));
            e["multiplicity"] = line.multiplicity;
            arr.push_back(std::move(e));
        }
        j["discrete"] = std::move(arr);
    }
    ojson arr = ojson::array();
    for (const ContinuousLine& line : rep.continuous) {
        ojson e;
        e["phi"] = weight_json(line.phi);
        e["multiplicity"] = line.multiplicity;
        e["density"] = density_json(line.density);
        ojson samples = ojson::array();
        for (const auto& [t, v] : line.samples) samples.push_back({t, v});
        e["samples"] = std::move(samples);
        arr.push_back(std::move(e));
    }
    j["continuous"] = std::move(arr);
    return j;
}

JobSpec::Command parse_command(const njson& node) {
    if (node.is_string()) {
        const std::string s = node.get<std::string>();
        if (s == "decompose") return JobSpec::Command::decompose;
        if (s == "mult-discrete") return JobSpec::Command::mult_discrete;
        if (s == "mult-principal") return JobSpec::Command::mult_principal;
        if (s == "report") return JobSpec::Command::report;
    }
    throw ParseError("field 'command': expected one of decompose, mult-discrete, "
                     "mult-principal, report");
}

DensityVariant parse_variant(const std::string& s, const std::string& field) {
    if (s == "proposition") return DensityVariant::proposition;
    if (s == "theorem") return DensityVariant::theorem;
    throw ParseError("field '" + field + "': expected proposition or theorem");
}

Pi2 parse_pi2(const njson& node) {
    if (!node.is_object()) throw ParseError("field 'pi2': expected an object");
    const njson& kind = require(node, "kind", "pi2.kind");
    if (!kind.is_string()) throw ParseError("field 'pi2.kind': expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "principal")
        return Pi2::principal(parse_weight(require(node, "mu", "pi2.mu"), "pi2.mu"),
                              node.contains("t") ? parse_real(node["t"], "pi2.t") : 0.0);
    if (k == "discrete")
        return Pi2::discrete(parse_sign(require(node, "sign", "pi2.sign"), "pi2.sign"),
                             parse_weight(require(node, "a", "pi2.a"), "pi2.a"));
    if (k == "complementary")
        return Pi2::complementary(parse_weight(require(node, "mu", "pi2.mu"), "pi2.mu"),
                                  parse_real(require(node, "a", "pi2.a"), "pi2.a"));
    throw ParseError("field 'pi2.kind': unknown kind '" + k + "'");
}

} // namespace

JobSpec parse_job(const std::string& text) {
    njson doc;
    try {
        doc = njson::parse(text);
    } catch (const njson::parse_error& e) {
        throw ParseError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("job document must be a JSON object");

    JobSpec job;
    const njson& m = require(doc, "m", "m");
    if (!m.is_number_integer()) throw ParseError("field 'm': expected an integer");
    job.m = m.get<int>();

    const njson& pi1 = require(doc, "pi1", "pi1");
    if (!pi1.is_object()) throw ParseError("field 'pi1': expected an object");
    job.sigma = parse_weight(require(pi1, "sigma", "pi1.sigma"), "pi1.sigma");
    job.pi1_t = pi1.contains("t") ? parse_real(pi1["t"], "pi1.t") : 0.0;

    job.pi2 = parse_pi2(require(doc, "pi2", "pi2"));
    job.command = parse_command(require(doc, "command", "command"));

    if (doc.contains("cutoff")) job.cutoff = parse_half(doc["cutoff"], "cutoff");
    if (doc.contains("t_grid")) {
        const njson& grid = doc["t_grid"];
        if (!grid.is_array()) throw ParseError("field 't_grid': expected an array of numbers");
        job.t_grid.clear();
        for (std::size_t i = 0; i < grid.size(); ++i)
            job.t_grid.push_back(parse_real(grid[i], "t_grid[" + std::to_string(i) + "]"));
    }
    if (doc.contains("density_variant")) {
        const njson& v = doc["density_variant"];
        if (!v.is_string()) throw ParseError("field 'density_variant': expected a string");
        job.variant = parse_variant(v.get<std::string>(), "density_variant");
    }

    if (job.command == JobSpec::Command::mult_discrete) {
        const njson& q = require(doc, "query", "query");
        job.query_a = parse_weight(require(q, "a", "query.a"), "query.a");
        job.query_sign = parse_sign(require(q, "sign", "query.sign"), "query.sign");
    } else if (job.command == JobSpec::Command::mult_principal) {
        const njson& q = require(doc, "query", "query");
        job.query_phi = parse_weight(require(q, "phi", "query.phi"), "query.phi");
    }
    return job;
}

RunResult run_job(const std::string& input_text, const RunOverrides& overrides) {
    auto fail = [](int code, const std::string& kind,
                   const std::vector<std::string>& messages) {
        ojson err;
        err["error"] = kind;
        err["violations"] = messages;
        return RunResult{code, err.dump(2) + "\n"};
    };

    try {
        JobSpec job = parse_job(input_text);
        if (overrides.cutoff) job.cutoff = *overrides.cutoff;
        if (overrides.t_grid) job.t_grid = *overrides.t_grid;
        if (overrides.variant) job.variant = *overrides.variant;

        const GroupContext ctx = make_context(job.m);
        if (static_cast<int>(job.sigma.rank()) != ctx.rs_M.rank)
            return fail(2, "validation",
                        {"pi1.sigma has rank " + std::to_string(job.sigma.rank()) +
                         ", expected " + std::to_string(ctx.rs_M.rank) + " for " +
                         ctx.rs_M.to_string()});
        if (!job.sigma.uniform_parity() || !is_dominant(ctx.rs_M, job.sigma))
            return fail(2, "validation",
                        {"pi1.sigma must be a dominant uniform-parity weight on " +
                         ctx.rs_M.to_string()});
        if (const auto violations = validate_pi2(ctx, job.pi2); !violations.empty())
            return fail(2, "validation", violations);

        DecomposeOptions opts;
        opts.max_rank = overrides.max_rank;
        opts.threads = overrides.threads;
        const Pi1 pi1{Irrep(ctx.rs_M, job.sigma), job.pi1_t};
        const Decomposition dec = decompose(ctx, pi1, job.pi2, opts);

        ojson out;
        out["context"] = context_json(ctx);
        out["pi1"] = {{"sigma", weight_json(job.sigma)}, {"t", job.pi1_t}};
        out["pi2"] = pi2_json(job.pi2);
        ojson taus = ojson::array();
        for (const Irrep& tau : dec.taus) taus.push_back(weight_json(tau.highest_weight));
        out["taus"] = std::move(taus);
        ojson betas = ojson::array();
        for (const Irrep& beta : dec.betas) betas.push_back(weight_json(beta.highest_weight));
        out["betas"] = std::move(betas);

        ojson blocks = ojson::array();
        for (const auto& [delta, mult] : dec.blocks) {
            ojson b;
            b["delta"] = weight_json(delta.highest_weight);
            b["multiplicity"] = mult;
            ojson prov = ojson::array();
            for (const Contribution& c : dec.provenance.at(delta))
                prov.push_back({{"j", c.j},
                                {"beta", weight_json(c.beta.highest_weight)},
                                {"mult", c.mult}});
            b["provenance"] = std::move(prov);
            blocks.push_back(std::move(b));
        }
        out["blocks"] = std::move(blocks);

        switch (job.command) {
        case JobSpec::Command::decompose: break;
        case JobSpec::Command::mult_discrete:
            out["query"] = {{"a", weight_json(*job.query_a)},
                            {"sign", std::string(1, static_cast<char>(job.query_sign))}};
            out["multiplicity"] = multiplicity_discrete(dec, *job.query_a, job.query_sign);
            break;
        case JobSpec::Command::mult_principal:
            out["query"] = {{"phi", weight_json(*job.query_phi)}};
            out["multiplicity"] = multiplicity_principal(dec, *job.query_phi);
            break;
        case JobSpec::Command::report:
            out["report"] = report_json(spectrum_report(dec, job.cutoff, job.t_grid, job.variant));
            break;
        }
        return RunResult{0, out.dump(2) + "\n"};
    } catch (const ParseError& e) {
        return fail(2, "parse", {e.what()});
    } catch (const DomainError& e) {
        return fail(2, "validation", {e.what()});
    } catch (const ResourceError& e) {
        return fail(2, "resource", {e.what()});
    } catch (const InternalError& e) {
        return fail(1, "internal", {e.what()});
    } catch (const std::exception& e) {
        return fail(1, "internal", {e.what()});
    }
}

} // namespace spindec
