#include "spindec/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

bool read_all(const std::string& path, std::string& out, std::string& err) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream f(path);
    if (!f) {
        err = "cannot open input file: " + path;
        return false;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    out = ss.str();
    return true;
}

bool write_all(const std::string& path, const std::string& text, std::string& err) {
    if (path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream f(path);
    if (!f) {
        err = "cannot open output file: " + path;
        return false;
    }
    f << text;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor product decomposition for rank-one spin groups: reads one job "
                 "document (JSON), writes one result document"};

    std::string input = "-";
    std::string output = "-";
    std::string cutoff_text;
    std::vector<double> t_grid;
    std::string variant_text;
    int threads = 1;
    int max_rank = spindec::kDefaultRankCap;

    app.add_option("--input,-i", input, "Job document path, or - for stdin")
        ->capture_default_str();
    app.add_option("--output,-o", output, "Result document path, or - for stdout")
        ->capture_default_str();
    app.add_option("--cutoff", cutoff_text,
                   "Spectrum truncation as a half-integer string, e.g. 3 or 7/2 "
                   "(overrides the job field)");
    app.add_option("--t-grid", t_grid, "Density sample points (overrides the job field)")
        ->delimiter(',');
    app.add_option("--density-variant", variant_text, "proposition|theorem")
        ->check(CLI::IsMember({"proposition", "theorem"}));
    app.add_option("--threads", threads, "Worker threads for the block assembly")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-rank", max_rank, "Weyl group rank cap")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    spindec::RunOverrides overrides;
    overrides.threads = threads;
    overrides.max_rank = max_rank;
    if (!cutoff_text.empty()) {
        spindec::HalfInt h;
        if (!spindec::HalfInt::parse(cutoff_text, h)) {
            std::cerr << "--cutoff: '" << cutoff_text << "' is not of the form k or k/2\n";
            return 2;
        }
        overrides.cutoff = h;
    }
    if (!t_grid.empty()) overrides.t_grid = t_grid;
    if (!variant_text.empty())
        overrides.variant = variant_text == "theorem" ? spindec::DensityVariant::theorem
                                                      : spindec::DensityVariant::proposition;

    std::string text, err;
    if (!read_all(input, text, err)) {
        std::cerr << err << "\n";
        return 2;
    }
    const spindec::RunResult result = spindec::run_job(text, overrides);
    if (!write_all(output, result.document, err)) {
        std::cerr << err << "\n";
        return 1;
    }
    return result.exit_code;
}
