// Monte-Carlo simulation and analysis CLI for the polar flip-decoding
// library. See README for usage examples.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polar/analysis.hpp"
#include "polar/flip.hpp"
#include "polar/ga.hpp"
#include "polar/sim.hpp"
#include "polar/tree.hpp"

namespace {

// "a,b,c" or "start:step:stop" (inclusive).
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double start = 0, step = 0, stop = 0;
        char c1 = 0, c2 = 0;
        std::istringstream is(text);
        if (!(is >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' ||
            step <= 0)
            throw CLI::ValidationError("grid", "expected start:step:stop with step > 0");
        for (double v = start; v <= stop + 1e-9; v += step)
            out.push_back(v);
        return out;
    }
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ','))
        out.push_back(std::stod(item));
    if (out.empty())
        throw CLI::ValidationError("grid", "empty list");
    return out;
}

std::pair<int, int> parse_code(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--code", "expected n,K");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

struct CommonCodeArgs {
    std::string code_text = "10,512";
    int crc_len = 16;
    std::string crc_poly = "0x1021";

    polar::PolarCode build() const {
        const auto [n, k] = parse_code(code_text);
        return polar::PolarCode(n, k, crc_len,
                                static_cast<uint32_t>(std::stoul(crc_poly, nullptr, 0)));
    }
};

void add_code_options(CLI::App* app, CommonCodeArgs& args) {
    app->add_option("--code", args.code_text, "code as n,K (N = 2^n)")
        ->capture_default_str();
    app->add_option("--crc-len", args.crc_len, "CRC length in bits (0 disables)")
        ->capture_default_str();
    app->add_option("--crc-poly", args.crc_poly, "CRC generator polynomial")
        ->capture_default_str();
}

void write_to(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open output file: " + path);
    os << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polar-sim: polar SC/SCF/TSCF/Fast-TSCF frame-error-rate experiments"};
    app.require_subcommand(1);

    // --- simulate ---------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo FER sweep over Eb/N0");
    CommonCodeArgs sim_code;
    add_code_options(sim, sim_code);
    std::string decoders_text = "SC";
    std::string ebn0_text = "1:0.5:3";
    std::string omega_text = "auto";
    std::string out_path;
    std::string format = "csv";
    int t_max = 10;
    long min_errors = 200;
    long max_frames = 10'000'000;
    uint64_t seed = 1;
    int threads = 0;
    sim->add_option("--decoder", decoders_text,
                    "comma list of SC,SCO,SCF,TSCF,FAST_SC,FAST_SCF,FAST_TSCF")
        ->capture_default_str();
    sim->add_option("--tmax", t_max, "max extra flip attempts")->capture_default_str();
    sim->add_option("--omega", omega_text, "TSCF threshold: auto or a value")
        ->capture_default_str();
    sim->add_option("--ebn0", ebn0_text, "Eb/N0 grid, list or start:step:stop")
        ->capture_default_str();
    sim->add_option("--min-errors", min_errors, "stop after this many frame errors")
        ->capture_default_str();
    sim->add_option("--max-frames", max_frames, "frame cap per point")
        ->capture_default_str();
    sim->add_option("--seed", seed, "master seed")->capture_default_str();
    sim->add_option("--out", out_path, "output path (default stdout)");
    sim->add_option("--format", format, "csv or json")->capture_default_str();
    sim->add_option("--threads", threads, "worker threads (0 = hardware)");

    // --- omega-sweep ------------------------------------------------------
    auto* osw = app.add_subcommand("omega-sweep", "TSCF FER vs threshold at one Eb/N0");
    CommonCodeArgs osw_code;
    add_code_options(osw, osw_code);
    double osw_ebn0 = 2.5;
    std::string osw_grid_text = "2:2:20";
    int osw_tmax = 10;
    long osw_min_errors = 100;
    long osw_max_frames = 2'000'000;
    uint64_t osw_seed = 1;
    int osw_threads = 0;
    std::string osw_out;
    osw->add_option("--ebn0", osw_ebn0, "Eb/N0 in dB")->capture_default_str();
    osw->add_option("--omega-grid", osw_grid_text, "threshold grid, list or start:step:stop")
        ->capture_default_str();
    osw->add_option("--tmax", osw_tmax, "max extra flip attempts")->capture_default_str();
    osw->add_option("--min-errors", osw_min_errors, "stop rule per grid point")
        ->capture_default_str();
    osw->add_option("--max-frames", osw_max_frames, "frame cap per grid point")
        ->capture_default_str();
    osw->add_option("--seed", osw_seed, "master seed")->capture_default_str();
    osw->add_option("--out", osw_out, "output path (default stdout)");
    osw->add_option("--threads", osw_threads, "worker threads (0 = hardware)");

    // --- analyze ----------------------------------------------------------
    auto* ana = app.add_subcommand(
        "analyze", "Gaussian-approximation FER bounds and critical-set FER");
    CommonCodeArgs ana_code;
    ana_code.crc_len = 0;
    add_code_options(ana, ana_code);
    std::string ana_ebn0_text = "1,2";
    std::string ana_out;
    ana->add_option("--ebn0", ana_ebn0_text, "Eb/N0 grid, list or start:step:stop")
        ->capture_default_str();
    ana->add_option("--out", ana_out, "output path (default stdout)");

    // --- tree-dump --------------------------------------------------------
    auto* tdp = app.add_subcommand("tree-dump", "pruned decode-tree classification");
    CommonCodeArgs tdp_code;
    add_code_options(tdp, tdp_code);
    std::string tdp_out;
    tdp->add_option("--out", tdp_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            const auto code = sim_code.build();
            std::vector<polar::DecoderSpec> specs;
            std::istringstream is(decoders_text);
            std::string name;
            while (std::getline(is, name, ',')) {
                polar::DecoderSpec spec;
                spec.kind = polar::parse_decoder_kind(name);
                spec.t_max = t_max;
                if (omega_text == "auto") {
                    spec.omega_auto = true;
                } else {
                    spec.omega_auto = false;
                    spec.omega = std::stod(omega_text);
                }
                specs.push_back(spec);
            }
            const auto grid = parse_grid(ebn0_text);
            polar::StopRule stop{min_errors, max_frames};
            const auto results =
                polar::sweep(code, specs, grid, stop, seed, threads);
            std::ostringstream body;
            if (format == "csv")
                polar::write_csv(body, results);
            else if (format == "json")
                polar::write_json(body, results, code, seed);
            else
                throw std::invalid_argument("unknown format: " + format);
            write_to(out_path, body.str());
        } else if (osw->parsed()) {
            const auto code = osw_code.build();
            const auto grid = parse_grid(osw_grid_text);
            polar::StopRule stop{osw_min_errors, osw_max_frames};
            const auto sweep_res = polar::omega_sweep(code, osw_ebn0, grid, osw_tmax,
                                                      stop, osw_seed, osw_threads);
            std::ostringstream body;
            polar::write_omega_sweep_csv(body, sweep_res);
            char summary[160];
            std::snprintf(summary, sizeof summary,
                          "# omega_opt=%g fer_opt=%.6g band=[%g,%g] omega_star=%g\n",
                          sweep_res.omega_opt, sweep_res.fer_opt, sweep_res.band_lo,
                          sweep_res.band_hi, polar::omega_star(osw_ebn0));
            write_to(osw_out, body.str() + summary);
        } else if (ana->parsed()) {
            const auto code = ana_code.build();
            const auto cs = polar::build_critical_set(code);
            const auto grid = parse_grid(ana_ebn0_text);
            std::ostringstream body;
            body << "ebn0_db,fer_sc,fer_critical,critical_set_size\n";
            for (double ebn0 : grid) {
                const auto profile = polar::ga_evolve(code, ebn0);
                char line[128];
                std::snprintf(line, sizeof line, "%g,%.6g,%.6g,%zu\n", ebn0,
                              polar::fer_theoretical(code, profile),
                              polar::fer_hypothetical(code, profile, cs), cs.size());
                body << line;
            }
            write_to(ana_out, body.str());
        } else if (tdp->parsed()) {
            const auto code = tdp_code.build();
            const polar::DecodeTree tree(code);
            std::ostringstream body;
            body << tree.to_json() << "\n";
            char summary[128];
            std::snprintf(summary, sizeof summary,
                          "# branch=%d special=%d steps_per_iteration=%ld\n",
                          tree.num_branch(), tree.num_special(),
                          tree.steps_per_iteration());
            write_to(tdp_out, body.str() + summary);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
