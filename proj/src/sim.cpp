#include "polar/sim.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "polar/fast.hpp"
#include "polar/flip.hpp"
#include "polar/sc.hpp"
#include "polar/tree.hpp"

namespace polar {

const char* decoder_kind_name(DecoderKind kind) {
    switch (kind) {
    case DecoderKind::Sc: return "SC";
    case DecoderKind::Sco: return "SCO";
    case DecoderKind::Scf: return "SCF";
    case DecoderKind::Tscf: return "TSCF";
    case DecoderKind::FastSc: return "FAST_SC";
    case DecoderKind::FastScf: return "FAST_SCF";
    case DecoderKind::FastTscf: return "FAST_TSCF";
    }
    return "?";
}

DecoderKind parse_decoder_kind(const std::string& name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) {
        return c == '-' ? '_' : static_cast<char>(std::toupper(c));
    });
    if (up == "SC") return DecoderKind::Sc;
    if (up == "SCO") return DecoderKind::Sco;
    if (up == "SCF") return DecoderKind::Scf;
    if (up == "TSCF") return DecoderKind::Tscf;
    if (up == "FAST_SC") return DecoderKind::FastSc;
    if (up == "FAST_SCF") return DecoderKind::FastScf;
    if (up == "FAST_TSCF") return DecoderKind::FastTscf;
    throw std::invalid_argument("unknown decoder: " + name);
}

namespace {

constexpr long kBatchFrames = 8192;   // fixed so results do not depend on thread count

struct Accum {
    long frames = 0;
    long frame_errors = 0;
    long crc_fail_errors = 0;
    long undetected_errors = 0;
    long total_iterations = 0;
    long total_steps = 0;

    void merge(const Accum& other) {
        frames += other.frames;
        frame_errors += other.frame_errors;
        crc_fail_errors += other.crc_fail_errors;
        undetected_errors += other.undetected_errors;
        total_iterations += other.total_iterations;
        total_steps += other.total_steps;
    }
};

// Per-thread decoding context; owns decoder instances and scratch buffers.
struct Worker {
    const PolarCode& code;
    const DecoderSpec& spec;
    double resolved_omega;
    double sigma2;
    long leaf_steps;                    // 2N - 2
    ScDecoder sc;
    std::unique_ptr<FlipDecoder> flip;
    std::unique_ptr<FastDecoder> fast;
    std::vector<uint8_t> payload;
    std::vector<uint8_t> u;
    std::vector<uint8_t> x;
    std::vector<double> llr;
    FlipResult scratch_flip_;
    FastFlipResult scratch_fast_flip_;

    Worker(const PolarCode& c, const DecoderSpec& s, const DecodeTree* tree,
           double omega, double noise_var)
        : code(c), spec(s), resolved_omega(omega), sigma2(noise_var),
          leaf_steps(2 * static_cast<long>(c.block_length()) - 2), sc(c),
          payload(static_cast<std::size_t>(c.info_len())), u(c.block_length()),
          x(c.block_length()), llr(c.block_length()) {
        if (spec.kind == DecoderKind::Scf || spec.kind == DecoderKind::Tscf)
            flip = std::make_unique<FlipDecoder>(c, spec.t_max);
        if (spec.uses_tree())
            fast = std::make_unique<FastDecoder>(c, *tree);
    }

    void run_frame(uint64_t seed, Accum& acc) {
        std::mt19937_64 rng(seed);
        for (auto& bit : payload)
            bit = static_cast<uint8_t>(rng() & 1u);
        u = code.make_u(payload);
        x = u;
        PolarCode::polar_transform(x);
        channel_transmit(x, sigma2, rng, llr);

        const std::vector<uint8_t>* decoded = nullptr;
        int iterations = 1;
        bool crc_pass = true;
        long steps = leaf_steps;

        switch (spec.kind) {
        case DecoderKind::Sc: {
            decoded = &sc.decode(llr).hard_out;
            if (code.crc_len() > 0)
                crc_pass = code.crc_check_u(*decoded);
            break;
        }
        case DecoderKind::Sco: {
            sc.decode_oracle(llr, u);
            decoded = &sc.frame().hard_out;
            if (code.crc_len() > 0)
                crc_pass = code.crc_check_u(*decoded);
            break;
        }
        case DecoderKind::Scf: {
            auto& res = scratch_flip_;
            res = flip->decode_scf(llr);
            decoded = &res.hard_out;
            iterations = res.iterations;
            crc_pass = res.crc_pass;
            steps = static_cast<long>(iterations) * leaf_steps;
            break;
        }
        case DecoderKind::Tscf: {
            auto& res = scratch_flip_;
            res = flip->decode_tscf(llr, resolved_omega);
            decoded = &res.hard_out;
            iterations = res.iterations;
            crc_pass = res.crc_pass;
            steps = static_cast<long>(iterations) * leaf_steps;
            break;
        }
        case DecoderKind::FastSc: {
            const auto& res = fast->decode(llr);
            decoded = &res.hard_out;
            steps = res.steps;
            if (code.crc_len() > 0)
                crc_pass = code.crc_check_u(*decoded);
            break;
        }
        case DecoderKind::FastScf:
        case DecoderKind::FastTscf: {
            auto& res = scratch_fast_flip_;
            res = fast->flip_decode(llr,
                                    spec.kind == DecoderKind::FastScf
                                        ? FastFlipMode::Scf
                                        : FastFlipMode::Tscf,
                                    spec.t_max, resolved_omega);
            decoded = &res.hard_out;
            iterations = res.iterations;
            crc_pass = res.crc_pass;
            steps = res.steps;
            break;
        }
        }

        bool error = false;
        const auto& pos = code.nonfrozen_indices();
        for (int i = 0; i < code.info_len(); ++i)
            if ((*decoded)[pos[static_cast<std::size_t>(i)]] != payload[static_cast<std::size_t>(i)]) {
                error = true;
                break;
            }

        acc.frames += 1;
        acc.total_iterations += iterations;
        acc.total_steps += steps;
        if (error) {
            acc.frame_errors += 1;
            if (crc_pass)
                acc.undetected_errors += 1;
            else
                acc.crc_fail_errors += 1;
        }
    }
};

} // namespace

SimResult run_experiment(const PolarCode& code, const DecoderSpec& spec,
                         const ChannelConfig& cfg, const StopRule& stop,
                         int threads) {
    if (spec.is_flip() && code.crc_len() == 0)
        throw std::invalid_argument("flip decoders require a CRC");
    if (stop.max_frames <= 0)
        throw std::invalid_argument("max_frames must be positive");

    const double omega = spec.omega_auto ? omega_star(cfg.ebn0_db) : spec.omega;
    const bool tscf_like =
        spec.kind == DecoderKind::Tscf || spec.kind == DecoderKind::FastTscf;

    int num_threads = threads > 0 ? threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (num_threads < 1)
        num_threads = 1;

    std::unique_ptr<DecodeTree> tree;
    if (spec.uses_tree())
        tree = std::make_unique<DecodeTree>(code);

    std::vector<std::unique_ptr<Worker>> workers;
    workers.reserve(static_cast<std::size_t>(num_threads));
    for (int t = 0; t < num_threads; ++t)
        workers.push_back(
            std::make_unique<Worker>(code, spec, tree.get(), omega, cfg.sigma2()));

    const auto t0 = std::chrono::steady_clock::now();
    Accum total;
    long next_frame = 0;
    while (total.frame_errors < stop.min_errors && next_frame < stop.max_frames) {
        const long batch = std::min(kBatchFrames, stop.max_frames - next_frame);
        std::vector<Accum> part(static_cast<std::size_t>(num_threads));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(num_threads));
        for (int t = 0; t < num_threads; ++t) {
            const long lo = next_frame + batch * t / num_threads;
            const long hi = next_frame + batch * (t + 1) / num_threads;
            pool.emplace_back([&, t, lo, hi] {
                for (long f = lo; f < hi; ++f)
                    workers[static_cast<std::size_t>(t)]->run_frame(
                        frame_seed(cfg.seed, static_cast<uint64_t>(f)),
                        part[static_cast<std::size_t>(t)]);
            });
        }
        for (auto& th : pool)
            th.join();
        for (const auto& p : part)
            total.merge(p);
        next_frame += batch;
    }
    const auto t1 = std::chrono::steady_clock::now();

    SimResult res;
    res.decoder = spec.name();
    res.ebn0_db = cfg.ebn0_db;
    res.t_max = spec.is_flip() ? spec.t_max : 0;
    res.omega_mode = tscf_like ? (spec.omega_auto ? "auto" : "fixed") : "n/a";
    res.omega_value = tscf_like ? omega : 0.0;
    res.frames = total.frames;
    res.frame_errors = total.frame_errors;
    res.crc_fail_errors = total.crc_fail_errors;
    res.undetected_errors = total.undetected_errors;
    res.total_iterations = total.total_iterations;
    res.total_steps = total.total_steps;
    res.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
    return res;
}

std::vector<SimResult> sweep(const PolarCode& code, std::span<const DecoderSpec> decoders,
                             std::span<const double> ebn0_grid, const StopRule& stop,
                             uint64_t master_seed, int threads) {
    std::vector<SimResult> results;
    results.reserve(decoders.size() * ebn0_grid.size());
    for (const DecoderSpec& spec : decoders)
        for (double ebn0 : ebn0_grid) {
            ChannelConfig cfg;
            cfg.ebn0_db = ebn0;
            cfg.rate_for_noise = code.rate();
            cfg.seed = cell_seed(master_seed, spec.name(), ebn0);
            results.push_back(run_experiment(code, spec, cfg, stop, threads));
        }
    return results;
}

void write_csv(std::ostream& os, std::span<const SimResult> results) {
    os << "decoder,ebn0_db,frames,frame_errors,fer,avg_iterations,avg_steps,wall_time_s\n";
    char line[256];
    for (const SimResult& r : results) {
        std::snprintf(line, sizeof line, "%s,%g,%ld,%ld,%.6g,%.6g,%.6g,%.3f\n",
                      r.decoder.c_str(), r.ebn0_db, r.frames, r.frame_errors, r.fer(),
                      r.avg_iterations(), r.avg_steps(), r.wall_time_s);
        os << line;
    }
}

void write_json(std::ostream& os, std::span<const SimResult> results,
                const PolarCode& code, uint64_t master_seed) {
    nlohmann::json j;
    j["config"] = {{"code", nlohmann::json::parse(code.descriptor_json())},
                   {"master_seed", master_seed},
                   {"version", kVersion}};
    auto arr = nlohmann::json::array();
    for (const SimResult& r : results)
        arr.push_back({{"decoder", r.decoder},
                       {"ebn0_db", r.ebn0_db},
                       {"t_max", r.t_max},
                       {"omega_mode", r.omega_mode},
                       {"omega_value", r.omega_value},
                       {"frames", r.frames},
                       {"frame_errors", r.frame_errors},
                       {"crc_fail_errors", r.crc_fail_errors},
                       {"undetected_errors", r.undetected_errors},
                       {"total_iterations", r.total_iterations},
                       {"total_steps", r.total_steps},
                       {"fer", r.fer()},
                       {"avg_iterations", r.avg_iterations()},
                       {"avg_steps", r.avg_steps()},
                       {"wall_time_s", r.wall_time_s}});
    j["results"] = std::move(arr);
    os << j.dump(2) << "\n";
}

void emit_results(std::span<const SimResult> results, const std::string& format,
                  const std::string& path, const PolarCode& code, uint64_t master_seed) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open output file: " + path);
    if (format == "csv")
        write_csv(os, results);
    else if (format == "json")
        write_json(os, results, code, master_seed);
    else
        throw std::invalid_argument("unknown format: " + format);
    if (!os.good())
        throw std::runtime_error("write failed: " + path);
}

} // namespace polar
