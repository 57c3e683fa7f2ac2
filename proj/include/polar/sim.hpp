#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polar/channel.hpp"
#include "polar/code.hpp"

namespace polar {

inline constexpr const char* kVersion = "polar-sim 0.1.0";

enum class DecoderKind { Sc, Sco, Scf, Tscf, FastSc, FastScf, FastTscf };

const char* decoder_kind_name(DecoderKind kind);
DecoderKind parse_decoder_kind(const std::string& name);

struct DecoderSpec {
    DecoderKind kind = DecoderKind::Sc;
    int t_max = 10;
    bool omega_auto = true;    // TSCF variants: omega_star(Eb/N0) when true
    double omega = 0.0;        // fixed threshold otherwise

    std::string name() const { return decoder_kind_name(kind); }
    bool is_flip() const {
        return kind == DecoderKind::Scf || kind == DecoderKind::Tscf ||
               kind == DecoderKind::FastScf || kind == DecoderKind::FastTscf;
    }
    bool uses_tree() const {
        return kind == DecoderKind::FastSc || kind == DecoderKind::FastScf ||
               kind == DecoderKind::FastTscf;
    }
};

// Stop at min_errors frame errors or max_frames frames, whichever first.
struct StopRule {
    long min_errors = 200;
    long max_frames = 10'000'000;
};

struct SimResult {
    std::string decoder;
    double ebn0_db = 0.0;
    int t_max = 0;
    std::string omega_mode = "n/a";   // n/a | auto | fixed
    double omega_value = 0.0;
    long frames = 0;
    long frame_errors = 0;            // decoded payload != transmitted payload
    long crc_fail_errors = 0;         // errors with CRC still failing
    long undetected_errors = 0;       // errors with CRC passing
    long total_iterations = 0;
    long total_steps = 0;
    double wall_time_s = 0.0;

    double fer() const { return frames ? static_cast<double>(frame_errors) / frames : 0.0; }
    double avg_iterations() const {
        return frames ? static_cast<double>(total_iterations) / frames : 0.0;
    }
    double avg_steps() const {
        return frames ? static_cast<double>(total_steps) / frames : 0.0;
    }
};

// Monte-Carlo FER experiment for one (decoder, channel) cell. Frames are
// processed in fixed-size batches with per-frame RNG streams, so the result
// is deterministic for a given cfg.seed regardless of thread count.
// threads <= 0 selects hardware concurrency.
SimResult run_experiment(const PolarCode& code, const DecoderSpec& spec,
                         const ChannelConfig& cfg, const StopRule& stop,
                         int threads = 0);

// Cartesian product decoders x grid; per-cell seeds derived from the master
// seed and the cell coordinates.
std::vector<SimResult> sweep(const PolarCode& code, std::span<const DecoderSpec> decoders,
                             std::span<const double> ebn0_grid, const StopRule& stop,
                             uint64_t master_seed, int threads = 0);

void write_csv(std::ostream& os, std::span<const SimResult> results);
void write_json(std::ostream& os, std::span<const SimResult> results,
                const PolarCode& code, uint64_t master_seed);
// format: "csv" | "json".
void emit_results(std::span<const SimResult> results, const std::string& format,
                  const std::string& path, const PolarCode& code, uint64_t master_seed);

} // namespace polar
