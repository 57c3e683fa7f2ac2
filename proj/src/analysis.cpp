#include "polar/analysis.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace polar {

OmegaSweepResult omega_sweep(const PolarCode& code, double ebn0_db,
                             std::span<const double> omega_grid, int t_max,
                             const StopRule& stop, uint64_t master_seed,
                             int threads) {
    if (omega_grid.empty())
        throw std::invalid_argument("omega grid is empty");

    OmegaSweepResult sweep;
    sweep.points.reserve(omega_grid.size());
    for (double omega : omega_grid) {
        DecoderSpec spec;
        spec.kind = DecoderKind::Tscf;
        spec.t_max = t_max;
        spec.omega_auto = false;
        spec.omega = omega;

        ChannelConfig cfg;
        cfg.ebn0_db = ebn0_db;
        cfg.rate_for_noise = code.rate();
        // same frame stream for every grid point: the sweep compares
        // thresholds, so paired noise keeps the FER ratios tight
        cfg.seed = cell_seed(master_seed, "omega-sweep", ebn0_db);

        const SimResult r = run_experiment(code, spec, cfg, stop, threads);
        sweep.points.push_back({omega, r.fer(), r.frames, r.frame_errors});
    }

    const OmegaSweepPoint* best = &sweep.points.front();
    for (const auto& p : sweep.points)
        if (p.fer < best->fer)
            best = &p;
    sweep.omega_opt = best->omega;
    sweep.fer_opt = best->fer;

    sweep.band_lo = sweep.band_hi = best->omega;
    for (const auto& p : sweep.points)
        if (p.fer <= 1.1 * sweep.fer_opt) {
            sweep.band_lo = std::min(sweep.band_lo, p.omega);
            sweep.band_hi = std::max(sweep.band_hi, p.omega);
        }
    return sweep;
}

void write_omega_sweep_csv(std::ostream& os, const OmegaSweepResult& sweep) {
    os << "omega,fer,frames,errors\n";
    char line[128];
    for (const auto& p : sweep.points) {
        std::snprintf(line, sizeof line, "%g,%.6g,%ld,%ld\n", p.omega, p.fer, p.frames,
                      p.errors);
        os << line;
    }
}

} // namespace polar
