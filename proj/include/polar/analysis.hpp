#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "polar/code.hpp"
#include "polar/sim.hpp"

namespace polar {

struct OmegaSweepPoint {
    double omega = 0.0;
    double fer = 0.0;
    long frames = 0;
    long errors = 0;
};

struct OmegaSweepResult {
    std::vector<OmegaSweepPoint> points;   // grid order
    double omega_opt = 0.0;                // argmin FER over the grid
    double fer_opt = 0.0;
    // Grid range where FER <= 1.1 * fer_opt (the 10%-loss band).
    double band_lo = 0.0;
    double band_hi = 0.0;
};

// TSCF FER as a function of the threshold at one Eb/N0 point.
OmegaSweepResult omega_sweep(const PolarCode& code, double ebn0_db,
                             std::span<const double> omega_grid, int t_max,
                             const StopRule& stop, uint64_t master_seed,
                             int threads = 0);

// CSV columns: omega, fer, frames, errors.
void write_omega_sweep_csv(std::ostream& os, const OmegaSweepResult& sweep);

} // namespace polar
