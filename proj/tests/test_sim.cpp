#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "polar/analysis.hpp"
#include "polar/channel.hpp"
#include "polar/sim.hpp"
#include "polar/tree.hpp"

using namespace polar;

TEST_CASE("channel: noiseless limit keeps signs") {
    std::mt19937_64 rng(1);
    std::vector<uint8_t> codeword(64);
    for (auto& b : codeword)
        b = static_cast<uint8_t>(rng() & 1u);
    std::vector<double> llr(64);
    channel_transmit(codeword, 1e-12, rng, llr);
    for (std::size_t i = 0; i < 64; ++i)
        CHECK((llr[i] > 0) == (codeword[i] == 0));
}

TEST_CASE("channel: all-zero mean matches 2/sigma^2 within 1%") {
    std::mt19937_64 rng(2);
    const double sigma2 = 0.5;
    const std::vector<uint8_t> zeros(1000, 0);
    std::vector<double> llr(1000);
    double sum = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        channel_transmit(zeros, sigma2, rng, llr);
        for (double v : llr)
            sum += v;
    }
    const double mean = sum / 1e6;
    CHECK(std::fabs(mean - 2.0 / sigma2) < 0.01 * (2.0 / sigma2));
}

TEST_CASE("channel: fixed seed reproduces the stream") {
    const std::vector<uint8_t> word(32, 0);
    std::vector<double> a(32), b(32);
    std::mt19937_64 r1(77), r2(77);
    channel_transmit(word, 1.0, r1, a);
    channel_transmit(word, 1.0, r2, b);
    CHECK(a == b);
    CHECK_THROWS(channel_transmit(word, 0.0, r1, a));
}

TEST_CASE("seed derivation is stable") {
    CHECK(frame_seed(1, 2) == frame_seed(1, 2));
    CHECK(frame_seed(1, 2) != frame_seed(1, 3));
    CHECK(cell_seed(1, "SC", 2.0) == cell_seed(1, "SC", 2.0));
    CHECK(cell_seed(1, "SC", 2.0) != cell_seed(1, "SCF", 2.0));
    CHECK(cell_seed(1, "SC", 2.0) != cell_seed(1, "SC", 2.5));
}

TEST_CASE("noiseless experiment has zero FER") {
    const PolarCode code(6, 32, 8);
    DecoderSpec spec;
    spec.kind = DecoderKind::Sc;
    ChannelConfig cfg;
    cfg.ebn0_db = 100.0;
    cfg.rate_for_noise = code.rate();
    cfg.seed = 5;
    const auto res = run_experiment(code, spec, cfg, StopRule{1, 1000});
    CHECK(res.frames == 1000);
    CHECK(res.frame_errors == 0);
    CHECK(res.fer() == 0.0);
    CHECK(res.avg_iterations() == 1.0);
    CHECK(res.avg_steps() == doctest::Approx(2.0 * 64 - 2));
}

TEST_CASE("error accounting is consistent") {
    const PolarCode code(7, 64, 8);
    for (DecoderKind kind : {DecoderKind::Sc, DecoderKind::Scf, DecoderKind::Tscf,
                             DecoderKind::FastTscf}) {
        DecoderSpec spec;
        spec.kind = kind;
        spec.t_max = 6;
        ChannelConfig cfg;
        cfg.ebn0_db = 1.0;
        cfg.rate_for_noise = code.rate();
        cfg.seed = 7;
        const auto res = run_experiment(code, spec, cfg, StopRule{50, 20'000});
        CHECK(res.frame_errors == res.crc_fail_errors + res.undetected_errors);
        CHECK(res.frame_errors <= res.frames);
        CHECK(res.total_iterations >= res.frames);
        CHECK(res.total_iterations <= res.frames * (1 + spec.t_max));
        if (kind == DecoderKind::Sc)
            CHECK(res.total_iterations == res.frames);
    }
}

TEST_CASE("step accounting scales with iterations") {
    const PolarCode code(7, 64, 8);
    const DecodeTree tree(code);
    const long leaf_spi = 2 * 128 - 2;

    DecoderSpec tscf;
    tscf.kind = DecoderKind::Tscf;
    tscf.t_max = 8;
    ChannelConfig cfg;
    cfg.ebn0_db = 1.5;
    cfg.rate_for_noise = code.rate();
    cfg.seed = 11;
    const auto leaf_res = run_experiment(code, tscf, cfg, StopRule{50, 20'000});
    CHECK(leaf_res.total_steps == leaf_res.total_iterations * leaf_spi);

    DecoderSpec fast;
    fast.kind = DecoderKind::FastTscf;
    fast.t_max = 8;
    const auto fast_res = run_experiment(code, fast, cfg, StopRule{50, 20'000});
    CHECK(fast_res.total_steps ==
          fast_res.total_iterations * tree.steps_per_iteration());
}

TEST_CASE("t_max = 0 flip decoding matches SC frame for frame") {
    const PolarCode code(7, 64, 8);
    ChannelConfig cfg;
    cfg.ebn0_db = 1.0;
    cfg.rate_for_noise = code.rate();
    cfg.seed = 13;
    const StopRule stop{1'000'000, 5'000};

    DecoderSpec sc;
    sc.kind = DecoderKind::Sc;
    DecoderSpec scf;
    scf.kind = DecoderKind::Scf;
    scf.t_max = 0;
    DecoderSpec tscf;
    tscf.kind = DecoderKind::Tscf;
    tscf.t_max = 0;

    const auto r_sc = run_experiment(code, sc, cfg, stop);
    const auto r_scf = run_experiment(code, scf, cfg, stop);
    const auto r_tscf = run_experiment(code, tscf, cfg, stop);
    CHECK(r_sc.frame_errors == r_scf.frame_errors);
    CHECK(r_sc.frame_errors == r_tscf.frame_errors);
    CHECK(r_sc.frames == r_scf.frames);
}

TEST_CASE("sweep: determinism, row count, serialization") {
    const PolarCode code(6, 32, 8);
    std::vector<DecoderSpec> specs(2);
    specs[0].kind = DecoderKind::Sc;
    specs[1].kind = DecoderKind::Tscf;
    specs[1].t_max = 4;
    const std::vector<double> grid{1.0, 2.0, 3.0};
    const StopRule stop{50, 5'000};

    const auto a = sweep(code, specs, grid, stop, 21);
    const auto b = sweep(code, specs, grid, stop, 21);
    REQUIRE(a.size() == 6);
    REQUIRE(b.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].decoder == b[i].decoder);
        CHECK(a[i].ebn0_db == b[i].ebn0_db);
        CHECK(a[i].frames == b[i].frames);
        CHECK(a[i].frame_errors == b[i].frame_errors);
        CHECK(a[i].total_iterations == b[i].total_iterations);
        CHECK(a[i].total_steps == b[i].total_steps);
    }

    std::ostringstream csv;
    write_csv(csv, a);
    int lines = 0;
    for (char c : csv.str())
        lines += c == '\n';
    CHECK(lines == 7);   // header + one row per cell

    std::ostringstream empty_csv;
    write_csv(empty_csv, std::vector<SimResult>{});
    CHECK(empty_csv.str() ==
          "decoder,ebn0_db,frames,frame_errors,fer,avg_iterations,avg_steps,wall_time_s\n");

    std::ostringstream js;
    write_json(js, a, code, 21);
    const auto parsed = nlohmann::json::parse(js.str());
    CHECK(parsed["config"]["master_seed"] == 21);
    CHECK(parsed["config"]["code"]["K"] == 32);
    REQUIRE(parsed["results"].size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(parsed["results"][i]["decoder"] == a[i].decoder);
        CHECK(parsed["results"][i]["frames"] == a[i].frames);
        CHECK(parsed["results"][i]["frame_errors"] == a[i].frame_errors);
    }
}

TEST_CASE("fer is non-increasing in Eb/N0") {
    const PolarCode code(7, 64, 8);
    std::vector<DecoderSpec> specs(1);
    specs[0].kind = DecoderKind::Tscf;
    specs[0].t_max = 8;
    const std::vector<double> grid{0.5, 1.5, 2.5};
    const auto rows = sweep(code, specs, grid, StopRule{300, 200'000}, 31);
    // generous slack: two combined standard errors
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double f0 = rows[i - 1].fer();
        const double f1 = rows[i].fer();
        const double se0 = std::sqrt(f0 * (1 - f0) / rows[i - 1].frames);
        const double se1 = std::sqrt(f1 * (1 - f1) / rows[i].frames);
        CHECK(f1 <= f0 + 2 * (se0 + se1));
    }
}

TEST_CASE("invalid configurations are rejected") {
    const PolarCode no_crc(6, 32, 0);
    DecoderSpec scf;
    scf.kind = DecoderKind::Scf;
    ChannelConfig cfg;
    cfg.ebn0_db = 1.0;
    cfg.rate_for_noise = no_crc.rate();
    CHECK_THROWS(run_experiment(no_crc, scf, cfg, StopRule{10, 100}));
    CHECK_THROWS(parse_decoder_kind("bogus"));
    CHECK(parse_decoder_kind("fast-tscf") == DecoderKind::FastTscf);
}

TEST_CASE("omega sweep basics") {
    const PolarCode code(6, 32, 8);
    const StopRule stop{50, 5'000};

    CHECK_THROWS(omega_sweep(code, 2.0, std::vector<double>{}, 8, stop, 1));

    const auto single = omega_sweep(code, 2.0, std::vector<double>{8.0}, 8, stop, 1);
    REQUIRE(single.points.size() == 1);
    CHECK(single.omega_opt == 8.0);
    CHECK(single.band_lo <= single.omega_opt);
    CHECK(single.band_hi >= single.omega_opt);

    // omega = 0 point behaves like SC with CRC: identical error counts under
    // the same frame stream
    DecoderSpec sc;
    sc.kind = DecoderKind::Sc;
    DecoderSpec tscf0;
    tscf0.kind = DecoderKind::Tscf;
    tscf0.t_max = 8;
    tscf0.omega_auto = false;
    tscf0.omega = 0.0;
    ChannelConfig cfg;
    cfg.ebn0_db = 1.0;
    cfg.rate_for_noise = code.rate();
    cfg.seed = 17;
    const auto r_sc = run_experiment(code, sc, cfg, stop);
    const auto r_t0 = run_experiment(code, tscf0, cfg, stop);
    CHECK(r_sc.frame_errors == r_t0.frame_errors);

    std::ostringstream os;
    write_omega_sweep_csv(os, single);
    CHECK(os.str().rfind("omega,fer,frames,errors\n", 0) == 0);
}
