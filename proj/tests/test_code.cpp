#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "polar/code.hpp"
#include "polar/crc.hpp"
#include "polar/reliability.hpp"

using namespace polar;

TEST_CASE("reliability sequence is a permutation of [0, 1024)") {
    const auto seq = reliability_sequence_1024();
    std::vector<uint16_t> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        REQUIRE(sorted[i] == i);
}

TEST_CASE("reliability sequence respects the binary domination order") {
    // If the set bits of i are a subset of those of j, index j is at least
    // as reliable; any transcription slip tends to break this.
    const auto seq = reliability_sequence_1024();
    std::vector<int> pos(1024);
    for (int p = 0; p < 1024; ++p)
        pos[seq[static_cast<std::size_t>(p)]] = p;
    for (int i = 0; i < 1024; ++i)
        for (int j = 0; j < 1024; ++j)
            if (i != j && (i & j) == i)
                REQUIRE(pos[i] < pos[j]);
}

TEST_CASE("sequence extraction preserves relative order") {
    const auto seq = reliability_sequence_1024();
    const auto r16 = reliability_sequence(16);
    REQUIRE(r16.size() == 16);
    // first few entries of the restricted sequence are well known
    const std::vector<uint16_t> expect{0, 1, 2, 4, 8, 3, 5, 9, 6, 10, 12, 7, 11, 13, 14, 15};
    CHECK(r16 == expect);
    CHECK_THROWS(reliability_sequence(3));
    CHECK_THROWS(reliability_sequence(2048));
}

TEST_CASE("build_code freezes the least reliable indices") {
    const PolarCode code(4, 8);
    const std::set<uint32_t> nonfrozen(code.nonfrozen_indices().begin(),
                                       code.nonfrozen_indices().end());
    CHECK(nonfrozen == std::set<uint32_t>{6, 7, 10, 11, 12, 13, 14, 15});
    CHECK(code.info_len() == 8);

    const PolarCode rate1(2, 4);
    CHECK(rate1.nonfrozen_indices().size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK_FALSE(rate1.is_frozen(i));

    const PolarCode big(10, 512, 16);
    CHECK(big.nonfrozen_indices().size() == 512);
    CHECK(std::count(big.frozen_mask().begin(), big.frozen_mask().end(), 1) == 512);
    CHECK(big.info_len() == 496);

    CHECK_THROWS(PolarCode(1, 1));
    CHECK_THROWS(PolarCode(11, 4));
    CHECK_THROWS(PolarCode(4, 17));
    CHECK_THROWS(PolarCode(4, 0));
    CHECK_THROWS(PolarCode(4, 8, 8));   // crc_len must stay below K
}

TEST_CASE("frozen sets are nested in K") {
    for (int k = 1; k < 32; ++k) {
        const PolarCode a(5, k);
        const PolarCode b(5, k + 1);
        // frozen(K) is a superset of frozen(K+1)
        for (std::size_t i = 0; i < 32; ++i)
            if (b.is_frozen(i))
                CHECK(a.is_frozen(i));
    }
}

TEST_CASE("sub-code extraction matches restriction of the master sequence") {
    const auto seq = reliability_sequence_1024();
    std::vector<uint16_t> restricted;
    for (uint16_t v : seq)
        if (v < 512)
            restricted.push_back(v);
    const int K = 200;
    const PolarCode code(9, K);
    std::set<uint32_t> expect(restricted.end() - K, restricted.end());
    const std::set<uint32_t> got(code.nonfrozen_indices().begin(),
                                 code.nonfrozen_indices().end());
    CHECK(got == expect);
}

TEST_CASE("polar transform matches the dense Kronecker generator") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 4; ++n) {
        const std::size_t N = std::size_t{1} << n;
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<uint8_t> u(N);
            for (auto& b : u)
                b = static_cast<uint8_t>(rng() & 1u);
            auto x = u;
            PolarCode::polar_transform(x);
            CHECK(x == oracle::dense_encode(u, n));
        }
    }
}

TEST_CASE("transform basics") {
    std::vector<uint8_t> u{0, 1};
    PolarCode::polar_transform(u);
    CHECK(u == std::vector<uint8_t>{1, 1});

    std::vector<uint8_t> zero{0, 0, 0, 0};
    PolarCode::polar_transform(zero);
    CHECK(zero == std::vector<uint8_t>{0, 0, 0, 0});
}

TEST_CASE("transform is an involution") {
    std::mt19937_64 rng(11);
    std::vector<uint8_t> v(256);
    for (auto& b : v)
        b = static_cast<uint8_t>(rng() & 1u);
    auto w = v;
    PolarCode::polar_transform(w);
    PolarCode::polar_transform(w);
    CHECK(w == v);
}

TEST_CASE("encoding is linear without CRC") {
    const PolarCode code(6, 40);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<uint8_t> a(40), b(40), both(40);
        for (int i = 0; i < 40; ++i) {
            a[static_cast<std::size_t>(i)] = static_cast<uint8_t>(rng() & 1u);
            b[static_cast<std::size_t>(i)] = static_cast<uint8_t>(rng() & 1u);
            both[static_cast<std::size_t>(i)] =
                a[static_cast<std::size_t>(i)] ^ b[static_cast<std::size_t>(i)];
        }
        const auto xa = code.encode(a);
        const auto xb = code.encode(b);
        auto xsum = xa;
        for (std::size_t i = 0; i < xsum.size(); ++i)
            xsum[i] ^= xb[i];
        CHECK(xsum == code.encode(both));
    }
    CHECK_THROWS(code.encode(std::vector<uint8_t>(39)));
}

TEST_CASE("crc basics") {
    const std::vector<uint8_t> zeros(24, 0);
    const auto crc_zeros = crc_compute(zeros, 0x1021, 16);
    CHECK(std::count(crc_zeros.begin(), crc_zeros.end(), 1) == 0);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 32; ++trial) {
        std::vector<uint8_t> p(40);
        for (auto& b : p)
            b = static_cast<uint8_t>(rng() & 1u);
        auto with = p;
        const auto crc = crc_compute(p, 0x1021, 16);
        with.insert(with.end(), crc.begin(), crc.end());
        CHECK(crc_check(with, 0x1021, 16));
    }
}

TEST_CASE("crc detects any single bit flip") {
    std::mt19937_64 rng(9);
    std::vector<uint8_t> p(32);
    for (auto& b : p)
        b = static_cast<uint8_t>(rng() & 1u);
    auto with = p;
    const auto crc = crc_compute(p, 0x1021, 16);
    with.insert(with.end(), crc.begin(), crc.end());
    for (std::size_t i = 0; i < with.size(); ++i) {
        auto corrupted = with;
        corrupted[i] ^= 1;
        CHECK_FALSE(crc_check(corrupted, 0x1021, 16));
    }
}

TEST_CASE("payload placement: info bits then CRC in ascending position order") {
    const PolarCode code(5, 12, 4);
    std::vector<uint8_t> payload(8);
    std::iota(payload.begin(), payload.end(), 0);
    for (auto& b : payload)
        b &= 1;
    const auto u = code.make_u(payload);
    const auto& pos = code.nonfrozen_indices();
    for (int i = 0; i < 8; ++i)
        CHECK(u[pos[static_cast<std::size_t>(i)]] == payload[static_cast<std::size_t>(i)]);
    const auto crc = crc_compute(payload, code.crc_poly(), 4);
    for (int i = 0; i < 4; ++i)
        CHECK(u[pos[static_cast<std::size_t>(8 + i)]] == crc[static_cast<std::size_t>(i)]);
    for (std::size_t i = 0; i < 32; ++i)
        if (code.is_frozen(i))
            CHECK(u[i] == 0);
    CHECK(code.crc_check_u(u));
}

TEST_CASE("descriptor json round-trips the mask") {
    const PolarCode code(4, 8, 4);
    const auto text = code.descriptor_json();
    CHECK(text.find("\"n\":4") != std::string::npos);
    CHECK(text.find("\"K\":8") != std::string::npos);
    CHECK(text.find("\"crc_poly_hex\":\"0x1021\"") != std::string::npos);
}

TEST_CASE("from_frozen_mask") {
    std::vector<uint8_t> mask(16, 1);
    for (uint32_t i : {7u, 9u, 10u, 11u, 12u, 13u, 14u, 15u})
        mask[i] = 0;
    const auto code = PolarCode::from_frozen_mask(mask);
    CHECK(code.n() == 4);
    CHECK(code.num_nonfrozen() == 8);
    CHECK(code.nonfrozen_indices()[0] == 7);
    CHECK_THROWS(PolarCode::from_frozen_mask(std::vector<uint8_t>(16, 1)));
    CHECK_THROWS(PolarCode::from_frozen_mask(std::vector<uint8_t>(12, 0)));
}
