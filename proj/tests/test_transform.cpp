#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pps/analysis.hpp"
#include "pps/transform.hpp"

using namespace pps;
using oracle::relative_deviation;

namespace {

IndicatorSet dna(const std::string& s) { return voss_map(DnaSequence("t", s), AmbiguityPolicy::Strict); }

RealSignal random_signal(std::mt19937& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 2.0);
    std::vector<double> x(n);
    for (double& v : x) v = g(rng);
    return RealSignal(std::move(x));
}

const double kPhi = (std::sqrt(5.0) - 1.0) / 2.0;   //  2 cos(2 pi / 5)
const double kPsi = -(std::sqrt(5.0) + 1.0) / 2.0;  //  2 cos(4 pi / 5)

}  // namespace

// ---------------------------------------------------------------------------
// congruence_vector

TEST_CASE("congruence vectors of the worked example") {
    const auto f = congruence_vectors(dna("AGTTAACGCCTAGCC"), 3);
    CHECK(f[0].values == std::vector<double>{1, 1, 2});  // A
    CHECK(f[1].values == std::vector<double>{1, 1, 1});  // T
    CHECK(f[2].values == std::vector<double>{2, 1, 2});  // C
    CHECK(f[3].values == std::vector<double>{1, 2, 0});  // G
}

TEST_CASE("congruence_vector edge cases") {
    CHECK(congruence_vector(RealSignal({5.0}), 1).values == std::vector<double>{5});
    CHECK(congruence_vectors(dna("ATATAT"), 2)[0].values == std::vector<double>{3, 0});
    CHECK_THROWS_AS(congruence_vector(RealSignal({1.0, 2.0}), 0), Error);
    CHECK_THROWS_AS(congruence_vector(RealSignal({1.0, 2.0}), 3), Error);
}

TEST_CASE("congruence conservation and bounds") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::string s = oracle::random_dna(rng, 2 + rng() % 400);
        const auto ind = dna(s);
        const std::size_t p = 1 + rng() % s.size();
        const auto f = congruence_vectors(ind, p);
        const auto cap = static_cast<double>((s.size() + p - 1) / p);
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(f[c].total() == static_cast<double>(std::count(s.begin(), s.end(), kNucleotideSymbols[c])));
            for (double v : f[c].values) {
                CHECK(v >= 0);
                CHECK(v <= cap);
                CHECK(v == std::floor(v));
            }
        }
        const auto x = random_signal(rng, 1 + rng() % 200);
        const auto fx = congruence_vector(x, 1 + rng() % x.length());
        double sum = 0;
        for (double v : x.samples()) sum += v;
        CHECK(fx.total() == doctest::Approx(sum).epsilon(1e-12));
    }
}

// ---------------------------------------------------------------------------
// spectrum_matrix

TEST_CASE("spectrum matrices match the published short-period table") {
    const std::vector<std::vector<std::vector<double>>> table = {
        {{1, 0}, {-2, 1}},
        {{1, 0, 0}, {-1, 1, 0}, {-1, -1, 1}},
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {-2, 0, 1, 0}, {0, -2, 0, 1}},
        {{1, 0, 0, 0, 0},
         {kPhi, 1, 0, 0, 0},
         {kPsi, kPhi, 1, 0, 0},
         {kPsi, kPsi, kPhi, 1, 0},
         {kPhi, kPsi, kPsi, kPhi, 1}},
        {{1, 0, 0, 0, 0, 0},
         {1, 1, 0, 0, 0, 0},
         {-1, 1, 1, 0, 0, 0},
         {-2, -1, 1, 1, 0, 0},
         {-1, -2, -1, 1, 1, 0},
         {1, -1, -2, -1, 1, 1}},
    };
    for (std::size_t p = 2; p <= 6; ++p) {
        const auto s = spectrum_matrix(p);
        const auto& expected = table[p - 2];
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t j = 0; j < p; ++j) {
                INFO("p=" << p << " k=" << k << " j=" << j);
                CHECK(std::abs(s(k, j) - expected[k][j]) <= 1e-12);
            }
    }
}

TEST_CASE("spectrum matrix structure for many periodicities") {
    for (std::size_t p = 1; p <= 64; ++p) {
        const auto s = spectrum_matrix(p);
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t j = 0; j < p; ++j) {
                if (k == j) CHECK(s(k, j) == 1.0);
                else if (k < j) CHECK(s(k, j) == 0.0);
                else {
                    const double expected =
                        2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k - j) / static_cast<double>(p));
                    CHECK(std::abs(s(k, j) - expected) <= 1e-12);
                    CHECK(std::abs(s(k, j)) <= 2.0 + 1e-15);
                }
            }
    }
    CHECK_THROWS_AS(spectrum_matrix(0), Error);
}

// ---------------------------------------------------------------------------
// periodic_transform / pps_real

TEST_CASE("periodic transform examples") {
    const std::vector<double> constant(12, 2.5);
    for (std::size_t p : {2, 3, 4, 6, 12}) {
        const auto v = periodic_transform(RealSignal(constant), p);
        CHECK(std::abs(v.real) < 1e-12);
        CHECK(std::abs(v.imag) < 1e-12);
    }
    const auto v = periodic_transform(channel_signal(dna("ATATAT"), Nucleotide::A), 2);
    CHECK(v.real == doctest::Approx(3.0));
    CHECK(std::abs(v.imag) < 1e-12);
}

TEST_CASE("periodic transform agrees with the quadratic form and the basis projection") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = random_signal(rng, 1 + rng() % 250);
        const std::size_t p = 1 + rng() % x.length();
        const auto v = periodic_transform(x, p);
        const double pps = pps_real(x, p);
        const std::vector<double> raw(x.samples().begin(), x.samples().end());
        const auto ref = oracle::periodic_projection(raw, p);
        const double scale = 1e-9 * static_cast<double>(x.length());
        CHECK(relative_deviation(v.power(), pps, scale) <= 1e-9);
        CHECK(relative_deviation(v.real, static_cast<double>(ref.real()), 1.0) <= 1e-9);
        CHECK(relative_deviation(v.imag, static_cast<double>(ref.imag()), 1.0) <= 1e-9);
        CHECK(pps >= 0.0);
    }
}

TEST_CASE("pps_real examples") {
    CHECK(pps_real(RealSignal({1, 0, 1, 0, 1, 0}), 2) == doctest::Approx(9.0));
    CHECK(pps_real(RealSignal(std::vector<double>(10, 3.0)), 2) == 0.0);
    CHECK_THROWS_AS(pps_real(RealSignal({1, 2, 3}), 4), Error);

    const auto x = synth_fig1(300);
    const std::vector<double> raw(x.samples().begin(), x.samples().end());
    CHECK(relative_deviation(pps_real(x, 20), oracle::dft_power(raw, 15)) <= 1e-9);
    CHECK(relative_deviation(pps_real(x, 50), oracle::dft_power(raw, 6)) <= 1e-9);
}

TEST_CASE("endpoint identity: PPS at p = N equals DFT bin 1") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = random_signal(rng, 2 + rng() % 200);
        const double ps1 = dft_power_spectrum(x)[1];
        CHECK(relative_deviation(pps_real(x, x.length()), ps1, 1e-6) <= 1e-9);
    }
}

TEST_CASE("mean-shift invariance when p divides N") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t p = 2 + rng() % 20;
        const std::size_t n = p * (1 + rng() % 15);
        const auto x = random_signal(rng, n);
        const double shift = std::uniform_real_distribution<double>(-5, 5)(rng);
        std::vector<double> shifted(x.samples().begin(), x.samples().end());
        double norm2 = 0;
        for (double& v : shifted) {
            norm2 += v * v;
            v += shift;
        }
        CHECK(std::abs(pps_real(x, p) - pps_real(RealSignal(shifted), p)) <= 1e-9 * norm2);
    }
}

// ---------------------------------------------------------------------------
// pps_dna / closed forms

TEST_CASE("pps_dna: spectral-leakage sequences") {
    const double a = pps_dna(dna(fixtures::kN130P5), 5);
    const double b = pps_dna(dna(fixtures::kN130P5D2), 5);
    CHECK(std::abs(a - 361.9837) <= 1e-3);
    CHECK(std::abs(b - 335.8034) <= 1e-3);
}

TEST_CASE("pps_dna: small examples") {
    CHECK(pps_dna(dna("AAAA"), 2) == 0.0);
    CHECK(pps_dna(dna("ATATAT"), 2) == doctest::Approx(18.0));
    CHECK(dft_power_dna(dna("ATATAT"))[3] == doctest::Approx(18.0));
    CHECK_THROWS_AS(pps_dna(dna("ACG"), 4), Error);
    CHECK_THROWS_AS(pps_dna(dna("ACG"), 0), Error);
    // p = 1 yields the sum of squared residue counts
    CHECK(pps_dna(dna("AACGT"), 1) == doctest::Approx(4 + 1 + 1 + 1));
}

TEST_CASE("pps_dna agrees with the brute-force periodic projection") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::string s = oracle::random_dna(rng, 5 + rng() % 300);
        const std::size_t p = 1 + rng() % std::min<std::size_t>(s.size(), 60);
        const double expected = oracle::periodic_power_dna(s, p);
        CHECK(relative_deviation(pps_dna(dna(s), p), expected, static_cast<double>(s.size())) <= 1e-9);
    }
}

TEST_CASE("closed forms") {
    CHECK(pps_closed_form(dna("ATATAT"), 2) == doctest::Approx(18.0));
    CHECK(pps_closed_form(dna("GGGGGGGG"), 4) == 0.0);
    CHECK_THROWS_AS(pps_closed_form(dna("ACGTACGT"), 5), Error);
    CHECK_THROWS_AS(pps_closed_form(dna("ACGTACGT"), 1), Error);

    std::mt19937 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string s = oracle::random_dna(rng, 4 + rng() % 400);
        const auto ind = dna(s);
        for (std::size_t p : {2, 3, 4})
            CHECK(relative_deviation(pps_closed_form(ind, p), pps_dna(ind, p), static_cast<double>(s.size())) <=
                  1e-9);
    }
}

TEST_CASE("residue-class permutation invariance") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        std::string s = oracle::random_dna(rng, 20 + rng() % 300);
        const std::size_t p = 2 + rng() % 15;
        const double before = pps_dna(dna(s), p);
        const std::size_t i = rng() % s.size();
        const std::size_t classes_after = (s.size() - 1 - i) / p;
        if (classes_after == 0) continue;
        const std::size_t j = i + p * (1 + rng() % classes_after);
        std::swap(s[i], s[j]);
        CHECK(pps_dna(dna(s), p) == before);
    }
}

TEST_CASE("perfect-repeat scaling") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t p = 2 + rng() % 12;
        const std::string motif = oracle::random_dna(rng, p);
        const std::size_t m = 1 + rng() % 20;
        std::string s;
        for (std::size_t c = 0; c < m; ++c) s += motif;
        const double single = pps_dna(dna(motif), p);
        CHECK(pps_dna(dna(s), p) == doctest::Approx(static_cast<double>(m * m) * single).epsilon(1e-12));
    }
}

// ---------------------------------------------------------------------------
// DFT

TEST_CASE("dft power spectrum examples") {
    const auto ps = dft_power_spectrum(RealSignal({1, 1, 1, 1}));
    CHECK(ps[0] == doctest::Approx(16));
    for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(ps[k]) < 1e-20);

    const auto ua = dft_power_spectrum(channel_signal(dna("ATATAT"), Nucleotide::A));
    CHECK(ua[3] == doctest::Approx(9.0));
}

TEST_CASE("dft: symmetry, non-negativity, and agreement with the oracle") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = random_signal(rng, 1 + rng() % 150);
        const auto ps = dft_power_spectrum(x);
        const std::vector<double> raw(x.samples().begin(), x.samples().end());
        const std::size_t n = x.length();
        const double scale = ps[0] + 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(ps[k] >= 0.0);
            if (k >= 1) CHECK(relative_deviation(ps[k], ps[n - k], scale) <= 1e-9);
            CHECK(relative_deviation(ps[k], oracle::dft_power(raw, k), scale) <= 1e-9);
            CHECK(relative_deviation(ps[k], dft_power_bin(raw, k), scale) <= 1e-6);
        }
    }
}

TEST_CASE("dft_power_dna: Parseval mean equals N and the leakage bin") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const std::string s = oracle::random_dna(rng, 1 + rng() % 300);
        CHECK(dft_power_dna(dna(s)).mean() == doctest::Approx(static_cast<double>(s.size())).epsilon(1e-9));
    }
    const auto ps = dft_power_dna(dna(fixtures::kN130P5));
    CHECK(std::abs(ps[26] - 361.9837) <= 1e-3);
    CHECK(dft_power_dna(dna("ATATAT"))[3] == doctest::Approx(18.0));
}

TEST_CASE("unpadded deletion mutant: the 212.0118 value sits at bin 26") {
    const auto ps = dft_power_dna(dna(fixtures::kN130P5D2));
    CHECK(std::abs(ps[26] - 212.0118) <= 1e-3);
    CHECK(std::abs(ps[25] - 212.0118) > 1.0);
    CHECK(std::abs(oracle::dft_power_dna(fixtures::kN130P5D2, 26) - 212.0118) <= 1e-3);
}

// ---------------------------------------------------------------------------
// padding

TEST_CASE("zero padding") {
    const auto d2 = dna(fixtures::kN130P5D2);
    const auto padded = zero_pad_to_multiple(d2, 5);
    CHECK(padded.length() == 130);
    CHECK(padded.empty_columns() == 2);
    CHECK(zero_pad_to_multiple(dna(fixtures::kN130P5), 5) == dna(fixtures::kN130P5));
    CHECK(std::abs(dft_power_dna(padded)[26] - 335.8034) <= 1e-3);

    std::mt19937 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const std::string s = oracle::random_dna(rng, 3 + rng() % 200);
        const auto ind = dna(s);
        const std::size_t p = 1 + rng() % s.size();
        const auto pad = zero_pad_to_multiple(ind, p);
        CHECK(pad.length() % p == 0);
        CHECK(pad.length() - ind.length() < p);
        CHECK(pps_dna(pad, p) == pps_dna(ind, p));
    }
}

TEST_CASE("snr") {
    CHECK(snr(361.9837, 130) == doctest::Approx(2.7845).epsilon(2e-5));
    CHECK(snr(0.0, 17) == 0.0);
    CHECK_THROWS_AS(snr(1.0, 0), Error);
}
